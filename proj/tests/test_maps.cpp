#include <doctest.h>

#include "oracles.hpp"

using namespace fuzztop;

namespace {

FuzzySet fs(std::initializer_list<const char*> grades) {
    std::vector<Grade> g;
    for (auto s : grades) g.push_back(Grade::parse(s));
    return FuzzySet(std::move(g));
}

const std::vector<Grade> kGrid{Grade(0), Grade(1, 3), Grade(1, 2), Grade(2, 3), Grade(1)};

}  // namespace

TEST_CASE("zadeh image") {
    EndoFunction zero({0, 0, 0});
    CHECK(zadeh_image(zero, FuzzySet::empty(3)).is_empty());
    CHECK(zadeh_image(zero, FuzzySet::whole(3)) == fs({"1", "0", "0"}));
    CHECK(zadeh_image(EndoFunction({1, 2, 0}), fs({"1", "1/2", "1/2"})) == fs({"1/2", "1", "1/2"}));
    CHECK(zadeh_image(zero, fs({"1/3", "2/3", "1/2"})) == fs({"2/3", "0", "0"}));
}

TEST_CASE("zadeh preimage") {
    EndoFunction zero({0, 0, 0});
    CHECK(zadeh_preimage(zero, FuzzySet::whole(3)).is_whole());
    CHECK(zadeh_preimage(zero, fs({"1", "1/2", "1/2"})).is_whole());
    EndoFunction g({1, 0, 2});
    const auto c = fs({"0", "0", "1"});
    CHECK(zadeh_preimage(g, c) == c);
}

TEST_CASE("extension laws over a grade grid") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto sets = oracle::all_sets(n, kGrid);
        for (const auto& m : oracle::all_maps(n)) {
            EndoFunction f(m);
            for (const auto& a : sets) {
                // image by definition: sup over the fibre
                std::vector<Grade> img(n, Grade(0));
                for (std::size_t x = 0; x < n; ++x) img[m[x]] = std::max(img[m[x]], a[x]);
                REQUIRE(zadeh_image(f, a) == FuzzySet(img));
                for (const auto& b : sets) {
                    REQUIRE(leq(zadeh_image(f, a), b) == leq(a, zadeh_preimage(f, b)));
                    REQUIRE(zadeh_image(f, unite(a, b)) == unite(zadeh_image(f, a), zadeh_image(f, b)));
                    REQUIRE(zadeh_preimage(f, unite(a, b)) == unite(zadeh_preimage(f, a), zadeh_preimage(f, b)));
                    REQUIRE(zadeh_preimage(f, intersect(a, b)) ==
                            intersect(zadeh_preimage(f, a), zadeh_preimage(f, b)));
                }
            }
        }
    }
}

TEST_CASE("map examples") {
    EndoFunction zero({0, 0, 0});
    const Space t1 = WindowedChain(tau1_basis(zero), 5);
    const Space t2 = WindowedChain(tau2_basis(zero), 5);
    auto r1 = map_report(zero, t1);
    CHECK_FALSE(r1.open_map.holds);
    CHECK(r1.continuous.holds);
    auto r2 = map_report(zero, t2);
    CHECK_FALSE(r2.open_map.holds);
    CHECK(r2.continuous.holds);
    REQUIRE(r2.open_map.witness);
    CHECK(r2.open_map.witness->transformed == fs({"1", "0", "0"}));
    CHECK_FALSE(contains(t2, r2.open_map.witness->transformed));

    EndoFunction id({0, 1, 2});
    for (const Space& s : {Space(WindowedChain(tau1_basis(id), 4)),
                           Space(tau3_topology(orbit_data(id, 1, 2)))}) {
        CHECK(is_open_map(id, s).holds);
        CHECK(is_continuous(id, s).holds);
    }
}

TEST_CASE("map verdicts agree with brute force") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& m : oracle::all_maps(n)) {
            EndoFunction f(m);
            std::vector<Space> spaces{WindowedChain(tau1_basis(f), n + 2), WindowedChain(tau2_basis(f), n + 2)};
            if (oracle::injective(m)) {
                for (std::size_t x0 = 0; x0 < n; ++x0)
                    for (unsigned k = 1; k <= 3; ++k) spaces.emplace_back(tau3_topology(orbit_data(f, x0, k)));
            }
            for (const auto& s : spaces) {
                const auto opens = materialize(s).opens();
                const auto fam = oracle::family(opens);
                bool open = true, cont = true;
                for (const auto& u : opens) {
                    open &= fam.count(oracle::vec(zadeh_image(f, u))) > 0;
                    cont &= fam.count(oracle::vec(zadeh_preimage(f, u))) > 0;
                }
                const auto r = map_report(f, s);
                REQUIRE(r.open_map.holds == open);
                REQUIRE(r.continuous.holds == cont);
                if (const auto* t = std::get_if<ExplicitTopology>(&s)) {
                    REQUIRE(is_continuous_on_basis(f, *t).holds == cont);
                    REQUIRE(is_open_map_on_basis(f, *t).holds == open);
                }
                if (!r.open_map.holds) {
                    REQUIRE(contains(s, r.open_map.witness->open));
                    REQUIRE_FALSE(contains(s, r.open_map.witness->transformed));
                }
            }
        }
    }
}
