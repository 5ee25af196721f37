#include <doctest.h>

#include "oracles.hpp"

using namespace fuzztop;

namespace {

FuzzySet fs(std::initializer_list<const char*> grades) {
    std::vector<Grade> g;
    for (auto s : grades) g.push_back(Grade::parse(s));
    return FuzzySet(std::move(g));
}

void check_against_brute_force(const Space& s) {
    const auto t = materialize(s);
    const auto fam = oracle::family(t.opens());
    const auto r = property_report(s);
    REQUIRE(r.compact.holds);
    REQUIRE(is_cover(s, r.compact.subcover));
    REQUIRE(r.connected.holds == oracle::connected(fam));
    for (auto mode : kT0Modes) REQUIRE(r.t0_in(mode).holds == oracle::t0(fam, mode));
    REQUIRE(r.regular.holds == oracle::regular(fam));
    REQUIRE(r.normal.holds == oracle::normal(fam));
    REQUIRE(r.lindelof.holds);

    if (r.connected.disconnection) {
        const auto& [u, v] = *r.connected.disconnection;
        REQUIRE(contains(s, u));
        REQUIRE(contains(s, v));
        REQUIRE(disjoint(u, v));
        REQUIRE(unite(u, v).is_whole());
    }
    for (auto mode : kT0Modes) {
        if (const auto& w = r.t0_in(mode).unseparated) {
            for (const auto& u : t.opens()) REQUIRE(fuzzy_point_in(w->first, u) == fuzzy_point_in(w->second, u));
        }
    }
    if (r.regular.failure) {
        const auto& [x, f] = *r.regular.failure;
        REQUIRE(f[x].is_zero());
        REQUIRE(contains(s, complement(f)));
    }
    if (r.normal.unseparated) {
        const auto& [f, g] = *r.normal.unseparated;
        REQUIRE(disjoint(f, g));
        REQUIRE(contains(s, complement(f)));
        REQUIRE(contains(s, complement(g)));
    }
}

}  // namespace

TEST_CASE("cover") {
    const Space whole = generate_topology({FuzzySet::whole(2)});
    CHECK(is_cover(whole, {FuzzySet::whole(2)}));

    const Space cyc = tau3_topology(orbit_data(EndoFunction({1, 2, 0}), 0, 2));
    const auto b = tau3_basis(orbit_data(EndoFunction({1, 2, 0}), 0, 2));
    CHECK(is_cover(cyc, b.cn));

    const auto off = orbit_data(EndoFunction({1, 0, 2}), 0, 2);
    const Space t = tau3_topology(off);
    CHECK_FALSE(is_cover(t, tau3_basis(off).cn));
    CHECK_THROWS_AS(is_cover(t, {fs({"1", "1", "1"}), fs({"1", "0", "1"})}), InputError);
}

TEST_CASE("compactness") {
    for (const auto& m : oracle::all_maps(3)) {
        EndoFunction f(m);
        for (const Space& s : {Space(WindowedChain(tau1_basis(f), 5)), Space(WindowedChain(tau2_basis(f), 5))}) {
            auto v = is_compact(s);
            CHECK(v.holds);
            CHECK(v.subcover == std::vector<FuzzySet>{FuzzySet::whole(3)});
            CHECK_FALSE(v.justification.empty());
        }
    }
    const auto t = tau3_topology(orbit_data(EndoFunction({1, 0, 2}), 0, 2));
    auto sub = exhaustive_subcover_search(t);
    REQUIRE(sub);
    CHECK(is_cover(t, *sub));
}

TEST_CASE("connectedness") {
    CHECK(is_connected(Space(WindowedChain(tau1_basis(EndoFunction({0, 0, 1})), 5))).holds);
    CHECK(is_connected(Space(WindowedChain(tau2_basis(EndoFunction({0, 0, 1})), 5))).holds);
    const Space t = tau3_topology(orbit_data(EndoFunction({1, 0, 2}), 0, 2));
    auto v = is_connected(t);
    CHECK_FALSE(v.holds);
    // the pair built from C and the union of the C_n is a disconnection
    const auto c = fs({"0", "0", "1"});
    const auto u = fs({"1", "1", "0"});
    CHECK(contains(t, c));
    CHECK(contains(t, u));
    CHECK(disjoint(c, u));
    CHECK(unite(c, u).is_whole());
}

TEST_CASE("T0") {
    const Space one = WindowedChain(tau2_basis(EndoFunction({0})), 3);
    CHECK(is_t0(one, T0Mode::crisp).holds);
    CHECK(is_t0(one, T0Mode::paper_fuzzy_pair).holds);

    const Space k = WindowedChain(tau2_basis(EndoFunction({0, 0})), 4);
    auto v = is_t0(k, T0Mode::paper_fuzzy_pair);
    CHECK_FALSE(v.holds);
    REQUIRE(v.unseparated);
    CHECK(v.unseparated->first.element != v.unseparated->second.element);
    CHECK(v.unseparated->first.degree == v.unseparated->second.degree);
    const auto kt = materialize(k);
    for (const auto& u : kt.opens()) {
        for (const auto& g : u.grades()) {
            if (!g.is_zero()) CHECK(v.unseparated->first.degree <= g);
        }
    }

    const Space c = tau3_topology(orbit_data(EndoFunction({0, 1}), 0, 1));
    CHECK(is_t0(c, T0Mode::crisp).holds);
    CHECK(is_t0(c, T0Mode::paper_fuzzy_pair).holds);
}

TEST_CASE("regularity") {
    CHECK(is_regular(Space(generate_topology({FuzzySet::whole(3)}))).holds);

    auto v = is_regular(Space(WindowedChain(tau2_basis(EndoFunction({0, 0})), 4)));
    CHECK_FALSE(v.holds);
    REQUIRE(v.failure);
    CHECK(v.failure->first == 0);
    CHECK(v.failure->second == fs({"0", "1/2"}));

    CHECK(is_regular(Space(tau3_topology(orbit_data(EndoFunction({0, 1}), 0, 2)))).holds);
}

TEST_CASE("normality") {
    for (const auto& m : oracle::all_maps(3)) {
        EndoFunction f(m);
        CHECK(is_normal(Space(WindowedChain(tau1_basis(f), 5))).holds);
        CHECK(is_normal(Space(WindowedChain(tau2_basis(f), 5))).holds);
    }
    // Two crossed half-grade closed sets on a 2-cycle cannot be pulled apart.
    auto v = is_normal(Space(tau3_topology(orbit_data(EndoFunction({1, 0}), 0, 2))));
    CHECK_FALSE(v.holds);
    REQUIRE(v.unseparated);
    CHECK(disjoint(v.unseparated->first, v.unseparated->second));
}

TEST_CASE("threshold grid") {
    const auto t = materialize_chain(tau1_basis(EndoFunction({0, 0})), 2);
    const std::vector<Grade> expect{Grade(1, 4), Grade(1, 2), Grade(3, 4), Grade(1)};
    CHECK(threshold_grid(t) == expect);
    CHECK(threshold_grid(WindowedChain(tau1_basis(EndoFunction({0, 0})), 2)) == expect);
}

TEST_CASE("deciders agree with brute force and with materialization") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& m : oracle::all_maps(n)) {
            EndoFunction f(m);
            for (std::size_t w : {1, 2, 3, 5}) {
                check_against_brute_force(WindowedChain(tau1_basis(f), w));
                check_against_brute_force(WindowedChain(tau2_basis(f), w));
            }
            if (!oracle::injective(m)) continue;
            for (std::size_t x0 = 0; x0 < n; ++x0)
                for (unsigned k = 1; k <= 3; ++k) check_against_brute_force(tau3_topology(orbit_data(f, x0, k)));
        }
    }
    for (std::size_t n = 1; n <= 3; ++n) check_against_brute_force(WindowedChain(tau1_complement_basis(successor_tau1_basis(n)), 4));
}

TEST_CASE("topology equality") {
    EndoFunction b({1, 2, 0});
    auto e = topologies_equal(WindowedChain(tau1_basis(b), 5), WindowedChain(tau2_basis(b), 5));
    CHECK(e.equal);

    EndoFunction zero({0, 0});
    e = topologies_equal(WindowedChain(tau1_basis(zero), 8), WindowedChain(tau2_basis(zero), 8));
    CHECK(e.equal);
    CHECK(oracle::chain_opens({0, 0}, false, 8) == oracle::chain_opens({0, 0}, true, 8));

    const Space t3 = tau3_topology(orbit_data(b, 0, 2));
    e = topologies_equal(WindowedChain(tau1_basis(b), 5), t3);
    CHECK_FALSE(e.equal);
    REQUIRE(e.witness);
    CHECK(e.witness_side == "right");
    CHECK(contains(t3, *e.witness));

    EndoFunction g({0, 3, 4, 0, 0});
    e = topologies_equal(WindowedChain(tau1_basis(g), 7), WindowedChain(tau2_basis(g), 7));
    CHECK_FALSE(e.equal);

    CHECK_THROWS_AS(topologies_equal(WindowedChain(tau1_basis(zero), 3), WindowedChain(tau1_basis(b), 3)),
                    InputError);
}

TEST_CASE("chain equality matches materialized comparison") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& m : oracle::all_maps(n)) {
            EndoFunction f(m);
            const auto e = topologies_equal(WindowedChain(tau1_basis(f), 8), WindowedChain(tau2_basis(f), 8));
            const bool brute = oracle::chain_opens(m, false, 8) == oracle::chain_opens(m, true, 8);
            REQUIRE(e.equal == brute);
            const auto sh = oracle::shells(m);
            REQUIRE(brute == std::all_of(sh.begin(), sh.end(), [](std::size_t s) { return s <= 1; }));
        }
    }
}
