// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fuzztop/cli.hpp"
#include "oracles.hpp"

using namespace fuzztop;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

json run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    if (code != 0) throw std::runtime_error("cli exit " + std::to_string(code) + ": " + err.str());
    return json::parse(out.str());
}

// The sweep is shared by criteria 4 and 5.
json g_sweep;
double g_sweep_seconds = 0;

Outcome example_chain() {
    Outcome o;
    const auto doc = run_cli({"basis", "--space", "tau2"}, R"({"carrier": 5, "f": [0, 3, 4, 0, 0]})");
    const std::vector<json> expect{json::array({"1", "1", "1", "1", "1"}), json::array({"1", "1/2", "1/2", "1", "1"}),
                                   json::array({"1", "1/3", "1/3", "2/3", "2/3"})};
    for (std::size_t i = 0; i < 3; ++i) {
        if (doc["rows"][i]["grades"] != expect[i]) o.fail("K_" + std::to_string(i + 1) + " = " + doc["rows"][i]["grades"].dump());
    }
    if (o.pass) o.detail = "K_1..K_3 exact";
    return o;
}

Outcome constant_map() {
    Outcome o;
    EndoFunction f({0, 0, 0});
    const std::size_t w = default_window(3);
    const WindowedChain t1(tau1_basis(f), w), t2(tau2_basis(f), w);
    for (const auto& a : t1.basis())
        if (!zadeh_preimage(f, a).is_whole()) o.fail("preimage of " + to_json(a).dump() + " is not X");
    for (const auto& k : t2.basis())
        if (!zadeh_preimage(f, k).is_whole()) o.fail("preimage of " + to_json(k).dump() + " is not X");
    const auto r1 = map_report(f, t1), r2 = map_report(f, t2);
    if (!r1.continuous.holds) o.fail("tau1 continuity false");
    if (r1.open_map.holds) o.fail("tau1 openness true");
    if (!r2.continuous.holds) o.fail("tau2 continuity false");
    if (o.pass) o.detail = "tau1: continuous, not open; tau2: continuous; all preimages X";
    return o;
}

Outcome orbit_shift() {
    Outcome o;
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& m : oracle::all_maps(n)) {
            if (!oracle::injective(m)) continue;
            EndoFunction f(m);
            for (std::size_t x0 = 0; x0 < n; ++x0)
                for (unsigned k = 1; k <= 3; ++k) {
                    ++count;
                    const auto orbit = orbit_data(f, x0, k);
                    const auto b = tau3_basis(orbit);
                    const auto where = f.str() + " x0=" + std::to_string(x0) + " k=" + std::to_string(k);
                    if (zadeh_preimage(f, b.c) != b.c) o.fail("preimage of C differs at " + where);
                    const auto len = orbit.length();
                    for (std::size_t i = 0; i < len; ++i)
                        if (zadeh_image(f, b.cn[i]) != b.cn[(i + 1) % len]) o.fail("image of C_n differs at " + where);
                    if (!is_open_map(f, Space(tau3_topology(orbit))).holds) o.fail("not open at " + where);
                }
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " instances";
    return o;
}

Outcome asserted_sweep() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    g_sweep = run_cli({"verify", "--max-size", "4", "--k", "1,2,3", "--window", "8"});
    g_sweep_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string failed;
    for (const auto& c : g_sweep["claims"]) {
        if (c["expectation"] != "asserted" || c["holds"] == true) continue;
        failed += " " + c["id"].get<std::string>();
        if (c["counterexample"].is_object() && c["counterexample"]["instance"].is_object()) {
            failed += "@" + c["counterexample"]["instance"].dump();
        }
    }
    if (!failed.empty()) o.fail("asserted claims with counterexamples:" + failed);
    if (o.pass) o.detail = "no asserted counterexample";
    return o;
}

const json* claim(const std::string& id) {
    for (const auto& c : g_sweep["claims"])
        if (c["id"] == id) return &c;
    return nullptr;
}

Outcome known_gaps() {
    Outcome o;
    const auto* conv = claim("Thm4.1.converse");
    if (!conv || !(*conv)["counterexample"].is_object()) {
        o.fail("no Thm4.1.converse counterexample");
    } else {
        const auto inst = instance_from_json((*conv)["counterexample"]["instance"]);
        const auto& m = inst.f.map();
        const bool constant = std::all_of(m.begin(), m.end(), [&](std::size_t y) { return y == m[0]; });
        if (m.size() != 2 || !constant) o.fail("Thm4.1.converse witness is " + inst.f.str());
        const auto per = oracle::periodic(m);
        const bool equal = oracle::chain_opens(m, false, inst.window) == oracle::chain_opens(m, true, inst.window);
        if (!equal || std::all_of(per.begin(), per.end(), [](bool b) { return b; })) {
            o.fail("brute force does not reproduce the Thm4.1.converse witness");
        }
    }
    const auto* p315 = claim("Prop3.15");
    if (!p315 || !(*p315)["by_k"].contains("1")) {
        o.fail("no Prop3.15 record at k = 1");
    } else {
        const auto& k1 = (*p315)["by_k"]["1"];
        const auto& ce = (*p315)["counterexample"];
        if (k1["agreements"] == k1["instances"] || !ce.is_object() || ce["instance"]["k"] != 1) {
            o.fail("Prop3.15 k = 1 record has no re-checkable witness");
        } else if (check_claim(find_claim("Prop3.15"), instance_from_json(ce["instance"])).agrees) {
            o.fail("Prop3.15 witness does not re-check");
        }
    }
    const auto* p22 = claim("Prop2.2");
    if (!p22 || !(*p22)["counterexample"].is_object() || (*p22)["counterexample"]["hypothesis"] != true ||
        (*p22)["counterexample"]["conclusion"] != false) {
        o.fail("no Prop2.2 hypothesis-mismatch record");
    }
    const std::set<std::string> asserted{
        "Lemma2.4", "Lemma2.6(1)", "Lemma2.6(2)", "Thm2.7",  "Thm2.8",   "Ex2.9",    "Thm2.10",
        "Thm2.11",  "Ex2.12",      "Thm2.13",     "Lemma2.14", "Thm2.15", "Prop3.1",  "Prop3.2",
        "Rem3.5",   "Prop3.6",     "Prop3.7",     "Prop3.8", "Prop3.9",  "Prop3.10", "Prop3.11",
        "Prop3.12", "Prop3.13",    "Prop3.16",    "Thm4.1",  "Thm4.2"};
    std::set<std::string> got;
    for (const auto& c : g_sweep["claims"])
        if (c["expectation"] == "asserted") got.insert(c["id"].get<std::string>());
    if (got != asserted) o.fail("asserted subset differs from the fixed list");
    if (o.pass) o.detail = "Thm4.1.converse at [0,0], Prop3.15 at k=1, Prop2.2 mismatch all recorded";
    return o;
}

Outcome representation_agreement() {
    Outcome o;
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& m : oracle::all_maps(n)) {
            EndoFunction f(m);
            for (const auto& chain : {tau1_basis(f), tau2_basis(f)}) {
                ++count;
                const WindowedChain wc(chain, 8);
                try {
                    const auto symbolic = to_json(property_report(wc));
                    const auto explicit_ = to_json(property_report(materialize(wc)));
                    for (auto key : {"compact", "connected", "t0", "regular", "normal", "lindelof"}) {
                        if (symbolic[key] != explicit_[key]) o.fail(std::string(key) + " differs on " + f.str());
                    }
                    property_report(Space(wc));
                    map_report(f, Space(wc));
                } catch (const ConsistencyError& e) {
                    o.fail(e.what());
                }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " chains";
    return o;
}

Outcome lattice_suites() {
    Outcome o;
    // grades occurring in the topologies on carriers of size <= 3
    std::set<Grade> occurring{Grade(0), Grade(1)};
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& m : oracle::all_maps(n)) {
            EndoFunction f(m);
            std::vector<ExplicitTopology> ts{materialize_chain(tau1_basis(f), n), materialize_chain(tau2_basis(f), n)};
            if (oracle::injective(m))
                for (std::size_t x0 = 0; x0 < n; ++x0)
                    for (unsigned k = 1; k <= 3; ++k) ts.push_back(tau3_topology(orbit_data(f, x0, k)));
            for (const auto& t : ts)
                for (const auto& u : t.opens()) occurring.insert(u.grades().begin(), u.grades().end());
        }
    }
    const std::vector<Grade> grid(occurring.begin(), occurring.end());
    std::size_t checks = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto sets = oracle::all_sets(n, grid);
        const auto maps = oracle::all_maps(n);
        for (const auto& a : sets)
            for (const auto& b : sets) {
                ++checks;
                if (complement(unite(a, b)) != intersect(complement(a), complement(b)) ||
                    complement(intersect(a, b)) != unite(complement(a), complement(b))) {
                    o.fail("De Morgan fails at " + a.str() + ", " + b.str());
                }
                for (const auto& m : maps) {
                    EndoFunction f(m);
                    if (leq(zadeh_image(f, a), b) != leq(a, zadeh_preimage(f, b))) o.fail("adjunction fails");
                    if (zadeh_image(f, unite(a, b)) != unite(zadeh_image(f, a), zadeh_image(f, b)))
                        o.fail("image does not commute with union");
                    if (zadeh_preimage(f, unite(a, b)) != unite(zadeh_preimage(f, a), zadeh_preimage(f, b)) ||
                        zadeh_preimage(f, intersect(a, b)) != intersect(zadeh_preimage(f, a), zadeh_preimage(f, b)))
                        o.fail("preimage does not commute");
                }
            }
    }
    if (o.pass) o.detail = std::to_string(grid.size()) + " grades, " + std::to_string(checks) + " pairs";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<Outcome()> run;
        double limit;
    };
    const std::vector<Criterion> criteria{
        {1, "five-element chain grades", example_chain, 1},
        {2, "constant map continuity", constant_map, 1},
        {3, "orbit shift and open map", orbit_shift, 10},
        {4, "asserted-claim sweep", asserted_sweep, 300},
        {5, "known-gap detection", known_gaps, 300},
        {6, "representation agreement", representation_agreement, 300},
        {7, "lattice and extension suites", lattice_suites, 30},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.id == 5) secs += g_sweep_seconds;
        if (secs > c.limit) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit) + " s");
        all &= o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ", "
                  << std::fixed << std::setprecision(2) << secs << " s): " << o.detail << "\n";
    }
    return all ? 0 : 1;
}
