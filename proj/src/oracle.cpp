#include "fuzztop/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "fuzztop/errors.hpp"

namespace fuzztop {

std::string_view to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::tau1: return "tau1";
        case SpaceKind::tau2: return "tau2";
        case SpaceKind::tau3: return "tau3";
    }
    return "?";
}

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::iff: return "iff";
        case Direction::implies: return "implies";
        case Direction::exists: return "exists";
    }
    return "?";
}

std::string_view to_string(Expectation e) {
    return e == Expectation::asserted ? "asserted" : "report_only";
}

std::strong_ordering operator<=>(const Instance& a, const Instance& b) {
    if (auto c = a.f.size() <=> b.f.size(); c != 0) return c;
    if (auto c = a.f.map() <=> b.f.map(); c != 0) return c;
    if (auto c = a.space <=> b.space; c != 0) return c;
    if (auto c = a.x0 <=> b.x0; c != 0) return c;
    if (auto c = a.k <=> b.k; c != 0) return c;
    return a.window <=> b.window;
}

json to_json(const Instance& i) {
    json out = {{"size", i.f.size()}, {"f", i.f.map()}, {"space", std::string(to_string(i.space))}};
    if (i.space == SpaceKind::tau3) {
        out["x0"] = i.x0;
        out["k"] = i.k;
    }
    out["window"] = i.window;
    return out;
}

Instance instance_from_json(const json& j) {
    const auto space = j.at("space").get<std::string>();
    Instance i{EndoFunction(j.at("f").get<std::vector<std::size_t>>()), SpaceKind::tau1, 0, 0,
               j.at("window").get<std::size_t>()};
    if (space == "tau2") {
        i.space = SpaceKind::tau2;
    } else if (space == "tau3") {
        i.space = SpaceKind::tau3;
        i.x0 = j.at("x0").get<std::size_t>();
        i.k = j.at("k").get<unsigned>();
    } else if (space != "tau1") {
        throw InputError("unknown space \"" + space + "\"");
    }
    return i;
}

// ---------------------------------------------------------------------------

InstanceContext::InstanceContext(Instance instance) : instance_(std::move(instance)) {}

const FunctionProfile& InstanceContext::profile() {
    if (!profile_) profile_ = fuzztop::profile(instance_.f);
    return *profile_;
}

const WindowedChain& InstanceContext::tau1() {
    if (!tau1_) tau1_.emplace(tau1_basis(instance_.f), instance_.window);
    return *tau1_;
}

const WindowedChain& InstanceContext::tau2() {
    if (!tau2_) tau2_.emplace(tau2_basis(instance_.f), instance_.window);
    return *tau2_;
}

const OrbitData& InstanceContext::orbit() {
    if (!orbit_) orbit_ = orbit_data(instance_.f, instance_.x0, instance_.k);
    return *orbit_;
}

const Tau3Basis& InstanceContext::tau3_basis() {
    if (!tau3_basis_) tau3_basis_ = fuzztop::tau3_basis(orbit());
    return *tau3_basis_;
}

const ExplicitTopology& InstanceContext::tau3() {
    if (!tau3_) tau3_ = generate_topology(tau3_basis().members(), Provenance::tau3);
    return *tau3_;
}

Space InstanceContext::space() {
    switch (instance_.space) {
        case SpaceKind::tau1: return tau1();
        case SpaceKind::tau2: return tau2();
        case SpaceKind::tau3: return tau3();
    }
    throw InputError("unknown space");
}

const PropertyReport& InstanceContext::properties() {
    if (!properties_) properties_ = property_report(space());
    return *properties_;
}

const MapReport& InstanceContext::maps() {
    if (!maps_) maps_ = map_report(instance_.f, space());
    return *maps_;
}

// ---------------------------------------------------------------------------

bool TheoremClaim::applies_to(const Instance& i) const {
    return std::find(spaces.begin(), spaces.end(), i.space) != spaces.end();
}

namespace {

json sets_json(const std::vector<FuzzySet>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(to_json(s));
    return out;
}

json opens_json(const Space& s) { return sets_json(materialize(s).opens()); }

Evaluation eval(bool hypothesis, bool conclusion, json evidence = json::object()) {
    return {hypothesis, conclusion, std::move(evidence)};
}

bool orbit_is_whole(InstanceContext& c) { return c.orbit().length() == c.f().size(); }

std::size_t support_size(const FuzzySet& a) {
    return static_cast<std::size_t>(
        std::count_if(a.grades().begin(), a.grades().end(), [](const Grade& g) { return !g.is_zero(); }));
}

const std::vector<SpaceKind> kTau1{SpaceKind::tau1};
const std::vector<SpaceKind> kTau2{SpaceKind::tau2};
const std::vector<SpaceKind> kTau3{SpaceKind::tau3};

std::vector<TheoremClaim> build_registry() {
    using D = Direction;
    using E = Expectation;
    std::vector<TheoremClaim> r;

    r.push_back({"Prop2.2",
                 "if every point is periodic, the complements {A_n^c} form a base",
                 D::implies, E::report_only,
                 "hypothesis as stated; the argument computes 1 - 1/n everywhere, which needs no periodic "
                 "point at all. Conclusion evaluated in closed form: the complements cover X iff no point "
                 "is periodic (their sup is 0 at periodic points, 1 elsewhere).",
                 kTau1, [](InstanceContext& c) {
                     const auto& p = c.profile();
                     std::vector<Grade> sup(c.f().size(), Grade::one());
                     for (auto x : p.periodic) sup[x] = Grade::zero();
                     const FuzzySet complement_sup(std::move(sup));
                     return eval(p.all_periodic, complement_sup.is_whole(),
                                 {{"periodic", p.periodic},
                                  {"A_1", to_json(c.tau1().chain().member(1))},
                                  {"complement_sup", to_json(complement_sup)}});
                 }});

    r.push_back({"Lemma2.4", "if f is onto, tau2 is the indiscrete topology", D::implies, E::asserted, "",
                 kTau2, [](InstanceContext& c) {
                     const auto t = materialize(c.tau2());
                     const bool indiscrete = t.size() == 2;
                     return eval(c.profile().onto, indiscrete, {{"tau2_opens", to_json(t)["opens"]}});
                 }});

    r.push_back({"Lemma2.6(1)", "C is empty iff the orbit A(x0) is all of X", D::iff, E::asserted, "",
                 kTau3, [](InstanceContext& c) {
                     return eval(orbit_is_whole(c), c.tau3_basis().c.is_empty(),
                                 {{"orbit", c.orbit().orbit}, {"C", to_json(c.tau3_basis().c)}});
                 }});

    r.push_back({"Lemma2.6(2)", "tau3 is a crisp topology iff k = 1", D::iff, E::asserted,
                 "crisp = every grade of every open lies in {0, 1}", kTau3, [](InstanceContext& c) {
                     const auto& opens = c.tau3().opens();
                     const auto fuzzy = std::find_if(opens.begin(), opens.end(),
                                                     [](const FuzzySet& u) { return !u.is_crisp(); });
                     json ev = {{"k", c.instance().k}, {"orbit_length", c.orbit().length()}};
                     ev["non_crisp_open"] = fuzzy == opens.end() ? json(nullptr) : to_json(*fuzzy);
                     return eval(c.instance().k == 1, fuzzy == opens.end(), std::move(ev));
                 }});

    r.push_back({"Thm2.7", "on tau1, f is onto iff f is an open map", D::iff, E::asserted, "", kTau1,
                 [](InstanceContext& c) {
                     return eval(c.profile().onto, c.maps().open_map.holds, {{"open_map", to_json(c.maps().open_map)}});
                 }});

    r.push_back({"Thm2.8", "on tau1, an injective f is continuous", D::implies, E::asserted, "", kTau1,
                 [](InstanceContext& c) {
                     return eval(c.profile().injective, c.maps().continuous.holds,
                                 {{"continuous", to_json(c.maps().continuous)}});
                 }});

    r.push_back({"Ex2.9", "some non-injective f is continuous on tau1", D::exists, E::asserted,
                 "existence claim, discharged by any witnessing instance", kTau1, [](InstanceContext& c) {
                     return eval(!c.profile().injective, c.maps().continuous.holds,
                                 {{"preimages", sets_json([&] {
                                       std::vector<FuzzySet> out;
                                       for (const auto& b : c.tau1().basis()) out.push_back(zadeh_preimage(c.f(), b));
                                       return out;
                                   }())}});
                 }});

    r.push_back({"Thm2.10", "on tau2, f is an open map iff f is onto", D::iff, E::asserted, "", kTau2,
                 [](InstanceContext& c) {
                     return eval(c.profile().onto, c.maps().open_map.holds, {{"open_map", to_json(c.maps().open_map)}});
                 }});

    r.push_back({"Thm2.11", "on tau2, an onto f is continuous", D::implies, E::asserted, "", kTau2,
                 [](InstanceContext& c) {
                     return eval(c.profile().onto, c.maps().continuous.holds,
                                 {{"continuous", to_json(c.maps().continuous)}});
                 }});

    r.push_back({"Ex2.12", "some non-onto f is continuous on tau2", D::exists, E::asserted,
                 "existence claim, discharged by any witnessing instance", kTau2, [](InstanceContext& c) {
                     return eval(!c.profile().onto, c.maps().continuous.holds,
                                 {{"continuous", to_json(c.maps().continuous)}});
                 }});

    r.push_back({"Thm2.13", "on tau3, f is an open map iff f is onto", D::iff, E::asserted, "", kTau3,
                 [](InstanceContext& c) {
                     return eval(c.profile().onto, c.maps().open_map.holds, {{"open_map", to_json(c.maps().open_map)}});
                 }});

    r.push_back({"Lemma2.14", "on tau3, f^-1(C) = C", D::implies, E::asserted,
                 "hypothesis: f injective (the standing assumption of tau3)", kTau3, [](InstanceContext& c) {
                     const auto pre = zadeh_preimage(c.f(), c.tau3_basis().c);
                     return eval(c.profile().injective, pre == c.tau3_basis().c,
                                 {{"C", to_json(c.tau3_basis().c)}, {"preimage", to_json(pre)}});
                 }});

    r.push_back({"Thm2.15", "on tau3, k = 1 makes f continuous", D::implies, E::asserted, "", kTau3,
                 [](InstanceContext& c) {
                     return eval(c.instance().k == 1, c.maps().continuous.holds,
                                 {{"continuous", to_json(c.maps().continuous)}});
                 }});

    r.push_back({"Thm2.15.converse", "on tau3, continuity forces k = 1", D::implies, E::report_only,
                 "converse checked on injective maps only, as the orbit topology requires",
                 kTau3, [](InstanceContext& c) {
                     return eval(c.maps().continuous.holds, c.instance().k == 1,
                                 {{"k", c.instance().k}, {"continuous", to_json(c.maps().continuous)}});
                 }});

    r.push_back({"Prop3.1", "tau1 is compact", D::implies, E::asserted, "", kTau1, [](InstanceContext& c) {
                     const auto& v = c.properties().compact;
                     return eval(true, v.holds, {{"subcover", sets_json(v.subcover)}, {"reason", v.justification}});
                 }});

    r.push_back({"Prop3.2", "tau1 is connected", D::implies, E::asserted, "", kTau1, [](InstanceContext& c) {
                     return eval(true, c.properties().connected.holds, to_json(c.properties())["witnesses"]["connected"]);
                 }});

    r.push_back({"Prop3.3", "tau1 is not T0", D::implies, E::report_only,
                 "T0 in paper_fuzzy_pair mode; the argument only covers pairs of equal periodicity", kTau1,
                 [](InstanceContext& c) {
                     const auto& v = c.properties().t0_in(T0Mode::paper_fuzzy_pair);
                     return eval(true, !v.holds, to_json(c.properties())["witnesses"]["t0"]["paper_fuzzy_pair"]);
                 }});

    r.push_back({"Prop3.4", "tau1 is regular iff no point is periodic", D::iff, E::report_only,
                 "a finite self-map always has a periodic point, so the hypothesis never holds here", kTau1,
                 [](InstanceContext& c) {
                     return eval(c.profile().periodic.empty(), c.properties().regular.holds,
                                 {{"periodic", c.profile().periodic},
                                  {"regular_witness", to_json(c.properties())["witnesses"]["regular"]}});
                 }});

    r.push_back({"Rem3.5", "tau1 is normal", D::implies, E::asserted, "", kTau1, [](InstanceContext& c) {
                     return eval(true, c.properties().normal.holds, to_json(c.properties())["witnesses"]["normal"]);
                 }});

    r.push_back({"Prop3.6", "tau1, tau2 and tau3 are Lindelof", D::implies, E::asserted, "",
                 {SpaceKind::tau1, SpaceKind::tau2, SpaceKind::tau3}, [](InstanceContext& c) {
                     return eval(true, c.properties().lindelof.holds,
                                 {{"reason", c.properties().lindelof.justification}});
                 }});

    r.push_back({"Prop3.7", "tau2 is connected", D::implies, E::asserted, "", kTau2, [](InstanceContext& c) {
                     return eval(true, c.properties().connected.holds, to_json(c.properties())["witnesses"]["connected"]);
                 }});

    r.push_back({"Prop3.8", "tau2 is compact", D::implies, E::asserted, "", kTau2, [](InstanceContext& c) {
                     const auto& v = c.properties().compact;
                     return eval(true, v.holds, {{"subcover", sets_json(v.subcover)}, {"reason", v.justification}});
                 }});

    r.push_back({"Prop3.9", "tau2 is not T0", D::implies, E::asserted, "T0 in paper_fuzzy_pair mode", kTau2,
                 [](InstanceContext& c) {
                     const auto& v = c.properties().t0_in(T0Mode::paper_fuzzy_pair);
                     return eval(true, !v.holds,
                                 {{"size", c.f().size()},
                                  {"unseparated", to_json(c.properties())["witnesses"]["t0"]["paper_fuzzy_pair"]}});
                 }});

    r.push_back({"Prop3.10", "tau2 is regular iff f is onto", D::iff, E::asserted, "", kTau2,
                 [](InstanceContext& c) {
                     return eval(c.profile().onto, c.properties().regular.holds,
                                 {{"regular_witness", to_json(c.properties())["witnesses"]["regular"]}});
                 }});

    r.push_back({"Prop3.11", "tau2 is normal", D::implies, E::asserted, "", kTau2, [](InstanceContext& c) {
                     return eval(true, c.properties().normal.holds, to_json(c.properties())["witnesses"]["normal"]);
                 }});

    r.push_back({"Prop3.12", "tau3 is connected iff C is empty", D::iff, E::asserted, "", kTau3,
                 [](InstanceContext& c) {
                     return eval(c.tau3_basis().c.is_empty(), c.properties().connected.holds,
                                 {{"C", to_json(c.tau3_basis().c)},
                                  {"disconnection", to_json(c.properties())["witnesses"]["connected"]}});
                 }});

    r.push_back({"Prop3.13", "tau3 is compact when N0 is finite", D::implies, E::asserted,
                 "N0 is represented by orbit residues and is always finite here; the infinite-N0 branch is "
                 "unreachable at desk scale",
                 kTau3, [](InstanceContext& c) {
                     const auto& v = c.properties().compact;
                     return eval(true, v.holds,
                                 {{"N0_residues", c.orbit().length()}, {"subcover", sets_json(v.subcover)}});
                 }});

    r.push_back({"Prop3.14", "tau3 is T0 iff C has at most one element and f(x0) = x0", D::iff, E::report_only,
                 "T0 in paper_fuzzy_pair mode", kTau3, [](InstanceContext& c) {
                     const bool hyp = support_size(c.tau3_basis().c) <= 1 && c.f()(c.instance().x0) == c.instance().x0;
                     return eval(hyp, c.properties().t0_in(T0Mode::paper_fuzzy_pair).holds,
                                 {{"C", to_json(c.tau3_basis().c)},
                                  {"unseparated", to_json(c.properties())["witnesses"]["t0"]["paper_fuzzy_pair"]}});
                 }});

    r.push_back({"Prop3.15", "tau3 is regular iff f(x0) = x0", D::iff, E::report_only,
                 "the converse argument relies on (k-1)/k > 0, i.e. k >= 2; see by_k", kTau3,
                 [](InstanceContext& c) {
                     return eval(c.f()(c.instance().x0) == c.instance().x0, c.properties().regular.holds,
                                 {{"k", c.instance().k},
                                  {"regular_witness", to_json(c.properties())["witnesses"]["regular"]}});
                 }});

    r.push_back({"Prop3.16", "tau3 is normal", D::implies, E::asserted, "", kTau3, [](InstanceContext& c) {
                     return eval(true, c.properties().normal.holds,
                                 {{"unseparated", to_json(c.properties())["witnesses"]["normal"]},
                                  {"tau3_opens", to_json(c.tau3())["opens"]}});
                 }});

    r.push_back({"Thm4.1", "if every point is periodic then tau1 = tau2", D::implies, E::asserted,
                 "forward direction", kTau1, [](InstanceContext& c) {
                     const auto v = topologies_equal(c.tau1(), c.tau2());
                     return eval(c.profile().all_periodic, v.equal, {{"equality", to_json(v)}});
                 }});

    r.push_back({"Thm4.1.converse", "tau1 = tau2 forces every point to be periodic", D::implies,
                 E::report_only, "", kTau1, [](InstanceContext& c) {
                     const auto v = topologies_equal(c.tau1(), c.tau2());
                     return eval(v.equal, c.profile().all_periodic,
                                 {{"equality", to_json(v)},
                                  {"periodic", c.profile().periodic},
                                  {"tau1_opens", opens_json(c.tau1())},
                                  {"tau2_opens", opens_json(c.tau2())}});
                 }});

    r.push_back({"Thm4.2", "tau1 and tau3 are never equal", D::implies, E::asserted, "", kTau3,
                 [](InstanceContext& c) {
                     const auto v = topologies_equal(c.tau1(), c.tau3());
                     return eval(true, !v.equal,
                                 {{"equality", to_json(v)},
                                  {"tau1_opens", opens_json(c.tau1())},
                                  {"tau3_opens", to_json(c.tau3())["opens"]}});
                 }});

    r.push_back({"Thm4.3", "if f is onto, A(x0) = X and k = 1 then tau2 = tau3", D::implies,
                 E::report_only, "forward direction", kTau3, [](InstanceContext& c) {
                     const bool hyp = c.profile().onto && orbit_is_whole(c) && c.instance().k == 1;
                     const auto v = topologies_equal(c.tau2(), c.tau3());
                     return eval(hyp, v.equal, {{"equality", to_json(v)}});
                 }});

    r.push_back({"Thm4.3.converse", "tau2 = tau3 forces f onto, A(x0) = X and k = 1", D::implies,
                 E::report_only, "", kTau3, [](InstanceContext& c) {
                     const bool concl = c.profile().onto && orbit_is_whole(c) && c.instance().k == 1;
                     const auto v = topologies_equal(c.tau2(), c.tau3());
                     return eval(v.equal, concl,
                                 {{"equality", to_json(v)},
                                  {"k", c.instance().k},
                                  {"orbit_length", c.orbit().length()},
                                  {"tau2_opens", opens_json(c.tau2())},
                                  {"tau3_opens", to_json(c.tau3())["opens"]}});
                 }});
    return r;
}

}  // namespace

const std::vector<TheoremClaim>& theorem_registry() {
    static const std::vector<TheoremClaim> registry = build_registry();
    return registry;
}

const TheoremClaim& find_claim(std::string_view id) {
    for (const auto& c : theorem_registry()) {
        if (c.id == id) return c;
    }
    throw InputError("unknown claim id \"" + std::string(id) + "\"");
}

ClaimVerdict check_claim(const TheoremClaim& claim, InstanceContext& context) {
    ClaimVerdict v;
    if (!claim.applies_to(context.instance())) return v;
    v.applicable = true;
    auto e = claim.evaluate(context);
    v.hypothesis = e.hypothesis;
    v.conclusion = e.conclusion;
    v.evidence = std::move(e.evidence);
    switch (claim.direction) {
        case Direction::iff: v.agrees = v.hypothesis == v.conclusion; break;
        case Direction::implies: v.agrees = !v.hypothesis || v.conclusion; break;
        case Direction::exists: v.agrees = v.hypothesis && v.conclusion; break;
    }
    return v;
}

ClaimVerdict check_claim(const TheoremClaim& claim, const Instance& instance) {
    InstanceContext context(instance);
    return check_claim(claim, context);
}

// ---------------------------------------------------------------------------

bool ClaimTally::holds() const {
    return direction == Direction::exists ? witness.has_value() : !counterexample.has_value();
}

const ClaimTally& SweepReport::claim(std::string_view id) const {
    for (const auto& c : claims) {
        if (c.id == id) return c;
    }
    throw InputError("claim \"" + std::string(id) + "\" absent from report");
}

std::vector<std::string> SweepReport::asserted_failures() const {
    std::vector<std::string> out;
    for (const auto& c : claims) {
        if (c.expectation == Expectation::asserted && !c.holds()) out.push_back(c.id);
    }
    return out;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void validate(const SweepParams& p) {
    if (p.max_size == 0) throw InputError("max size must be at least 1");
    if (p.max_size > kMaxSweepSize) {
        throw InputError("max size " + std::to_string(p.max_size) + " exceeds the cost guard of " +
                         std::to_string(kMaxSweepSize) + " (estimated " +
                         std::to_string(estimate_instance_count(p)) + " instances)");
    }
    if (p.window < p.max_size + 2) {
        throw InputError("window must be at least max size + 2 (got " + std::to_string(p.window) + ")");
    }
    if (p.k_values.empty()) throw InputError("need at least one k value");
    if (std::any_of(p.k_values.begin(), p.k_values.end(), [](unsigned k) { return k == 0; })) {
        throw InputError("k values must be positive");
    }
}

}  // namespace

std::size_t estimate_instance_count(const SweepParams& params) {
    std::set<unsigned> ks(params.k_values.begin(), params.k_values.end());
    std::size_t total = 0;
    for (std::size_t n = 1; n <= params.max_size; ++n) {
        total += 2 * ipow(n, n) + factorial(n) * n * ks.size();
    }
    return total;
}

std::vector<Instance> enumerate_instances(const SweepParams& params) {
    validate(params);
    std::set<unsigned> ks(params.k_values.begin(), params.k_values.end());
    std::vector<Instance> out;
    out.reserve(estimate_instance_count(params));
    for (std::size_t n = 1; n <= params.max_size; ++n) {
        std::vector<std::size_t> map(n, 0);
        // Odometer with the last position fastest: lexicographic order.
        while (true) {
            EndoFunction f(map);
            out.push_back({f, SpaceKind::tau1, 0, 0, params.window});
            out.push_back({f, SpaceKind::tau2, 0, 0, params.window});
            if (profile(f).injective) {
                for (std::size_t x0 = 0; x0 < n; ++x0) {
                    for (auto k : ks) out.push_back({f, SpaceKind::tau3, x0, k, params.window});
                }
            }
            std::size_t pos = n;
            while (pos > 0 && map[pos - 1] == n - 1) map[--pos] = 0;
            if (pos == 0) break;
            ++map[pos - 1];
        }
    }
    return out;
}

SweepReport sweep(const SweepParams& params) {
    const auto instances = enumerate_instances(params);
    SweepReport report{params, {}};
    std::sort(report.params.k_values.begin(), report.params.k_values.end());
    report.params.k_values.erase(std::unique(report.params.k_values.begin(), report.params.k_values.end()),
                                 report.params.k_values.end());
    const auto& registry = theorem_registry();
    for (const auto& c : registry) {
        report.claims.push_back({c.id, c.direction, c.expectation, c.note, 0, 0, 0, std::nullopt, std::nullopt, {}});
    }
    for (const auto& instance : instances) {
        InstanceContext context(instance);
        for (std::size_t i = 0; i < registry.size(); ++i) {
            const auto v = check_claim(registry[i], context);
            if (!v.applicable) continue;
            auto& t = report.claims[i];
            ++t.instances;
            t.hypothesis_true += v.hypothesis;
            t.agreements += v.agrees;
            if (instance.space == SpaceKind::tau3) {
                auto& [count, agree] = t.by_k[instance.k];
                ++count;
                agree += v.agrees;
            }
            CounterexampleRecord record{instance, v.hypothesis, v.conclusion, v.evidence};
            if (t.direction == Direction::exists) {
                if (v.agrees && !t.witness) t.witness = std::move(record);
            } else if (!v.agrees && !t.counterexample) {
                t.counterexample = std::move(record);
            }
        }
    }
    return report;
}

namespace {

json record_json(const std::optional<CounterexampleRecord>& r) {
    if (!r) return nullptr;
    return {{"instance", to_json(r->instance)},
            {"hypothesis", r->hypothesis},
            {"conclusion", r->conclusion},
            {"evidence", r->evidence}};
}

}  // namespace

json to_json(const SweepReport& report) {
    json claims = json::array();
    std::size_t asserted = 0;
    json report_only_disagreements = json::array();
    for (const auto& t : report.claims) {
        json c = {{"id", t.id},
                  {"direction", std::string(to_string(t.direction))},
                  {"expectation", std::string(to_string(t.expectation))},
                  {"note", t.note},
                  {"instances", t.instances},
                  {"hypothesis_true", t.hypothesis_true},
                  {"agreements", t.agreements},
                  {"holds", t.holds()}};
        if (t.direction == Direction::exists) {
            c["counterexample"] = t.witness ? json(nullptr)
                                            : json{{"instance", nullptr},
                                                   {"reason", "no witnessing instance in the sweep"}};
            c["witness"] = record_json(t.witness);
        } else {
            c["counterexample"] = record_json(t.counterexample);
        }
        if (!t.by_k.empty()) {
            json by_k = json::object();
            for (const auto& [k, tally] : t.by_k) {
                by_k[std::to_string(k)] = {{"instances", tally.first}, {"agreements", tally.second}};
            }
            c["by_k"] = by_k;
        }
        asserted += t.expectation == Expectation::asserted;
        if (t.expectation == Expectation::report_only && !t.holds()) report_only_disagreements.push_back(t.id);
        claims.push_back(std::move(c));
    }
    return {{"params",
             {{"max_size", report.params.max_size},
              {"k_values", report.params.k_values},
              {"window", report.params.window}}},
            {"claims", claims},
            {"summary",
             {{"asserted", asserted},
              {"asserted_failures", report.asserted_failures()},
              {"report_only_disagreements", report_only_disagreements}}}};
}

}  // namespace fuzztop
