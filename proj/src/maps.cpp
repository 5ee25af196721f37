#include "fuzztop/maps.hpp"

#include <algorithm>

#include "fuzztop/errors.hpp"

namespace fuzztop {

namespace {

void require_carrier(const EndoFunction& f, const FuzzySet& a) {
    if (a.size() != f.size()) {
        throw InputError("fuzzy set of size " + std::to_string(a.size()) + " for a map on " +
                         std::to_string(f.size()) + " elements");
    }
}

std::vector<FuzzySet> opens_to_check(const Space& space) {
    if (const auto* chain = std::get_if<WindowedChain>(&space)) {
        auto members = chain->basis();
        members.push_back(FuzzySet::empty(chain->carrier_size()));
        if (!chain->chain().decreasing()) members.push_back(chain->chain().supremum());
        return members;
    }
    return std::get<ExplicitTopology>(space).opens();
}

template <class Transform, class Member>
MapVerdict check_all(const std::vector<FuzzySet>& sources, Transform transform, Member member) {
    // Canonical witness: the least open (by grade vector) that fails.
    std::vector<FuzzySet> sorted = sources;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& u : sorted) {
        auto v = transform(u);
        if (!member(v)) return MapVerdict{false, MapWitness{u, std::move(v)}};
    }
    return MapVerdict{};
}

void require_agreement(const MapVerdict& a, const MapVerdict& b, const char* what) {
    if (a.holds != b.holds) {
        throw ConsistencyError(std::string(what) +
                               ": closed-form and materialized chain routes disagree");
    }
}

}  // namespace

FuzzySet zadeh_image(const EndoFunction& f, const FuzzySet& a) {
    require_carrier(f, a);
    std::vector<Grade> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        out[f(x)] = std::max(out[f(x)], a[x]);
    }
    return FuzzySet(std::move(out));
}

FuzzySet zadeh_preimage(const EndoFunction& f, const FuzzySet& a) {
    require_carrier(f, a);
    std::vector<Grade> out;
    out.reserve(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        out.push_back(a[f(x)]);
    }
    return FuzzySet(std::move(out));
}

MapVerdict is_open_map(const EndoFunction& f, const Space& space) {
    return check_all(
        opens_to_check(space), [&](const FuzzySet& u) { return zadeh_image(f, u); },
        [&](const FuzzySet& v) { return contains(space, v); });
}

MapVerdict is_continuous(const EndoFunction& f, const Space& space) {
    return check_all(
        opens_to_check(space), [&](const FuzzySet& u) { return zadeh_preimage(f, u); },
        [&](const FuzzySet& v) { return contains(space, v); });
}

MapVerdict is_open_map_on_basis(const EndoFunction& f, const ExplicitTopology& t) {
    return check_all(
        t.basis(), [&](const FuzzySet& u) { return zadeh_image(f, u); },
        [&](const FuzzySet& v) { return t.contains(v); });
}

MapVerdict is_continuous_on_basis(const EndoFunction& f, const ExplicitTopology& t) {
    return check_all(
        t.basis(), [&](const FuzzySet& u) { return zadeh_preimage(f, u); },
        [&](const FuzzySet& v) { return t.contains(v); });
}

MapReport map_report(const EndoFunction& f, const Space& space) {
    MapReport report{is_open_map(f, space), is_continuous(f, space)};
    if (std::holds_alternative<WindowedChain>(space)) {
        const Space explicit_space = materialize(space);
        require_agreement(report.open_map, is_open_map(f, explicit_space), "open-map verdict");
        require_agreement(report.continuous, is_continuous(f, explicit_space), "continuity verdict");
    }
    return report;
}

}  // namespace fuzztop
