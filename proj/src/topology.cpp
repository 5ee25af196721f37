#include "fuzztop/topology.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "fuzztop/errors.hpp"

namespace fuzztop {

std::size_t default_window(std::size_t carrier_size) { return carrier_size + 2; }

WindowedChain::WindowedChain(ChainFamily chain, std::size_t window)
    : chain_(std::move(chain)), window_(window) {
    if (window_ == 0) {
        throw InputError("chain window must be at least 1");
    }
}

std::optional<std::size_t> WindowedChain::member_index(const FuzzySet& g) const {
    if (g.size() != chain_.carrier_size()) {
        return std::nullopt;
    }
    std::optional<std::size_t> n;
    if (chain_.decreasing()) {
        if (g.is_whole()) return 1;
        // Any element of positive depth with grade below 1 pins n = d / grade.
        for (std::size_t x = 0; x < g.size() && !n; ++x) {
            const auto d = static_cast<std::int64_t>(chain_.depth(x));
            if (d == 0 || g[x].is_one()) continue;
            if (g[x].is_zero() || (d * g[x].denominator()) % g[x].numerator() != 0) {
                return std::nullopt;
            }
            n = static_cast<std::size_t>(d * g[x].denominator() / g[x].numerator());
        }
    } else {
        // Uniform (n - 1) / n, i.e. 1 - g = 1 / n.
        const auto gap = g[0].complement();
        if (gap.is_zero() || gap.numerator() != 1) return std::nullopt;
        n = static_cast<std::size_t>(gap.denominator());
    }
    if (!n || *n > window_ || chain_.member(*n) != g) {
        return std::nullopt;
    }
    return n;
}

bool WindowedChain::contains(const FuzzySet& g) const {
    if (g.size() != chain_.carrier_size()) return false;
    if (g.is_empty()) return true;
    if (!chain_.decreasing() && g.is_whole()) return true;
    return member_index(g).has_value();
}

std::vector<FuzzySet> WindowedChain::basis() const {
    std::vector<FuzzySet> out;
    out.reserve(window_);
    for (std::size_t n = 1; n <= window_; ++n) {
        out.push_back(chain_.member(n));
    }
    return out;
}

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::materialized_chain: return "materialized_chain";
        case Provenance::tau3: return "tau3";
        case Provenance::custom: return "custom";
    }
    return "?";
}

ExplicitTopology::ExplicitTopology(Trusted, std::size_t carrier_size, std::vector<FuzzySet> opens,
                                   Provenance provenance, std::vector<FuzzySet> basis,
                                   std::size_t window)
    : carrier_size_(carrier_size),
      opens_(std::move(opens)),
      basis_(std::move(basis)),
      provenance_(provenance),
      window_(window) {}

ExplicitTopology::ExplicitTopology(std::size_t carrier_size, std::vector<FuzzySet> opens,
                                   Provenance provenance, std::vector<FuzzySet> basis,
                                   std::size_t window)
    : ExplicitTopology(Trusted{}, carrier_size, std::move(opens), provenance, std::move(basis), window) {
    for (const auto& u : opens_) {
        if (u.size() != carrier_size_) {
            throw InputError("open set " + u.str() + " is not over a carrier of size " +
                             std::to_string(carrier_size_));
        }
    }
    std::sort(opens_.begin(), opens_.end());
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    if (!contains(FuzzySet::empty(carrier_size_)) || !contains(FuzzySet::whole(carrier_size_))) {
        throw InputError("a fuzzy topology must contain the empty set and X");
    }
    for (const auto& u : opens_) {
        for (const auto& v : opens_) {
            if (!contains(unite(u, v)) || !contains(intersect(u, v))) {
                throw InputError("family is not closed under union/intersection at " + u.str() +
                                 ", " + v.str());
            }
        }
    }
}

bool ExplicitTopology::contains(const FuzzySet& g) const {
    return std::binary_search(opens_.begin(), opens_.end(), g);
}

ExplicitTopology generate_topology(const std::vector<FuzzySet>& basis, Provenance provenance) {
    if (basis.empty()) {
        throw InputError("cannot generate a topology from an empty basis");
    }
    const auto n = basis.front().size();
    auto cover = FuzzySet::empty(n);
    for (const auto& b : basis) cover = unite(cover, b);
    if (!cover.is_whole()) {
        throw InputError("basis does not cover X: pointwise sup is " + cover.str());
    }

    std::set<FuzzySet> family(basis.begin(), basis.end());
    family.insert(FuzzySet::empty(n));
    family.insert(FuzzySet::whole(n));
    std::vector<FuzzySet> worklist(family.begin(), family.end());
    while (!worklist.empty()) {
        auto u = std::move(worklist.back());
        worklist.pop_back();
        std::vector<FuzzySet> fresh;
        for (const auto& v : family) {
            for (auto w : {unite(u, v), intersect(u, v)}) {
                if (!family.contains(w)) fresh.push_back(std::move(w));
            }
        }
        for (auto& w : fresh) {
            if (family.insert(w).second) worklist.push_back(std::move(w));
        }
    }
    return ExplicitTopology(ExplicitTopology::Trusted{}, n,
                            std::vector<FuzzySet>(family.begin(), family.end()), provenance, basis, 0);
}

ExplicitTopology materialize_chain(const ChainFamily& chain, std::size_t window) {
    const WindowedChain windowed(chain, window);
    auto members = windowed.basis();
    for (std::size_t i = 1; i < members.size(); ++i) {
        assert(chain.decreasing() ? leq(members[i], members[i - 1]) : leq(members[i - 1], members[i]));
    }
    std::set<FuzzySet> family(members.begin(), members.end());
    family.insert(FuzzySet::empty(chain.carrier_size()));
    if (!chain.decreasing()) {
        family.insert(chain.supremum());
    }
    return ExplicitTopology(ExplicitTopology::Trusted{}, chain.carrier_size(),
                            std::vector<FuzzySet>(family.begin(), family.end()),
                            Provenance::materialized_chain, std::move(members), window);
}

ExplicitTopology tau3_topology(const OrbitData& orbit) {
    return generate_topology(tau3_basis(orbit).members(), Provenance::tau3);
}

std::size_t carrier_size(const Space& space) {
    return std::visit([](const auto& s) { return s.carrier_size(); }, space);
}

bool contains(const Space& space, const FuzzySet& g) {
    return std::visit([&](const auto& s) { return s.contains(g); }, space);
}

ExplicitTopology materialize(const Space& space) {
    if (const auto* chain = std::get_if<WindowedChain>(&space)) {
        return materialize_chain(chain->chain(), chain->window());
    }
    return std::get<ExplicitTopology>(space);
}

}  // namespace fuzztop
