#include "fuzztop/properties.hpp"

#include <algorithm>
#include <set>

#include "fuzztop/errors.hpp"

namespace fuzztop {

std::string_view to_string(T0Mode mode) {
    switch (mode) {
        case T0Mode::crisp: return "crisp";
        case T0Mode::paper_fuzzy_pair: return "paper_fuzzy_pair";
        case T0Mode::fuzzy_full: return "fuzzy_full";
    }
    return "?";
}

namespace {

std::vector<Grade> grid_from(std::set<Grade> occurring) {
    occurring.insert(Grade::zero());
    occurring.insert(Grade::one());
    std::set<Grade> grid;
    for (auto it = occurring.begin(); std::next(it) != occurring.end(); ++it) {
        grid.insert(it->midpoint(*std::next(it)));
        grid.insert(*std::next(it));
    }
    return {grid.begin(), grid.end()};
}

bool separates(const FuzzySet& u, const FuzzyPoint& a, const FuzzyPoint& b) {
    return fuzzy_point_in(a, u) != fuzzy_point_in(b, u);
}

std::vector<FuzzySet> chain_opens(const WindowedChain& c) {
    auto opens = c.basis();
    opens.push_back(FuzzySet::empty(c.carrier_size()));
    if (!c.chain().decreasing()) opens.push_back(c.chain().supremum());
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    return opens;
}

std::vector<FuzzySet> nonempty_closed_sets(const ExplicitTopology& t) {
    std::vector<FuzzySet> closed;
    for (const auto& u : t.opens()) {
        if (!u.is_whole()) closed.push_back(complement(u));
    }
    std::sort(closed.begin(), closed.end());
    return closed;
}

std::vector<FuzzySet> shrink_cover(std::vector<FuzzySet> family) {
    std::sort(family.begin(), family.end());
    for (std::size_t i = 0; i < family.size();) {
        auto without = family;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        auto sup = FuzzySet::empty(family.front().size());
        for (const auto& u : without) sup = unite(sup, u);
        if (!without.empty() && sup.is_whole()) {
            family = std::move(without);
        } else {
            ++i;
        }
    }
    return family;
}

bool covers(const std::vector<FuzzySet>& family, std::size_t n) {
    auto sup = FuzzySet::empty(n);
    for (const auto& u : family) sup = unite(sup, u);
    return sup.is_whole();
}

template <class Verdict>
void require_same(const Verdict& a, const Verdict& b, std::string_view what) {
    if (a.holds != b.holds) {
        throw ConsistencyError(std::string(what) +
                               ": closed-form chain verdict differs from the materialized family");
    }
}

}  // namespace

bool is_cover(const Space& space, const std::vector<FuzzySet>& family) {
    for (const auto& u : family) {
        if (!contains(space, u)) {
            throw InputError("cover member " + u.str() + " is not open");
        }
    }
    return covers(family, carrier_size(space));
}

std::vector<Grade> threshold_grid(const ExplicitTopology& t) {
    std::set<Grade> occurring;
    for (const auto& u : t.opens()) occurring.insert(u.grades().begin(), u.grades().end());
    return grid_from(std::move(occurring));
}

std::vector<Grade> threshold_grid(const WindowedChain& c) {
    std::set<Grade> occurring;
    for (std::size_t n = 1; n <= c.window(); ++n) {
        for (std::size_t x = 0; x < c.carrier_size(); ++x) occurring.insert(c.chain().grade_at(n, x));
    }
    return grid_from(std::move(occurring));
}

// ---------------------------------------------------------------------------
// Closed-form chain deciders. Every nonempty member of a chain is positive at
// every element (grades are 1, d/n or (n-1)/n with n >= 2), so no two
// nonempty opens are disjoint, and the closed sets are nested.

CompactVerdict is_compact(const WindowedChain& c) {
    const auto whole = FuzzySet::whole(c.carrier_size());
    return {true, {whole},
            c.chain().decreasing()
                ? "B_1 = X, so {B_1} is a finite subcover of every cover"
                : "the chain's supremum X is open, so {X} is a finite subcover of every cover"};
}

ConnectedVerdict is_connected(const WindowedChain&) { return {}; }

T0Verdict is_t0(const WindowedChain& c, T0Mode mode) {
    const auto n = c.carrier_size();
    const auto& chain = c.chain();
    if (mode == T0Mode::crisp) {
        // Depth d behaves as infinity when 0. Two elements of different
        // effective depth ex < ey are told apart first at index ex + 1.
        auto effective = [&](std::size_t x) {
            const auto d = chain.depth(x);
            return d == 0 ? c.window() + 1 : std::min(d, c.window() + 1);
        };
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = x + 1; y < n; ++y) {
                const bool apart = chain.decreasing() && std::min(effective(x), effective(y)) < c.window() &&
                                   effective(x) != effective(y);
                if (!apart) {
                    return {false, std::pair{FuzzyPoint(x, Grade::one()), FuzzyPoint(y, Grade::one())}};
                }
            }
        }
        return {};
    }
    // The lowest grid degree sits below every positive grade, so every
    // nonempty open contains (x, p) for every x.
    const auto grid = threshold_grid(c);
    const auto& low = grid.front();
    if (mode == T0Mode::paper_fuzzy_pair) {
        if (n < 2) return {};
        return {false, std::pair{FuzzyPoint(0, low), FuzzyPoint(1, low)}};
    }
    // fuzzy_full: (0, low) and (0, next) need an open with grade in
    // [low, next) at 0, and no grade occurs strictly between 0 and next.
    return {false, std::pair{FuzzyPoint(0, low), FuzzyPoint(0, grid.at(1))}};
}

RegularVerdict is_regular(const WindowedChain& c) {
    // Fails exactly when some member other than X reaches grade 1 at x:
    // its complement avoids x and any open around it meets x's neighbourhood.
    for (std::size_t x = 0; x < c.carrier_size(); ++x) {
        std::optional<FuzzySet> least;
        for (std::size_t n = 1; n <= c.window(); ++n) {
            const auto b = c.chain().member(n);
            if (b.is_whole() || !b[x].is_one()) continue;
            auto f = complement(b);
            if (!least || f < *least) least = std::move(f);
        }
        if (least) return {false, std::pair{x, std::move(*least)}};
    }
    return {};
}

NormalVerdict is_normal(const WindowedChain&) { return {}; }

LindelofVerdict is_lindelof(const WindowedChain& c) {
    return {true, "countable basis {B_n : n in N} (" + std::string(to_string(c.chain().kind())) + " chain)"};
}

// ---------------------------------------------------------------------------
// Generic deciders.

CompactVerdict is_compact(const ExplicitTopology& t) {
    return {true, shrink_cover(t.opens()),
            "finite topology with " + std::to_string(t.size()) + " opens: every cover is finite"};
}

ConnectedVerdict is_connected(const ExplicitTopology& t) {
    const auto& opens = t.opens();
    for (std::size_t i = 0; i < opens.size(); ++i) {
        if (opens[i].is_empty()) continue;
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (opens[j].is_empty()) continue;
            if (disjoint(opens[i], opens[j]) && unite(opens[i], opens[j]).is_whole()) {
                return {false, std::pair{opens[i], opens[j]}};
            }
        }
    }
    return {};
}

T0Verdict is_t0(const ExplicitTopology& t, T0Mode mode) {
    const auto n = t.carrier_size();
    const auto& opens = t.opens();
    auto separated = [&](const FuzzyPoint& a, const FuzzyPoint& b) {
        return std::any_of(opens.begin(), opens.end(), [&](const FuzzySet& u) { return separates(u, a, b); });
    };
    if (mode == T0Mode::crisp) {
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = x + 1; y < n; ++y) {
                const bool apart = std::any_of(opens.begin(), opens.end(),
                                               [&](const FuzzySet& u) { return u[x] != u[y]; });
                if (!apart) {
                    return {false, std::pair{FuzzyPoint(x, Grade::one()), FuzzyPoint(y, Grade::one())}};
                }
            }
        }
        return {};
    }
    const auto grid = threshold_grid(t);
    if (mode == T0Mode::paper_fuzzy_pair) {
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = x + 1; y < n; ++y) {
                for (const auto& p : grid) {
                    FuzzyPoint a(x, p), b(y, p);
                    if (!separated(a, b)) return {false, std::pair{a, b}};
                }
            }
        }
        return {};
    }
    std::vector<FuzzyPoint> points;
    for (std::size_t x = 0; x < n; ++x) {
        for (const auto& p : grid) points.emplace_back(x, p);
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (!separated(points[i], points[j])) return {false, std::pair{points[i], points[j]}};
        }
    }
    return {};
}

RegularVerdict is_regular(const ExplicitTopology& t) {
    const auto closed = nonempty_closed_sets(t);
    const auto& opens = t.opens();
    for (std::size_t x = 0; x < t.carrier_size(); ++x) {
        for (const auto& f : closed) {
            if (!f[x].is_zero()) continue;
            bool ok = false;
            for (const auto& u : opens) {
                if (!u[x].is_one()) continue;
                for (const auto& v : opens) {
                    if (leq(f, v) && disjoint(u, v)) {
                        ok = true;
                        break;
                    }
                }
                if (ok) break;
            }
            if (!ok) return {false, std::pair{x, f}};
        }
    }
    return {};
}

NormalVerdict is_normal(const ExplicitTopology& t) {
    const auto closed = nonempty_closed_sets(t);
    const auto& opens = t.opens();
    // Open neighbourhoods of each closed set.
    std::vector<std::vector<const FuzzySet*>> around(closed.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
        for (const auto& u : opens) {
            if (leq(closed[i], u)) around[i].push_back(&u);
        }
    }
    for (std::size_t i = 0; i < closed.size(); ++i) {
        for (std::size_t j = i + 1; j < closed.size(); ++j) {
            if (!disjoint(closed[i], closed[j])) continue;
            bool ok = false;
            for (const auto* u : around[i]) {
                for (const auto* v : around[j]) {
                    if (disjoint(*u, *v)) {
                        ok = true;
                        break;
                    }
                }
                if (ok) break;
            }
            if (!ok) return {false, std::pair{closed[i], closed[j]}};
        }
    }
    return {};
}

LindelofVerdict is_lindelof(const ExplicitTopology& t) {
    return {true, "finite basis (" + std::to_string(t.size()) + " opens)"};
}

// ---------------------------------------------------------------------------

CompactVerdict is_compact(const Space& s) {
    return std::visit([](const auto& x) { return is_compact(x); }, s);
}
ConnectedVerdict is_connected(const Space& s) {
    return std::visit([](const auto& x) { return is_connected(x); }, s);
}
T0Verdict is_t0(const Space& s, T0Mode mode) {
    return std::visit([mode](const auto& x) { return is_t0(x, mode); }, s);
}
RegularVerdict is_regular(const Space& s) {
    return std::visit([](const auto& x) { return is_regular(x); }, s);
}
NormalVerdict is_normal(const Space& s) {
    return std::visit([](const auto& x) { return is_normal(x); }, s);
}
LindelofVerdict is_lindelof(const Space& s) {
    return std::visit([](const auto& x) { return is_lindelof(x); }, s);
}

std::optional<std::vector<FuzzySet>> exhaustive_subcover_search(const ExplicitTopology& t) {
    const auto& opens = t.opens();
    if (opens.size() > kSubcoverSearchCap) return std::nullopt;
    const auto n = t.carrier_size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << opens.size()); ++mask) {
        std::vector<FuzzySet> family;
        for (std::size_t i = 0; i < opens.size(); ++i) {
            if (mask & (std::size_t{1} << i)) family.push_back(opens[i]);
        }
        if (!covers(family, n)) continue;
        if (!covers(shrink_cover(family), n)) {
            throw ConsistencyError("subcover search produced a non-cover");
        }
    }
    return shrink_cover(opens);
}

namespace {

template <class Chain>
PropertyReport assemble(const Chain& c) {
    PropertyReport r;
    r.compact = is_compact(c);
    r.connected = is_connected(c);
    for (auto mode : kT0Modes) r.t0[static_cast<std::size_t>(mode)] = is_t0(c, mode);
    r.regular = is_regular(c);
    r.normal = is_normal(c);
    r.lindelof = is_lindelof(c);
    return r;
}

}  // namespace

PropertyReport property_report(const WindowedChain& c) { return assemble(c); }

PropertyReport property_report(const ExplicitTopology& t) {
    auto r = assemble(t);
    if (auto subcover = exhaustive_subcover_search(t); subcover && !covers(*subcover, t.carrier_size())) {
        throw ConsistencyError("exhaustive subcover search disagrees with compactness verdict");
    }
    return r;
}

PropertyReport property_report(const Space& s) {
    if (const auto* chain = std::get_if<WindowedChain>(&s)) {
        auto symbolic = property_report(*chain);
        const auto materialized = property_report(materialize(s));
        require_same(symbolic.compact, materialized.compact, "compactness");
        require_same(symbolic.connected, materialized.connected, "connectedness");
        for (auto mode : kT0Modes) {
            require_same(symbolic.t0_in(mode), materialized.t0_in(mode),
                         "T0 (" + std::string(to_string(mode)) + ")");
        }
        require_same(symbolic.regular, materialized.regular, "regularity");
        require_same(symbolic.normal, materialized.normal, "normality");
        require_same(symbolic.lindelof, materialized.lindelof, "Lindelof");
        return symbolic;
    }
    return property_report(std::get<ExplicitTopology>(s));
}

EqualityVerdict topologies_equal(const Space& left, const Space& right) {
    if (carrier_size(left) != carrier_size(right)) {
        throw InputError("cannot compare topologies over carriers of different sizes");
    }
    const auto a = materialize(left);
    const auto b = materialize(right);
    EqualityVerdict v;
    std::vector<FuzzySet> only_left, only_right;
    std::set_difference(a.opens().begin(), a.opens().end(), b.opens().begin(), b.opens().end(),
                        std::back_inserter(only_left));
    std::set_difference(b.opens().begin(), b.opens().end(), a.opens().begin(), a.opens().end(),
                        std::back_inserter(only_right));
    if (!only_left.empty() || !only_right.empty()) {
        v.equal = false;
        if (!only_left.empty() && (only_right.empty() || only_left.front() < only_right.front())) {
            v.witness = only_left.front();
            v.witness_side = "left";
        } else {
            v.witness = only_right.front();
            v.witness_side = "right";
        }
        v.reason = "open set " + v.witness->str() + " lies only in the " + v.witness_side + " topology";
        return v;
    }
    const auto* lc = std::get_if<WindowedChain>(&left);
    const auto* rc = std::get_if<WindowedChain>(&right);
    if (lc && rc && !lc->chain().same_rule(rc->chain())) {
        // Equal on the window but the grade laws diverge further out.
        const auto horizon = std::max(lc->window(), rc->window()) + carrier_size(left) + 2;
        for (std::size_t n = 1; n <= horizon; ++n) {
            if (lc->chain().member(n) != rc->chain().member(n)) {
                v.equal = false;
                v.witness = lc->chain().member(n);
                v.witness_side = "left";
                v.reason = "grade rules diverge at index " + std::to_string(n) + " beyond the window";
                return v;
            }
        }
    }
    v.reason = lc && rc ? "same grade rule and same windowed family" : "same set of grade vectors";
    return v;
}

}  // namespace fuzztop
