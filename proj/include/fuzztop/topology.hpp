#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzztop/chain.hpp"
#include "fuzztop/endofunction.hpp"
#include "fuzztop/fuzzy_set.hpp"

namespace fuzztop {

/// Default chain window: carrier size + 2.
std::size_t default_window(std::size_t carrier_size);

/// A chain family viewed through the finite window B_1..B_window. Its opens
/// are {empty} u {B_n : n <= window} (plus X for the increasing complement
/// chain, whose supremum is X); membership is decided in closed form.
class WindowedChain {
public:
    /// Throws InputError for window == 0.
    WindowedChain(ChainFamily chain, std::size_t window);

    const ChainFamily& chain() const { return chain_; }
    std::size_t window() const { return window_; }
    std::size_t carrier_size() const { return chain_.carrier_size(); }

    /// Least n <= window with B_n == g, solved from the grade rule.
    std::optional<std::size_t> member_index(const FuzzySet& g) const;
    bool contains(const FuzzySet& g) const;

    /// B_1..B_window in index order (repeats kept).
    std::vector<FuzzySet> basis() const;

private:
    ChainFamily chain_;
    std::size_t window_;
};

enum class Provenance { materialized_chain, tau3, custom };

std::string_view to_string(Provenance p);

/// Finite fuzzy topology: opens sorted by grade vector, deduplicated,
/// containing empty and X and closed under pairwise max/min.
class ExplicitTopology {
public:
    /// Validates the invariants; throws InputError when violated.
    ExplicitTopology(std::size_t carrier_size, std::vector<FuzzySet> opens, Provenance provenance,
                     std::vector<FuzzySet> basis = {}, std::size_t window = 0);

    std::size_t carrier_size() const { return carrier_size_; }
    const std::vector<FuzzySet>& opens() const { return opens_; }
    std::size_t size() const { return opens_.size(); }
    /// Generating family when known (chain members, or C and the C_n).
    const std::vector<FuzzySet>& basis() const { return basis_; }
    Provenance provenance() const { return provenance_; }
    std::size_t window() const { return window_; }

    bool contains(const FuzzySet& g) const;

    friend bool operator==(const ExplicitTopology& a, const ExplicitTopology& b) {
        return a.carrier_size_ == b.carrier_size_ && a.opens_ == b.opens_;
    }

private:
    struct Trusted {};
    ExplicitTopology(Trusted, std::size_t carrier_size, std::vector<FuzzySet> opens,
                     Provenance provenance, std::vector<FuzzySet> basis, std::size_t window);

    friend ExplicitTopology generate_topology(const std::vector<FuzzySet>& basis, Provenance provenance);
    friend ExplicitTopology materialize_chain(const ChainFamily& chain, std::size_t window);

    std::size_t carrier_size_;
    std::vector<FuzzySet> opens_;
    std::vector<FuzzySet> basis_;
    Provenance provenance_;
    std::size_t window_;
};

/// Least family containing the basis, empty and X, closed under pairwise
/// union and intersection. Throws InputError when the basis is empty, mixes
/// carriers, or does not cover X.
ExplicitTopology generate_topology(const std::vector<FuzzySet>& basis,
                                   Provenance provenance = Provenance::custom);

ExplicitTopology materialize_chain(const ChainFamily& chain, std::size_t window);

ExplicitTopology tau3_topology(const OrbitData& orbit);

/// Either representation of a space; deciders accept both.
using Space = std::variant<WindowedChain, ExplicitTopology>;

std::size_t carrier_size(const Space& space);
bool contains(const Space& space, const FuzzySet& g);
ExplicitTopology materialize(const Space& space);

}  // namespace fuzztop
