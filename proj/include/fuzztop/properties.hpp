#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzztop/fuzzy_set.hpp"
#include "fuzztop/topology.hpp"

// Separation conventions used throughout:
//   a crisp point x lies in an open U      iff mu_U(x) = 1
//   x avoids a closed set F                iff mu_F(x) = 0
//   containment                            is pointwise <=
//   disjoint                               means pointwise min is 0
namespace fuzztop {

enum class T0Mode {
    crisp,             ///< some open gives x and y different grades
    paper_fuzzy_pair,  ///< (x, p) and (y, p) separated for every grid degree p
    fuzzy_full,        ///< every two distinct grid fuzzy points separated
};
inline constexpr std::array<T0Mode, 3> kT0Modes{T0Mode::crisp, T0Mode::paper_fuzzy_pair,
                                                T0Mode::fuzzy_full};
std::string_view to_string(T0Mode mode);

struct CompactVerdict {
    bool holds = true;
    /// A finite subcover of the whole family of opens.
    std::vector<FuzzySet> subcover;
    std::string justification;
};

struct ConnectedVerdict {
    bool holds = true;
    /// Disjoint nonempty opens whose union is X.
    std::optional<std::pair<FuzzySet, FuzzySet>> disconnection;
};

struct T0Verdict {
    bool holds = true;
    std::optional<std::pair<FuzzyPoint, FuzzyPoint>> unseparated;
};

struct RegularVerdict {
    bool holds = true;
    /// Element x and nonempty closed F with mu_F(x) = 0 that no disjoint
    /// pair of opens separates.
    std::optional<std::pair<std::size_t, FuzzySet>> failure;
};

struct NormalVerdict {
    bool holds = true;
    /// Disjoint nonempty closed sets without disjoint open neighbourhoods.
    std::optional<std::pair<FuzzySet, FuzzySet>> unseparated;
};

struct LindelofVerdict {
    bool holds = true;
    std::string justification;
};

struct PropertyReport {
    CompactVerdict compact;
    ConnectedVerdict connected;
    std::array<T0Verdict, 3> t0;  ///< indexed in kT0Modes order
    RegularVerdict regular;
    NormalVerdict normal;
    LindelofVerdict lindelof;

    const T0Verdict& t0_in(T0Mode mode) const { return t0[static_cast<std::size_t>(mode)]; }
};

/// Every member must be open (InputError otherwise); true iff the pointwise
/// sup of the family is X.
bool is_cover(const Space& space, const std::vector<FuzzySet>& family);

/// Degrees probed by the T0 deciders: every positive grade occurring in the
/// topology, the midpoints of consecutive occurring grades (0 included), and 1.
std::vector<Grade> threshold_grid(const ExplicitTopology& t);
std::vector<Grade> threshold_grid(const WindowedChain& c);

// Closed-form deciders on a windowed chain.
CompactVerdict is_compact(const WindowedChain& c);
ConnectedVerdict is_connected(const WindowedChain& c);
T0Verdict is_t0(const WindowedChain& c, T0Mode mode);
RegularVerdict is_regular(const WindowedChain& c);
NormalVerdict is_normal(const WindowedChain& c);
LindelofVerdict is_lindelof(const WindowedChain& c);

// Generic deciders on a finite family of opens.
CompactVerdict is_compact(const ExplicitTopology& t);
ConnectedVerdict is_connected(const ExplicitTopology& t);
T0Verdict is_t0(const ExplicitTopology& t, T0Mode mode);
RegularVerdict is_regular(const ExplicitTopology& t);
NormalVerdict is_normal(const ExplicitTopology& t);
LindelofVerdict is_lindelof(const ExplicitTopology& t);

CompactVerdict is_compact(const Space& s);
ConnectedVerdict is_connected(const Space& s);
T0Verdict is_t0(const Space& s, T0Mode mode);
RegularVerdict is_regular(const Space& s);
NormalVerdict is_normal(const Space& s);
LindelofVerdict is_lindelof(const Space& s);

/// Largest topology on which the exhaustive subcover search runs.
inline constexpr std::size_t kSubcoverSearchCap = 12;

/// Enumerates every cover drawn from the opens and shrinks each to a
/// minimal finite subcover. Returns the minimal subcover of the full family,
/// or nullopt when the topology exceeds kSubcoverSearchCap.
std::optional<std::vector<FuzzySet>> exhaustive_subcover_search(const ExplicitTopology& t);

PropertyReport property_report(const WindowedChain& c);
PropertyReport property_report(const ExplicitTopology& t);
/// For chains, evaluates the closed-form and the materialized routes and
/// throws ConsistencyError if any verdict differs.
PropertyReport property_report(const Space& s);

struct EqualityVerdict {
    bool equal = true;
    /// An open lying in exactly one of the two topologies, when one exists.
    std::optional<FuzzySet> witness;
    /// "left" or "right": the side that contains the witness.
    std::string witness_side;
    std::string reason;
};

/// Chains are compared by grade rule and by windowed family; anything else
/// is compared as materialized sets of grade vectors. Throws InputError on
/// a carrier mismatch.
EqualityVerdict topologies_equal(const Space& left, const Space& right);

}  // namespace fuzztop
