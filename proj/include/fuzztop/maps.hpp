#pragma once

#include <optional>

#include "fuzztop/endofunction.hpp"
#include "fuzztop/fuzzy_set.hpp"
#include "fuzztop/topology.hpp"

namespace fuzztop {

/// mu_{f(a)}(y) = max{ mu_a(x) : f(x) = y }, 0 on an empty fibre.
FuzzySet zadeh_image(const EndoFunction& f, const FuzzySet& a);
/// mu_{f^-1(a)}(x) = mu_a(f(x)).
FuzzySet zadeh_preimage(const EndoFunction& f, const FuzzySet& a);

/// An open set whose image (or preimage) is not open.
struct MapWitness {
    FuzzySet open;
    FuzzySet transformed;
};

struct MapVerdict {
    bool holds = true;
    std::optional<MapWitness> witness;
};

struct MapReport {
    MapVerdict open_map;
    MapVerdict continuous;
};

/// Image of every open set is open.
///
/// On a windowed chain the opens are exactly the chain members, and images
/// are looked up with the closed-form membership rule. On an explicit
/// topology every open is checked against the stored family.
MapVerdict is_open_map(const EndoFunction& f, const Space& space);
/// Preimage of every open set is open.
MapVerdict is_continuous(const EndoFunction& f, const Space& space);

/// Basis-only variants: check just the generating family. Sound because the
/// image commutes with unions and the preimage with unions and
/// intersections; the image commutes with intersections only for injective
/// f, so the open-map variant assumes a chain or an injective map.
MapVerdict is_open_map_on_basis(const EndoFunction& f, const ExplicitTopology& t);
MapVerdict is_continuous_on_basis(const EndoFunction& f, const ExplicitTopology& t);

/// Both verdicts. For a chain the closed-form route and the materialized
/// route are both evaluated; a disagreement throws ConsistencyError.
MapReport map_report(const EndoFunction& f, const Space& space);

}  // namespace fuzztop
