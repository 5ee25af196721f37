#pragma once

#include <string>

#include <json.hpp>

#include "fuzztop/endofunction.hpp"
#include "fuzztop/fuzzy_set.hpp"
#include "fuzztop/maps.hpp"
#include "fuzztop/properties.hpp"
#include "fuzztop/topology.hpp"

namespace fuzztop {

using json = nlohmann::ordered_json;

// Grades travel as "p/q" strings ("0" and "1" for the endpoints); fuzzy sets
// as arrays of grade strings in carrier order.
json to_json(const Grade& g);
json to_json(const FuzzySet& a);
json to_json(const FuzzyPoint& p);
json to_json(const MapVerdict& v);
json to_json(const MapReport& r);
json to_json(const PropertyReport& r);
json to_json(const EqualityVerdict& v);
json to_json(const ExplicitTopology& t);

/// Throws InputError on anything that is not an array of grade strings.
FuzzySet fuzzy_set_from_json(const json& j);

/// Parsed instance description:
///   {"carrier": <labels array or size>, "f": [indices],
///    "window": int (optional), "tau3": {"x0": int, "k": int} (optional)}
struct InstanceFile {
    EndoFunction f;
    std::optional<std::size_t> window;
    std::optional<std::pair<std::size_t, unsigned>> tau3;  ///< (x0, k)
};

/// Throws InputError for malformed documents, PreconditionError when a
/// tau3 block accompanies a non-injective map.
InstanceFile parse_instance(const json& doc);
InstanceFile parse_instance(const std::string& text);

}  // namespace fuzztop
