#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fuzztop/chain.hpp"
#include "fuzztop/endofunction.hpp"
#include "fuzztop/maps.hpp"
#include "fuzztop/properties.hpp"
#include "fuzztop/serialize.hpp"
#include "fuzztop/topology.hpp"

namespace fuzztop {

enum class SpaceKind { tau1, tau2, tau3 };
std::string_view to_string(SpaceKind kind);

/// One point of the sweep: a map, the space it is studied in and, for the
/// orbit topology, the base point and parameter.
struct Instance {
    EndoFunction f;
    SpaceKind space;
    std::size_t x0 = 0;
    unsigned k = 0;
    std::size_t window = 0;

    /// Lexicographic on (size, map, space, x0, k); this is the sweep order.
    friend std::strong_ordering operator<=>(const Instance& a, const Instance& b);
    friend bool operator==(const Instance& a, const Instance& b) { return (a <=> b) == 0; }
};

json to_json(const Instance& i);
Instance instance_from_json(const json& j);

/// Lazily computed facts about one instance, shared by all claims.
class InstanceContext {
public:
    explicit InstanceContext(Instance instance);

    const Instance& instance() const { return instance_; }
    const EndoFunction& f() const { return instance_.f; }

    const FunctionProfile& profile();
    const WindowedChain& tau1();
    const WindowedChain& tau2();
    /// Orbit data and topology; only valid for tau3 instances.
    const OrbitData& orbit();
    const Tau3Basis& tau3_basis();
    const ExplicitTopology& tau3();
    /// The instance's own space.
    Space space();
    const PropertyReport& properties();
    const MapReport& maps();

private:
    Instance instance_;
    std::optional<FunctionProfile> profile_;
    std::optional<WindowedChain> tau1_, tau2_;
    std::optional<OrbitData> orbit_;
    std::optional<Tau3Basis> tau3_basis_;
    std::optional<ExplicitTopology> tau3_;
    std::optional<PropertyReport> properties_;
    std::optional<MapReport> maps_;
};

enum class Direction { iff, implies, exists };
enum class Expectation { asserted, report_only };
std::string_view to_string(Direction d);
std::string_view to_string(Expectation e);

struct Evaluation {
    bool hypothesis = false;
    bool conclusion = false;
    json evidence;
};

struct TheoremClaim {
    std::string id;
    std::string description;
    Direction direction;
    Expectation expectation;
    std::string note;
    std::vector<SpaceKind> spaces;
    std::function<Evaluation(InstanceContext&)> evaluate;

    bool applies_to(const Instance& i) const;
};

/// Every registered claim, in a fixed order.
const std::vector<TheoremClaim>& theorem_registry();
/// Throws InputError for an unknown id.
const TheoremClaim& find_claim(std::string_view id);

struct ClaimVerdict {
    bool applicable = false;
    bool hypothesis = false;
    bool conclusion = false;
    /// iff: equal truth values; implies: !hypothesis || conclusion;
    /// exists: the instance witnesses hypothesis && conclusion.
    bool agrees = false;
    json evidence;
};

ClaimVerdict check_claim(const TheoremClaim& claim, InstanceContext& context);
ClaimVerdict check_claim(const TheoremClaim& claim, const Instance& instance);

struct SweepParams {
    std::size_t max_size = 3;
    std::vector<unsigned> k_values{1, 2};
    std::size_t window = 5;
};

/// Largest carrier the sweep accepts.
inline constexpr std::size_t kMaxSweepSize = 6;

struct CounterexampleRecord {
    Instance instance;
    bool hypothesis = false;
    bool conclusion = false;
    json evidence;
};

struct ClaimTally {
    std::string id;
    Direction direction;
    Expectation expectation;
    std::string note;
    std::size_t instances = 0;
    std::size_t hypothesis_true = 0;
    std::size_t agreements = 0;
    /// Least disagreeing instance (iff / implies).
    std::optional<CounterexampleRecord> counterexample;
    /// Least witnessing instance (exists).
    std::optional<CounterexampleRecord> witness;
    /// Per-k (instances, agreements) for orbit-topology claims.
    std::map<unsigned, std::pair<std::size_t, std::size_t>> by_k;

    /// iff / implies: no counterexample; exists: some witness.
    bool holds() const;
};

struct SweepReport {
    SweepParams params;
    std::vector<ClaimTally> claims;

    const ClaimTally& claim(std::string_view id) const;
    std::vector<std::string> asserted_failures() const;
};

/// Every instance of the sweep, in sweep order. Throws InputError when the
/// parameters break the cost guard or window >= max_size + 2.
std::vector<Instance> enumerate_instances(const SweepParams& params);
std::size_t estimate_instance_count(const SweepParams& params);

SweepReport sweep(const SweepParams& params);

json to_json(const SweepReport& report);

}  // namespace fuzztop
