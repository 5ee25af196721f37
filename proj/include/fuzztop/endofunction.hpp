#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fuzztop/fuzzy_set.hpp"

namespace fuzztop {

/// Finite nonempty carrier, canonically indexed 0..size-1, with optional
/// distinct display labels.
class Carrier {
public:
    explicit Carrier(std::size_t size);
    explicit Carrier(std::vector<std::string> labels);

    std::size_t size() const { return size_; }
    const std::optional<std::vector<std::string>>& labels() const { return labels_; }
    /// Label of x, or its decimal index when unlabelled.
    std::string label(std::size_t x) const;

    friend bool operator==(const Carrier&, const Carrier&) = default;

private:
    std::size_t size_;
    std::optional<std::vector<std::string>> labels_;
};

/// Total self-map of a finite carrier.
class EndoFunction {
public:
    /// Throws InputError when an image lies outside the carrier or the
    /// lengths differ.
    EndoFunction(Carrier carrier, std::vector<std::size_t> map);
    explicit EndoFunction(std::vector<std::size_t> map);

    const Carrier& carrier() const { return carrier_; }
    std::size_t size() const { return map_.size(); }
    const std::vector<std::size_t>& map() const { return map_; }
    std::size_t operator()(std::size_t x) const { return map_[x]; }

    std::string str() const;

private:
    Carrier carrier_;
    std::vector<std::size_t> map_;
};

struct FunctionProfile {
    bool onto = false;
    bool injective = false;
    /// Elements x with f^m(x) = x for some m >= 1, ascending.
    std::vector<std::size_t> periodic;
    bool all_periodic = false;

    bool is_periodic(std::size_t x) const;
};

FunctionProfile profile(const EndoFunction& f);

/// J_0 = eventual image, J_n = f^{n-1}(X) - f^n(X).
struct JPartition {
    std::vector<std::size_t> core;
    /// shells[n-1] holds J_n; the last shell is nonempty.
    std::vector<std::vector<std::size_t>> shells;
    /// Shell number of each element, 0 for the core.
    std::vector<std::size_t> index_of;
};

JPartition j_partition(const EndoFunction& f);

/// Cycle through the base point of an injective map, plus the parameter k.
struct OrbitData {
    std::size_t carrier_size = 0;
    std::size_t x0 = 0;
    unsigned k = 1;
    /// orbit[i] = f^i(x0); f acts on it as the cyclic shift.
    std::vector<std::size_t> orbit;
    std::vector<std::size_t> off_orbit;

    std::size_t length() const { return orbit.size(); }
    bool on_orbit(std::size_t x) const;
};

/// Throws PreconditionError when f is not injective, InputError for an
/// out-of-range x0 or k == 0.
OrbitData orbit_data(const EndoFunction& f, std::size_t x0, unsigned k);

/// Basis {C} u {C_n : n = 0..L-1} of the orbit topology.
struct Tau3Basis {
    FuzzySet c;
    std::vector<FuzzySet> cn;

    /// C first, then C_0..C_{L-1}.
    std::vector<FuzzySet> members() const;
};

Tau3Basis tau3_basis(const OrbitData& orbit);

}  // namespace fuzztop
