#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fuzztop/endofunction.hpp"
#include "fuzztop/fuzzy_set.hpp"

namespace fuzztop {

enum class ChainKind { tau1, tau1_complement, tau2 };

std::string_view to_string(ChainKind kind);

/// Index-parameterized nested family B_1, B_2, ... given by a closed-form
/// grade rule, so the infinite basis never has to be enumerated.
///
/// Every element carries a depth d. For the decreasing kinds (tau1, tau2)
///   grade_at(n, x) = 1              if d == 0
///                  = min(1, d / n)  otherwise,
/// so tau1 is the special case where every non-periodic element has depth 1
/// and tau2 uses the J-shell number. The increasing kind tau1_complement
/// requires depth 1 everywhere and has grade_at(n, x) = (n - 1) / n.
class ChainFamily {
public:
    ChainFamily(ChainKind kind, std::vector<std::size_t> depth);

    ChainKind kind() const { return kind_; }
    std::size_t carrier_size() const { return depth_.size(); }
    std::size_t depth(std::size_t x) const { return depth_[x]; }
    const std::vector<std::size_t>& depths() const { return depth_; }
    bool decreasing() const { return kind_ != ChainKind::tau1_complement; }

    /// n >= 1; throws InputError for n == 0.
    Grade grade_at(std::size_t n, std::size_t x) const;
    FuzzySet member(std::size_t n) const;

    /// Pointwise sup of the whole (infinite) family, in closed form.
    FuzzySet supremum() const;

    /// Same grade law on the same carrier: the two chains agree at every index.
    bool same_rule(const ChainFamily& other) const;

private:
    ChainKind kind_;
    std::vector<std::size_t> depth_;
};

/// A_n: 1 on periodic points, 1/n elsewhere.
ChainFamily tau1_basis(const EndoFunction& f);

/// The successor map on the naturals observed on its first `observed`
/// elements: no periodic points, so A_n is uniformly 1/n.
ChainFamily successor_tau1_basis(std::size_t observed);

/// {A_n^c}. Requires a chain without periodic points; throws
/// PreconditionError otherwise.
ChainFamily tau1_complement_basis(const ChainFamily& tau1);
/// Always throws PreconditionError on a finite carrier, which always has a
/// periodic point.
ChainFamily tau1_complement_basis(const EndoFunction& f);

/// K_m: 1 on J_0, min(1, j/m) on J_j.
ChainFamily tau2_basis(const EndoFunction& f);

}  // namespace fuzztop
