#include "fuzztop/chain.hpp"

#include <algorithm>
#include <cstdint>

#include "fuzztop/errors.hpp"

namespace fuzztop {

std::string_view to_string(ChainKind kind) {
    switch (kind) {
        case ChainKind::tau1: return "tau1";
        case ChainKind::tau1_complement: return "tau1c";
        case ChainKind::tau2: return "tau2";
    }
    return "?";
}

ChainFamily::ChainFamily(ChainKind kind, std::vector<std::size_t> depth)
    : kind_(kind), depth_(std::move(depth)) {
    if (depth_.empty()) {
        throw InputError("chain over an empty carrier");
    }
    if (kind_ == ChainKind::tau1_complement &&
        std::any_of(depth_.begin(), depth_.end(), [](std::size_t d) { return d != 1; })) {
        throw PreconditionError("complement chain requires every element to be non-periodic");
    }
}

Grade ChainFamily::grade_at(std::size_t n, std::size_t x) const {
    if (n == 0) {
        throw InputError("chain indices start at 1");
    }
    const auto d = depth_.at(x);
    if (kind_ == ChainKind::tau1_complement) {
        return Grade(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>(n));
    }
    if (d == 0 || d >= n) {
        return Grade::one();
    }
    return Grade(static_cast<std::int64_t>(d), static_cast<std::int64_t>(n));
}

FuzzySet ChainFamily::member(std::size_t n) const {
    std::vector<Grade> grades;
    grades.reserve(depth_.size());
    for (std::size_t x = 0; x < depth_.size(); ++x) {
        grades.push_back(grade_at(n, x));
    }
    return FuzzySet(std::move(grades));
}

FuzzySet ChainFamily::supremum() const {
    // Decreasing chains peak at B_1 = X; the complement chain tends to 1.
    return FuzzySet::whole(depth_.size());
}

bool ChainFamily::same_rule(const ChainFamily& other) const {
    return decreasing() == other.decreasing() && depth_ == other.depth_;
}

ChainFamily tau1_basis(const EndoFunction& f) {
    const auto p = profile(f);
    std::vector<std::size_t> depth(f.size(), 1);
    for (auto x : p.periodic) depth[x] = 0;
    return ChainFamily(ChainKind::tau1, std::move(depth));
}

ChainFamily successor_tau1_basis(std::size_t observed) {
    return ChainFamily(ChainKind::tau1, std::vector<std::size_t>(observed, 1));
}

ChainFamily tau1_complement_basis(const ChainFamily& tau1) {
    if (tau1.kind() != ChainKind::tau1) {
        throw InputError("complement basis is taken from a tau1 chain");
    }
    const auto& d = tau1.depths();
    auto periodic = std::find(d.begin(), d.end(), std::size_t{0});
    if (periodic != d.end()) {
        throw PreconditionError(
            "complement basis needs a map without periodic points (element " +
            std::to_string(periodic - d.begin()) +
            " is periodic, so every A_n^c vanishes there and the family cannot cover X); "
            "the stated hypothesis 'every point periodic' makes A_n = X and A_n^c empty");
    }
    return ChainFamily(ChainKind::tau1_complement, d);
}

ChainFamily tau1_complement_basis(const EndoFunction& f) { return tau1_complement_basis(tau1_basis(f)); }

ChainFamily tau2_basis(const EndoFunction& f) {
    return ChainFamily(ChainKind::tau2, j_partition(f).index_of);
}

}  // namespace fuzztop
