#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fuzztop/grade.hpp"

namespace fuzztop {

/// Fuzzy subset of the canonical carrier {0, ..., size-1}.
class FuzzySet {
public:
    FuzzySet() = default;
    explicit FuzzySet(std::vector<Grade> grades) : grades_(std::move(grades)) {}

    static FuzzySet empty(std::size_t size) { return FuzzySet(std::vector<Grade>(size)); }
    static FuzzySet whole(std::size_t size) { return uniform(size, Grade::one()); }
    static FuzzySet uniform(std::size_t size, Grade g) { return FuzzySet(std::vector<Grade>(size, g)); }
    /// Grade 1 on `members`, 0 elsewhere.
    static FuzzySet indicator(std::size_t size, std::span<const std::size_t> members);

    std::size_t size() const { return grades_.size(); }
    const Grade& operator[](std::size_t x) const { return grades_[x]; }
    std::span<const Grade> grades() const { return grades_; }

    bool is_empty() const;
    bool is_whole() const;
    /// True when every grade is 0 or 1.
    bool is_crisp() const;

    std::string str() const;

    friend bool operator==(const FuzzySet&, const FuzzySet&) = default;
    friend auto operator<=>(const FuzzySet&, const FuzzySet&) = default;

private:
    std::vector<Grade> grades_;
};

/// A fuzzy point (x, p) with 0 < p <= 1.
struct FuzzyPoint {
    FuzzyPoint(std::size_t element, Grade degree);

    std::size_t element;
    Grade degree;

    friend bool operator==(const FuzzyPoint&, const FuzzyPoint&) = default;
};

/// How a crisp carrier element is read as belonging to a fuzzy set.
enum class CrispMode {
    positive,  ///< mu(x) > 0
    full,      ///< mu(x) = 1
};

// Pointwise lattice operations. Binary operations throw InputError on a
// carrier size mismatch.
FuzzySet unite(const FuzzySet& a, const FuzzySet& b);
FuzzySet intersect(const FuzzySet& a, const FuzzySet& b);
FuzzySet complement(const FuzzySet& a);
bool leq(const FuzzySet& a, const FuzzySet& b);
/// Pointwise min identically 0.
bool disjoint(const FuzzySet& a, const FuzzySet& b);

bool crisp_in(std::size_t x, const FuzzySet& a, CrispMode mode);
bool fuzzy_point_in(const FuzzyPoint& p, const FuzzySet& a);

}  // namespace fuzztop
