#include "fuzztop/fuzzy_set.hpp"

#include <algorithm>

#include "fuzztop/errors.hpp"

namespace fuzztop {

namespace {

void require_same_carrier(const FuzzySet& a, const FuzzySet& b) {
    if (a.size() != b.size()) {
        throw InputError("fuzzy sets over different carriers (sizes " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) + ")");
    }
}

template <class Op>
FuzzySet pointwise(const FuzzySet& a, const FuzzySet& b, Op op) {
    require_same_carrier(a, b);
    std::vector<Grade> out;
    out.reserve(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        out.push_back(op(a[x], b[x]));
    }
    return FuzzySet(std::move(out));
}

}  // namespace

FuzzySet FuzzySet::indicator(std::size_t size, std::span<const std::size_t> members) {
    std::vector<Grade> grades(size);
    for (auto x : members) {
        if (x >= size) {
            throw InputError("indicator member " + std::to_string(x) + " outside carrier");
        }
        grades[x] = Grade::one();
    }
    return FuzzySet(std::move(grades));
}

bool FuzzySet::is_empty() const {
    return std::all_of(grades_.begin(), grades_.end(), [](const Grade& g) { return g.is_zero(); });
}

bool FuzzySet::is_whole() const {
    return std::all_of(grades_.begin(), grades_.end(), [](const Grade& g) { return g.is_one(); });
}

bool FuzzySet::is_crisp() const {
    return std::all_of(grades_.begin(), grades_.end(),
                       [](const Grade& g) { return g.is_zero() || g.is_one(); });
}

std::string FuzzySet::str() const {
    std::string out = "(";
    for (std::size_t x = 0; x < grades_.size(); ++x) {
        if (x) out += ", ";
        out += grades_[x].str();
    }
    return out + ")";
}

FuzzyPoint::FuzzyPoint(std::size_t element_, Grade degree_) : element(element_), degree(degree_) {
    if (degree.is_zero()) {
        throw InputError("fuzzy point degree must be positive");
    }
}

FuzzySet unite(const FuzzySet& a, const FuzzySet& b) {
    return pointwise(a, b, [](const Grade& x, const Grade& y) { return std::max(x, y); });
}

FuzzySet intersect(const FuzzySet& a, const FuzzySet& b) {
    return pointwise(a, b, [](const Grade& x, const Grade& y) { return std::min(x, y); });
}

FuzzySet complement(const FuzzySet& a) {
    std::vector<Grade> out;
    out.reserve(a.size());
    for (const auto& g : a.grades()) {
        out.push_back(g.complement());
    }
    return FuzzySet(std::move(out));
}

bool leq(const FuzzySet& a, const FuzzySet& b) {
    require_same_carrier(a, b);
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (b[x] < a[x]) return false;
    }
    return true;
}

bool disjoint(const FuzzySet& a, const FuzzySet& b) {
    require_same_carrier(a, b);
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (!a[x].is_zero() && !b[x].is_zero()) return false;
    }
    return true;
}

bool crisp_in(std::size_t x, const FuzzySet& a, CrispMode mode) {
    if (x >= a.size()) {
        throw InputError("element " + std::to_string(x) + " outside carrier");
    }
    return mode == CrispMode::positive ? !a[x].is_zero() : a[x].is_one();
}

bool fuzzy_point_in(const FuzzyPoint& p, const FuzzySet& a) {
    if (p.element >= a.size()) {
        throw InputError("fuzzy point outside carrier");
    }
    return p.degree <= a[p.element];
}

}  // namespace fuzztop
