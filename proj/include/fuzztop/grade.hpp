#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace fuzztop {

/// Exact membership grade in [0, 1], kept in lowest terms.
///
/// Serialized as "p/q", with "0" and "1" for the endpoints and any other
/// integer-valued grade impossible by the range invariant.
class Grade {
public:
    using Rep = boost::rational<std::int64_t>;

    constexpr Grade() = default;
    /// Throws InputError when den == 0 or the value lies outside [0, 1].
    Grade(std::int64_t num, std::int64_t den = 1);

    static Grade zero() { return Grade{}; }
    static Grade one() { return Grade{1}; }

    /// Parses "p/q", "0" or "1" (any p/q in range is accepted and reduced).
    static Grade parse(std::string_view text);

    std::int64_t numerator() const { return value_.numerator(); }
    std::int64_t denominator() const { return value_.denominator(); }
    const Rep& rep() const { return value_; }

    bool is_zero() const { return value_.numerator() == 0; }
    bool is_one() const { return value_.numerator() == value_.denominator(); }

    /// 1 - g.
    Grade complement() const;
    /// (a + b) / 2.
    Grade midpoint(const Grade& other) const;

    std::string str() const;

    friend bool operator==(const Grade& a, const Grade& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Grade& a, const Grade& b);

private:
    explicit Grade(Rep value);
    Rep value_{0};
};

std::ostream& operator<<(std::ostream& os, const Grade& g);

}  // namespace fuzztop
