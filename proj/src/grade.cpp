#include "fuzztop/grade.hpp"

#include <charconv>
#include <ostream>

#include "fuzztop/errors.hpp"

namespace fuzztop {

namespace {

void check_range(const Grade::Rep& r) {
    if (r < 0 || r > 1) {
        throw InputError("grade out of [0,1]: " + std::to_string(r.numerator()) + "/" +
                         std::to_string(r.denominator()));
    }
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw InputError("malformed grade \"" + std::string(whole) + "\"");
    }
    return out;
}

}  // namespace

Grade::Grade(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw InputError("grade with zero denominator");
    }
    value_ = Rep(num, den);
    check_range(value_);
}

Grade::Grade(Rep value) : value_(value) { check_range(value_); }

Grade Grade::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Grade(parse_int(text, text));
    }
    return Grade(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

Grade Grade::complement() const { return Grade(Rep(1) - value_); }

Grade Grade::midpoint(const Grade& other) const { return Grade((value_ + other.value_) / 2); }

std::string Grade::str() const {
    if (value_.denominator() == 1) {
        return std::to_string(value_.numerator());
    }
    return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Grade& g) { return os << g.str(); }

}  // namespace fuzztop
