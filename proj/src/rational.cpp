#include "latmat/rational.hpp"

#include "latmat/error.hpp"

namespace latmat {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Int digits_to_int(std::string_view s, bool negative) {
    Int v(std::string(s), 10);
    return negative ? Int(-v) : v;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
        neg = true;
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!all_digits(s)) throw ParseError("invalid rational literal: '" + std::string(text) + "'");
        return Rat(digits_to_int(s, neg));
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    Int d = digits_to_int(den, false);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rat(digits_to_int(num, neg), d);
}

Int parse_integer(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
        neg = true;
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("invalid integer literal: '" + std::string(text) + "'");
    return digits_to_int(s, neg);
}

Int parse_positive_integer(std::string_view text) {
    Int v = parse_integer(text);
    if (v <= 0) throw ParseError("expected a positive integer, got '" + std::string(text) + "'");
    return v;
}

std::string to_string(const Rat& q) { return q.get_str(10); }

std::string to_string(const Int& z) { return z.get_str(10); }

}  // namespace latmat
