// SPDX-License-Identifier: MIT

#include "dvdp/rational.hpp"

#include <cctype>
#include <limits>

namespace dvdp {

std::string to_string(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw InputError("expected digits in '" + text + "'");
    Integer value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InputError("invalid character in number '" + text + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) throw PreconditionError("rational " + to_string(q) + " is not an integer");
    const Integer n = boost::multiprecision::numerator(q);
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("integer " + n.str() + " does not fit in 64 bits");
    return n.convert_to<std::int64_t>();
}

bool is_rational_square(const Rational& q) {
    if (q < 0) return false;
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    const Integer rn = boost::multiprecision::sqrt(num);
    const Integer rd = boost::multiprecision::sqrt(den);
    return rn * rn == num && rd * rd == den;
}

}  // namespace dvdp
