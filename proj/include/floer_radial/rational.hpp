#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace floer_radial {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

namespace detail {

/// Signed decimal digit string -> integer.  Always base 10 (boost's string
/// constructor would treat a leading 0 as octal).
inline Integer parse_decimal_int(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("bare sign in integer literal");
    Integer out = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("invalid digit in '" + text + "'");
        out = out * 10 + (text[i] - '0');
    }
    return neg ? Integer(-out) : out;
}

}  // namespace detail

/// Parses "p", "p/q", or a decimal like "-0.15" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Integer num = detail::parse_decimal_int(text.substr(0, slash));
        Integer den = detail::parse_decimal_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        Integer ip = detail::parse_decimal_int(dot == 0 ? "0" : text.substr(0, dot));
        Integer fp = detail::parse_decimal_int(frac.empty() ? "0" : frac);
        Integer den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        bool neg = !text.empty() && text[0] == '-';
        Integer num = ip * den + (neg ? Integer(-fp) : fp);
        return Rational(num, den);
    }
    return Rational(detail::parse_decimal_int(text));
}

inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational midpoint(const Rational& lo, const Rational& hi) { return (lo + hi) / 2; }

/// r^e for integer e (e may be negative; r must be nonzero then).
inline Rational rational_pow(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) throw std::domain_error("zero to a negative power");
        return rational_pow(Rational(denominator(r), numerator(r)), -e);
    }
    Rational out = 1, base = r;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

}  // namespace floer_radial
