#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar used for all orbit arithmetic.
 *
 * Orbits, coefficients and initial conditions are kept in arbitrary-precision
 * rationals so that closed-form formulas can be compared against brute-force
 * iteration with exact equality rather than tolerances.  The value type is
 * the GMP-backed boost::multiprecision::mpq_rational, which maintains
 * gcd(|num|, den) = 1 and den > 0 under +, -, *, /.
 */

#include <cctype>
#include <complex>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "decarec/errors.hpp"

namespace decarec {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using ComplexF = std::complex<double>;

/// Build a normalized rational from a (possibly unreduced, possibly
/// negative-denominator) numerator/denominator pair.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0)
        throw ParseError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// Parse "p", "p/q" or "-p/q".  Whitespace around the string is ignored.
inline Rational parse_rational(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty())
        throw ParseError("empty rational");
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("invalid rational: '" + s + "'");
    }
}

/// "p" when the value is an integer, "p/q" otherwise.
inline std::string to_fraction_string(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Decimal rendering at `significant` digits; display convenience only.
inline std::string to_decimal_string(const Rational& r, int significant = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, to_double(r));
    return buf;
}

/// base^exp for exp >= 0.  Reduced inputs stay reduced, so this is gcd-free.
inline Rational pow_rational(const Rational& base, long long exp) {
    using boost::multiprecision::pow;
    if (exp < 0)
        throw std::invalid_argument("pow_rational: negative exponent");
    const auto e = static_cast<unsigned>(exp);
    return make_rational(pow(numerator(base), e), pow(denominator(base), e));
}

/// (-1)^m for any integer m, negative included.
inline int sign_pow(long long m) { return (m % 2 == 0) ? 1 : -1; }

/// Exact integer fifth root: a with a^5 == v, if one exists.
inline std::optional<BigInt> integer_fifth_root(const BigInt& v) {
    if (v < 0) {
        auto r = integer_fifth_root(BigInt(-v));
        if (r) return BigInt(-*r);
        return std::nullopt;
    }
    if (v == 0) return BigInt(0);
    BigInt lo = 0, hi = 1;
    while (hi * hi * hi * hi * hi < v)
        hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (mid * mid * mid * mid * mid < v)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo * lo * lo * lo * lo == v)
        return lo;
    return std::nullopt;
}

/// Exact rational fifth root, when numerator and denominator are both
/// perfect fifth powers.  The real fifth root of a rational is unique.
inline std::optional<Rational> rational_fifth_root(const Rational& v) {
    const auto num = integer_fifth_root(numerator(v));
    if (!num) return std::nullopt;
    const auto den = integer_fifth_root(denominator(v));
    if (!den) return std::nullopt;
    return make_rational(*num, *den);
}

} // namespace decarec
