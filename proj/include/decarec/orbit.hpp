#pragma once

/**
 * @file orbit.hpp
 * @brief Brute-force forward iteration of
 *        x_{n+10} = x_n / (A_n + B_n x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8}).
 *
 * This is the ground-truth oracle: every closed-form formula and every
 * periodicity claim is checked against it with exact rational equality.
 * Orbits that hit the forbidden set (a vanishing denominator) are truncated
 * with a marker instead of raising, so batch experiments can census singular
 * inputs.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "decarec/coefficients.hpp"
#include "decarec/errors.hpp"
#include "decarec/initial_conditions.hpp"
#include "decarec/rational.hpp"

namespace decarec {

struct Orbit {
    std::vector<Rational> terms;             // x_0, x_1, ..., x_{N-1}
    std::optional<std::size_t> truncated_at; // first index where the map is undefined
};

/// One application of the map to a ten-term window x_n..x_{n+9}.
/// Throws ForbiddenSetError when A + B * x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8}
/// is exactly zero.
inline Rational step(std::span<const Rational, 10> window, const Rational& A, const Rational& B) {
    Rational product = window[0];
    product *= window[2];
    product *= window[4];
    product *= window[6];
    product *= window[8];
    Rational denom = A + B * product;
    if (denom == 0)
        throw ForbiddenSetError(-1, "map denominator is zero");
    return window[0] / denom;
}

/// Iterate the map for `count` terms (count >= 10).  The first ten terms are
/// the initial conditions.  A forbidden-set hit at index m truncates the
/// orbit to exactly m terms and records truncated_at = m.
/// Throws TableExhaustedError if a tabulated coefficient sequence runs out.
inline Orbit iterate(const InitialConditions& ics, const CoefficientSequence& coeffs,
                     std::size_t count) {
    if (count < 10)
        throw std::invalid_argument("iterate: count must be >= 10");
    Orbit orbit;
    orbit.terms.reserve(count);
    orbit.terms.assign(ics.values().begin(), ics.values().end());
    while (orbit.terms.size() < count) {
        const std::size_t n = orbit.terms.size() - 10;
        const CoefficientPair& c = coeffs.at(static_cast<long long>(n));
        Rational product = orbit.terms[n];
        product *= orbit.terms[n + 2];
        product *= orbit.terms[n + 4];
        product *= orbit.terms[n + 6];
        product *= orbit.terms[n + 8];
        Rational denom = c.A + c.B * product;
        if (denom == 0) {
            orbit.truncated_at = n + 10;
            break;
        }
        orbit.terms.push_back(orbit.terms[n] / denom);
    }
    return orbit;
}

/// The window invariant F_n = 1 / (x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8}) for
/// every n with n+8 < orbit length.  F obeys F_{n+2} = A_n F_n + B_n, which
/// reduces the family to a first-order linear recursion.
/// Throws ZeroTermError naming the first zero factor (F undefined there).
inline std::vector<Rational> invariant_sequence(const Orbit& orbit) {
    if (orbit.terms.size() < 10)
        throw std::invalid_argument("invariant_sequence: orbit must have >= 10 terms");
    const std::size_t count = orbit.terms.size() - 8;
    std::vector<Rational> invariants;
    invariants.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        Rational product = 1;
        for (std::size_t m = 0; m < 5; ++m) {
            const Rational& factor = orbit.terms[n + 2 * m];
            if (factor == 0)
                throw ZeroTermError(static_cast<long long>(n + 2 * m),
                                    "orbit term x_" + std::to_string(n + 2 * m) +
                                        " is zero; window invariant undefined");
            product *= factor;
        }
        invariants.push_back(1 / product);
    }
    return invariants;
}

} // namespace decarec
