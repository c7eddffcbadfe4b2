#pragma once

/**
 * @file symmetry.hpp
 * @brief The symmetry characteristics alpha_n x_n behind the order reduction,
 *        verified numerically.
 *
 * The admissible characteristics are Q(n, x) = alpha_n x with
 * alpha_n = e^{i 2 k pi n / 10}, k in {1,2,3,4,6,7,8,9}: exactly the k for
 * which alpha_n + alpha_{n+2} + alpha_{n+4} + alpha_{n+6} + alpha_{n+8} = 0.
 * k = 5 and k = 10 make alpha constant across the even window and are kept
 * as negative controls.  The linearized symmetry condition is checked at
 * sample points with hand-derived partial derivatives of the map, so the
 * residual tolerance can be tight.
 */

#include <array>
#include <cmath>
#include <numbers>
#include <span>

#include "decarec/errors.hpp"
#include "decarec/rational.hpp"

namespace decarec {

/// alpha_n = e^{i 2 k pi n / 10}.
inline ComplexF alpha(int k, long long n) {
    return std::polar(1.0, std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(n) / 5.0);
}

/// One root-of-unity characteristic Q(n, x) = alpha_n x.
struct SymmetryCharacteristic {
    int k = 1;

    ComplexF alpha_at(long long n) const { return alpha(k, n); }

    /// k for which the five-term sum over the even window vanishes.
    static bool admissible(int k) { return k >= 1 && k <= 9 && k != 5; }
};

/// |alpha_n + alpha_{n+2} + alpha_{n+4} + alpha_{n+6} + alpha_{n+8}|.
/// Zero (to rounding) for admissible k; 5 for k = 5 or 10.
inline double alpha_sum_residual(int k, long long n) {
    ComplexF sum = 0;
    for (int m = 0; m < 5; ++m)
        sum += alpha(k, n + 2 * m);
    return std::abs(sum);
}

/// Residual of the linearized symmetry condition
///
///   Q(n+10, Omega) - sum_m Q(n+2m, x_{n+2m}) dOmega/dx_{n+2m} = 0
///
/// at a ten-term window of positive rationals, with Q(n, x) = alpha_n x and
/// Omega = x_n / (A + B x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8}).  The partials
/// are closed forms (quotient rule):
///
///   dOmega/dx_n      = A / D^2
///   dOmega/dx_{n+2m} = -x_n B (Pi / x_{n+2m}) / D^2,   m = 1..4
///
/// with Pi the window product and D = A + B Pi.
inline double symmetry_residual(int k, std::span<const Rational, 10> window, const Rational& A,
                                const Rational& B, long long n) {
    std::array<double, 5> x{};
    for (int m = 0; m < 5; ++m)
        x[static_cast<std::size_t>(m)] = to_double(window[static_cast<std::size_t>(2 * m)]);
    const double a = to_double(A);
    const double b = to_double(B);

    const double pi_product = x[0] * x[1] * x[2] * x[3] * x[4];
    const Rational exact_denom = A + B * window[0] * window[2] * window[4] * window[6] * window[8];
    if (exact_denom == 0)
        throw ForbiddenSetError(-1, "symmetry residual evaluated at a forbidden point");
    const double d = a + b * pi_product;
    const double omega = x[0] / d;

    const ComplexF lhs = alpha(k, n + 10) * omega;

    ComplexF rhs = alpha(k, n) * x[0] * (a / (d * d));
    for (int m = 1; m < 5; ++m) {
        double partial_product = 1; // Pi / x_{n+2m}
        for (int l = 0; l < 5; ++l)
            if (l != m)
                partial_product *= x[static_cast<std::size_t>(l)];
        const double deriv = -x[0] * b * partial_product / (d * d);
        rhs += alpha(k, n + 2 * m) * x[static_cast<std::size_t>(m)] * deriv;
    }
    return std::abs(lhs - rhs);
}

/// Exact window invariant 1 / (x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8}) from the
/// five even-spaced values.  Throws ZeroTermError with the offset of the
/// first zero factor.
inline Rational canonical_invariant(std::span<const Rational, 5> window) {
    Rational product = 1;
    for (std::size_t m = 0; m < 5; ++m) {
        if (window[m] == 0)
            throw ZeroTermError(static_cast<long long>(2 * m),
                                "zero window factor: invariant undefined");
        product *= window[m];
    }
    return 1 / product;
}

/// Canonical coordinate S_n with alpha_n S_n = ln|x_n|, so
/// exp(alpha_n S_n) = |x_n|.  Defined for x != 0.
inline ComplexF canonical_coordinate(int k, long long n, const Rational& x) {
    if (x == 0)
        throw ZeroTermError(n, "canonical coordinate undefined at x = 0");
    return std::log(std::fabs(to_double(x))) / alpha(k, n);
}

} // namespace decarec
