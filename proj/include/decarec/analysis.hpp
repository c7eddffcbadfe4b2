#pragma once

/**
 * @file analysis.hpp
 * @brief Periodicity conditions, minimal-period detection, and fixed-point
 *        stability for constant coefficients.
 *
 * The sufficient conditions for periods 20/10/5/1 are evaluated exactly in
 * rational arithmetic.  Characteristic roots come from the analytic structure
 * of the two characteristic polynomials -- lambda^10 = 1/A at the origin and
 * (lambda^2 - A)(lambda^8 + lambda^6 + lambda^4 + lambda^2 + 1) at a nonzero
 * fixed point -- so no general polynomial solver is involved.
 */

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "decarec/errors.hpp"
#include "decarec/initial_conditions.hpp"
#include "decarec/orbit.hpp"
#include "decarec/rational.hpp"

namespace decarec {

struct TheoremConditions {
    bool p20 = false;
    bool p10 = false;
    bool p5 = false;
    bool p1 = false;
};

struct PeriodReport {
    std::optional<long long> minimal_period;
    long long checked_horizon = 0;
    std::optional<TheoremConditions> theorem_conditions;
};

enum class StabilityClass { AsymptoticallyStable, NonHyperbolic, Unstable };

inline std::string to_string(StabilityClass c) {
    switch (c) {
    case StabilityClass::AsymptoticallyStable: return "asymptotically_stable";
    case StabilityClass::NonHyperbolic: return "non_hyperbolic";
    case StabilityClass::Unstable: return "unstable";
    }
    return "unknown";
}

struct FixedPointSet {
    std::vector<Rational> exact;            // always contains 0
    std::optional<double> approximate_nonzero; // irrational fifth root, if any
};

struct StabilityReport {
    FixedPointSet fixed_points;
    std::array<ComplexF, 10> roots_zero;                  // lambda^10 = 1/A
    std::optional<std::array<ComplexF, 10>> roots_nonzero; // A != 1 only
    StabilityClass zero_class = StabilityClass::NonHyperbolic;
    std::optional<StabilityClass> nonzero_class;
};

/// Sufficient conditions for periodic solutions, checked exactly:
///
///   p20: A = -1 (any nonzero B)
///   p10: A != 1, both parity window products equal (1-A)/B, and
///        x_i != x_{i+2}, x_i != x_{i+5}
///   p5:  A != 1, x_0 x_1 x_2 x_3 x_4 = (1-A)/B, x_i != x_{i+2}, x_i = x_{i+5}
///   p1:  A != 1, every x_i^5 = (1-A)/B
///
/// The p10 product condition is enforced for both parity classes i = 0 and
/// i = 1; the distinctness clauses range over every in-window i.
inline TheoremConditions periodicity_conditions(const InitialConditions& ics, const Rational& A,
                                                const Rational& B) {
    if (B == 0)
        throw std::invalid_argument("periodicity_conditions requires B != 0");
    TheoremConditions out;
    out.p20 = (A == -1);
    if (A == 1)
        return out;

    const Rational target = (1 - A) / B;
    bool distinct2 = true, distinct5 = true, equal5 = true;
    for (int i = 0; i < 8; ++i)
        distinct2 = distinct2 && ics[i] != ics[i + 2];
    for (int i = 0; i < 5; ++i) {
        distinct5 = distinct5 && ics[i] != ics[i + 5];
        equal5 = equal5 && ics[i] == ics[i + 5];
    }

    out.p10 = distinct2 && distinct5 && ics.parity_window_product(0) == target &&
              ics.parity_window_product(1) == target;

    Rational leading = 1;
    for (int i = 0; i < 5; ++i)
        leading *= ics[i];
    out.p5 = distinct2 && equal5 && leading == target;

    bool all_fifth = true;
    for (int i = 0; i < 10; ++i)
        all_fifth = all_fifth && pow_rational(ics[i], 5) == target;
    out.p1 = all_fifth;
    return out;
}

/// Smallest p <= max_period with orbit[i] = orbit[i+p] over the whole orbit,
/// or none.  Requires a non-truncated orbit of length >= 2*max_period.
inline PeriodReport minimal_period(const Orbit& orbit, long long max_period) {
    if (max_period < 1)
        throw std::invalid_argument("minimal_period: max_period must be >= 1");
    if (orbit.truncated_at)
        throw std::invalid_argument("minimal_period: orbit was truncated");
    const auto length = static_cast<long long>(orbit.terms.size());
    if (length < 2 * max_period)
        throw std::invalid_argument("minimal_period: horizon too short for max_period");
    PeriodReport report;
    report.checked_horizon = length;
    for (long long p = 1; p <= max_period; ++p) {
        bool periodic = true;
        for (long long i = 0; i + p < length && periodic; ++i)
            periodic = orbit.terms[static_cast<std::size_t>(i)] ==
                       orbit.terms[static_cast<std::size_t>(i + p)];
        if (periodic) {
            report.minimal_period = p;
            break;
        }
    }
    return report;
}

/// Real fixed points of x = x/(A + B x^5): always 0, plus the real fifth
/// root of (1-A)/B -- exact when rational, approximate otherwise.
inline FixedPointSet fixed_points(const Rational& A, const Rational& B) {
    if (B == 0)
        throw std::invalid_argument("fixed_points requires B != 0");
    FixedPointSet out;
    out.exact.push_back(0);
    const Rational radicand = (1 - A) / B;
    if (const auto root = rational_fifth_root(radicand)) {
        if (*root != 0)
            out.exact.push_back(*root);
    } else {
        const double r = to_double(radicand);
        out.approximate_nonzero = std::copysign(std::pow(std::fabs(r), 0.2), r);
    }
    return out;
}

/// The ten roots of lambda^10 = 1/A: modulus |1/A|^{1/10}, phases spaced by
/// pi/5, offset by pi/10 when 1/A < 0.
inline std::array<ComplexF, 10> characteristic_roots_zero(const Rational& A) {
    if (A == 0)
        throw std::invalid_argument("characteristic_roots_zero requires A != 0");
    const double inv = 1.0 / to_double(A);
    const double modulus = std::pow(std::fabs(inv), 0.1);
    const double offset = inv < 0 ? std::numbers::pi / 10.0 : 0.0;
    std::array<ComplexF, 10> roots;
    for (int m = 0; m < 10; ++m)
        roots[static_cast<std::size_t>(m)] =
            std::polar(modulus, offset + std::numbers::pi * static_cast<double>(m) / 5.0);
    return roots;
}

/// The ten roots of the nonzero-fixed-point characteristic: +-sqrt(A) from
/// the lambda^2 - A factor, and the eight tenth roots of unity other than
/// +-1 from lambda^8 + lambda^6 + lambda^4 + lambda^2 + 1.
inline std::array<ComplexF, 10> characteristic_roots_nonzero(const Rational& A) {
    if (A == 1)
        throw std::invalid_argument("characteristic_roots_nonzero requires A != 1");
    std::array<ComplexF, 10> roots;
    const double a = to_double(A);
    if (a >= 0) {
        roots[0] = {std::sqrt(a), 0.0};
        roots[1] = {-std::sqrt(a), 0.0};
    } else {
        roots[0] = {0.0, std::sqrt(-a)};
        roots[1] = {0.0, -std::sqrt(-a)};
    }
    std::size_t idx = 2;
    for (int m = 1; m <= 9; ++m) {
        if (m == 5)
            continue; // excludes -1; m = 0 (i.e. +1) never enters
        roots[idx++] = std::polar(1.0, std::numbers::pi * static_cast<double>(m) / 5.0);
    }
    return roots;
}

/// |lambda^10 - 1/A| -- residual in the zero-point characteristic.
inline double characteristic_residual_zero(const ComplexF& lambda, const Rational& A) {
    ComplexF p = 1;
    for (int i = 0; i < 10; ++i)
        p *= lambda;
    return std::abs(p - ComplexF(1.0 / to_double(A), 0.0));
}

/// |lambda^10 - (A-1)(lambda^8 + lambda^6 + lambda^4 + lambda^2) - A| --
/// residual in the nonzero-fixed-point characteristic.
inline double characteristic_residual_nonzero(const ComplexF& lambda, const Rational& A) {
    const ComplexF l2 = lambda * lambda;
    const ComplexF l4 = l2 * l2;
    const ComplexF l6 = l4 * l2;
    const ComplexF l8 = l4 * l4;
    const ComplexF l10 = l8 * l2;
    const double a = to_double(A);
    return std::abs(l10 - (a - 1.0) * (l8 + l6 + l4 + l2) - a);
}

/// Coefficients (degree 0..10) of the nonzero-fixed-point characteristic as
/// displayed: lambda^10 - (A-1)(lambda^8+lambda^6+lambda^4+lambda^2) - A.
inline std::array<Rational, 11> characteristic_coefficients_nonzero(const Rational& A) {
    std::array<Rational, 11> c{};
    c[10] = 1;
    c[8] = 1 - A;
    c[6] = 1 - A;
    c[4] = 1 - A;
    c[2] = 1 - A;
    c[0] = -A;
    return c;
}

/// The same polynomial rebuilt by expanding its factored form
/// (lambda^2 - A)(lambda^8 + lambda^6 + lambda^4 + lambda^2 + 1) by
/// convolution.  Must match characteristic_coefficients_nonzero exactly.
inline std::array<Rational, 11> characteristic_coefficients_factored(const Rational& A) {
    const std::array<Rational, 3> quad{-A, 0, 1};          // lambda^2 - A
    std::array<Rational, 9> cyclotomic_part{};             // 1 + l^2 + l^4 + l^6 + l^8
    for (int d = 0; d <= 8; d += 2)
        cyclotomic_part[static_cast<std::size_t>(d)] = 1;
    std::array<Rational, 11> out{};
    for (std::size_t i = 0; i < quad.size(); ++i)
        for (std::size_t j = 0; j < cyclotomic_part.size(); ++j)
            out[i + j] += quad[i] * cyclotomic_part[j];
    return out;
}

/// Full stability analysis at both equilibria.  Requires A != 0 (zero-point
/// characteristic) and B != 0 (fixed-point equation); the nonzero-point
/// section is omitted when A = 1, where 0 is the only equilibrium.
inline StabilityReport stability(const Rational& A, const Rational& B) {
    if (A == 0)
        throw std::invalid_argument("stability: zero-point characteristic undefined for A = 0");
    StabilityReport report;
    report.fixed_points = fixed_points(A, B);
    report.roots_zero = characteristic_roots_zero(A);

    const Rational magnitude = A < 0 ? Rational(-A) : A;
    if (magnitude > 1)
        report.zero_class = StabilityClass::AsymptoticallyStable;
    else if (magnitude == 1)
        report.zero_class = StabilityClass::NonHyperbolic;
    else
        report.zero_class = StabilityClass::Unstable;

    if (A != 1) {
        report.roots_nonzero = characteristic_roots_nonzero(A);
        // a unit-modulus root (e.g. e^{i 2 pi / 5}) is always present
        report.nonzero_class = StabilityClass::NonHyperbolic;
    }
    return report;
}

} // namespace decarec
