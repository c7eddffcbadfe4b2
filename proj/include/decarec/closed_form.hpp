#pragma once

/**
 * @file closed_form.hpp
 * @brief Explicit solution formulas for the tenth-order family, exposed for
 *        exact comparison against the brute-force orbit.
 *
 * The order reduction runs through the window invariant
 * F_n = 1/(x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8}), which satisfies the
 * first-order linear recursion F_{n+2} = A_n F_n + B_n.  Solving that recursion in closed
 * form and telescoping x_{n+10} = (F_n / F_{n+2}) x_n yields
 *
 *   x_{10n+k} = x_k * prod_{s=0}^{n-1} F_{2(5s+floor(k/2))+tau(k)}
 *                                    / F_{2(5s+1+floor(k/2))+tau(k)}
 *
 * for k = 0..9.  Specializations: constant coefficients (geometric sums),
 * A = -1 (parity solutions), and the back-shifted presentation with initial
 * data a_j = x_{-j}.
 *
 * Conventions: empty products are 1, empty sums are 0, so n = 0 returns the
 * initial condition for every formula.  All arithmetic is exact; vanishing
 * product denominators raise ForbiddenSetError carrying the offending block
 * index s.
 */

#include <array>
#include <vector>

#include "decarec/coefficients.hpp"
#include "decarec/errors.hpp"
#include "decarec/indexing.hpp"
#include "decarec/initial_conditions.hpp"
#include "decarec/rational.hpp"

namespace decarec {

/// Target term x_{10n+k} of a shifted-form orbit.
struct ClosedFormQuery {
    int k = 0;             // residue of the target index mod 10
    long long n = 0;       // block count, >= 0
    InitialConditions ics; // x_0..x_9
    CoefficientSequence coeffs;
};

/// Target term x_{10n-j} of a back-shifted orbit with constant coefficients.
/// a_j = x_{-j}, so a holds the initial data in descending original index.
struct BackshiftQuery {
    int j = 0;
    long long n = 0;
    std::array<Rational, 10> a;
    Rational A;
    Rational B;

    /// M_j = 5 - floor(j/2), in 1..5.
    int m_offset() const { return 5 - j / 2; }

    /// P_j = prod_{m=0}^{4} a_{tau(j)+2m}
    ///     = x_{-tau(j)-8} x_{-tau(j)-6} x_{-tau(j)-4} x_{-tau(j)-2} x_{-tau(j)}.
    Rational window_product() const {
        Rational p = 1;
        for (int m = 0; m < 5; ++m)
            p *= a[static_cast<std::size_t>(j % 2 + 2 * m)];
        return p;
    }
};

namespace detail {

inline void require_residue(int k) {
    if (k < 0 || k > 9)
        throw std::out_of_range("residue k must be in 0..9");
}

inline void require_blocks(long long n) {
    if (n < 0)
        throw std::invalid_argument("block count n must be >= 0");
}

/// First zero factor among x_tau, x_{tau+2}, ..., x_{tau+8}, or -1.
template <class Indexable>
inline long long first_zero_window_factor(const Indexable& values, int tau) {
    for (int m = 0; m < 5; ++m)
        if (values[tau + 2 * m] == 0)
            return tau + 2 * m;
    return -1;
}

inline CoefficientPair constant_pair(const CoefficientSequence& coeffs, const char* who) {
    if (!coeffs.is_constant())
        throw std::invalid_argument(std::string(who) + " requires constant coefficients");
    return coeffs.at(0);
}

} // namespace detail

/// Closed form of the invariant recursion F_{n+2} = A_n F_n + B_n:
///
///   F_{2n+j} = F_j * prod_{t=0}^{n-1} A_{2t+j}
///            + sum_{i=0}^{n-1} B_{2i+j} * prod_{k2=i+1}^{n-1} A_{2k2+j}
///
/// evaluated literally via suffix products.  j is the parity class (0 or 1),
/// f_start is F_j.
inline Rational closed_invariant(int j, long long n, const Rational& f_start,
                                 const CoefficientSequence& coeffs) {
    if (j != 0 && j != 1)
        throw std::out_of_range("parity j must be 0 or 1");
    detail::require_blocks(n);
    const auto count = static_cast<std::size_t>(n);
    std::vector<Rational> suffix(count + 1);
    suffix[count] = 1;
    for (std::size_t i = count; i-- > 0;)
        suffix[i] = coeffs.at(2 * static_cast<long long>(i) + j).A * suffix[i + 1];
    Rational total = f_start * suffix[0];
    for (std::size_t i = 0; i < count; ++i)
        total += coeffs.at(2 * static_cast<long long>(i) + j).B * suffix[i + 1];
    return total;
}

/// x_{10n+k} for an arbitrary coefficient sequence, by substituting the
/// invariant closed form into the telescoped product.  Exact.
inline Rational closed_solution_general(const ClosedFormQuery& q) {
    detail::require_residue(q.k);
    detail::require_blocks(q.n);
    if (q.n == 0)
        return q.ics[q.k];
    const int h = q.k / 2;
    const int tau = q.k % 2;
    const Rational window = q.ics.parity_window_product(tau);
    if (window == 0)
        throw ZeroTermError(detail::first_zero_window_factor(q.ics, tau),
                            "zero initial term: window invariant undefined");
    const Rational f_start = 1 / window;
    Rational value = q.ics[q.k];
    for (long long s = 0; s < q.n; ++s) {
        const Rational numer = closed_invariant(tau, 5 * s + h, f_start, q.coeffs);
        const Rational denom = closed_invariant(tau, 5 * s + h + 1, f_start, q.coeffs);
        if (denom == 0)
            throw ForbiddenSetError(s, "closed-form product factor has zero denominator at block " +
                                           std::to_string(s));
        value *= numer;
        value /= denom;
    }
    return value;
}

/// x_{10n+k} for constant coefficients A, B.  Two branches:
///
///   A == 1:  factors (1 + B(5s+h)P) / (1 + B(5s+h+1)P)
///   A != 1:  factors (A^m + B(1-A^m)/(1-A) P) / (A^{m+1} + B(1-A^{m+1})/(1-A) P)
///
/// with h = floor(k/2), m = 5s+h and P the parity window product.  Geometric
/// sums are evaluated exactly as (1-A^m)/(1-A), never by floating point.
inline Rational closed_solution_constant(const ClosedFormQuery& q) {
    detail::require_residue(q.k);
    detail::require_blocks(q.n);
    const auto [A, B] = detail::constant_pair(q.coeffs, "closed_solution_constant");
    if (q.n == 0)
        return q.ics[q.k];
    const int h = q.k / 2;
    const int tau = q.k % 2;
    const Rational window = q.ics.parity_window_product(tau);
    if (window == 0)
        throw ZeroTermError(detail::first_zero_window_factor(q.ics, tau),
                            "zero initial term: window invariant undefined");
    Rational value = q.ics[q.k];
    if (A == 1) {
        for (long long s = 0; s < q.n; ++s) {
            const Rational numer = 1 + B * (5 * s + h) * window;
            const Rational denom = 1 + B * (5 * s + h + 1) * window;
            if (denom == 0)
                throw ForbiddenSetError(s, "constant-coefficient factor vanishes at block " +
                                               std::to_string(s));
            value *= numer;
            value /= denom;
        }
        return value;
    }
    const Rational geom_scale = B / (1 - A);
    Rational power = pow_rational(A, h); // A^{5s+h}, advanced incrementally
    for (long long s = 0; s < q.n; ++s) {
        const Rational next_power = power * A;
        const Rational numer = power + geom_scale * (1 - power) * window;
        const Rational denom = next_power + geom_scale * (1 - next_power) * window;
        if (denom == 0)
            throw ForbiddenSetError(s, "constant-coefficient factor vanishes at block " +
                                           std::to_string(s));
        value *= numer;
        value /= denom;
        power = next_power * pow_rational(A, 4);
    }
    return value;
}

/// x_{10n+k} for constant A = -1: the parity solutions.  For n even the term
/// returns to x_k; for n odd one factor survives, dividing for
/// k in {0,1,4,5,8,9} and multiplying for k in {2,3,6,7}.  The five k-class
/// window products are written out literally; each equals the parity window
/// product.
inline Rational closed_solution_alternating(const ClosedFormQuery& q) {
    detail::require_residue(q.k);
    detail::require_blocks(q.n);
    const auto [A, B] = detail::constant_pair(q.coeffs, "closed_solution_alternating");
    if (A != -1)
        throw std::invalid_argument("closed_solution_alternating requires A = -1");
    if (q.n % 2 == 0)
        return q.ics[q.k];

    const int k = q.k;
    int base = 0; // first index of the k-class window
    bool divide = true;
    switch (k) {
    case 0: case 1: base = k;     divide = true;  break;
    case 2: case 3: base = k - 2; divide = false; break;
    case 4: case 5: base = k - 4; divide = true;  break;
    case 6: case 7: base = k - 6; divide = false; break;
    case 8: case 9: base = k - 8; divide = true;  break;
    }
    Rational window = 1;
    for (int m = 0; m < 5; ++m) {
        const Rational& factor = q.ics[base + 2 * m];
        if (factor == 0)
            throw ZeroTermError(base + 2 * m, "zero initial term: window invariant undefined");
        window *= factor;
    }
    const Rational bracket = -1 + B * window;
    if (divide) {
        if (bracket == 0)
            throw ForbiddenSetError(0, "odd-branch denominator -1 + B*P vanishes");
        return q.ics[k] / bracket;
    }
    return q.ics[k] * bracket;
}

/// x_{10n-j} of the back-shifted presentation with constant coefficients,
/// from the reversed formulas.  Branches on A = 1 vs A != 1 with exponents
/// 5s + M_j - 1 over 5s + M_j.
inline Rational backshift_solution(const BackshiftQuery& q) {
    detail::require_residue(q.j);
    detail::require_blocks(q.n);
    if (q.n == 0)
        return q.a[static_cast<std::size_t>(q.j)];
    const Rational window = q.window_product();
    if (window == 0)
        throw ZeroTermError(detail::first_zero_window_factor(q.a, q.j % 2),
                            "zero initial term: window invariant undefined");
    const int m_off = q.m_offset();
    Rational value = q.a[static_cast<std::size_t>(q.j)];
    if (q.A == 1) {
        for (long long s = 0; s < q.n; ++s) {
            const Rational numer = 1 + q.B * (5 * s + m_off - 1) * window;
            const Rational denom = 1 + q.B * (5 * s + m_off) * window;
            if (denom == 0)
                throw ForbiddenSetError(s, "back-shifted factor vanishes at block " +
                                               std::to_string(s));
            value *= numer;
            value /= denom;
        }
        return value;
    }
    const Rational geom_scale = q.B / (1 - q.A);
    Rational power = pow_rational(q.A, m_off - 1); // A^{5s+M_j-1}
    for (long long s = 0; s < q.n; ++s) {
        const Rational next_power = power * q.A;
        const Rational numer = power + geom_scale * (1 - power) * window;
        const Rational denom = next_power + geom_scale * (1 - next_power) * window;
        if (denom == 0)
            throw ForbiddenSetError(s, "back-shifted factor vanishes at block " +
                                           std::to_string(s));
        value *= numer;
        value /= denom;
        power = next_power * pow_rational(q.A, 4);
    }
    return value;
}

/// The four dedicated product forms for (A,B) in {(1,1),(1,-1),(-1,1),(-1,-1)},
/// written with M_j and P_j exactly as published.  Must agree exactly with
/// backshift_solution on every input.
inline Rational backshift_solution_known_case(const BackshiftQuery& q) {
    detail::require_residue(q.j);
    detail::require_blocks(q.n);
    const bool a_one = q.A == 1, a_neg = q.A == -1;
    const bool b_one = q.B == 1, b_neg = q.B == -1;
    if (!((a_one || a_neg) && (b_one || b_neg)))
        throw std::invalid_argument(
            "backshift_solution_known_case covers (A,B) in {(1,1),(1,-1),(-1,1),(-1,-1)}");
    if (q.n == 0)
        return q.a[static_cast<std::size_t>(q.j)];
    const Rational window = q.window_product();
    if (window == 0)
        throw ZeroTermError(detail::first_zero_window_factor(q.a, q.j % 2),
                            "zero initial term: window invariant undefined");
    const int m_off = q.m_offset();
    Rational value = q.a[static_cast<std::size_t>(q.j)];
    for (long long s = 0; s < q.n; ++s) {
        const long long m1 = 5 * s + m_off - 1;
        const long long m2 = 5 * s + m_off;
        Rational numer, denom;
        if (a_one && b_one) {
            numer = 1 + m1 * window;
            denom = 1 + m2 * window;
        } else if (a_one && b_neg) {
            numer = 1 - m1 * window;
            denom = 1 - m2 * window;
        } else if (a_neg && b_one) {
            numer = sign_pow(m1) + Rational(1 - sign_pow(m1), 2) * window;
            denom = sign_pow(m2) + Rational(1 - sign_pow(m2), 2) * window;
        } else {
            numer = sign_pow(m1) + Rational(-1 - sign_pow(m1 - 1), 2) * window;
            denom = sign_pow(m2) + Rational(-1 - sign_pow(m2 - 1), 2) * window;
        }
        if (denom == 0)
            throw ForbiddenSetError(s, "back-shifted factor vanishes at block " +
                                           std::to_string(s));
        value *= numer;
        value /= denom;
    }
    return value;
}

/// Grid evaluator for the general closed form over one (ics, coeffs) pair.
/// Caches the invariant column per parity and keeps a running product per
/// residue k, so walking n = 0,1,2,... costs O(1) amortized per term instead
/// of O(n) formula re-evaluations.  Values are exactly those of
/// closed_solution_general.
class ClosedFormEvaluator {
public:
    ClosedFormEvaluator(InitialConditions ics, CoefficientSequence coeffs)
        : ics_(std::move(ics)), coeffs_(std::move(coeffs)) {
        for (int tau = 0; tau < 2; ++tau) {
            ParityColumn& col = columns_[tau];
            const Rational window = ics_.parity_window_product(tau);
            col.defined = window != 0;
            if (col.defined) {
                col.invariants.push_back(1 / window); // F_tau
            } else {
                col.zero_index = detail::first_zero_window_factor(ics_, tau);
            }
        }
        for (int k = 0; k < 10; ++k)
            residues_[k].value = ics_[k];
    }

    /// x_{10n+k}.  Sequential n per residue is O(1) amortized; stepping
    /// backwards restarts that residue from n = 0.
    Rational at(int k, long long n) {
        detail::require_residue(k);
        detail::require_blocks(n);
        if (n == 0)
            return ics_[k];
        ResidueState& res = residues_[k];
        if (res.n > n) {
            res.n = 0;
            res.value = ics_[k];
        }
        const int h = k / 2;
        const int tau = k % 2;
        while (res.n < n) {
            const long long s = res.n;
            // extend the column past both indices before taking references
            invariant_at(tau, 5 * s + h + 1);
            const Rational& numer = invariant_at(tau, 5 * s + h);
            const Rational& denom = invariant_at(tau, 5 * s + h + 1);
            if (denom == 0)
                throw ForbiddenSetError(s,
                                        "closed-form product factor has zero denominator at block " +
                                            std::to_string(s));
            res.value *= numer;
            res.value /= denom;
            ++res.n;
        }
        return res.value;
    }

    /// F_{2m+tau}, extending the cached column as needed.
    const Rational& invariant_at(int tau, long long m) {
        ParityColumn& col = columns_[tau];
        if (!col.defined)
            throw ZeroTermError(col.zero_index, "zero initial term: window invariant undefined");
        while (static_cast<long long>(col.invariants.size()) <= m) {
            const auto t = static_cast<long long>(col.invariants.size()) - 1;
            const CoefficientPair& c = coeffs_.at(2 * t + tau);
            // running-product / running-sum update of the literal closed form
            col.running_product *= c.A;
            col.running_sum = col.running_sum * c.A + c.B;
            col.invariants.push_back(col.invariants[0] * col.running_product + col.running_sum);
        }
        return col.invariants[static_cast<std::size_t>(m)];
    }

private:
    struct ParityColumn {
        std::vector<Rational> invariants; // F_tau, F_{tau+2}, F_{tau+4}, ...
        Rational running_product = 1;     // prod_{t<m} A_{2t+tau}
        Rational running_sum = 0;         // sum_{i<m} B_{2i+tau} prod_{k2>i} A_{2k2+tau}
        bool defined = false;
        long long zero_index = -1;
    };
    struct ResidueState {
        long long n = 0;
        Rational value;
    };

    InitialConditions ics_;
    CoefficientSequence coeffs_;
    std::array<ParityColumn, 2> columns_;
    std::array<ResidueState, 10> residues_;
};

} // namespace decarec
