#pragma once

/**
 * @file coefficients.hpp
 * @brief Supplies the coefficient pair (A_n, B_n) for every step n >= 0.
 *
 * Three kinds: a constant pair, a nonempty periodic list, and a finite table.
 * Table lookups past the end throw rather than wrap, so an experiment cannot
 * silently reuse coefficients.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "decarec/errors.hpp"
#include "decarec/rational.hpp"

namespace decarec {

struct CoefficientPair {
    Rational A;
    Rational B;
};

class CoefficientSequence {
public:
    enum class Kind { Constant, Periodic, Table };

    static CoefficientSequence constant(Rational A, Rational B) {
        return CoefficientSequence(Kind::Constant, {{std::move(A), std::move(B)}});
    }

    static CoefficientSequence periodic(std::vector<CoefficientPair> pairs) {
        if (pairs.empty())
            throw std::invalid_argument("periodic coefficient list must be nonempty");
        return CoefficientSequence(Kind::Periodic, std::move(pairs));
    }

    static CoefficientSequence table(std::vector<CoefficientPair> pairs) {
        return CoefficientSequence(Kind::Table, std::move(pairs));
    }

    /// (A_n, B_n).  Throws TableExhaustedError for table reads past the end.
    const CoefficientPair& at(long long n) const {
        switch (kind_) {
        case Kind::Constant:
            return pairs_[0];
        case Kind::Periodic:
            return pairs_[static_cast<std::size_t>(n % static_cast<long long>(pairs_.size()))];
        case Kind::Table:
        default:
            if (n < 0 || static_cast<std::size_t>(n) >= pairs_.size())
                throw TableExhaustedError(n, "coefficient table exhausted at index " +
                                                 std::to_string(n));
            return pairs_[static_cast<std::size_t>(n)];
        }
    }

    Kind kind() const { return kind_; }
    bool is_constant() const { return kind_ == Kind::Constant; }
    std::size_t size() const { return pairs_.size(); }

private:
    CoefficientSequence(Kind kind, std::vector<CoefficientPair> pairs)
        : kind_(kind), pairs_(std::move(pairs)) {}

    Kind kind_;
    std::vector<CoefficientPair> pairs_;
};

} // namespace decarec
