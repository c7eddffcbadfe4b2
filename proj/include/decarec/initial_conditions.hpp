#pragma once

/**
 * @file initial_conditions.hpp
 * @brief The ten seed values x_0..x_9 of a shifted-form orbit.
 *
 * The family is iterated in its shifted presentation only, so indices are
 * always >= 0.  Initial data given in the back-shifted presentation
 * (x_{-9}..x_0) occupies the same ten slots: slot k holds x_{k-9}.  The
 * residue reversal j = 9-k shows up in the back-shifted solution formulas,
 * not in storage.
 */

#include <array>
#include <stdexcept>

#include "decarec/rational.hpp"

namespace decarec {

class InitialConditions {
public:
    static InitialConditions shifted(std::array<Rational, 10> values) {
        return InitialConditions(std::move(values));
    }

    /// Values given in ascending original index order x_{-9}, x_{-8}, ..., x_0;
    /// slot k of the shifted orbit holds x_{k-9}.
    static InitialConditions backshifted(std::array<Rational, 10> values) {
        return InitialConditions(std::move(values));
    }

    const Rational& operator[](int k) const {
        if (k < 0 || k > 9)
            throw std::out_of_range("InitialConditions index must be in 0..9");
        return values_[static_cast<std::size_t>(k)];
    }

    const std::array<Rational, 10>& values() const { return values_; }

    /// x_tau * x_{tau+2} * x_{tau+4} * x_{tau+6} * x_{tau+8} for tau in {0,1}:
    /// the product whose reciprocal seeds the window invariant.
    Rational parity_window_product(int tau) const {
        if (tau != 0 && tau != 1)
            throw std::out_of_range("parity must be 0 or 1");
        Rational p = 1;
        for (int m = 0; m < 5; ++m)
            p *= values_[static_cast<std::size_t>(tau + 2 * m)];
        return p;
    }

private:
    explicit InitialConditions(std::array<Rational, 10> values) : values_(std::move(values)) {}

    std::array<Rational, 10> values_;
};

} // namespace decarec
