#pragma once

/**
 * @file presets.hpp
 * @brief Baked-in example configurations fig1..fig5, one per published plot,
 *        so each is reproducible with a single command.
 */

#include <array>
#include <string_view>

#include "decarec/coefficients.hpp"
#include "decarec/initial_conditions.hpp"
#include "decarec/rational.hpp"

namespace decarec {

struct FigurePreset {
    std::string_view name;
    Rational A;
    Rational B;
    std::array<Rational, 10> ics;
    std::string_view note;
};

inline const std::array<FigurePreset, 5>& figure_presets() {
    static const std::array<FigurePreset, 5> presets = {{
        {"fig1", -1, -1,
         {1, -1, 2, -2, Rational(1, 4), 1, -1, 2, -2, Rational(1, 4)},
         "A=-1: every solution is 20-periodic"},
        {"fig2", 2, -1,
         {1, -1, 2, -2, Rational(1, 4), Rational(-1, 4), 3, -3, Rational(2, 3), Rational(2, 3)},
         "both parity window products equal (1-A)/B: 10-periodic"},
        {"fig3", 2, -1,
         {1, -1, 2, -2, Rational(1, 4), 1, -1, 2, -2, Rational(1, 4)},
         "x_0..x_4 product equals (1-A)/B with x_i = x_{i+5}: 5-periodic"},
        {"fig4", 2, -1,
         {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         "x_i^5 = (1-A)/B: constant solution"},
        {"fig5", 3, -1,
         {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         "same seeds, A=3: the constant-solution condition fails"},
    }};
    return presets;
}

inline const FigurePreset* find_preset(std::string_view name) {
    for (const auto& p : figure_presets())
        if (p.name == name)
            return &p;
    return nullptr;
}

inline InitialConditions preset_ics(const FigurePreset& p) {
    return InitialConditions::shifted(p.ics);
}

inline CoefficientSequence preset_coeffs(const FigurePreset& p) {
    return CoefficientSequence::constant(p.A, p.B);
}

} // namespace decarec
