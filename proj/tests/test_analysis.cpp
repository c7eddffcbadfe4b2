#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "decarec/analysis.hpp"
#include "decarec/presets.hpp"
#include "test_support.hpp"

using namespace decarec;
using decarec::testing::ones;

TEST_CASE("periodicity theorem conditions", "[analysis]") {
    const auto conditions_of = [](const FigurePreset& p) {
        return periodicity_conditions(preset_ics(p), p.A, p.B);
    };

    const auto c1 = conditions_of(*find_preset("fig1"));
    CHECK(c1.p20);
    CHECK_FALSE(c1.p10);
    CHECK_FALSE(c1.p5);
    CHECK_FALSE(c1.p1);

    const auto c2 = conditions_of(*find_preset("fig2"));
    CHECK_FALSE(c2.p20);
    CHECK(c2.p10);
    CHECK_FALSE(c2.p5);
    CHECK_FALSE(c2.p1);

    const auto c3 = conditions_of(*find_preset("fig3"));
    CHECK(c3.p5);
    CHECK_FALSE(c3.p10);
    CHECK_FALSE(c3.p1);

    const auto c4 = conditions_of(*find_preset("fig4"));
    CHECK(c4.p1);
    CHECK_FALSE(c4.p5);
    CHECK_FALSE(c4.p10);

    const auto c5 = conditions_of(*find_preset("fig5"));
    CHECK_FALSE(c5.p20);
    CHECK_FALSE(c5.p10);
    CHECK_FALSE(c5.p5);
    CHECK_FALSE(c5.p1); // 1^5 != (1-3)/(-1) = 2

    CHECK_THROWS_AS(periodicity_conditions(ones(), 2, 0), std::invalid_argument);
}

TEST_CASE("minimal period detection", "[analysis]") {
    SECTION("published configurations") {
        const struct {
            const char* name;
            long long period;
        } expected[] = {{"fig1", 20}, {"fig2", 10}, {"fig3", 5}, {"fig4", 1}};
        for (const auto& [name, period] : expected) {
            const auto& preset = *find_preset(name);
            const auto orbit = iterate(preset_ics(preset), preset_coeffs(preset), 100);
            const auto report = minimal_period(orbit, 40);
            REQUIRE(report.minimal_period.has_value());
            CHECK(*report.minimal_period == period);
            CHECK(report.checked_horizon == 100);
        }
    }
    SECTION("no small period for the A=3 configuration") {
        const auto& fig5 = *find_preset("fig5");
        const auto orbit = iterate(preset_ics(fig5), preset_coeffs(fig5), 200);
        CHECK_FALSE(minimal_period(orbit, 40).minimal_period.has_value());
    }
    SECTION("the zero fixed point is 1-periodic") {
        const auto zero_ics = InitialConditions::shifted({0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
        const auto orbit = iterate(zero_ics, CoefficientSequence::constant(3, 2), 60);
        const auto report = minimal_period(orbit, 20);
        REQUIRE(report.minimal_period.has_value());
        CHECK(*report.minimal_period == 1);
    }
    SECTION("preconditions") {
        const auto orbit = iterate(ones(), CoefficientSequence::constant(2, -1), 30);
        CHECK_THROWS_AS(minimal_period(orbit, 16), std::invalid_argument); // horizon too short
        const auto truncated = iterate(ones(), CoefficientSequence::constant(1, -1), 30);
        CHECK_THROWS_AS(minimal_period(truncated, 5), std::invalid_argument);
    }
    SECTION("theorem conditions imply the detected period divides the advertised one") {
        const struct {
            const char* name;
            long long advertised;
        } cases[] = {{"fig1", 20}, {"fig2", 10}, {"fig3", 5}, {"fig4", 1}};
        for (const auto& [name, advertised] : cases) {
            const auto& preset = *find_preset(name);
            const auto orbit = iterate(preset_ics(preset), preset_coeffs(preset), 120);
            const auto report = minimal_period(orbit, 40);
            REQUIRE(report.minimal_period.has_value());
            CHECK(advertised % *report.minimal_period == 0);
        }
    }
}

TEST_CASE("fixed points", "[analysis]") {
    const auto fp1 = fixed_points(2, -1);
    REQUIRE(fp1.exact.size() == 2);
    CHECK(fp1.exact[0] == 0);
    CHECK(fp1.exact[1] == 1);
    CHECK_FALSE(fp1.approximate_nonzero.has_value());

    const auto fp2 = fixed_points(1, 5);
    REQUIRE(fp2.exact.size() == 1);
    CHECK(fp2.exact[0] == 0);
    CHECK_FALSE(fp2.approximate_nonzero.has_value());

    const auto fp3 = fixed_points(-31, 1);
    REQUIRE(fp3.exact.size() == 2);
    CHECK(fp3.exact[1] == 2);

    // (1-3)/(-1) = 2 has an irrational real fifth root
    const auto fp4 = fixed_points(3, -1);
    REQUIRE(fp4.exact.size() == 1);
    REQUIRE(fp4.approximate_nonzero.has_value());
    CHECK(*fp4.approximate_nonzero == Catch::Approx(std::pow(2.0, 0.2)).epsilon(1e-12));

    const auto fp5 = fixed_points(33, 1); // (1-33)/1 = -32
    REQUIRE(fp5.exact.size() == 2);
    CHECK(fp5.exact[1] == -2);

    CHECK_THROWS_AS(fixed_points(2, 0), std::invalid_argument);
}

TEST_CASE("characteristic roots at the origin", "[analysis]") {
    SECTION("A = 1: the ten tenth roots of unity") {
        const auto roots = characteristic_roots_zero(1);
        for (const auto& r : roots) {
            CHECK(std::fabs(std::abs(r) - 1.0) <= 1e-12);
            CHECK(characteristic_residual_zero(r, 1) <= 1e-12);
        }
    }
    SECTION("A = 2: all moduli are 2^(-1/10)") {
        const auto roots = characteristic_roots_zero(2);
        const double expected = std::pow(2.0, -0.1);
        for (const auto& r : roots)
            CHECK(std::fabs(std::abs(r) - expected) <= 1e-12);
    }
    SECTION("negative A places roots on odd phases") {
        const auto roots = characteristic_roots_zero(-2);
        for (const auto& r : roots)
            CHECK(characteristic_residual_zero(r, -2) <= 1e-10);
    }
    CHECK_THROWS_AS(characteristic_roots_zero(0), std::invalid_argument);
}

TEST_CASE("characteristic roots at a nonzero fixed point", "[analysis]") {
    SECTION("A = 2: +-sqrt(2) plus eight unit-modulus roots") {
        const auto roots = characteristic_roots_nonzero(2);
        CHECK(std::abs(roots[0] - ComplexF(std::sqrt(2.0), 0)) <= 1e-12);
        CHECK(std::abs(roots[1] + ComplexF(std::sqrt(2.0), 0)) <= 1e-12);
        int unit_modulus = 0;
        for (const auto& r : roots) {
            CHECK(characteristic_residual_nonzero(r, 2) <= 1e-10);
            if (std::fabs(std::abs(r) - 1.0) <= 1e-12)
                ++unit_modulus;
        }
        CHECK(unit_modulus == 8);
        // e^{2 pi i / 5} is among them
        const ComplexF witness = std::polar(1.0, 2 * std::numbers::pi / 5);
        CHECK(characteristic_residual_nonzero(witness, 2) <= 1e-10);
    }
    SECTION("negative A yields purely imaginary sqrt factor roots") {
        const auto roots = characteristic_roots_nonzero(-3);
        for (const auto& r : roots)
            CHECK(characteristic_residual_nonzero(r, -3) <= 1e-10);
    }
    CHECK_THROWS_AS(characteristic_roots_nonzero(1), std::invalid_argument);
}

TEST_CASE("factored characteristic expands to the displayed coefficients", "[analysis]") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Rational A = testing::random_rational(rng, 9, 9, false);
        const auto displayed = characteristic_coefficients_nonzero(A);
        const auto expanded = characteristic_coefficients_factored(A);
        for (std::size_t d = 0; d < displayed.size(); ++d)
            REQUIRE(displayed[d] == expanded[d]);
    }
}

TEST_CASE("stability classification", "[analysis]") {
    SECTION("A = 1: zero is non-hyperbolic, no nonzero fixed point") {
        const auto report = stability(1, 1);
        CHECK(report.zero_class == StabilityClass::NonHyperbolic);
        CHECK_FALSE(report.roots_nonzero.has_value());
        CHECK_FALSE(report.nonzero_class.has_value());
        CHECK(report.fixed_points.exact == std::vector<Rational>{0});
    }
    SECTION("A = 2, B = -1: zero attracts, the nonzero point is non-hyperbolic") {
        const auto report = stability(2, -1);
        CHECK(report.zero_class == StabilityClass::AsymptoticallyStable);
        REQUIRE(report.nonzero_class.has_value());
        CHECK(*report.nonzero_class == StabilityClass::NonHyperbolic);
        REQUIRE(report.fixed_points.exact.size() == 2);
        CHECK(report.fixed_points.exact[1] == 1);
    }
    SECTION("|A| = 1 is non-hyperbolic, |A| < 1 is unstable") {
        CHECK(stability(-1, 1).zero_class == StabilityClass::NonHyperbolic);
        CHECK(stability(Rational(1, 2), 1).zero_class == StabilityClass::Unstable);
    }
    SECTION("root moduli straddle the unit circle with |A|") {
        std::mt19937_64 rng(32);
        std::uniform_int_distribution<int> num(2, 40);
        std::uniform_int_distribution<int> den(1, 6);
        for (int trial = 0; trial < 20; ++trial) {
            Rational A(num(rng), den(rng));
            if (A <= 1)
                A += 1;
            if (trial % 2 == 0)
                A = -A;
            const auto outside = stability(A, 1);
            double max_modulus = 0;
            for (const auto& r : outside.roots_zero)
                max_modulus = std::max(max_modulus, std::abs(r));
            CHECK(max_modulus < 1.0);
            CHECK(outside.zero_class == StabilityClass::AsymptoticallyStable);

            const Rational inv = 1 / A; // |inv| < 1, nonzero
            const auto inside = stability(inv, 1);
            double min_modulus = 1e9;
            for (const auto& r : inside.roots_zero)
                min_modulus = std::min(min_modulus, std::abs(r));
            CHECK(min_modulus > 1.0);
            CHECK(inside.zero_class == StabilityClass::Unstable);
        }
    }
    SECTION("every reported root satisfies its polynomial") {
        std::mt19937_64 rng(33);
        for (int trial = 0; trial < 20; ++trial) {
            Rational A = testing::random_rational(rng, 6, 3);
            if (A == 1)
                A = 2;
            const auto report = stability(A, 1);
            for (const auto& r : report.roots_zero)
                CHECK(characteristic_residual_zero(r, A) <= 1e-10);
            REQUIRE(report.roots_nonzero.has_value());
            for (const auto& r : *report.roots_nonzero)
                CHECK(characteristic_residual_nonzero(r, A) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(stability(0, 1), std::invalid_argument);
}
