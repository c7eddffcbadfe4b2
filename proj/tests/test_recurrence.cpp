#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "decarec/orbit.hpp"
#include "decarec/presets.hpp"

using namespace decarec;

namespace {

InitialConditions all_ones() {
    return InitialConditions::shifted({1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    while (true) {
        const Rational r(num(rng), den(rng));
        if (r != 0)
            return r;
    }
}

} // namespace

TEST_CASE("step applies the map to a ten-term window", "[recurrence]") {
    const std::array<Rational, 10> ones{1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    CHECK(step(ones, 2, -1) == 1);              // 1/(2-1)
    CHECK(step(ones, 3, -1) == Rational(1, 2)); // 1/(3-1)
    CHECK(step(ones, 1, 0) == 1);               // B=0 freezes the window
    CHECK_THROWS_AS(step(ones, 1, -1), ForbiddenSetError);
}

TEST_CASE("iterate reproduces the published orbits", "[recurrence]") {
    SECTION("forbidden set truncates with a marker") {
        const auto orbit = iterate(all_ones(), CoefficientSequence::constant(1, -1), 11);
        REQUIRE(orbit.truncated_at.has_value());
        CHECK(*orbit.truncated_at == 10);
        CHECK(orbit.terms.size() == 10);
        // the denominator at the cut is exactly zero
        const std::size_t m = *orbit.truncated_at;
        Rational window_product = 1;
        for (std::size_t i = m - 10; i <= m - 2; i += 2)
            window_product *= orbit.terms[i];
        CHECK(Rational(1) + Rational(-1) * window_product == 0);
    }
    SECTION("20-periodic configuration") {
        const auto& fig1 = *find_preset("fig1");
        const auto orbit = iterate(preset_ics(fig1), preset_coeffs(fig1), 40);
        REQUIRE_FALSE(orbit.truncated_at.has_value());
        for (std::size_t i = 0; i + 20 < orbit.terms.size(); ++i)
            CHECK(orbit.terms[i] == orbit.terms[i + 20]);
        // frozen continuation of the seed data
        const std::array<Rational, 10> expected{Rational(-1, 2), Rational(1, 2), -4, 4,
                                                Rational(-1, 8), Rational(-1, 2), 2,  -4,
                                                1,               Rational(-1, 8)};
        for (std::size_t i = 0; i < 10; ++i)
            CHECK(orbit.terms[10 + i] == expected[i]);
    }
    SECTION("constant solution at the nonzero fixed point") {
        const auto orbit = iterate(all_ones(), CoefficientSequence::constant(2, -1), 100);
        REQUIRE_FALSE(orbit.truncated_at.has_value());
        for (const auto& term : orbit.terms)
            CHECK(term == 1);
    }
    SECTION("initial terms are echoed exactly") {
        const auto& fig2 = *find_preset("fig2");
        const auto orbit = iterate(preset_ics(fig2), preset_coeffs(fig2), 10);
        CHECK(orbit.terms == std::vector<Rational>(fig2.ics.begin(), fig2.ics.end()));
    }
    SECTION("table exhaustion is an error, not a truncation") {
        const auto coeffs = CoefficientSequence::table({{2, -1}});
        CHECK_THROWS_AS(iterate(all_ones(), coeffs, 12), TableExhaustedError);
        CHECK_NOTHROW(iterate(all_ones(), coeffs, 11));
    }
    SECTION("count below the window size is rejected") {
        CHECK_THROWS_AS(iterate(all_ones(), CoefficientSequence::constant(2, -1), 9),
                        std::invalid_argument);
    }
}

TEST_CASE("invariant sequence", "[recurrence]") {
    SECTION("ones give F identically 1") {
        const auto orbit = iterate(all_ones(), CoefficientSequence::constant(2, -1), 30);
        for (const auto& f : invariant_sequence(orbit))
            CHECK(f == 1);
    }
    SECTION("both parity classes of the 10-periodic configuration") {
        const auto& fig2 = *find_preset("fig2");
        const auto orbit = iterate(preset_ics(fig2), preset_coeffs(fig2), 30);
        const auto inv = invariant_sequence(orbit);
        CHECK(inv[0] == 1);
        CHECK(inv[1] == 1);
        // F_{n+2} = A F_n + B with A=2, B=-1 fixes F at 1
        CHECK(inv[2] == 2 * inv[0] - 1);
    }
    SECTION("zero terms are legal in orbits but undefined for F") {
        auto values = all_ones().values();
        values[4] = 0;
        const Orbit orbit{std::vector<Rational>(values.begin(), values.end()), std::nullopt};
        try {
            invariant_sequence(orbit);
            FAIL("expected ZeroTermError");
        } catch (const ZeroTermError& e) {
            CHECK(e.index == 4);
        }
    }
}

TEST_CASE("reduction law and oracle self-consistency", "[recurrence][property]") {
    std::mt19937_64 rng(20240601);
    int checked_orbits = 0;
    while (checked_orbits < 25) {
        std::array<Rational, 10> seeds;
        for (auto& s : seeds)
            s = random_rational(rng);
        const Rational A = random_rational(rng);
        const Rational B = random_rational(rng);
        const auto coeffs = CoefficientSequence::constant(A, B);
        const auto ics = InitialConditions::shifted(seeds);
        const auto orbit = iterate(ics, coeffs, 120);
        if (orbit.truncated_at)
            continue;
        ++checked_orbits;

        // F_{n+2} = A_n F_n + B_n, exactly, along the whole orbit
        const auto inv = invariant_sequence(orbit);
        for (std::size_t n = 0; n + 2 < inv.size(); ++n)
            REQUIRE(inv[n + 2] == A * inv[n] + B);

        // a shorter run is a prefix of a longer one
        const auto shorter = iterate(ics, coeffs, 40);
        for (std::size_t i = 0; i < shorter.terms.size(); ++i)
            REQUIRE(shorter.terms[i] == orbit.terms[i]);

        // windows satisfy the map exactly
        for (std::size_t n = 0; n + 10 < orbit.terms.size(); ++n) {
            const std::span<const Rational, 10> window(&orbit.terms[n], 10);
            REQUIRE(step(window, A, B) == orbit.terms[n + 10]);
        }
    }
}
