// decarec: simulate, solve in closed form, compare and analyze the family
//   x_{n+10} = x_n / (A_n + B_n x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8})
// in exact rational arithmetic.
//
// Exit codes: 0 success, 1 comparison mismatch, 2 bad configuration,
// 3 forbidden-set truncation (partial output was emitted).

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decarec/decarec.hpp"

namespace {

using namespace decarec;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;
constexpr int kExitForbidden = 3;

// ---------------------------------------------------------------------------
// configuration

struct ExperimentConfig {
    std::string a_text;
    std::string b_text;
    std::string periodic_text; // "A,B;A,B;..."
    std::string coeff_file;    // CSV rows A,B
    std::string ics_text;      // comma list of ten rationals
    std::string preset;
    bool backshift = false;
    long long horizon = 60;
    std::string format = "csv";
    unsigned long long seed = 1;
};

void add_config_flags(CLI::App* cmd, ExperimentConfig& cfg, bool with_format = true) {
    cmd->add_option("--A", cfg.a_text, "constant coefficient A as a rational string, e.g. -1 or 2/3");
    cmd->add_option("--B", cfg.b_text, "constant coefficient B as a rational string");
    cmd->add_option("--periodic", cfg.periodic_text,
                    "periodic coefficient list 'A0,B0;A1,B1;...' of rational strings");
    cmd->add_option("--coeff-file", cfg.coeff_file,
                    "CSV file of per-step coefficient rows a_n,b_n (optional header)");
    cmd->add_option("--ics", cfg.ics_text, "comma list of ten rational initial values");
    cmd->add_flag("--backshift", cfg.backshift,
                  "interpret --ics as x_{-9}..x_0 (row n then holds original index n-9)");
    cmd->add_option("--n,--horizon", cfg.horizon, "number of terms to produce");
    cmd->add_option("--preset", cfg.preset, "figure preset fig1..fig5 supplying A, B and ICs");
    if (with_format)
        cmd->add_option("--format", cfg.format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
}

std::array<Rational, 10> parse_ics_list(const std::string& text) {
    std::array<Rational, 10> values;
    std::size_t count = 0;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (count >= 10)
            throw ParseError("--ics: expected exactly ten values");
        values[count++] = parse_rational(item);
    }
    if (count != 10)
        throw ParseError("--ics: expected exactly ten values, got " + std::to_string(count));
    return values;
}

std::vector<CoefficientPair> parse_pair_rows(std::istream& in, const std::string& where) {
    std::vector<CoefficientPair> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(where + ": expected rows 'A,B', got '" + line + "'");
        try {
            rows.push_back({parse_rational(line.substr(0, comma)),
                            parse_rational(line.substr(comma + 1))});
        } catch (const ParseError&) {
            if (first) { // tolerate a header row
                first = false;
                continue;
            }
            throw;
        }
        first = false;
    }
    return rows;
}

struct ResolvedConfig {
    CoefficientSequence coeffs = CoefficientSequence::constant(1, 1);
    InitialConditions ics = InitialConditions::shifted({1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    bool constant = false;
    Rational A; // valid when constant
    Rational B;
};

ResolvedConfig resolve(const ExperimentConfig& cfg) {
    ResolvedConfig out;
    bool have_coeffs = false;
    bool have_ics = false;

    if (!cfg.preset.empty()) {
        const FigurePreset* preset = find_preset(cfg.preset);
        if (!preset)
            throw ParseError("--preset: unknown figure '" + cfg.preset + "'");
        out.coeffs = preset_coeffs(*preset);
        out.ics = preset_ics(*preset);
        out.constant = true;
        out.A = preset->A;
        out.B = preset->B;
        have_coeffs = have_ics = true;
    }
    if (!cfg.a_text.empty() || !cfg.b_text.empty()) {
        if (cfg.a_text.empty() || cfg.b_text.empty())
            throw ParseError("--A and --B must be given together");
        out.A = parse_rational(cfg.a_text);
        out.B = parse_rational(cfg.b_text);
        out.coeffs = CoefficientSequence::constant(out.A, out.B);
        out.constant = true;
        have_coeffs = true;
    }
    if (!cfg.periodic_text.empty()) {
        std::vector<CoefficientPair> pairs;
        std::stringstream stream(cfg.periodic_text);
        std::string chunk;
        while (std::getline(stream, chunk, ';')) {
            const auto comma = chunk.find(',');
            if (comma == std::string::npos)
                throw ParseError("--periodic: expected 'A,B' pairs separated by ';'");
            pairs.push_back({parse_rational(chunk.substr(0, comma)),
                             parse_rational(chunk.substr(comma + 1))});
        }
        out.coeffs = CoefficientSequence::periodic(std::move(pairs));
        out.constant = false;
        have_coeffs = true;
    }
    if (!cfg.coeff_file.empty()) {
        std::ifstream in(cfg.coeff_file);
        if (!in)
            throw ParseError("--coeff-file: cannot open '" + cfg.coeff_file + "'");
        out.coeffs = CoefficientSequence::table(parse_pair_rows(in, "--coeff-file"));
        out.constant = false;
        have_coeffs = true;
    }
    if (!cfg.ics_text.empty()) {
        const auto values = parse_ics_list(cfg.ics_text);
        out.ics = cfg.backshift ? InitialConditions::backshifted(values)
                                : InitialConditions::shifted(values);
        have_ics = true;
    }
    if (!have_coeffs)
        throw ParseError("no coefficients: give --A/--B, --periodic, --coeff-file or --preset");
    if (!have_ics)
        throw ParseError("no initial conditions: give --ics or --preset");
    if (cfg.horizon < 10)
        throw ParseError("--horizon must be at least 10");
    return out;
}

// ---------------------------------------------------------------------------
// output helpers

void emit_orbit_csv(const Orbit& orbit) {
    std::cout << "n,exact,decimal\n";
    for (std::size_t n = 0; n < orbit.terms.size(); ++n)
        std::cout << n << ',' << to_fraction_string(orbit.terms[n]) << ','
                  << to_decimal_string(orbit.terms[n]) << '\n';
    if (orbit.truncated_at)
        std::cout << "truncated_at," << *orbit.truncated_at << '\n';
}

json orbit_to_json(const Orbit& orbit) {
    json terms = json::array();
    for (std::size_t n = 0; n < orbit.terms.size(); ++n)
        terms.push_back({{"n", n},
                         {"exact", to_fraction_string(orbit.terms[n])},
                         {"decimal", to_double(orbit.terms[n])}});
    json doc{{"terms", std::move(terms)}};
    if (orbit.truncated_at)
        doc["truncated_at"] = *orbit.truncated_at;
    else
        doc["truncated_at"] = nullptr;
    return doc;
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_simulate(const ExperimentConfig& cfg) {
    const auto resolved = resolve(cfg);
    const Orbit orbit = iterate(resolved.ics, resolved.coeffs,
                                static_cast<std::size_t>(cfg.horizon));
    if (cfg.format == "json")
        std::cout << orbit_to_json(orbit).dump(2) << '\n';
    else
        emit_orbit_csv(orbit);
    return orbit.truncated_at ? kExitForbidden : kExitOk;
}

int cmd_closed(const ExperimentConfig& cfg, const std::string& formula, int single_k,
               long long single_blocks) {
    const auto resolved = resolve(cfg);

    const auto value_at = [&](int k, long long n) -> Rational {
        const ClosedFormQuery q{k, n, resolved.ics, resolved.coeffs};
        if (formula == "constant")
            return closed_solution_constant(q);
        if (formula == "alternating")
            return closed_solution_alternating(q);
        if (formula == "backshift") {
            if (!resolved.constant)
                throw ParseError("--formula backshift requires constant coefficients");
            BackshiftQuery bq;
            bq.j = 9 - k;
            bq.n = n;
            for (int j = 0; j < 10; ++j)
                bq.a[static_cast<std::size_t>(j)] = resolved.ics[9 - j];
            bq.A = resolved.A;
            bq.B = resolved.B;
            return backshift_solution(bq);
        }
        return closed_solution_general(q);
    };

    std::cout << "n,exact,decimal\n";
    if (single_k >= 0) {
        const Rational value = value_at(single_k, single_blocks);
        const long long index = 10 * single_blocks + single_k;
        std::cout << index << ',' << to_fraction_string(value) << ','
                  << to_decimal_string(value) << '\n';
        return kExitOk;
    }

    // whole column: every index 10n+k < horizon
    ClosedFormEvaluator evaluator(resolved.ics, resolved.coeffs);
    for (long long index = 0; index < cfg.horizon; ++index) {
        const int k = static_cast<int>(index % 10);
        const long long n = index / 10;
        try {
            const Rational value =
                formula == "general" ? evaluator.at(k, n) : value_at(k, n);
            std::cout << index << ',' << to_fraction_string(value) << ','
                      << to_decimal_string(value) << '\n';
        } catch (const ForbiddenSetError&) {
            std::cout << "truncated_at," << index << '\n';
            return kExitForbidden;
        }
    }
    return kExitOk;
}

struct CompareStats {
    long long equal = 0;
    long long mismatch = 0;
    long long skipped = 0;
};

// one instance: oracle vs every applicable closed form, exact equality
void compare_instance(long long trial, const ResolvedConfig& resolved, long long horizon,
                      CompareStats& stats) {
    const Orbit orbit = iterate(resolved.ics, resolved.coeffs,
                                static_cast<std::size_t>(horizon));
    const long long live = orbit.truncated_at
                               ? static_cast<long long>(*orbit.truncated_at)
                               : static_cast<long long>(orbit.terms.size());
    ClosedFormEvaluator evaluator(resolved.ics, resolved.coeffs);

    bool zero_seed = false;
    for (int k = 0; k < 10; ++k)
        zero_seed = zero_seed || resolved.ics[k] == 0;

    for (long long index = 0; index < horizon; ++index) {
        const int k = static_cast<int>(index % 10);
        const long long n = index / 10;
        if (index >= live || zero_seed) {
            std::cout << trial << ',' << index << ",skipped-forbidden\n";
            ++stats.skipped;
            continue;
        }
        const Rational& expected = orbit.terms[static_cast<std::size_t>(index)];
        bool ok;
        try {
            ok = evaluator.at(k, n) == expected;
            if (ok && resolved.constant) {
                const ClosedFormQuery q{k, n, resolved.ics, resolved.coeffs};
                ok = closed_solution_constant(q) == expected;
                if (ok && resolved.A == -1)
                    ok = closed_solution_alternating(q) == expected;
                if (ok) {
                    BackshiftQuery bq;
                    bq.j = 9 - k;
                    bq.n = n;
                    for (int j = 0; j < 10; ++j)
                        bq.a[static_cast<std::size_t>(j)] = resolved.ics[9 - j];
                    bq.A = resolved.A;
                    bq.B = resolved.B;
                    ok = backshift_solution(bq) == expected;
                    const bool known_case = (resolved.A == 1 || resolved.A == -1) &&
                                            (resolved.B == 1 || resolved.B == -1);
                    if (ok && known_case)
                        ok = backshift_solution_known_case(bq) == expected;
                }
            }
        } catch (const Error&) {
            ok = false;
        }
        std::cout << trial << ',' << index << (ok ? ",exact-equal\n" : ",mismatch\n");
        ++(ok ? stats.equal : stats.mismatch);
    }
}

Rational random_small_rational(std::mt19937_64& rng, bool nonzero = true) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    while (true) {
        const Rational r(num(rng), den(rng));
        if (!nonzero || r != 0)
            return r;
    }
}

int cmd_compare(const ExperimentConfig& cfg, long long trials, const std::string& variable) {
    CompareStats stats;
    std::cout << "# seed=" << cfg.seed << "\n";
    std::cout << "trial,index,verdict\n";
    if (trials <= 0) {
        // single explicit instance
        compare_instance(0, resolve(cfg), cfg.horizon, stats);
    } else {
        std::mt19937_64 rng(cfg.seed);
        for (long long trial = 0; trial < trials; ++trial) {
            ResolvedConfig resolved;
            std::array<Rational, 10> seeds;
            for (auto& s : seeds)
                s = random_small_rational(rng);
            resolved.ics = InitialConditions::shifted(seeds);
            if (variable == "period2") {
                resolved.coeffs = CoefficientSequence::periodic(
                    {{random_small_rational(rng), random_small_rational(rng)},
                     {random_small_rational(rng), random_small_rational(rng)}});
                resolved.constant = false;
            } else if (variable == "table") {
                std::vector<CoefficientPair> rows;
                for (long long i = 0; i + 10 < cfg.horizon; ++i)
                    rows.push_back({random_small_rational(rng), random_small_rational(rng)});
                resolved.coeffs = CoefficientSequence::table(std::move(rows));
                resolved.constant = false;
            } else {
                resolved.A = trial % 10 == 9 ? Rational(-1) : random_small_rational(rng);
                resolved.B = random_small_rational(rng);
                resolved.coeffs = CoefficientSequence::constant(resolved.A, resolved.B);
                resolved.constant = true;
            }
            compare_instance(trial, resolved, cfg.horizon, stats);
        }
    }
    std::cerr << "compare: " << stats.equal << " exact-equal, " << stats.mismatch
              << " mismatch, " << stats.skipped << " skipped-forbidden\n";
    return stats.mismatch == 0 ? kExitOk : kExitMismatch;
}

json roots_to_json(const std::array<ComplexF, 10>& roots) {
    json arr = json::array();
    for (const auto& r : roots)
        arr.push_back({{"re", r.real()}, {"im", r.imag()}, {"modulus", std::abs(r)}});
    return arr;
}

int cmd_analyze(const ExperimentConfig& cfg, long long max_period) {
    const auto resolved = resolve(cfg);
    if (!resolved.constant)
        throw ParseError("analyze requires constant coefficients");
    if (cfg.horizon < 2 * max_period)
        throw ParseError("--horizon must be at least twice --max-period");

    json config{{"A", to_fraction_string(resolved.A)},
                {"B", to_fraction_string(resolved.B)},
                {"horizon", cfg.horizon},
                {"max_period", max_period}};
    json ics = json::array();
    for (int k = 0; k < 10; ++k)
        ics.push_back(to_fraction_string(resolved.ics[k]));
    config["ics"] = std::move(ics);

    const auto conditions = periodicity_conditions(resolved.ics, resolved.A, resolved.B);
    json period{{"theorem_conditions",
                 {{"p20", conditions.p20},
                  {"p10", conditions.p10},
                  {"p5", conditions.p5},
                  {"p1", conditions.p1}}},
                {"minimal_period", nullptr},
                {"checked_horizon", cfg.horizon},
                {"truncated_at", nullptr}};
    const Orbit orbit = iterate(resolved.ics, resolved.coeffs,
                                static_cast<std::size_t>(cfg.horizon));
    if (orbit.truncated_at) {
        period["truncated_at"] = *orbit.truncated_at;
        period["checked_horizon"] = orbit.terms.size();
    } else {
        const auto report = minimal_period(orbit, max_period);
        if (report.minimal_period)
            period["minimal_period"] = *report.minimal_period;
    }

    const StabilityReport report = stability(resolved.A, resolved.B);
    json fixed = json::array();
    for (std::size_t i = 0; i < report.fixed_points.exact.size(); ++i) {
        const Rational& p = report.fixed_points.exact[i];
        const StabilityClass cls = p == 0 ? report.zero_class : *report.nonzero_class;
        fixed.push_back({{"value", to_fraction_string(p)},
                         {"decimal", to_double(p)},
                         {"exact", true},
                         {"classification", to_string(cls)}});
    }
    if (report.fixed_points.approximate_nonzero)
        fixed.push_back({{"value", nullptr},
                         {"decimal", *report.fixed_points.approximate_nonzero},
                         {"exact", false},
                         {"classification", to_string(*report.nonzero_class)}});
    json stab{{"fixed_points", std::move(fixed)},
              {"roots_zero", roots_to_json(report.roots_zero)},
              {"roots_nonzero", nullptr}};
    if (report.roots_nonzero)
        stab["roots_nonzero"] = roots_to_json(*report.roots_nonzero);

    const json doc{{"config", std::move(config)},
                   {"period", std::move(period)},
                   {"stability", std::move(stab)}};
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_symmetry_check(const ExperimentConfig& cfg, long long samples) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> num(1, 4);
    std::uniform_int_distribution<int> den(1, 4);

    const bool fixed_coeffs = !cfg.a_text.empty() && !cfg.b_text.empty();
    const Rational fixed_a = fixed_coeffs ? parse_rational(cfg.a_text) : Rational(0);
    const Rational fixed_b = fixed_coeffs ? parse_rational(cfg.b_text) : Rational(0);

    std::cout << "k,admissible,max_alpha_residual,max_lsc_residual,verdict\n";
    bool failed = false;
    for (int k = 1; k <= 10; ++k) {
        double max_alpha = 0;
        for (long long n = 0; n <= 100; ++n)
            max_alpha = std::max(max_alpha, alpha_sum_residual(k, n));

        double max_lsc = 0;
        long long done = 0;
        while (done < samples) {
            std::array<Rational, 10> window;
            for (auto& w : window)
                w = Rational(num(rng), den(rng));
            const Rational A = fixed_coeffs ? fixed_a : random_small_rational(rng);
            const Rational B = fixed_coeffs ? fixed_b : random_small_rational(rng);
            const Rational denom =
                A + B * window[0] * window[2] * window[4] * window[6] * window[8];
            if (denom == 0 || std::fabs(to_double(denom)) < 0.01)
                continue;
            ++done;
            max_lsc = std::max(max_lsc, symmetry_residual(k, window, A, B, done % 17));
        }

        const bool admissible = SymmetryCharacteristic::admissible(k);
        const bool passes = max_alpha <= 1e-12 && max_lsc <= 1e-9;
        if (admissible && !passes)
            failed = true;
        std::cout << k << ',' << (admissible ? "yes" : "no") << ',' << max_alpha << ','
                  << max_lsc << ',' << (passes ? "ok" : "violates") << '\n';
    }
    return failed ? kExitMismatch : kExitOk;
}

int cmd_figure(const std::string& name) {
    const FigurePreset* preset = find_preset(name);
    if (!preset)
        throw ParseError("unknown figure '" + name + "' (expected fig1..fig5)");
    const Orbit orbit = iterate(preset_ics(*preset), preset_coeffs(*preset), 60);
    std::cout << "n,x\n";
    for (std::size_t n = 0; n < orbit.terms.size(); ++n)
        std::cout << n << ',' << to_decimal_string(orbit.terms[n]) << '\n';
    if (orbit.truncated_at) {
        std::cout << "truncated_at," << *orbit.truncated_at << '\n';
        return kExitForbidden;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and analyzer for a family of tenth-order rational "
                 "difference equations"};
    app.require_subcommand(1);

    ExperimentConfig cfg;

    auto* simulate = app.add_subcommand("simulate", "iterate the map and print the orbit");
    add_config_flags(simulate, cfg);

    auto* closed = app.add_subcommand("closed", "evaluate a closed-form solution");
    add_config_flags(closed, cfg);
    std::string formula = "general";
    int single_k = -1;
    long long single_blocks = 0;
    closed->add_option("--formula", formula, "general|constant|alternating|backshift")
        ->check(CLI::IsMember({"general", "constant", "alternating", "backshift"}));
    closed->add_option("--k", single_k, "evaluate a single term: residue k in 0..9");
    closed->add_option("--blocks", single_blocks, "evaluate a single term: block count n");

    auto* compare = app.add_subcommand(
        "compare", "closed forms vs brute-force iteration, exact equality per index");
    add_config_flags(compare, cfg, false);
    long long trials = 0;
    std::string variable = "constant";
    compare->add_option("--trials", trials, "number of random instances (0 = explicit config)");
    compare->add_option("--seed", cfg.seed, "random seed for batch mode");
    compare->add_option("--variable", variable,
                        "random coefficient kind: constant|period2|table")
        ->check(CLI::IsMember({"constant", "period2", "table"}));

    auto* analyze =
        app.add_subcommand("analyze", "periodicity and stability report as JSON");
    add_config_flags(analyze, cfg, false);
    long long max_period = 40;
    analyze->add_option("--max-period", max_period, "largest period searched for");

    auto* symmetry = app.add_subcommand(
        "symmetry-check", "residuals of the linearized symmetry condition per k");
    long long samples = 50;
    symmetry->add_option("--samples", samples, "sample points per k");
    symmetry->add_option("--seed", cfg.seed, "random seed");
    symmetry->add_option("--A", cfg.a_text, "fix coefficient A (default: random per sample)");
    symmetry->add_option("--B", cfg.b_text, "fix coefficient B");

    std::string figure_name;
    auto* figure = app.add_subcommand("figure", "emit the orbit behind a published figure");
    figure->add_option("name", figure_name, "fig1..fig5")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (simulate->parsed())
            return cmd_simulate(cfg);
        if (closed->parsed())
            return cmd_closed(cfg, formula, single_k, single_blocks);
        if (compare->parsed())
            return cmd_compare(cfg, trials, variable);
        if (analyze->parsed())
            return cmd_analyze(cfg, max_period);
        if (symmetry->parsed())
            return cmd_symmetry_check(cfg, samples);
        if (figure->parsed())
            return cmd_figure(figure_name);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}
