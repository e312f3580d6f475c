#include "newman/cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "newman/bound_verifier.hpp"
#include "newman/core_digits.hpp"
#include "newman/errors.hpp"
#include "newman/explicit_formula.hpp"
#include "newman/prime_sums.hpp"
#include "newman/spectral_constants.hpp"

#ifndef NEWMAN_VERSION
#define NEWMAN_VERSION "0.0.0"
#endif

namespace newman::cli {

namespace {

// 64-bit integers travel as decimal strings so that JSON consumers with
// 53-bit numbers read them back exactly.
Json integer(std::uint64_t v) { return std::to_string(v); }
Json integer(std::int64_t v) { return std::to_string(v); }

Json real(double v) {
    if (std::isfinite(v)) return v;
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

Json real(const std::optional<double>& v) { return v ? real(*v) : Json(nullptr); }

template <class T>
Json optional_integer(const std::optional<T>& v) {
    return v ? integer(*v) : Json(nullptr);
}

std::string cell(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
std::string cell(const std::optional<double>& v) { return v ? cell(*v) : ""; }
std::string cell(std::uint64_t v) { return std::to_string(v); }
std::string cell(std::int64_t v) { return std::to_string(v); }
std::string cell(bool v) { return v ? "true" : "false"; }

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag, const RunConfig& c) {
    if (!v)
        throw UsageError(std::string(to_string(c.command)) +
                         (c.subcommand.empty() ? "" : " " + c.subcommand) + " requires " + flag);
    return *v;
}

std::vector<std::uint64_t> checkpoints_or_default(const RunConfig& c, std::uint64_t limit) {
    return c.checkpoints.empty() ? default_checkpoints(limit) : c.checkpoints;
}

Json bound_json(const BoundReport& r) {
    Json j;
    j["bound_id"] = r.bound_id;
    j["m"] = optional_integer(r.m);
    j["x_lo"] = integer(r.x_lo);
    j["x_hi"] = integer(r.x_hi);
    j["violation_count"] = integer(r.violation_count);
    j["violations"] = Json::array();
    for (std::uint64_t v : r.violations) j["violations"].push_back(integer(v));
    j["max_ratio"] = real(r.max_ratio);
    j["argmax"] = integer(r.argmax);
    return j;
}

void bound_rows(CsvTable& t, const std::vector<BoundReport>& reports) {
    t.header = {"bound_id", "m", "x_lo", "x_hi", "violation_count", "max_ratio", "argmax", "violations"};
    for (const auto& r : reports) {
        std::string vs;
        for (std::uint64_t v : r.violations) vs += (vs.empty() ? "" : ";") + std::to_string(v);
        t.rows.push_back({r.bound_id, r.m ? cell(*r.m) : "", cell(r.x_lo), cell(r.x_hi),
                          cell(r.violation_count), cell(r.max_ratio), cell(r.argmax), vs});
    }
}

void finish_bounds(RunReport& rep, const std::vector<BoundReport>& reports) {
    Json arr = Json::array();
    std::uint64_t total = 0;
    for (const auto& r : reports) {
        arr.push_back(bound_json(r));
        total += r.violation_count;
    }
    rep.results["reports"] = std::move(arr);
    rep.results["violations_total"] = integer(total);
    bound_rows(rep.table, reports);
    if (total != 0) {
        rep.exit_code = kExitViolation;
        rep.diagnostics.push_back(std::to_string(total) + " bound violation(s) found");
    }
}

ScanOptions scan_options(const RunConfig& c) {
    ScanOptions o;
    o.threads = c.threads;
    return o;
}

void run_sum(const RunConfig& c, RunReport& rep) {
    const std::uint64_t m = need(c.m, "--m", c);
    rep.results["m"] = integer(m);
    rep.table.header = {"checkpoint", "sum"};
    if (c.x) {
        const std::int64_t v = newman_sum(m, *c.x);
        rep.results["x"] = integer(*c.x);
        rep.results["value"] = integer(v);
        if (c.checkpoints.empty()) rep.table.rows.push_back({cell(*c.x), cell(v)});
    }
    if (!c.x && !c.x_max && c.checkpoints.empty())
        throw UsageError("sum requires --x, --x-max or --checkpoints");
    if (!c.checkpoints.empty() || c.x_max) {
        const std::uint64_t limit = c.x_max ? *c.x_max : c.checkpoints.back();
        const auto cps = checkpoints_or_default(c, limit);
        const PartialSumSeries s = newman_sum_scan(m, limit, cps);
        Json series = Json::array();
        for (std::size_t i = 0; i < s.checkpoints.size(); ++i) {
            series.push_back({{"checkpoint", integer(s.checkpoints[i])}, {"sum", integer(s.sums[i])}});
            rep.table.rows.push_back({cell(s.checkpoints[i]), cell(s.sums[i])});
        }
        rep.results["series"] = std::move(series);
    }
}

void run_explicit(const RunConfig& c, RunReport& rep) {
    const std::uint64_t m = need(c.m, "--m", c);
    const std::uint64_t x = need(c.x, "--x", c);
    const ExplicitFormula formula(m);
    const ExplicitEvaluation ev = formula.evaluate(x);
    rep.results["m"] = integer(m);
    rep.results["x"] = integer(x);
    rep.results["value"] = integer(ev.value);
    rep.results["real_part"] = real(ev.real_part);
    rep.results["imag_part"] = real(ev.imag_part);
    rep.results["rounding_distance"] = real(ev.rounding_distance);
    rep.results["imag_tolerance"] = real(ev.imag_tolerance);
    rep.results["within_tolerance"] = ev.within_tolerance;

    constexpr std::uint64_t kBruteForceTerms = 100'000'000;
    std::optional<std::int64_t> brute;
    if (x / m <= kBruteForceTerms) brute = newman_sum(m, x);
    rep.results["brute_force"] = optional_integer(brute);
    rep.results["agrees"] = brute ? Json(*brute == ev.value && ev.within_tolerance) : Json(nullptr);

    rep.table.header = {"m", "x", "value", "real_part", "imag_part", "within_tolerance", "brute_force"};
    rep.table.rows.push_back({cell(m), cell(x), cell(ev.value), cell(ev.real_part), cell(ev.imag_part),
                              cell(ev.within_tolerance), brute ? cell(*brute) : ""});

    if (!ev.within_tolerance) {
        rep.exit_code = kExitPrecision;
        rep.diagnostics.push_back("explicit formula outside tolerance: rounding distance " +
                                  cell(ev.rounding_distance) + ", imaginary part " + cell(ev.imag_part));
    } else if (brute && *brute != ev.value) {
        rep.exit_code = kExitPrecision;
        rep.diagnostics.push_back("explicit formula disagrees with brute force");
    }
}

void run_constants(const RunConfig& c, RunReport& rep) {
    const std::uint64_t m = need(c.m, "--m", c);
    const ModulusConstants k = modulus_constants(m);
    const GlobalConstants g = global_constants();
    rep.results["m"] = integer(m);
    rep.results["b_m"] = real(k.b_m);
    rep.results["g_m"] = real(k.g_m);
    rep.results["h_m"] = real(k.h_m);
    rep.results["lambda_m"] = real(k.lambda_m);
    rep.results["mu_m"] = real(k.mu_m);
    rep.results["lambda"] = real(g.lambda);
    rep.results["rho_fixed_point"] = real(g.rho_fixed_point);
    rep.table.header = {"name", "value"};
    rep.table.rows = {{"m", cell(m)},
                      {"b_m", cell(k.b_m)},
                      {"g_m", cell(k.g_m)},
                      {"h_m", cell(k.h_m)},
                      {"lambda_m", cell(k.lambda_m)},
                      {"mu_m", cell(k.mu_m)},
                      {"lambda", cell(g.lambda)},
                      {"rho_fixed_point", cell(g.rho_fixed_point)}};
    if (m % 3 == 0) {
        const double ln_x0 = x0_threshold(m);
        const bool r2 = remark2_check(m);
        rep.results["ln_x0"] = real(ln_x0);
        rep.results["remark2"] = r2;
        rep.table.rows.push_back({"ln_x0", cell(ln_x0)});
        rep.table.rows.push_back({"remark2", cell(r2)});
    }
}

void run_verify(const RunConfig& c, RunReport& rep) {
    const ScanOptions opts = scan_options(c);
    rep.results["kind"] = c.subcommand;
    if (c.subcommand == "coquet") {
        const std::uint64_t x_max = need(c.x_max, "--x-max", c);
        CoquetReports cr = verify_coquet(x_max, opts);
        std::vector<BoundReport> reports{std::move(cr.eq3), std::move(cr.eq4), std::move(cr.eq5)};
        if (x_max >= 6) reports.push_back(verify_example_chain(x_max, opts));
        finish_bounds(rep, reports);
    } else if (c.subcommand == "theorem1") {
        finish_bounds(rep, {verify_theorem1(need(c.m, "--m", c), need(c.x_max, "--x-max", c), opts)});
    } else if (c.subcommand == "theorem2") {
        finish_bounds(rep, {verify_theorem2(need(c.m, "--m", c), need(c.x_max, "--x-max", c), opts)});
    } else if (c.subcommand == "corollary") {
        const std::uint64_t m = need(c.m, "--m", c);
        std::vector<std::uint64_t> xs = c.checkpoints;
        if (xs.empty()) xs.push_back(need(c.x, "--x or --checkpoints", c));
        rep.results["m"] = integer(m);
        Json series = Json::array();
        rep.table.header = {"x", "u_m_sum"};
        for (std::uint64_t x : xs) {
            const std::int64_t v = u_m_sum(m, x);
            series.push_back({{"x", integer(x)}, {"u_m_sum", integer(v)}});
            rep.table.rows.push_back({cell(x), cell(v)});
        }
        rep.results["series"] = std::move(series);
    } else {
        throw UsageError("verify needs one of coquet, theorem1, theorem2, corollary");
    }
}

void run_primes(const RunConfig& c, RunReport& rep) {
    const std::uint64_t n_max = need(c.n_max, "--n-max", c);
    const SpfSieve sieve(n_max);
    rep.results["kind"] = c.subcommand;
    rep.results["n_max"] = integer(n_max);

    if (c.subcommand == "sum") {
        const auto cps = checkpoints_or_default(c, n_max);
        const PrimeSumSeries s = prime_sum_scan(sieve, n_max, cps);
        const PrimeSignReport sign = prime_sign_scan(sieve, n_max);
        Json series = Json::array();
        rep.table.header = {"n", "prime_sum"};
        for (std::size_t i = 0; i < s.checkpoints.size(); ++i) {
            series.push_back({{"n", integer(s.checkpoints[i])}, {"prime_sum", integer(s.sums[i])}});
            rep.table.rows.push_back({cell(s.checkpoints[i]), cell(s.sums[i])});
        }
        rep.results["series"] = std::move(series);
        Json sj;
        sj["positive_count"] = integer(sign.positive_count);
        sj["positive_at"] = Json::array();
        for (auto n : sign.positive_at) sj["positive_at"].push_back(integer(n));
        sj["nonnegative_from_31_count"] = integer(sign.nonnegative_from_31_count);
        sj["nonnegative_from_31_at"] = Json::array();
        for (auto n : sign.nonnegative_from_31_at) sj["nonnegative_from_31_at"].push_back(integer(n));
        sj["final_sum"] = integer(sign.final_sum);
        rep.results["sign_scan"] = std::move(sj);
    } else if (c.subcommand == "ratio") {
        const auto cps = checkpoints_or_default(c, n_max);
        const PrimeSumSeries s = prime_sum_scan(sieve, n_max, cps);
        const double lambda = global_constants().lambda;
        Json series = Json::array();
        rep.table.header = {"n", "prime_sum", "log_ratio"};
        for (std::size_t i = 0; i < s.checkpoints.size(); ++i) {
            std::optional<double> ratio;
            if (s.sums[i] < 0 && s.checkpoints[i] > 1)
                ratio = std::log(static_cast<double>(-s.sums[i])) /
                        std::log(static_cast<double>(s.checkpoints[i]));
            series.push_back({{"n", integer(s.checkpoints[i])},
                              {"prime_sum", integer(s.sums[i])},
                              {"log_ratio", real(ratio)}});
            rep.table.rows.push_back({cell(s.checkpoints[i]), cell(s.sums[i]), cell(ratio)});
        }
        rep.results["lambda"] = real(lambda);
        rep.results["series"] = std::move(series);
    } else if (c.subcommand == "conjecture3") {
        const auto cps = checkpoints_or_default(c, n_max);
        Json series = Json::array();
        rep.table.header = {"n", "lhs", "rhs", "rhs_half_open", "holds"};
        for (std::uint64_t n : cps) {
            const Conjecture3Result r = conjecture3_check(sieve, n);
            series.push_back({{"n", integer(r.n)},
                              {"composite_sum", integer(r.composite_sum)},
                              {"lhs", integer(r.lhs)},
                              {"rhs", integer(r.rhs)},
                              {"rhs_half_open", integer(r.rhs_half_open)},
                              {"holds", r.holds}});
            rep.table.rows.push_back({cell(r.n), cell(r.lhs), cell(r.rhs), cell(r.rhs_half_open), cell(r.holds)});
        }
        rep.results["series"] = std::move(series);
    } else if (c.subcommand == "vp") {
        const std::uint64_t p = need(c.p, "--p", c);
        const VpReport r = v_p_sum(sieve, p, n_max, c.exclude_p);
        rep.results["p"] = integer(r.p);
        rep.results["n"] = integer(r.n);
        rep.results["exclude_p"] = r.exclude_p;
        rep.results["members_count"] = integer(r.members_count);
        rep.results["sum"] = integer(r.sum());
        rep.results["sum_with_p"] = integer(r.sum_with_p);
        rep.results["sum_excluding_p"] = integer(r.sum_excluding_p);
        rep.table.header = {"p", "n", "exclude_p", "members_count", "sum_with_p", "sum_excluding_p"};
        rep.table.rows.push_back({cell(r.p), cell(r.n), cell(r.exclude_p), cell(r.members_count),
                                  cell(r.sum_with_p), cell(r.sum_excluding_p)});
    } else if (c.subcommand == "theorem3") {
        const std::uint64_t p = need(c.p, "--p", c);
        const auto cps = checkpoints_or_default(c, n_max);
        const Theorem3Series s = theorem3_diagnostic(sieve, p, cps);
        rep.results["p"] = integer(s.p);
        rep.results["constant"] = real(s.constant);
        rep.results["last_nonnegative"] = optional_integer(s.last_nonnegative);
        Json series = Json::array();
        rep.table.header = {"n", "sum", "s3", "log_ratio", "constant_ratio"};
        for (const auto& e : s.entries) {
            series.push_back({{"n", integer(e.n)},
                              {"sum", integer(e.sum)},
                              {"s3", integer(e.s3)},
                              {"log_ratio", real(e.log_ratio)},
                              {"constant_ratio", real(e.constant_ratio)}});
            rep.table.rows.push_back({cell(e.n), cell(e.sum), cell(e.s3), cell(e.log_ratio), cell(e.constant_ratio)});
        }
        rep.results["series"] = std::move(series);
    } else {
        throw UsageError("primes needs one of sum, ratio, conjecture3, vp, theorem3");
    }
}

void run_resonance(const RunConfig& c, RunReport& rep) {
    const std::uint64_t p_max = need(c.p_max, "--p-max", c);
    const std::uint64_t n_max = need(c.n_max, "--n-max", c);
    const SpfSieve sieve(std::max<std::uint64_t>({n_max, p_max, 2}));
    const auto verdicts =
        resonance_scan(sieve, p_max, n_max,
                       c.inclusive ? ResonanceCriterion::nonpositive_including_p
                                   : ResonanceCriterion::strict_excluding_p);

    rep.results["p_max"] = integer(p_max);
    rep.results["n_max"] = integer(n_max);
    rep.results["criterion"] = c.inclusive ? "nonpositive_including_p" : "strict_excluding_p";
    Json list = Json::array();
    Json found = Json::array();
    rep.table.header = {"p", "n_max", "determinate", "is_resonance", "first_nonnegative"};
    std::vector<std::uint64_t> resonant, open;
    for (const auto& v : verdicts) {
        list.push_back({{"p", integer(v.p)},
                        {"n_max", integer(v.n_max)},
                        {"determinate", v.determinate},
                        {"is_resonance", v.is_resonance},
                        {"first_nonnegative", optional_integer(v.first_nonnegative)}});
        rep.table.rows.push_back({cell(v.p), cell(v.n_max), cell(v.determinate), cell(v.is_resonance),
                                  v.first_nonnegative ? cell(*v.first_nonnegative) : ""});
        if (v.is_resonance) {
            found.push_back(integer(v.p));
            resonant.push_back(v.p);
        }
        if (!v.determinate) open.push_back(v.p);
    }
    if (!open.empty())
        rep.diagnostics.push_back(std::to_string(open.size()) + " primes indeterminate (n_max below p^2), p = " +
                                  std::to_string(open.front()) + " .. " + std::to_string(open.back()));
    Json reference = Json::array(), missing = Json::array(), extra = Json::array();
    for (std::uint64_t p : kReferenceResonancePrimes) {
        if (p > p_max) continue;
        reference.push_back(integer(p));
        if (!std::binary_search(resonant.begin(), resonant.end(), p)) missing.push_back(integer(p));
    }
    for (std::uint64_t p : resonant)
        if (std::find(std::begin(kReferenceResonancePrimes), std::end(kReferenceResonancePrimes), p) ==
            std::end(kReferenceResonancePrimes))
            extra.push_back(integer(p));
    rep.results["verdicts"] = std::move(list);
    rep.results["resonance_primes"] = std::move(found);
    rep.results["reference"] = {{"list", reference}, {"not_confirmed", missing}, {"not_listed", extra}};
}

void run_density(const RunConfig& c, RunReport& rep) {
    const std::uint64_t n_max = need(c.n_max, "--n-max", c);
    const std::uint64_t p_max = c.p_max.value_or(7);
    const SpfSieve sieve(std::max<std::uint64_t>(n_max, p_max));
    rep.results["n_max"] = integer(n_max);
    Json rows = Json::array();
    rep.table.header = {"p", "members_count", "density", "limit"};
    for (std::uint64_t p = 3; p <= p_max; ++p) {
        if (!sieve.is_prime(p)) continue;
        const VpReport r = v_p_sum(sieve, p, n_max);
        const double d = static_cast<double>(r.members_count) / static_cast<double>(n_max);
        const double lim = v_p_density_limit(p);
        rows.push_back({{"p", integer(p)}, {"members_count", integer(r.members_count)},
                        {"density", real(d)}, {"limit", real(lim)}});
        rep.table.rows.push_back({cell(p), cell(r.members_count), cell(d), cell(lim)});
    }
    const double total = density_total(sieve, n_max);
    rep.results["densities"] = std::move(rows);
    rep.results["density_total"] = real(total);
    rep.table.rows.push_back({"total", "", cell(total), cell(0.5)});
}

void run_ratio(const RunConfig& c, RunReport& rep) {
    const std::uint64_t m = need(c.m, "--m", c);
    std::vector<std::uint64_t> cps = c.checkpoints;
    if (cps.empty()) cps = default_checkpoints(need(c.x_max, "--x-max or --checkpoints", c));
    const RatioSeries s = asymptotic_ratio(m, cps);
    rep.results["m"] = integer(m);
    rep.results["target"] = real(m % 3 == 0 ? 3.0 / static_cast<double>(m) : 0.0);
    Json series = Json::array();
    rep.table.header = {"x", "ratio"};
    for (std::size_t i = 0; i < s.checkpoints.size(); ++i) {
        series.push_back({{"x", integer(s.checkpoints[i])}, {"ratio", real(s.ratios[i])}});
        rep.table.rows.push_back({cell(s.checkpoints[i]), cell(s.ratios[i])});
    }
    rep.results["series"] = std::move(series);
}

Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = to_string(c.command);
    j["subcommand"] = c.subcommand.empty() ? Json(nullptr) : Json(c.subcommand);
    j["m"] = optional_integer(c.m);
    j["p"] = optional_integer(c.p);
    j["x"] = optional_integer(c.x);
    j["x_max"] = optional_integer(c.x_max);
    j["n_max"] = optional_integer(c.n_max);
    j["p_max"] = optional_integer(c.p_max);
    j["checkpoints"] = Json::array();
    for (auto v : c.checkpoints) j["checkpoints"].push_back(integer(v));
    j["exclude_p"] = c.exclude_p;
    j["inclusive"] = c.inclusive;
    j["format"] = c.format == OutputFormat::json ? "json" : "csv";
    j["threads"] = c.threads;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

const char* to_string(Command c) noexcept {
    switch (c) {
        case Command::sum: return "sum";
        case Command::explicit_formula: return "explicit";
        case Command::constants: return "constants";
        case Command::verify: return "verify";
        case Command::primes: return "primes";
        case Command::resonance: return "resonance";
        case Command::density: return "density";
        case Command::ratio: return "ratio";
    }
    return "unknown";
}

void validate(const RunConfig& c) {
    if (c.threads < 1) throw UsageError("--threads must be at least 1");
    for (std::size_t i = 1; i < c.checkpoints.size(); ++i)
        if (c.checkpoints[i] <= c.checkpoints[i - 1])
            throw UsageError("--checkpoints must be strictly ascending");
    if (c.x_max && c.x_max == 0) throw UsageError("--x-max must be positive");
    if (c.n_max && *c.n_max < 2) throw UsageError("--n-max must be at least 2");
}

RunReport run(const RunConfig& config) {
    validate(config);
    RunReport rep;
    rep.config = config;
    const auto start = std::chrono::steady_clock::now();
    switch (config.command) {
        case Command::sum: run_sum(config, rep); break;
        case Command::explicit_formula: run_explicit(config, rep); break;
        case Command::constants: run_constants(config, rep); break;
        case Command::verify: run_verify(config, rep); break;
        case Command::primes: run_primes(config, rep); break;
        case Command::resonance: run_resonance(config, rep); break;
        case Command::density: run_density(config, rep); break;
        case Command::ratio: run_ratio(config, rep); break;
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string emit(const RunReport& report, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_escape(cells[i]);
            os << '\n';
        };
        line(report.table.header);
        for (const auto& r : report.table.rows) line(r);
        return os.str();
    }
    Json doc;
    doc["command"] = to_string(report.config.command);
    doc["config"] = config_json(report.config);
    doc["results"] = report.results;
    doc["diagnostics"] = report.diagnostics;
    doc["exit_code"] = report.exit_code;
    doc["timing"] = {{"elapsed_ms", report.elapsed_ms}};
    doc["versions"] = {{"newman", NEWMAN_VERSION}, {"compiler", __VERSION__}, {"cplusplus", __cplusplus}};
    return doc.dump(2) + "\n";
}

std::string results_payload(const RunReport& report) { return report.results.dump(); }

void write_report(const RunReport& report) {
    const std::string text = emit(report, report.config.format);
    if (!report.config.output_path) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed writing to standard output");
        return;
    }
    std::ofstream out(*report.config.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + *report.config.output_path + " for writing");
    out << text;
    out.close();
    if (!out) throw std::runtime_error("failed writing " + *report.config.output_path);
}

std::uint64_t parse_u64(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("expected a nonnegative integer, got '" + text + "'");
    std::uint64_t v = 0;
    for (char ch : text) {
        const std::uint64_t d = static_cast<std::uint64_t>(ch - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
            throw RangeError("'" + text + "' does not fit in 64 bits");
        v = v * 10 + d;
    }
    return v;
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        out.push_back(parse_u64(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 10; p <= limit; p *= 10) {
        out.push_back(p);
        if (p > std::numeric_limits<std::uint64_t>::max() / 10) break;
    }
    if (out.empty() || out.back() != limit) out.push_back(limit);
    return out;
}

}  // namespace newman::cli
