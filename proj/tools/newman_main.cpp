// newman: Newman digit sums, explicit-formula evaluation and bound scans.
//
//   newman sum --m 3 --x 6
//   newman verify theorem2 --m 21 --x-max 100000 --threads 4
//   newman primes sum --n-max 10000000 --format csv --out primes.csv

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "newman/bound_verifier.hpp"
#include "newman/cli/run.hpp"
#include "newman/errors.hpp"

using namespace newman::cli;

int main(int argc, char** argv) {
    CLI::App app{"Newman digit sums over progressions, primes and least-prime-divisor classes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string m, p, x, x_max, n_max, p_max, checkpoints, format = "json", out;
    unsigned threads = 1;
    bool exclude_p = false, inclusive = false;
    app.add_option("--m", m, "Modulus m (or prime p for V_p commands)");
    app.add_option("--p", p, "Prime p for primes vp / primes theorem3");
    app.add_option("--x", x, "Upper limit x (half-open: n < x)");
    app.add_option("--x-max", x_max, "Scan limit for x");
    app.add_option("--n-max", n_max, "Scan/sieve limit for n (closed: n <= n_max)");
    app.add_option("--p-max", p_max, "Largest prime considered");
    app.add_option("--checkpoints", checkpoints, "Comma-separated ascending checkpoints");
    app.add_flag("--exclude-p", exclude_p, "Drop j = p from V_p sums");
    app.add_flag("--inclusive", inclusive, "Resonance: count j = p and allow a zero sum");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out, "Write the report to PATH instead of stdout");
    app.add_option("--threads", threads, "Worker threads for range scans")->check(CLI::PositiveNumber);

    std::map<CLI::App*, Command> commands;
    commands[app.add_subcommand("sum", "Brute-force S_m(x) or a checkpoint series")] = Command::sum;
    commands[app.add_subcommand("explicit", "S_m(x) through the roots-of-unity formula")] =
        Command::explicit_formula;
    commands[app.add_subcommand("constants", "b_m, g_m, h_m, lambda_m, mu_m (and ln x0 for 3 | m)")] =
        Command::constants;
    CLI::App* verify = app.add_subcommand("verify", "Exhaustive bound scans");
    commands[verify] = Command::verify;
    CLI::App* primes = app.add_subcommand("primes", "Newman sums over primes and V_p classes");
    commands[primes] = Command::primes;
    commands[app.add_subcommand("resonance", "Resonance-prime scan")] = Command::resonance;
    commands[app.add_subcommand("density", "|V_p(n)|/n against its limit")] = Command::density;
    commands[app.add_subcommand("ratio", "S_m(x)/S_3(x) at checkpoints")] = Command::ratio;

    for (const char* name : {"coquet", "theorem1", "theorem2", "corollary"}) verify->add_subcommand(name);
    for (const char* name : {"sum", "ratio", "conjecture3", "vp", "theorem3"}) primes->add_subcommand(name);
    verify->require_subcommand(1);
    primes->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    RunConfig config;
    try {
        for (auto& [sub, cmd] : commands) {
            if (!sub->parsed()) continue;
            config.command = cmd;
            if (!sub->get_subcommands().empty()) config.subcommand = sub->get_subcommands().front()->get_name();
        }
        auto opt = [](const std::string& s) -> std::optional<std::uint64_t> {
            if (s.empty()) return std::nullopt;
            return parse_u64(s);
        };
        config.m = opt(m);
        config.p = opt(p);
        config.x = opt(x);
        config.x_max = opt(x_max);
        config.n_max = opt(n_max);
        config.p_max = opt(p_max);
        if (!checkpoints.empty()) config.checkpoints = parse_checkpoints(checkpoints);
        config.exclude_p = exclude_p;
        config.inclusive = inclusive;
        config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
        if (!out.empty()) config.output_path = out;
        config.threads = threads;
    } catch (const std::exception& e) {
        std::cerr << "newman: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const RunReport report = run(config);
        write_report(report);
        for (const auto& d : report.diagnostics) std::cerr << "newman: " << d << '\n';
        return report.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "newman: usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const newman::InputError& e) {
        std::cerr << "newman: usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const newman::RangeError& e) {
        std::cerr << "newman: usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const newman::PrecisionError& e) {
        std::cerr << "newman: precision: " << e.what() << '\n';
        return kExitPrecision;
    } catch (const newman::OracleMismatch& e) {
        std::cerr << "newman: oracle mismatch: " << e.what() << '\n';
        return kExitPrecision;
    } catch (const std::exception& e) {
        std::cerr << "newman: " << e.what() << '\n';
        return kExitFailure;
    }
}
