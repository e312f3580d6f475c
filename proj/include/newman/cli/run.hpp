#pragma once

// Batch front end shared by the `newman` executable and the tests:
// a parsed RunConfig goes in, a RunReport with a JSON payload and a CSV
// table comes out.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace newman::cli {

using Json = nlohmann::ordered_json;

enum class Command { sum, explicit_formula, constants, verify, primes, resonance, density, ratio };
enum class OutputFormat { json, csv };

const char* to_string(Command c) noexcept;

struct RunConfig {
    Command command = Command::sum;
    std::string subcommand;  // verify: coquet|theorem1|theorem2|corollary; primes: sum|ratio|conjecture3|vp|theorem3
    std::optional<std::uint64_t> m;
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> x;
    std::optional<std::uint64_t> x_max;
    std::optional<std::uint64_t> n_max;
    std::optional<std::uint64_t> p_max;
    std::vector<std::uint64_t> checkpoints;
    bool exclude_p = false;
    bool inclusive = false;  // resonance: whole V_p(n), sum <= 0
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> output_path;
    unsigned threads = 1;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitUsage = 2,
    kExitPrecision = 3,
    kExitFailure = 4,
};

struct RunReport {
    RunConfig config;
    Json results = Json::object();
    CsvTable table;
    std::vector<std::string> diagnostics;
    double elapsed_ms = 0.0;
    int exit_code = kExitOk;
};

// Throws UsageError for bad parameter combinations; mathematical errors
// from the library propagate unchanged.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void validate(const RunConfig& config);

RunReport run(const RunConfig& config);

// Full document: command, config, results, diagnostics, timing, versions.
std::string emit(const RunReport& report, OutputFormat format);

// Only the results member, for determinism checks.
std::string results_payload(const RunReport& report);

// Writes emit() to config.output_path or to stdout; throws std::runtime_error
// when the destination cannot be written.
void write_report(const RunReport& report);

// "1,10,100" -> {1, 10, 100}; rejects empty fields, signs and values past 2^64 - 1.
std::vector<std::uint64_t> parse_checkpoints(const std::string& text);
std::uint64_t parse_u64(const std::string& text);

// 10, 100, ... not exceeding `limit`, followed by `limit` itself.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t limit);

}  // namespace newman::cli
