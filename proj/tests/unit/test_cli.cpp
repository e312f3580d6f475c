#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "newman/cli/run.hpp"
#include "newman/errors.hpp"

using namespace newman::cli;

namespace {

RunConfig make(Command c, std::string sub = {}) {
    RunConfig cfg;
    cfg.command = c;
    cfg.subcommand = std::move(sub);
    return cfg;
}

Json parse(const RunReport& r) { return Json::parse(emit(r, OutputFormat::json)); }

}  // namespace

TEST_CASE("sum report") {
    RunConfig cfg = make(Command::sum);
    cfg.m = 3;
    cfg.x = 6;
    const RunReport r = run(cfg);
    CHECK(r.exit_code == kExitOk);
    const Json doc = parse(r);
    CHECK(doc["results"]["value"] == "2");
    CHECK(doc["command"] == "sum");
    CHECK(doc.contains("timing"));
    CHECK(doc.contains("versions"));
    // stable key order
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"command", "config", "results", "diagnostics", "exit_code",
                                           "timing", "versions"});
}

TEST_CASE("sum series as csv") {
    RunConfig cfg = make(Command::sum);
    cfg.m = 3;
    cfg.checkpoints = {6, 9};
    const std::string csv = emit(run(cfg), OutputFormat::csv);
    CHECK(csv == "checkpoint,sum\n6,2\n9,3\n");
}

TEST_CASE("integers round-trip through json strings") {
    RunConfig cfg = make(Command::explicit_formula);
    cfg.m = 3;
    cfg.x = 18446744073709551615ull;
    const RunReport r = run(cfg);
    const Json doc = parse(r);
    CHECK(parse_u64(doc["results"]["x"].get<std::string>()) == 18446744073709551615ull);
    CHECK(doc["results"]["brute_force"].is_null());
    CHECK(doc["results"]["within_tolerance"].is_boolean());
    const std::int64_t value = std::stoll(doc["results"]["value"].get<std::string>());
    CHECK(std::to_string(value) == doc["results"]["value"].get<std::string>());
}

TEST_CASE("explicit report agrees with brute force") {
    RunConfig cfg = make(Command::explicit_formula);
    cfg.m = 7;
    cfg.x = 123456;
    const Json doc = parse(run(cfg));
    CHECK(doc["results"]["agrees"] == true);
    CHECK(doc["results"]["value"] == doc["results"]["brute_force"]);
}

TEST_CASE("constants report") {
    RunConfig cfg = make(Command::constants);
    cfg.m = 5;
    const Json doc = parse(run(cfg));
    CHECK(doc["results"]["b_m"].get<double>() == doctest::Approx(0.86184088).epsilon(1e-8));
    CHECK_FALSE(doc["results"].contains("ln_x0"));
    cfg.m = 21;
    const Json d21 = parse(run(cfg));
    CHECK(d21["results"]["g_m"].is_null());
    CHECK(d21["results"]["ln_x0"].get<double>() == doctest::Approx(984.839).epsilon(1e-6));
    CHECK(d21["results"]["remark2"] == true);
}

TEST_CASE("verify reports") {
    RunConfig cfg = make(Command::verify, "theorem2");
    cfg.m = 21;
    cfg.x_max = 100000;
    const RunReport r = run(cfg);
    CHECK(r.exit_code == kExitOk);
    const std::string text = emit(r, OutputFormat::json);
    CHECK(text.find("\"violations\": []") != std::string::npos);
    CHECK(parse(r)["results"]["violations_total"] == "0");

    RunConfig coquet = make(Command::verify, "coquet");
    coquet.x_max = 30000;
    const RunReport c = run(coquet);
    CHECK(c.exit_code == kExitOk);
    CHECK(c.table.rows.size() == 4);
    CHECK(c.table.header.front() == "bound_id");

    RunConfig corollary = make(Command::verify, "corollary");
    corollary.m = 5;
    corollary.checkpoints = {30, 1000000};
    const Json doc = parse(run(corollary));
    CHECK(doc["results"]["series"][0]["u_m_sum"] == "2");
    CHECK(doc["results"]["series"][1]["u_m_sum"] == "-5859");

    RunConfig wrong = make(Command::verify, "theorem1");
    wrong.m = 6;
    wrong.x_max = 100;
    CHECK_THROWS_AS(run(wrong), newman::InputError);
    CHECK_THROWS_AS(run(make(Command::verify, "nonsense")), UsageError);
}

TEST_CASE("results do not depend on the thread hint") {
    RunConfig cfg = make(Command::verify, "theorem1");
    cfg.m = 11;
    cfg.x_max = 30000;
    const std::string one = results_payload(run(cfg));
    cfg.threads = 4;
    CHECK(results_payload(run(cfg)) == one);
}

TEST_CASE("resonance report") {
    RunConfig cfg = make(Command::resonance);
    cfg.p_max = 100;
    cfg.n_max = 10000;
    const Json doc = parse(run(cfg));
    const Json& verdicts = doc["results"]["verdicts"];
    REQUIRE(verdicts.size() == 23);  // primes 5 .. 97
    bool saw_null = false;
    for (const auto& v : verdicts) {
        if (v["is_resonance"] == true) {
            CHECK(v["first_nonnegative"].is_null());
            saw_null = true;
        }
    }
    CHECK(saw_null);
    CHECK(doc["results"]["reference"]["list"].size() == 4);  // 11, 19, 41, 67
}

TEST_CASE("primes reports") {
    RunConfig cfg = make(Command::primes, "sum");
    cfg.n_max = 100000;
    const Json doc = parse(run(cfg));
    CHECK(doc["results"]["series"].size() == 5);
    CHECK(doc["results"]["series"][0]["n"] == "10");
    CHECK(doc["results"]["sign_scan"]["positive_count"] == "2");

    RunConfig ratio = make(Command::primes, "ratio");
    ratio.n_max = 1000;
    ratio.checkpoints = {5, 31};
    const Json r = parse(run(ratio));
    CHECK(r["results"]["series"][0]["log_ratio"].is_null());
    CHECK(r["results"]["series"][1]["log_ratio"] == 0.0);

    RunConfig vp = make(Command::primes, "vp");
    vp.n_max = 100;
    vp.p = 7;
    vp.exclude_p = true;
    const Json v = parse(run(vp));
    CHECK(v["results"]["members_count"] == "4");
    CHECK(v["results"]["sum"] == v["results"]["sum_excluding_p"]);

    RunConfig c3 = make(Command::primes, "conjecture3");
    c3.n_max = 10000;
    CHECK(parse(run(c3))["results"]["series"].size() == 4);

    RunConfig t3 = make(Command::primes, "theorem3");
    t3.n_max = 10000;
    t3.p = 5;
    CHECK(parse(run(t3))["results"]["constant"].get<double>() == doctest::Approx(-0.1));
}

TEST_CASE("density and ratio reports") {
    RunConfig cfg = make(Command::density);
    cfg.n_max = 100;
    const RunReport d = run(cfg);
    const Json doc = parse(d);
    CHECK(doc["results"]["densities"][0]["members_count"] == "17");
    CHECK(d.table.rows.back().front() == "total");

    RunConfig ratio = make(Command::ratio);
    ratio.m = 3;
    ratio.x_max = 1000;
    const Json r = parse(run(ratio));
    CHECK(r["results"]["series"].size() == 3);
    for (const auto& e : r["results"]["series"]) CHECK(e["ratio"] == 1.0);
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS(run(make(Command::sum)), UsageError);
    RunConfig no_x = make(Command::sum);
    no_x.m = 3;
    CHECK_THROWS_AS(run(no_x), UsageError);
    RunConfig threads = make(Command::constants);
    threads.m = 5;
    threads.threads = 0;
    CHECK_THROWS_AS(run(threads), UsageError);
    RunConfig desc = make(Command::ratio);
    desc.m = 5;
    desc.checkpoints = {10, 5};
    CHECK_THROWS_AS(run(desc), UsageError);
    CHECK_THROWS_AS(run(make(Command::resonance)), UsageError);
}

TEST_CASE("argument parsing") {
    CHECK(parse_u64("0") == 0);
    CHECK(parse_u64("18446744073709551615") == 18446744073709551615ull);
    CHECK_THROWS_AS(parse_u64("18446744073709551616"), newman::RangeError);
    CHECK_THROWS_AS(parse_u64("-3"), UsageError);
    CHECK_THROWS_AS(parse_u64(""), UsageError);
    CHECK(parse_checkpoints("1,10,100") == std::vector<std::uint64_t>{1, 10, 100});
    CHECK_THROWS_AS(parse_checkpoints("1,,3"), UsageError);
    CHECK(default_checkpoints(1000) == std::vector<std::uint64_t>{10, 100, 1000});
    CHECK(default_checkpoints(2500) == std::vector<std::uint64_t>{10, 100, 1000, 2500});
    CHECK(default_checkpoints(5) == std::vector<std::uint64_t>{5});
}

TEST_CASE("write_report destinations") {
    RunConfig cfg = make(Command::sum);
    cfg.m = 3;
    cfg.x = 6;
    cfg.format = OutputFormat::csv;
    const auto path = std::filesystem::temp_directory_path() / "newman_cli_test.csv";
    cfg.output_path = path.string();
    write_report(run(cfg));
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "checkpoint,sum\n6,2\n");
    std::filesystem::remove(path);

    cfg.output_path = "/nonexistent-dir/report.csv";
    CHECK_THROWS_AS(write_report(run(cfg)), std::runtime_error);
}
