#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "moea/report.hpp"
#include "moea/runner.hpp"

using namespace moea;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig small_config() {
    RunConfig c;
    c.problem = "SCH";
    c.pop_size = 8;
    c.generations = 3;
    c.front_points = 40;
    return c;
}

}  // namespace

TEST_SUITE_BEGIN("bench_cli");

TEST_CASE("parse_config resolves every default") {
    const ParseResult r = parse_config_text("problem = ZDT1\n");
    CHECK(r.warnings.empty());
    CHECK(r.config.problem == "ZDT1");
    CHECK(r.config.algorithm == Algorithm::nsga2);
    CHECK(r.config.pop_size == 100);
    CHECK(r.config.generations == 250);
    CHECK(r.config.variation.p_crossover == 0.9);
    CHECK(r.config.variation.p_mutation == 0.1);
    CHECK(r.config.variation.eta_c == 20.0);
    CHECK(r.config.variation.eta_m == 20.0);
    CHECK(r.config.prune.delta == 0.135);
    CHECK(r.config.prune.k_clusters == 0);
    CHECK(r.config.init.subspaces == 4);
    CHECK(r.config.init.q_levels == 3);
    CHECK(r.config.front_points == 1000);
    CHECK(r.config.seed == 0);
}

TEST_CASE("parse_config accepts comments, spacing and overrides") {
    const ParseResult r = parse_config_text(
        "# experiment\nproblem = ZDT3  # trailing comment\nalgorithm= otnsga2\n"
        "pop_size =24\ngenerations = 5\nseed = 99\n");
    CHECK(r.config.problem == "ZDT3");
    CHECK(r.config.algorithm == Algorithm::otnsga2);
    CHECK(r.config.pop_size == 24);
    CHECK(r.config.seed == 99);
}

TEST_CASE("parse_config rejects unknown algorithms listing the choices") {
    try {
        parse_config_text("problem = ZDT1\nalgorithm = spea2\n");
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("nsga2") != std::string::npos);
        CHECK(msg.find("otnsga2") != std::string::npos);
    }
}

TEST_CASE("parse_config warns on delta outside the recommended band but accepts it") {
    const ParseResult r = parse_config_text("problem = ZDT1\ndelta = 0.5\n");
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("0.12") != std::string::npos);
    CHECK(r.config.prune.delta == 0.5);
}

TEST_CASE("parse_config diagnostics name the offending field") {
    CHECK_THROWS_WITH_AS(parse_config_text("problem = ZDT1\npop_size = 7\n"),
                         doctest::Contains("pop_size"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_config_text("problem = ZDT1\nwhatever = 3\n"),
                         doctest::Contains("whatever"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_config_text("problem = ZDT1\ngenerations = abc\n"),
                         doctest::Contains("generations"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("problem = ZDT1\nq_levels = 4\n"), std::invalid_argument);
}

TEST_CASE("campaign cardinality: algorithms x problems x seeds") {
    RunConfig base = small_config();
    const CampaignResult result = run_campaign_matrix(
        base, {"SCH"}, {Algorithm::nsga2, Algorithm::otnsga2}, {1, 2, 3});
    CHECK(result.failures.empty());
    CHECK(result.reports.size() == 6);
    CHECK(result.summary.rows.size() == 2);
    for (const auto& row : result.summary.rows) {
        CHECK(row.seeds == std::vector<std::uint64_t>{1, 2, 3});
    }
}

TEST_CASE("single-seed campaigns report zero standard deviation") {
    RunConfig base = small_config();
    const CampaignResult result = run_campaign(base, {1});
    REQUIRE(result.summary.rows.size() == 1);
    CHECK(result.summary.rows[0].gd_std == 0.0);
    CHECK(result.summary.rows[0].sp_std == 0.0);
    CHECK(result.summary.rows[0].igd_std == 0.0);
    CHECK(result.summary.rows[0].gd_mean == result.summary.rows[0].gd_best);
}

TEST_CASE("campaigns with an empty seed list are rejected") {
    CHECK_THROWS_AS(run_campaign(small_config(), {}), std::invalid_argument);
}

TEST_CASE("trace CSV has one data row per generation plus the initial population") {
    RunConfig c = small_config();
    c.generations = 5;
    const RunReport r = run_single(c);
    REQUIRE(r.trace.size() == 6);
    const std::string csv = trace_csv(r);
    std::size_t data_rows = 0;
    std::istringstream ss(csv);
    std::string line;
    bool header = false;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            CHECK(line == "generation,gd,sp,igd");
            header = true;
            continue;
        }
        ++data_rows;
    }
    CHECK(data_rows == 6);
}

TEST_CASE("write_reports is deterministic and the summary round-trips") {
    const auto dir1 = std::filesystem::temp_directory_path() / "moea_reports_a";
    const auto dir2 = std::filesystem::temp_directory_path() / "moea_reports_b";
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);

    RunConfig base = small_config();
    base.algorithm = Algorithm::otnsga2;
    const CampaignResult r1 = run_campaign(base, {5, 6});
    const CampaignResult r2 = run_campaign(base, {5, 6});
    CHECK(r1.failures.empty());

    write_reports(r1.reports, r1.summary, dir1);
    write_reports(r2.reports, r2.summary, dir2);

    for (const auto& name :
         {"trace_SCH_otnsga2_seed5.csv", "trace_SCH_otnsga2_seed6.csv",
          "final_SCH_otnsga2_seed5.csv", "summary.csv"}) {
        CAPTURE(name);
        CHECK(slurp(dir1 / name) == slurp(dir2 / name));
    }

    const CampaignSummary back = read_summary_csv(dir1 / "summary.csv");
    CHECK(back == r1.summary);

    // rewriting in place produces identical bytes
    const std::string before = slurp(dir1 / "summary.csv");
    write_reports(r1.reports, r1.summary, dir1);
    CHECK(slurp(dir1 / "summary.csv") == before);

    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);
}

TEST_CASE("seeded runs are reproducible across invocations for both algorithms") {
    for (Algorithm alg : {Algorithm::nsga2, Algorithm::otnsga2}) {
        RunConfig c = small_config();
        c.problem = "ZDT1";
        c.pop_size = 12;
        c.generations = 4;
        c.algorithm = alg;
        c.seed = 31337;
        const RunReport a = run_single(c);
        const RunReport b = run_single(c);
        CHECK(trace_csv(a) == trace_csv(b));
        CHECK(final_population_csv(a) == final_population_csv(b));
        CHECK(a.final_population.objectives() == b.final_population.objectives());
    }
}

TEST_CASE("run reports echo resolved defaults") {
    RunConfig c = small_config();
    c.algorithm = Algorithm::otnsga2;
    c.pop_size = 40;
    const RunReport r = run_single(c);
    CHECK(r.crossover_operator == "sbx");
    CHECK(r.mutation_operator == "polynomial");
    CHECK(r.resolved_k_clusters == 2);  // max(2, ceil(40/20))
    CHECK(r.init_pool_size > 0);
    const std::string json = report_json(r);
    CHECK(json.find("\"crossover_operator\": \"sbx\"") != std::string::npos);
    CHECK(json.find("\"final_indicators\"") != std::string::npos);
}

TEST_SUITE_END();
