#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "moea/problems.hpp"
#include "moea/rng.hpp"

using namespace moea;

namespace {

DecisionVector random_point(const ProblemSpec& p, Rng& rng) {
    DecisionVector x(p.n_vars);
    for (std::size_t i = 0; i < p.n_vars; ++i) {
        x[i] = rng.uniform(p.bounds.lower[i], p.bounds.upper[i]);
    }
    return x;
}

}  // namespace

TEST_SUITE_BEGIN("problems");

TEST_CASE("make_problem sets the standard dimensions") {
    const auto sch = make_problem("SCH");
    CHECK(sch.n_vars == 1);
    CHECK(sch.n_objectives == 2);
    CHECK(sch.bounds.lower[0] == -1000.0);
    CHECK(sch.bounds.upper[0] == 1000.0);

    const auto zdt1 = make_problem("ZDT1");
    CHECK(zdt1.n_vars == 30);
    CHECK(zdt1.n_objectives == 2);
    CHECK(zdt1.bounds.lower == std::vector<double>(30, 0.0));
    CHECK(zdt1.bounds.upper == std::vector<double>(30, 1.0));

    const auto dtlz1 = make_problem("DTLZ1");
    CHECK(dtlz1.n_vars == 7);
    CHECK(dtlz1.n_objectives == 3);

    const auto zdt4 = make_problem("ZDT4");
    CHECK(zdt4.bounds.lower[0] == 0.0);
    CHECK(zdt4.bounds.lower[1] == -5.0);

    CHECK(problem_names().size() == 26);
}

TEST_CASE("unknown problem names are usage errors listing the support set") {
    try {
        make_problem("ZDT5");
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("ZDT1") != std::string::npos);
        CHECK(msg.find("UF10") != std::string::npos);
    }
}

TEST_CASE("all 26 problems evaluate finite objectives on random in-bounds points") {
    Rng rng(42);
    for (const auto& name : problem_names()) {
        const auto p = make_problem(name);
        CAPTURE(name);
        for (int i = 0; i < 1000; ++i) {
            const auto y = evaluate(p, random_point(p, rng));
            REQUIRE(y.size() == p.n_objectives);
            for (double v : y) REQUIRE(std::isfinite(v));
        }
    }
}

TEST_CASE("front samples are mutually non-dominated for every problem") {
    for (const auto& name : problem_names()) {
        CAPTURE(name);
        const auto fs = sample_true_front(name, 150);
        REQUIRE(!fs.points.empty());
        for (std::size_t i = 0; i < fs.points.size(); ++i) {
            for (std::size_t j = i + 1; j < fs.points.size(); ++j) {
                const Dominance d = dominates(fs.points[i], fs.points[j]);
                REQUIRE(d != Dominance::FirstDominates);
                REQUIRE(d != Dominance::SecondDominates);
            }
        }
    }
}

TEST_CASE("analytic front points are reproduced by their preimages to 1e-12") {
    for (const auto& name : problem_names()) {
        CAPTURE(name);
        const auto p = make_problem(name);
        const auto fs = sample_true_front(name, 64);
        if (!fs.has_preimages()) {
            CHECK(fs.source == FrontSample::Source::file);
            continue;
        }
        REQUIRE(fs.preimages.size() == fs.points.size());
        for (std::size_t i = 0; i < fs.points.size(); ++i) {
            const auto y = evaluate(p, clamp(fs.preimages[i], p.bounds));
            for (std::size_t m = 0; m < y.size(); ++m) {
                REQUIRE(std::abs(y[m] - fs.points[i][m]) <=
                        1e-12 * std::max(1.0, std::abs(fs.points[i][m])));
            }
        }
    }
}

TEST_CASE("ZDT1 front sampling hits the documented three points") {
    const auto fs = sample_true_front("ZDT1", 3);
    REQUIRE(fs.points.size() == 3);
    // sampling t = sqrt(f1) in {0, 0.5, 1}
    CHECK(fs.points[0] == ObjectiveVector{0.0, 1.0});
    CHECK(fs.points[1] == ObjectiveVector{0.25, 0.5});
    CHECK(fs.points[2] == ObjectiveVector{1.0, 0.0});
}

TEST_CASE("SCH front endpoints") {
    const auto fs = sample_true_front("SCH", 2);
    REQUIRE(fs.points.size() == 2);
    CHECK(fs.points[0] == ObjectiveVector{0.0, 4.0});
    CHECK(fs.points[1] == ObjectiveVector{4.0, 0.0});
}

TEST_CASE("ZDT3 front points satisfy the front relation") {
    const auto fs = sample_true_front("ZDT3", 100);
    for (const auto& pt : fs.points) {
        const double t = pt[0];
        const double f2 = 1.0 - std::sqrt(t) - t * std::sin(10.0 * M_PI * t);
        CHECK(pt[1] == doctest::Approx(f2).epsilon(1e-12));
    }
}

TEST_CASE("POL and KUR load bundled reference files") {
    for (const std::string name : {"POL", "KUR"}) {
        CAPTURE(name);
        const auto fs = sample_true_front(name, 50);
        CHECK(fs.source == FrontSample::Source::file);
        CHECK(fs.points.size() >= 2);
        CHECK(!fs.has_preimages());
    }
    // POL file holds 1000 points; thinning returns exactly the request
    CHECK(sample_true_front("POL", 50).points.size() == 50);
}

TEST_CASE("missing reference file is a configuration error") {
    const char* old = std::getenv("MOEA_DATA_DIR");
    const std::string saved = old ? old : "";
    setenv("MOEA_DATA_DIR", "/nonexistent-moea-data", 1);
    CHECK_THROWS_AS(sample_true_front("POL", 10), std::runtime_error);
    if (old) {
        setenv("MOEA_DATA_DIR", saved.c_str(), 1);
    } else {
        unsetenv("MOEA_DATA_DIR");
    }
}

TEST_CASE("front file io round-trips and skips comments") {
    const auto dir = std::filesystem::temp_directory_path() / "moea_front_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "f.dat";
    const std::vector<ObjectiveVector> pts{{0.125, 4.0}, {1.0 / 3.0, 2.7182818284590452}};
    write_front_file(path, pts, "roundtrip check");
    const auto back = read_front_file(path);
    CHECK(back == pts);
    std::filesystem::remove_all(dir);
}

TEST_CASE("sample_true_front validates count") {
    CHECK_THROWS_AS(sample_true_front("ZDT1", 1), std::invalid_argument);
}

TEST_CASE("nondominated_filter keeps exactly the non-dominated subset") {
    const std::vector<ObjectiveVector> pts{{1, 1}, {2, 2}, {0, 3}, {3, 0}, {1, 1}};
    const auto kept = nondominated_filter(pts);
    // (2,2) is dominated by (1,1); duplicates of (1,1) are both non-dominated
    CHECK(kept == std::vector<ObjectiveVector>{{1, 1}, {0, 3}, {3, 0}, {1, 1}});
}

TEST_SUITE_END();
