#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "moea/nsga2.hpp"
#include "moea/orthogonal.hpp"
#include "moea/problems.hpp"
#include "moea/rng.hpp"

using namespace moea;

namespace {

// row-set view of an array
std::multiset<std::vector<int>> row_set(const OrthogonalArray& oa) {
    std::multiset<std::vector<int>> rows;
    for (std::size_t i = 0; i < oa.rows_m; ++i) {
        std::vector<int> row(static_cast<std::size_t>(oa.factors_f));
        for (int j = 0; j < oa.factors_f; ++j) row[static_cast<std::size_t>(j)] = oa.at(i, j);
        rows.insert(std::move(row));
    }
    return rows;
}

// independent balance checker (counts via plain loops)
bool balanced(const OrthogonalArray& oa) {
    const int q = oa.levels_q;
    for (int col = 0; col < oa.factors_f; ++col) {
        std::vector<std::size_t> count(static_cast<std::size_t>(q), 0);
        for (std::size_t i = 0; i < oa.rows_m; ++i) ++count[static_cast<std::size_t>(oa.at(i, col) - 1)];
        for (std::size_t c : count) {
            if (c != oa.rows_m / static_cast<std::size_t>(q)) return false;
        }
    }
    for (int c1 = 0; c1 < oa.factors_f; ++c1) {
        for (int c2 = c1 + 1; c2 < oa.factors_f; ++c2) {
            std::vector<std::size_t> count(static_cast<std::size_t>(q * q), 0);
            for (std::size_t i = 0; i < oa.rows_m; ++i) {
                ++count[static_cast<std::size_t>((oa.at(i, c1) - 1) * q + oa.at(i, c2) - 1)];
            }
            for (std::size_t c : count) {
                if (c != oa.rows_m / static_cast<std::size_t>(q * q)) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("oa_design");

TEST_CASE("L9(3^4) golden table") {
    const OrthogonalArray oa = construct_orthogonal_array(3, 4);
    REQUIRE(oa.rows_m == 9);
    REQUIRE(oa.factors_f == 4);

    const std::multiset<std::vector<int>> golden{
        {1, 1, 1, 1}, {1, 2, 2, 2}, {1, 3, 3, 3}, {2, 1, 2, 3}, {2, 2, 3, 1},
        {2, 3, 1, 2}, {3, 1, 3, 2}, {3, 2, 1, 3}, {3, 3, 2, 1}};
    CHECK(row_set(oa) == golden);
}

TEST_CASE("balance invariants hold exhaustively for Q in {2,3,5}, F in 1..10") {
    for (int q : {2, 3, 5}) {
        for (int f = 1; f <= 10; ++f) {
            CAPTURE(q);
            CAPTURE(f);
            const OrthogonalArray oa = construct_orthogonal_array(q, f);
            CHECK(oa.factors_f == f);
            CHECK(balanced(oa));
            CHECK_NOTHROW(verify_orthogonal_array(oa));
        }
    }
}

TEST_CASE("the 4x3 two-level array is one of the enumerated valid arrays") {
    const OrthogonalArray oa = construct_orthogonal_array(2, 3);
    REQUIRE(oa.rows_m == 4);

    // enumerate every 4x3 matrix over {1,2} and keep those satisfying both
    // balance invariants
    std::set<std::array<int, 12>> valid;
    for (int mask = 0; mask < (1 << 12); ++mask) {
        std::array<int, 12> m{};
        for (int b = 0; b < 12; ++b) m[static_cast<std::size_t>(b)] = ((mask >> b) & 1) + 1;
        bool ok = true;
        for (int col = 0; col < 3 && ok; ++col) {
            int ones = 0;
            for (int row = 0; row < 4; ++row) ones += m[static_cast<std::size_t>(row * 3 + col)] == 1;
            ok = (ones == 2);
        }
        for (int c1 = 0; c1 < 3 && ok; ++c1) {
            for (int c2 = c1 + 1; c2 < 3 && ok; ++c2) {
                int pair_count[4] = {0, 0, 0, 0};
                for (int row = 0; row < 4; ++row) {
                    const int a = m[static_cast<std::size_t>(row * 3 + c1)] - 1;
                    const int b = m[static_cast<std::size_t>(row * 3 + c2)] - 1;
                    ++pair_count[a * 2 + b];
                }
                for (int ky = 0; ky < 4; ++ky) ok = ok && pair_count[ky] == 1;
            }
        }
        if (ok) valid.insert(m);
    }

    std::array<int, 12> got{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (int j = 0; j < 3; ++j) got[i * 3 + static_cast<std::size_t>(j)] = oa.at(i, j);
    }
    CHECK(valid.count(got) == 1);
}

TEST_CASE("single factor gives one balanced column") {
    const OrthogonalArray oa = construct_orthogonal_array(3, 1);
    REQUIRE(oa.rows_m == 3);
    std::multiset<int> col{oa.at(0, 0), oa.at(1, 0), oa.at(2, 0)};
    CHECK(col == std::multiset<int>{1, 2, 3});
}

TEST_CASE("non-prime Q and oversized F are rejected") {
    CHECK_THROWS_AS(construct_orthogonal_array(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(construct_orthogonal_array(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(construct_orthogonal_array(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(construct_orthogonal_array(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(construct_orthogonal_array(2, 1000000), std::length_error);
}

TEST_CASE("segment_space splits the widest dimension") {
    const Bounds b{{0.0, 0.0}, {1.0, 4.0}};
    const SubspaceSet s = segment_space(b, 2);
    CHECK(s.split_dim == 1);
    REQUIRE(s.subspaces.size() == 2);
    CHECK(s.subspaces[0].lower == std::vector<double>{0.0, 0.0});
    CHECK(s.subspaces[0].upper == std::vector<double>{1.0, 2.0});
    CHECK(s.subspaces[1].lower == std::vector<double>{0.0, 2.0});
    CHECK(s.subspaces[1].upper == std::vector<double>{1.0, 4.0});
}

TEST_CASE("segment_space identity and one-dimensional split") {
    const Bounds b{{-3.0, 2.0}, {5.0, 9.0}};
    const SubspaceSet s1 = segment_space(b, 1);
    REQUIRE(s1.subspaces.size() == 1);
    CHECK(s1.subspaces[0].lower == b.lower);
    CHECK(s1.subspaces[0].upper == b.upper);

    const Bounds line{{0.0}, {3.0}};
    const SubspaceSet s3 = segment_space(line, 3);
    REQUIRE(s3.subspaces.size() == 3);
    CHECK(s3.subspaces[0].lower[0] == 0.0);
    CHECK(s3.subspaces[0].upper[0] == 1.0);
    CHECK(s3.subspaces[1].lower[0] == 1.0);
    CHECK(s3.subspaces[1].upper[0] == 2.0);
    CHECK(s3.subspaces[2].lower[0] == 2.0);
    CHECK(s3.subspaces[2].upper[0] == 3.0);
}

TEST_CASE("soc_crossover with identical parents returns the parent pair") {
    const DecisionVector p{0.5, -1.0, 2.0};
    SocParams params;
    const auto children = soc_crossover(p, p, params);
    REQUIRE(children.size() == 2);
    CHECK(children[0] == p);
    CHECK(children[1] == p);
}

TEST_CASE("soc_crossover expands two low-similarity dimensions into the 3x3 grid") {
    SocParams params;
    params.q_levels = 3;
    params.theta0 = 1e-6;
    const auto children = soc_crossover({0.0, 0.0}, {2.0, 2.0}, params);
    REQUIRE(children.size() == 9);

    // row-wise: levels come from the first two columns of L9(3^4)
    const OrthogonalArray oa = construct_orthogonal_array(3, 2);
    for (std::size_t r = 0; r < 9; ++r) {
        CHECK(children[r][0] == static_cast<double>(oa.at(r, 0) - 1));
        CHECK(children[r][1] == static_cast<double>(oa.at(r, 1) - 1));
    }

    // as a set: every grid point of {0,1,2}^2 exactly once
    std::set<std::pair<double, double>> grid;
    for (const auto& c : children) grid.insert({c[0], c[1]});
    CHECK(grid.size() == 9);
    for (double a : {0.0, 1.0, 2.0}) {
        for (double b : {0.0, 1.0, 2.0}) CHECK(grid.count({a, b}) == 1);
    }
}

TEST_CASE("soc_crossover children stay in the parent box and the call is deterministic") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 5;
        DecisionVector p1(n), p2(n);
        for (std::size_t i = 0; i < n; ++i) {
            p1[i] = rng.uniform(-10, 10);
            p2[i] = rng.uniform(-10, 10);
        }
        SocParams params;
        params.q_levels = (trial % 2) ? 3 : 5;
        params.theta0 = 1e-9;
        const auto children = soc_crossover(p1, p2, params);
        for (const auto& c : children) {
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(c[i] >= std::min(p1[i], p2[i]));
                CHECK(c[i] <= std::max(p1[i], p2[i]));
            }
        }
        CHECK(soc_crossover(p1, p2, params) == children);
        CHECK(soc_crossover(p2, p1, params) == children);  // parent order covariance
    }
}

TEST_CASE("soc_crossover fills high-similarity positions with the midpoint") {
    SocParams params;
    params.q_levels = 3;
    params.theta0 = 0.5;
    const DecisionVector p1{0.0, 1.0, 4.0};
    const DecisionVector p2{2.0, 1.2, 4.1};  // dims 1,2 below the threshold
    const auto children = soc_crossover(p1, p2, params);
    REQUIRE(children.size() == 3);  // one factor, J = 1
    for (const auto& c : children) {
        CHECK(c[1] == doctest::Approx(1.1).epsilon(1e-15));
        CHECK(c[2] == doctest::Approx(4.05).epsilon(1e-15));
    }
    std::multiset<double> first{children[0][0], children[1][0], children[2][0]};
    CHECK(first == std::multiset<double>{0.0, 1.0, 2.0});
}

TEST_CASE("orthogonal_initialize returns exactly n evaluated in-bounds individuals") {
    const auto zdt1 = make_problem("ZDT1");
    Rng rng(3);
    InitParams params;  // S = 4, Q0 = 3
    InitStats stats;
    const Population pop = orthogonal_initialize(zdt1, 100, params, rng, &stats);
    CHECK(pop.size() == 100);
    // t = 30 factors, J = 4, 81 children per subspace
    CHECK(stats.pool_size == 4 * 81);
    CHECK(stats.random_topup == 0);
    for (const auto& ind : pop.members) {
        CHECK(zdt1.bounds.contains(ind.decision));
        CHECK(ind.objectives.size() == 2);
        CHECK(ind.has_rank());
        CHECK(ind.has_crowding());
    }
}

TEST_CASE("orthogonal_initialize with one subspace stays in the full box") {
    const auto fon = make_problem("FON");
    Rng rng(4);
    InitParams params;
    params.subspaces = 1;
    const Population pop = orthogonal_initialize(fon, 10, params, rng);
    CHECK(pop.size() == 10);
    for (const auto& ind : pop.members) CHECK(fon.bounds.contains(ind.decision));
}

TEST_CASE("orthogonal_initialize tops up with random individuals when the pool is short") {
    const auto sch = make_problem("SCH");
    Rng rng(5);
    InitParams params;
    params.subspaces = 2;  // pool = 2 subspaces x 3 children = 6 < n
    InitStats stats;
    const Population pop = orthogonal_initialize(sch, 10, params, rng, &stats);
    CHECK(pop.size() == 10);
    CHECK(stats.pool_size == 6);
    CHECK(stats.random_topup == 4);
}

TEST_SUITE_END();
