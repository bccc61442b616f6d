#include "moea/orthogonal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "moea/nsga2.hpp"

namespace moea {
namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

}  // namespace

OrthogonalArray construct_orthogonal_array(int q, int f, std::size_t row_cap) {
    if (!is_prime(q)) {
        throw std::invalid_argument("construct_orthogonal_array: Q must be prime");
    }
    if (f < 1) {
        throw std::invalid_argument("construct_orthogonal_array: F must be >= 1");
    }

    // minimal J with (Q^J - 1)/(Q - 1) >= F
    int j_exp = 1;
    std::size_t rows = static_cast<std::size_t>(q);
    std::size_t columns = 1;  // (q^1 - 1)/(q - 1)
    while (columns < static_cast<std::size_t>(f)) {
        if (rows > row_cap / static_cast<std::size_t>(q)) {
            throw std::length_error("construct_orthogonal_array: row budget exceeded");
        }
        rows *= static_cast<std::size_t>(q);
        columns = columns * static_cast<std::size_t>(q) + 1;
        ++j_exp;
    }
    if (rows > row_cap) {
        throw std::length_error("construct_orthogonal_array: row budget exceeded");
    }
    const std::size_t f_prime = columns;

    // 0-based level matrix, rows x f_prime
    std::vector<int> a(rows * f_prime, 0);
    auto cell = [&](std::size_t i, std::size_t j) -> int& { return a[i * f_prime + j]; };

    // basic columns: digits of the row index in base Q
    std::vector<std::size_t> basic(static_cast<std::size_t>(j_exp));
    std::size_t pow_qk = 1;  // q^(k-1)
    for (int k = 1; k <= j_exp; ++k) {
        const std::size_t col = (pow_qk - 1) / static_cast<std::size_t>(q - 1);  // 0-based
        basic[static_cast<std::size_t>(k - 1)] = col;
        std::size_t divisor = 1;  // q^(J-k)
        for (int e = 0; e < j_exp - k; ++e) divisor *= static_cast<std::size_t>(q);
        for (std::size_t i = 0; i < rows; ++i) {
            cell(i, col) = static_cast<int>((i / divisor) % static_cast<std::size_t>(q));
        }
        pow_qk *= static_cast<std::size_t>(q);
    }

    // non-basic columns: (a_s * t + a_j) mod Q for each basic column j
    for (int k = 2; k <= j_exp; ++k) {
        const std::size_t j_col = basic[static_cast<std::size_t>(k - 1)];
        for (std::size_t s = 0; s < j_col; ++s) {
            for (int t = 1; t <= q - 1; ++t) {
                const std::size_t col =
                    j_col + s * static_cast<std::size_t>(q - 1) + static_cast<std::size_t>(t);
                for (std::size_t i = 0; i < rows; ++i) {
                    cell(i, col) = (cell(i, s) * t + cell(i, j_col)) % q;
                }
            }
        }
    }

    OrthogonalArray oa;
    oa.levels_q = q;
    oa.factors_f = f;
    oa.rows_m = rows;
    oa.cells.resize(rows * static_cast<std::size_t>(f));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(f); ++j) {
            oa.cells[i * static_cast<std::size_t>(f) + j] = cell(i, j) + 1;
        }
    }
    return oa;
}

void verify_orthogonal_array(const OrthogonalArray& oa) {
    const int q = oa.levels_q;
    const int f = oa.factors_f;
    const std::size_t m = oa.rows_m;
    if (m % static_cast<std::size_t>(q) != 0) {
        throw std::logic_error("orthogonal array: row count not divisible by Q");
    }
    const std::size_t per_level = m / static_cast<std::size_t>(q);
    for (int col = 0; col < f; ++col) {
        std::vector<std::size_t> counts(static_cast<std::size_t>(q), 0);
        for (std::size_t i = 0; i < m; ++i) {
            const int level = oa.at(i, col);
            if (level < 1 || level > q) {
                throw std::logic_error("orthogonal array: level out of range");
            }
            ++counts[static_cast<std::size_t>(level - 1)];
        }
        for (std::size_t c : counts) {
            if (c != per_level) {
                throw std::logic_error("orthogonal array: unbalanced column");
            }
        }
    }
    if (f < 2) return;
    if (m % static_cast<std::size_t>(q * q) != 0) {
        throw std::logic_error("orthogonal array: row count not divisible by Q^2");
    }
    const std::size_t per_pair = m / static_cast<std::size_t>(q * q);
    for (int c1 = 0; c1 < f; ++c1) {
        for (int c2 = c1 + 1; c2 < f; ++c2) {
            std::vector<std::size_t> counts(static_cast<std::size_t>(q * q), 0);
            for (std::size_t i = 0; i < m; ++i) {
                const int idx = (oa.at(i, c1) - 1) * q + (oa.at(i, c2) - 1);
                ++counts[static_cast<std::size_t>(idx)];
            }
            for (std::size_t c : counts) {
                if (c != per_pair) {
                    throw std::logic_error("orthogonal array: unbalanced column pair");
                }
            }
        }
    }
}

SubspaceSet segment_space(const Bounds& b, int s_count) {
    b.validate();
    if (s_count < 1) {
        throw std::invalid_argument("segment_space: S must be >= 1");
    }
    std::size_t split = 0;
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (b.width(i) > b.width(split)) split = i;
    }
    const double w = b.width(split) / static_cast<double>(s_count);

    SubspaceSet out;
    out.split_dim = split;
    out.subspaces.reserve(static_cast<std::size_t>(s_count));
    for (int i = 1; i <= s_count; ++i) {
        Bounds sub = b;
        sub.lower[split] = b.lower[split] + static_cast<double>(i - 1) * w;
        sub.upper[split] = b.upper[split] - static_cast<double>(s_count - i) * w;
        out.subspaces.push_back(std::move(sub));
    }
    return out;
}

std::vector<DecisionVector> soc_crossover(const DecisionVector& p1, const DecisionVector& p2,
                                          const SocParams& params) {
    if (p1.size() != p2.size()) {
        throw std::invalid_argument("soc_crossover: parent length mismatch");
    }
    if (params.q_levels < 2) {
        throw std::invalid_argument("soc_crossover: Q must be >= 2");
    }
    if (!params.theta0_per_dim.empty() && params.theta0_per_dim.size() != p1.size()) {
        throw std::invalid_argument("soc_crossover: theta0_per_dim length mismatch");
    }

    const std::size_t n = p1.size();
    std::vector<std::size_t> low_similarity;  // the k-vector positions
    for (std::size_t i = 0; i < n; ++i) {
        const double theta =
            params.theta0_per_dim.empty() ? params.theta0 : params.theta0_per_dim[i];
        if (std::abs(p1[i] - p2[i]) > theta) low_similarity.push_back(i);
    }
    if (low_similarity.empty()) {
        return {p1, p2};
    }

    const OrthogonalArray oa = construct_orthogonal_array(
        params.q_levels, static_cast<int>(low_similarity.size()), params.row_cap);

    // midpoint base for high-similarity positions
    DecisionVector base(n);
    for (std::size_t i = 0; i < n; ++i) base[i] = 0.5 * (p1[i] + p2[i]);

    const int q = params.q_levels;
    std::vector<DecisionVector> children;
    children.reserve(oa.rows_m);
    for (std::size_t row = 0; row < oa.rows_m; ++row) {
        DecisionVector child = base;
        for (std::size_t fj = 0; fj < low_similarity.size(); ++fj) {
            const std::size_t dim = low_similarity[fj];
            const double lo = std::min(p1[dim], p2[dim]);
            const double hi = std::max(p1[dim], p2[dim]);
            const int level = oa.at(row, static_cast<int>(fj));
            double v;
            if (level == 1) {
                v = lo;
            } else if (level == q) {
                v = hi;
            } else {
                v = lo + static_cast<double>(level - 1) * (hi - lo) / static_cast<double>(q - 1);
            }
            child[dim] = std::clamp(v, lo, hi);
        }
        children.push_back(std::move(child));
    }
    return children;
}

Population orthogonal_initialize(const ProblemSpec& problem, std::size_t n,
                                 const InitParams& params, Rng& rng, InitStats* stats) {
    if (n < 2) {
        throw std::invalid_argument("orthogonal_initialize: n must be >= 2");
    }
    if (params.subspaces < 1 || params.q_levels < 2) {
        throw std::invalid_argument("orthogonal_initialize: bad parameters");
    }

    const SubspaceSet segments = segment_space(problem.bounds, params.subspaces);

    Population pool;
    for (const Bounds& sub : segments.subspaces) {
        SocParams soc;
        soc.q_levels = params.q_levels;
        soc.theta0_per_dim.resize(sub.size());
        for (std::size_t i = 0; i < sub.size(); ++i) {
            soc.theta0_per_dim[i] = params.theta0 * sub.width(i);
        }
        for (auto& child : soc_crossover(sub.lower, sub.upper, soc)) {
            Individual ind;
            ind.decision = clamp(std::move(child), problem.bounds);
            ind.objectives = evaluate(problem, ind.decision);
            pool.members.push_back(std::move(ind));
        }
    }
    if (stats) stats->pool_size = pool.size();

    // Short pools are topped up with uniform random individuals so the
    // initializer always returns exactly n.
    std::size_t topup = 0;
    while (pool.size() < n) {
        Individual ind;
        ind.decision.resize(problem.n_vars);
        for (std::size_t i = 0; i < problem.n_vars; ++i) {
            ind.decision[i] = rng.uniform(problem.bounds.lower[i], problem.bounds.upper[i]);
        }
        ind.objectives = evaluate(problem, ind.decision);
        pool.members.push_back(std::move(ind));
        ++topup;
    }
    if (stats) stats->random_topup = topup;

    const FrontPartition part = fast_nondominated_sort(pool);

    // candidate set: whole fronts until at least 4n members
    std::vector<std::size_t> candidate;
    for (const auto& front : part.fronts) {
        for (std::size_t idx : front) candidate.push_back(idx);
        if (candidate.size() >= 4 * n) break;
    }

    std::vector<ObjectiveVector> cand_objs;
    cand_objs.reserve(candidate.size());
    for (std::size_t idx : candidate) cand_objs.push_back(pool.members[idx].objectives);
    const std::vector<double> crowd = crowding_distance_assignment(cand_objs);

    // (rank minimized, crowding maximized) treated as two objectives
    std::vector<ObjectiveVector> meta;
    meta.reserve(candidate.size());
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        meta.push_back({static_cast<double>(part.ranks[candidate[i]]), -crowd[i]});
    }
    const FrontPartition meta_part = fast_nondominated_sort(meta);

    std::vector<std::size_t> order(candidate.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (meta_part.ranks[a] != meta_part.ranks[b]) {
            return meta_part.ranks[a] < meta_part.ranks[b];
        }
        return crowd[a] > crowd[b];
    });

    Population out;
    out.generation = 0;
    out.members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ci = order[i];
        Individual ind = pool.members[candidate[ci]];
        ind.rank = part.ranks[candidate[ci]];
        ind.crowding = crowd[ci];
        out.members.push_back(std::move(ind));
    }
    return out;
}

}  // namespace moea
