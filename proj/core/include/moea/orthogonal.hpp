#ifndef MOEA_ORTHOGONAL_HPP
#define MOEA_ORTHOGONAL_HPP

#include <cstddef>
#include <vector>

#include "moea/rng.hpp"
#include "moea/types.hpp"

namespace moea {

/// Strength-2 orthogonal array L_M(Q^F): every column carries each level
/// M/Q times, and every ordered level pair appears M/Q^2 times across any
/// two columns. Entries are 1-based levels.
struct OrthogonalArray {
    int levels_q = 0;
    int factors_f = 0;
    std::size_t rows_m = 0;
    std::vector<int> cells;  // row-major, rows_m x factors_f

    int at(std::size_t row, int col) const {
        return cells[row * static_cast<std::size_t>(factors_f) + static_cast<std::size_t>(col)];
    }
};

inline constexpr std::size_t kDefaultOaRowCap = 1000000;

/// Modular construction over GF(Q): basic columns from base-Q digits of the
/// row index, non-basic columns as (a_s * t + a_j) mod Q. Q must be prime.
OrthogonalArray construct_orthogonal_array(int q, int f,
                                           std::size_t row_cap = kDefaultOaRowCap);

/// Check both balance invariants; throws std::logic_error on violation.
void verify_orthogonal_array(const OrthogonalArray& oa);

/// Equal-width split of the widest dimension into S boxes.
struct SubspaceSet {
    std::vector<Bounds> subspaces;
    std::size_t split_dim = 0;
};
SubspaceSet segment_space(const Bounds& b, int s_count);

/// Parameters of the self-adaptive orthogonal crossover.
struct SocParams {
    int q_levels = 3;
    /// Low-similarity threshold on |p1_i - p2_i|. Scalar form; when
    /// theta0_per_dim is non-empty it overrides the scalar per dimension.
    double theta0 = 1e-4;
    std::vector<double> theta0_per_dim;
    std::size_t row_cap = kDefaultOaRowCap;
};

/// Deterministic crossover: levels discretize each low-similarity dimension
/// across the parents' span, an orthogonal array picks Q^J level
/// combinations, high-similarity positions take the parent midpoint.
/// Identical parents (t = 0) return {p1, p2}.
std::vector<DecisionVector> soc_crossover(const DecisionVector& p1, const DecisionVector& p2,
                                          const SocParams& params);

struct InitParams {
    int subspaces = 4;   // S
    int q_levels = 3;    // Q0, prime
    double theta0 = 1e-4;  // relative low-similarity threshold per dimension width
};

struct InitStats {
    std::size_t pool_size = 0;
    std::size_t random_topup = 0;
};

/// Orthogonal population initialization: SOC over each subspace's corner
/// pair, candidate set grown front-by-front to 4n, then the best n under
/// the (rank minimized, crowding maximized) meta-objectives. Falls back to
/// uniform random individuals if the pool runs short.
Population orthogonal_initialize(const ProblemSpec& problem, std::size_t n,
                                 const InitParams& params, Rng& rng,
                                 InitStats* stats = nullptr);

}  // namespace moea

#endif
