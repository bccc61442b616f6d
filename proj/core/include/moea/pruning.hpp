#ifndef MOEA_PRUNING_HPP
#define MOEA_PRUNING_HPP

#include <cstddef>
#include <vector>

#include "moea/rng.hpp"
#include "moea/types.hpp"

namespace moea {

/// Row-major feature matrix used for clustering: per individual the
/// min-max-normalized decision coordinates, rank and finite-capped crowding.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

struct Cluster {
    std::vector<std::size_t> member_indices;
    std::vector<double> centroid;
    double avg_similarity = 0.0;  // P_k, filled by prune_population
};

struct PruneParams {
    int k_clusters = 0;  // 0 = auto: max(2, ceil(n / 20))
    double delta = 0.135;
    int kmeans_max_iter = 100;
    double kmeans_tol = 1e-9;
};

/// Clustering features per Alg-6 step 3. Infinite crowding is replaced by
/// twice the largest finite value before normalization; an all-infinite
/// column maps to 1, any other constant column to 0.
FeatureMatrix build_features(const Population& pop);

struct KmeansStats {
    std::vector<double> inertia_per_iteration;
    int iterations = 0;
    bool k_reduced = false;
};

/// Lloyd's algorithm with k-means++ seeding; empty clusters steal the point
/// farthest from its centroid. Always returns exactly k nonempty clusters
/// (k reduced to the row count when necessary).
std::vector<Cluster> kmeans(const FeatureMatrix& features, const PruneParams& params, Rng& rng,
                            KmeansStats* stats = nullptr);

/// Pairwise similarity p_ij = 1 - e_ij / e_max over the concatenated
/// min-max-normalized (decision, objective) vectors; e_max is the largest
/// pairwise distance in the population (p = 1 everywhere if e_max = 0).
double pairwise_similarity(std::size_t i, std::size_t j, const Population& pop);

/// All pairwise similarities of a population, computed once.
struct SimilarityMatrix {
    std::size_t n = 0;
    std::vector<double> values;  // n x n, symmetric, diagonal 1

    double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};
SimilarityMatrix similarity_matrix(const Population& pop);

/// Intra-class average similarity P_k: mean pairwise similarity over the
/// cluster's unordered pairs; singletons give 0.
double intra_class_similarity(const Cluster& cluster, const Population& pop);

/// Retained count n_k = max(1, ceil((1 - delta * P_k) * n_Uk)).
std::size_t retention_count(double p_k, double delta, std::size_t n_uk);

struct PruneStats {
    int k_used = 0;
    bool k_reduced = false;
    std::size_t removed = 0;
    std::vector<Cluster> clusters;
};

/// Cluster the population, score each cluster's average similarity, and keep
/// the per-cluster best (rank, crowding) members. Survivors are returned in
/// their original population order.
Population prune_population(const Population& pop, const PruneParams& params, Rng& rng,
                            PruneStats* stats = nullptr);

}  // namespace moea

#endif
