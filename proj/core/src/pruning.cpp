#include "moea/pruning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "moea/nsga2.hpp"

namespace moea {
namespace {

void minmax_normalize_column(std::vector<double>& column) {
    const auto [lo_it, hi_it] = std::minmax_element(column.begin(), column.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (hi > lo) {
        for (double& v : column) v = (v - lo) / (hi - lo);
    } else {
        std::fill(column.begin(), column.end(), 0.0);
    }
}

int resolve_k(const PruneParams& params, std::size_t n, bool* reduced) {
    int k;
    if (params.k_clusters == 0) {
        k = std::max<int>(2, static_cast<int>((n + 19) / 20));
    } else {
        k = params.k_clusters;
        if (k < 2 && n >= 2) {
            throw std::invalid_argument("kmeans: k_clusters must be >= 2");
        }
    }
    if (reduced) *reduced = false;
    if (static_cast<std::size_t>(k) > n) {
        k = static_cast<int>(n);
        if (reduced) *reduced = true;
    }
    return k;
}

double sq_dist(const FeatureMatrix& f, std::size_t row, const std::vector<double>& centroid) {
    double s = 0.0;
    for (std::size_t c = 0; c < f.cols; ++c) {
        const double d = f.at(row, c) - centroid[c];
        s += d * d;
    }
    return s;
}

double sq_dist_vectors(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        const double d = a[c] - b[c];
        s += d * d;
    }
    return s;
}

// Normalized (decision, objective) feature rows for similarity.
FeatureMatrix similarity_features(const Population& pop) {
    const std::size_t n = pop.size();
    const std::size_t nd = pop.members.front().decision.size();
    const std::size_t no = pop.members.front().objectives.size();
    FeatureMatrix f;
    f.rows = n;
    f.cols = nd + no;
    f.data.resize(n * f.cols);
    std::vector<double> column(n);
    for (std::size_t c = 0; c < f.cols; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            column[i] = (c < nd) ? pop.members[i].decision[c]
                                 : pop.members[i].objectives[c - nd];
        }
        minmax_normalize_column(column);
        for (std::size_t i = 0; i < n; ++i) f.at(i, c) = column[i];
    }
    return f;
}

SimilarityMatrix similarity_from_features(const FeatureMatrix& f) {
    const std::size_t n = f.rows;
    std::vector<double> dist(n * n, 0.0);
    double e_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < f.cols; ++c) {
                const double d = f.at(i, c) - f.at(j, c);
                s += d * d;
            }
            const double e = std::sqrt(s);
            dist[i * n + j] = e;
            dist[j * n + i] = e;
            e_max = std::max(e_max, e);
        }
    }
    SimilarityMatrix sim;
    sim.n = n;
    sim.values.assign(n * n, 1.0);
    if (e_max > 0.0) {
        for (std::size_t i = 0; i < n * n; ++i) {
            sim.values[i] = 1.0 - dist[i] / e_max;
        }
    }
    return sim;
}

}  // namespace

FeatureMatrix build_features(const Population& pop) {
    if (pop.empty()) {
        throw std::invalid_argument("build_features: empty population");
    }
    const std::size_t n = pop.size();
    const std::size_t nd = pop.members.front().decision.size();
    FeatureMatrix f;
    f.rows = n;
    f.cols = nd + 2;
    f.data.resize(n * f.cols);

    std::vector<double> column(n);
    for (std::size_t c = 0; c < nd; ++c) {
        for (std::size_t i = 0; i < n; ++i) column[i] = pop.members[i].decision[c];
        minmax_normalize_column(column);
        for (std::size_t i = 0; i < n; ++i) f.at(i, c) = column[i];
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!pop.members[i].has_rank() || !pop.members[i].has_crowding()) {
            throw std::invalid_argument("build_features: rank/crowding not set");
        }
        column[i] = static_cast<double>(pop.members[i].rank);
    }
    minmax_normalize_column(column);
    for (std::size_t i = 0; i < n; ++i) f.at(i, nd) = column[i];

    // crowding: cap the infinity sentinel at twice the largest finite value
    double max_finite = -1.0;
    bool any_finite = false;
    for (const auto& m : pop.members) {
        if (std::isfinite(m.crowding)) {
            max_finite = std::max(max_finite, m.crowding);
            any_finite = true;
        }
    }
    if (!any_finite) {
        for (std::size_t i = 0; i < n; ++i) f.at(i, nd + 1) = 1.0;
    } else {
        const double cap = 2.0 * max_finite;
        for (std::size_t i = 0; i < n; ++i) {
            const double c = pop.members[i].crowding;
            column[i] = std::isfinite(c) ? c : cap;
        }
        minmax_normalize_column(column);
        for (std::size_t i = 0; i < n; ++i) f.at(i, nd + 1) = column[i];
    }
    return f;
}

std::vector<Cluster> kmeans(const FeatureMatrix& features, const PruneParams& params, Rng& rng,
                            KmeansStats* stats) {
    const std::size_t n = features.rows;
    if (n == 0) {
        throw std::invalid_argument("kmeans: no rows");
    }
    bool reduced = false;
    const int k = resolve_k(params, n, &reduced);
    if (stats) {
        *stats = {};
        stats->k_reduced = reduced;
    }
    const auto ku = static_cast<std::size_t>(k);

    // k-means++ seeding
    std::vector<std::vector<double>> centroids;
    centroids.reserve(ku);
    std::vector<double> row0(features.cols);
    auto copy_row = [&](std::size_t r) {
        std::vector<double> v(features.cols);
        for (std::size_t c = 0; c < features.cols; ++c) v[c] = features.at(r, c);
        return v;
    };
    centroids.push_back(copy_row(rng.index(n)));
    std::vector<double> d2(n);
    while (centroids.size() < ku) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : centroids) best = std::min(best, sq_dist(features, i, c));
            d2[i] = best;
            total += best;
        }
        std::size_t pick = 0;
        if (total > 0.0) {
            const double r = rng.uniform() * total;
            double acc = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                acc += d2[i];
                if (acc >= r) {
                    pick = i;
                    break;
                }
            }
        } else {
            pick = centroids.size() % n;  // all points coincide with centroids
        }
        centroids.push_back(copy_row(pick));
    }

    auto assign = [&](std::vector<std::size_t>& labels) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t arg = 0;
            for (std::size_t c = 0; c < ku; ++c) {
                const double d = sq_dist(features, i, centroids[c]);
                if (d < best) {
                    best = d;
                    arg = c;
                }
            }
            labels[i] = arg;
        }
    };

    // Empty clusters steal the point farthest from its own centroid; the
    // stolen point becomes the cluster centroid, so inertia never increases.
    auto repair_empty = [&](std::vector<std::size_t>& labels) {
        std::vector<std::size_t> sizes(ku, 0);
        for (std::size_t l : labels) ++sizes[l];
        for (std::size_t c = 0; c < ku; ++c) {
            if (sizes[c] > 0) continue;
            double worst = -1.0;
            std::size_t victim = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (sizes[labels[i]] <= 1) continue;
                const double d = sq_dist(features, i, centroids[labels[i]]);
                if (d > worst) {
                    worst = d;
                    victim = i;
                }
            }
            --sizes[labels[victim]];
            labels[victim] = c;
            ++sizes[c];
            centroids[c] = copy_row(victim);
        }
    };

    std::vector<std::size_t> labels;
    assign(labels);
    repair_empty(labels);

    std::vector<std::size_t> sizes(ku);
    int iter = 0;
    for (; iter < params.kmeans_max_iter; ++iter) {
        if (stats) {
            double inertia = 0.0;
            for (std::size_t i = 0; i < n; ++i) inertia += sq_dist(features, i, centroids[labels[i]]);
            stats->inertia_per_iteration.push_back(inertia);
        }
        // centroid update
        double shift = 0.0;
        std::fill(sizes.begin(), sizes.end(), std::size_t{0});
        std::vector<std::vector<double>> sums(ku, std::vector<double>(features.cols, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            ++sizes[labels[i]];
            for (std::size_t c = 0; c < features.cols; ++c) {
                sums[labels[i]][c] += features.at(i, c);
            }
        }
        for (std::size_t c = 0; c < ku; ++c) {
            for (std::size_t j = 0; j < features.cols; ++j) {
                sums[c][j] /= static_cast<double>(sizes[c]);
            }
            shift = std::max(shift, std::sqrt(sq_dist_vectors(sums[c], centroids[c])));
            centroids[c] = std::move(sums[c]);
        }

        std::vector<std::size_t> new_labels;
        assign(new_labels);
        repair_empty(new_labels);
        const bool stable = (new_labels == labels);
        labels = std::move(new_labels);
        if (stable && shift < params.kmeans_tol) {
            ++iter;
            break;
        }
    }
    if (stats) stats->iterations = iter;

    std::vector<Cluster> clusters(ku);
    for (std::size_t c = 0; c < ku; ++c) clusters[c].centroid = centroids[c];
    for (std::size_t i = 0; i < n; ++i) clusters[labels[i]].member_indices.push_back(i);
    return clusters;
}

double pairwise_similarity(std::size_t i, std::size_t j, const Population& pop) {
    if (i >= pop.size() || j >= pop.size()) {
        throw std::invalid_argument("pairwise_similarity: index out of range");
    }
    const SimilarityMatrix sim = similarity_matrix(pop);
    return sim.at(i, j);
}

SimilarityMatrix similarity_matrix(const Population& pop) {
    if (pop.empty()) {
        throw std::invalid_argument("similarity_matrix: empty population");
    }
    return similarity_from_features(similarity_features(pop));
}

double intra_class_similarity(const Cluster& cluster, const Population& pop) {
    if (cluster.member_indices.empty()) {
        throw std::invalid_argument("intra_class_similarity: empty cluster");
    }
    if (cluster.member_indices.size() < 2) return 0.0;
    const SimilarityMatrix sim = similarity_matrix(pop);
    double total = 0.0;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < cluster.member_indices.size(); ++a) {
        for (std::size_t b = a + 1; b < cluster.member_indices.size(); ++b) {
            total += sim.at(cluster.member_indices[a], cluster.member_indices[b]);
            ++pairs;
        }
    }
    return total / static_cast<double>(pairs);
}

std::size_t retention_count(double p_k, double delta, std::size_t n_uk) {
    if (!(p_k >= 0.0 && p_k <= 1.0)) {
        throw std::invalid_argument("retention_count: P_k must be in [0, 1]");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("retention_count: delta must be in (0, 1)");
    }
    if (n_uk == 0) {
        throw std::invalid_argument("retention_count: empty class");
    }
    const double kept = (1.0 - delta * p_k) * static_cast<double>(n_uk);
    auto n_k = static_cast<std::size_t>(std::ceil(kept));
    return std::clamp<std::size_t>(n_k, 1, n_uk);
}

Population prune_population(const Population& pop, const PruneParams& params, Rng& rng,
                            PruneStats* stats) {
    if (pop.empty()) {
        throw std::invalid_argument("prune_population: empty population");
    }
    for (const auto& m : pop.members) {
        if (!m.has_rank() || !m.has_crowding()) {
            throw std::invalid_argument("prune_population: rank/crowding not set");
        }
    }

    const FeatureMatrix features = build_features(pop);
    KmeansStats kstats;
    std::vector<Cluster> clusters = kmeans(features, params, rng, &kstats);
    const SimilarityMatrix sim = similarity_from_features(similarity_features(pop));

    std::vector<std::size_t> kept;
    for (auto& cluster : clusters) {
        double p_k = 0.0;
        if (cluster.member_indices.size() >= 2) {
            double total = 0.0;
            std::size_t pairs = 0;
            for (std::size_t a = 0; a < cluster.member_indices.size(); ++a) {
                for (std::size_t b = a + 1; b < cluster.member_indices.size(); ++b) {
                    total += sim.at(cluster.member_indices[a], cluster.member_indices[b]);
                    ++pairs;
                }
            }
            p_k = total / static_cast<double>(pairs);
        }
        cluster.avg_similarity = p_k;

        const std::size_t n_k = retention_count(p_k, params.delta, cluster.member_indices.size());
        std::vector<std::size_t> order = cluster.member_indices;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const Individual& ia = pop.members[a];
            const Individual& ib = pop.members[b];
            if (ia.rank != ib.rank) return ia.rank < ib.rank;
            return ia.crowding > ib.crowding;
        });
        kept.insert(kept.end(), order.begin(), order.begin() + static_cast<long>(n_k));
    }

    std::sort(kept.begin(), kept.end());
    Population out;
    out.generation = pop.generation;
    out.members.reserve(kept.size());
    for (std::size_t idx : kept) out.members.push_back(pop.members[idx]);

    if (stats) {
        stats->k_used = static_cast<int>(clusters.size());
        stats->k_reduced = kstats.k_reduced;
        stats->removed = pop.size() - out.size();
        stats->clusters = std::move(clusters);
    }
    return out;
}

}  // namespace moea
