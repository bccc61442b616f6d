#include "moea/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moea {
namespace {

double squared_euclidean(const ObjectiveVector& a, const ObjectiveVector& b) {
    double s = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) {
        const double d = a[m] - b[m];
        s += d * d;
    }
    return s;
}

// Summing in sorted order keeps the result independent of input order.
double ordered_sum(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

}  // namespace

double gd(const std::vector<ObjectiveVector>& a, const FrontSample& reference) {
    if (a.empty() || reference.points.empty()) {
        throw std::invalid_argument("gd: empty input");
    }
    std::vector<double> d_sq;
    d_sq.reserve(a.size());
    for (const auto& ai : a) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : reference.points) {
            best = std::min(best, squared_euclidean(ai, p));
        }
        d_sq.push_back(best);
    }
    return std::sqrt(ordered_sum(std::move(d_sq))) / static_cast<double>(a.size());
}

double sp(const std::vector<ObjectiveVector>& a) {
    if (a.size() < 2) {
        throw std::invalid_argument("sp: need at least two points");
    }
    const std::size_t n = a.size();
    std::vector<double> d(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double l1 = 0.0;
            for (std::size_t m = 0; m < a[i].size(); ++m) {
                l1 += std::abs(a[i][m] - a[j][m]);
            }
            d[i] = std::min(d[i], l1);
        }
    }
    const double mean = ordered_sum(d) / static_cast<double>(n);
    std::vector<double> sq;
    sq.reserve(n);
    for (double di : d) sq.push_back((mean - di) * (mean - di));
    return std::sqrt(ordered_sum(std::move(sq)) / static_cast<double>(n - 1));
}

double igd(const std::vector<ObjectiveVector>& a, const FrontSample& reference) {
    if (a.empty() || reference.points.empty()) {
        throw std::invalid_argument("igd: empty input");
    }
    const std::size_t n_obj = reference.points.front().size();
    std::vector<double> lo(n_obj, std::numeric_limits<double>::infinity());
    std::vector<double> hi(n_obj, -std::numeric_limits<double>::infinity());
    for (const auto& p : reference.points) {
        for (std::size_t m = 0; m < n_obj; ++m) {
            lo[m] = std::min(lo[m], p[m]);
            hi[m] = std::max(hi[m], p[m]);
        }
    }
    std::vector<double> inv_range(n_obj, 0.0);
    for (std::size_t m = 0; m < n_obj; ++m) {
        if (hi[m] > lo[m]) inv_range[m] = 1.0 / (hi[m] - lo[m]);
    }

    std::vector<double> dist;
    dist.reserve(reference.points.size());
    for (const auto& p : reference.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& ai : a) {
            double s = 0.0;
            for (std::size_t m = 0; m < n_obj; ++m) {
                const double d = (p[m] - ai[m]) * inv_range[m];
                s += d * d;
            }
            best = std::min(best, s);
        }
        dist.push_back(std::sqrt(best));
    }
    return ordered_sum(std::move(dist)) / static_cast<double>(reference.points.size());
}

IndicatorReport compute_indicators(const std::vector<ObjectiveVector>& a,
                                   const FrontSample& reference,
                                   const std::string& reference_id) {
    IndicatorReport r;
    r.gd = gd(a, reference);
    r.sp = sp(a);
    r.igd = igd(a, reference);
    r.n_points = a.size();
    r.reference_id = reference_id;
    return r;
}

}  // namespace moea
