#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "moea/problems.hpp"

namespace moea {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double a, double b, std::size_t count) {
    std::vector<double> v(count);
    if (count == 1) {
        v[0] = a;
        return v;
    }
    for (std::size_t i = 0; i < count; ++i) {
        v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return v;
}

// Evenly spaced index subset; keeps endpoints. No-op when count >= size.
void thin(FrontSample& fs, std::size_t count) {
    const std::size_t size = fs.points.size();
    if (size <= count) return;
    FrontSample out;
    out.source = fs.source;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t idx = (count == 1) ? 0 : i * (size - 1) / (count - 1);
        out.points.push_back(fs.points[idx]);
        if (!fs.preimages.empty()) out.preimages.push_back(fs.preimages[idx]);
    }
    fs = std::move(out);
}

void dedup(FrontSample& fs) {
    std::set<ObjectiveVector> seen;
    FrontSample out;
    out.source = fs.source;
    for (std::size_t i = 0; i < fs.points.size(); ++i) {
        if (seen.insert(fs.points[i]).second) {
            out.points.push_back(fs.points[i]);
            if (!fs.preimages.empty()) out.preimages.push_back(fs.preimages[i]);
        }
    }
    fs = std::move(out);
}

void check_mutually_nondominated(const FrontSample& fs, const std::string& name) {
    for (std::size_t i = 0; i < fs.points.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.points.size(); ++j) {
            const Dominance d = dominates(fs.points[i], fs.points[j]);
            if (d == Dominance::FirstDominates || d == Dominance::SecondDominates) {
                throw std::runtime_error("front sample for " + name +
                                         " contains dominated points");
            }
        }
    }
}

DecisionVector uf_sin_tail(double x1, std::size_t n, double lo, double hi) {
    DecisionVector x(n);
    x[0] = x1;
    for (std::size_t j = 2; j <= n; ++j) {
        x[j - 1] = std::clamp(
            std::sin(6.0 * kPi * x1 + static_cast<double>(j) * kPi / static_cast<double>(n)), lo,
            hi);
    }
    return x;
}

FrontSample sample_sqrt_front(std::size_t count, std::size_t n_vars,
                              const std::function<DecisionVector(double)>& preimage) {
    // f2 = 1 - sqrt(f1) sampled uniformly in t = sqrt(f1).
    FrontSample fs;
    for (double t : linspace(0.0, 1.0, count)) {
        fs.points.push_back({t * t, 1.0 - t});
        fs.preimages.push_back(preimage(t * t));
    }
    (void)n_vars;
    return fs;
}

FrontSample sample_sch(std::size_t count) {
    FrontSample fs;
    for (double x : linspace(0.0, 2.0, count)) {
        fs.points.push_back({x * x, (x - 2.0) * (x - 2.0)});
        fs.preimages.push_back({x});
    }
    return fs;
}

FrontSample sample_fon(std::size_t count) {
    const double c = 1.0 / std::sqrt(3.0);
    FrontSample fs;
    for (double s : linspace(-c, c, count)) {
        fs.points.push_back({1.0 - std::exp(-3.0 * (s - c) * (s - c)),
                             1.0 - std::exp(-3.0 * (s + c) * (s + c))});
        fs.preimages.push_back({s, s, s});
    }
    return fs;
}

FrontSample sample_zdt2(std::size_t count) {
    FrontSample fs;
    for (double t : linspace(0.0, 1.0, count)) {
        fs.points.push_back({t, 1.0 - t * t});
        DecisionVector x(30, 0.0);
        x[0] = t;
        fs.preimages.push_back(std::move(x));
    }
    return fs;
}

FrontSample sample_zdt3(std::size_t count) {
    // The front is the non-dominated subset of f2 = 1 - sqrt(t) - t sin(10 pi t);
    // dense-sample, filter with a monotone sweep, then thin.
    const std::size_t dense = std::max<std::size_t>(10 * count, 10000);
    FrontSample fs;
    double best_f2 = std::numeric_limits<double>::infinity();
    for (double t : linspace(0.0, 1.0, dense)) {
        const double f2 = 1.0 - std::sqrt(t) - t * std::sin(10.0 * kPi * t);
        if (f2 < best_f2) {
            best_f2 = f2;
            fs.points.push_back({t, f2});
            DecisionVector x(30, 0.0);
            x[0] = t;
            fs.preimages.push_back(std::move(x));
        }
    }
    thin(fs, count);
    return fs;
}

FrontSample sample_zdt6(std::size_t count) {
    // f1 ranges over [f1_min, 1]; the minimizer of f1 solves tan(6 pi x) = 9 pi.
    const double x_star = std::atan(9.0 * kPi) / (6.0 * kPi);
    const double f1_min =
        1.0 - std::exp(-4.0 * x_star) * std::pow(std::sin(6.0 * kPi * x_star), 6);
    auto f1_of = [](double x) {
        return 1.0 - std::exp(-4.0 * x) * std::pow(std::sin(6.0 * kPi * x), 6);
    };
    FrontSample fs;
    for (double t : linspace(f1_min, 1.0, count)) {
        // invert f1 on the monotone piece [x_star, 1/6]
        double lo = x_star, hi = 1.0 / 6.0;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (f1_of(mid) < t ? lo : hi) = mid;
        }
        DecisionVector x(10, 0.0);
        x[0] = 0.5 * (lo + hi);
        const double f1 = f1_of(x[0]);
        fs.points.push_back({f1, 1.0 - f1 * f1});
        fs.preimages.push_back(std::move(x));
    }
    return fs;
}

FrontSample sample_dtlz1(std::size_t count) {
    // Systematic lattice on the simplex f1+f2+f3 = 0.5.
    std::size_t h = 1;
    while ((h + 1) * (h + 2) / 2 < count) ++h;
    FrontSample fs;
    const auto hd = static_cast<double>(h);
    for (std::size_t i = 0; i <= h; ++i) {
        for (std::size_t j = 0; i + j <= h; ++j) {
            const std::size_t k = h - i - j;
            const double f1 = 0.5 * static_cast<double>(i) / hd;
            const double f2 = 0.5 * static_cast<double>(j) / hd;
            const double f3 = 0.5 * static_cast<double>(k) / hd;
            fs.points.push_back({f1, f2, f3});
            DecisionVector x(7, 0.5);
            x[0] = 1.0 - static_cast<double>(k) / hd;
            x[1] = (i + j > 0) ? static_cast<double>(i) / static_cast<double>(i + j) : 0.5;
            fs.preimages.push_back(std::move(x));
        }
    }
    thin(fs, count);
    return fs;
}

FrontSample sample_sphere_octant(std::size_t count, std::size_t n_vars, double tail,
                                 bool dtlz4_angles) {
    // Unit-sphere octant via an angular grid; duplicates collapse at the pole.
    std::size_t m = 2;
    while (true) {
        FrontSample fs;
        for (double t1 : linspace(0.0, 1.0, m)) {
            for (double t2 : linspace(0.0, 1.0, m)) {
                const double th1 = t1 * kPi / 2.0;
                const double th2 = t2 * kPi / 2.0;
                fs.points.push_back({std::cos(th1) * std::cos(th2),
                                     std::cos(th1) * std::sin(th2), std::sin(th1)});
                DecisionVector x(n_vars, tail);
                x[0] = dtlz4_angles ? std::pow(t1, 0.01) : t1;
                x[1] = dtlz4_angles ? std::pow(t2, 0.01) : t2;
                fs.preimages.push_back(std::move(x));
            }
        }
        dedup(fs);
        if (fs.points.size() >= count || m > 4096) {
            thin(fs, count);
            return fs;
        }
        ++m;
    }
}

FrontSample sample_dtlz5_curve(std::size_t count, bool zero_tail) {
    FrontSample fs;
    const double c4 = std::cos(kPi / 4.0);
    const double s4 = std::sin(kPi / 4.0);
    for (double t : linspace(0.0, 1.0, count)) {
        const double th1 = t * kPi / 2.0;
        fs.points.push_back({std::cos(th1) * c4, std::cos(th1) * s4, std::sin(th1)});
        DecisionVector x(12, zero_tail ? 0.0 : 0.5);
        x[0] = t;
        x[1] = 0.5;
        fs.preimages.push_back(std::move(x));
    }
    return fs;
}

FrontSample sample_dtlz7(std::size_t count) {
    // Per-coordinate strict records of h(t) = t (1 + sin 3 pi t) define the
    // front patches; take their grid product.
    const std::size_t dense = 4000;
    std::vector<double> records;
    double best = -std::numeric_limits<double>::infinity();
    for (double t : linspace(0.0, 1.0, dense)) {
        const double h = t * (1.0 + std::sin(3.0 * kPi * t));
        if (h > best) {
            best = h;
            records.push_back(t);
        }
    }
    const auto r = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count))));
    std::vector<double> coords;
    if (records.size() <= r) {
        coords = records;
    } else {
        for (std::size_t i = 0; i < r; ++i) {
            coords.push_back(records[i * (records.size() - 1) / (r - 1)]);
        }
    }
    // the tail minimizes g at 1, so f3 = 2 * (3 - sum f_i (1 + sin 3 pi f_i) / 2)
    auto h_of = [](double t) { return t * (1.0 + std::sin(3.0 * kPi * t)); };
    FrontSample fs;
    for (double a : coords) {
        for (double b : coords) {
            fs.points.push_back({a, b, 6.0 - h_of(a) - h_of(b)});
            DecisionVector x(22, 0.0);
            x[0] = a;
            x[1] = b;
            fs.preimages.push_back(std::move(x));
        }
    }
    dedup(fs);
    thin(fs, count);
    return fs;
}

FrontSample sample_uf2(std::size_t count) {
    const std::size_t n = 30;
    FrontSample fs;
    for (double t : linspace(0.0, 1.0, count)) {
        const double x1 = t * t;
        DecisionVector x(n);
        x[0] = x1;
        for (std::size_t j = 2; j <= n; ++j) {
            const double jd = static_cast<double>(j);
            const double a =
                0.3 * x1 * x1 *
                    std::cos(24.0 * kPi * x1 + 4.0 * jd * kPi / static_cast<double>(n)) +
                0.6 * x1;
            const double phase = 6.0 * kPi * x1 + jd * kPi / static_cast<double>(n);
            x[j - 1] = (j % 2 == 1) ? a * std::cos(phase) : a * std::sin(phase);
        }
        fs.points.push_back({x1, 1.0 - t});
        fs.preimages.push_back(std::move(x));
    }
    return fs;
}

FrontSample sample_uf3(std::size_t count) {
    const std::size_t n = 30;
    FrontSample fs;
    for (double t : linspace(0.0, 1.0, count)) {
        const double x1 = t * t;
        DecisionVector x(n);
        x[0] = x1;
        for (std::size_t j = 2; j <= n; ++j) {
            const double jd = static_cast<double>(j);
            x[j - 1] = std::pow(
                x1, 0.5 * (1.0 + 3.0 * (jd - 2.0) / (static_cast<double>(n) - 2.0)));
        }
        fs.points.push_back({x1, 1.0 - t});
        fs.preimages.push_back(std::move(x));
    }
    return fs;
}

FrontSample sample_uf4(std::size_t count) {
    FrontSample fs;
    for (double t : linspace(0.0, 1.0, count)) {
        fs.points.push_back({t, 1.0 - t * t});
        fs.preimages.push_back(uf_sin_tail(t, 30, -2.0, 2.0));
    }
    return fs;
}

FrontSample sample_uf5(std::size_t count) {
    // The true front is the 2N+1 = 21 discrete points (i/2N, 1 - i/2N).
    FrontSample fs;
    for (int i = 0; i <= 20; ++i) {
        const double f1 = static_cast<double>(i) / 20.0;
        fs.points.push_back({f1, 1.0 - f1});
        fs.preimages.push_back(uf_sin_tail(f1, 30, -1.0, 1.0));
    }
    thin(fs, count);
    return fs;
}

FrontSample sample_uf6(std::size_t count) {
    // Isolated point (0, 1) plus the segments f1 in [1/4,1/2] and [3/4,1].
    FrontSample fs;
    fs.points.push_back({0.0, 1.0});
    fs.preimages.push_back(uf_sin_tail(0.0, 30, -1.0, 1.0));
    const std::size_t rest = count > 1 ? count - 1 : 1;
    for (double u : linspace(0.0, 0.5, rest)) {
        const double x1 = (u <= 0.25) ? 0.25 + u : 0.5 + u;
        fs.points.push_back({x1, 1.0 - x1});
        fs.preimages.push_back(uf_sin_tail(x1, 30, -1.0, 1.0));
    }
    dedup(fs);
    return fs;
}

FrontSample sample_uf7(std::size_t count) {
    FrontSample fs;
    for (double t : linspace(0.0, 1.0, count)) {
        fs.points.push_back({t, 1.0 - t});
        fs.preimages.push_back(uf_sin_tail(t * t * t * t * t, 30, -1.0, 1.0));
    }
    return fs;
}

DecisionVector uf3d_preimage(double x1, double x2) {
    const std::size_t n = 30;
    DecisionVector x(n);
    x[0] = x1;
    x[1] = x2;
    for (std::size_t j = 3; j <= n; ++j) {
        x[j - 1] = 2.0 * x2 *
                   std::sin(2.0 * kPi * x1 +
                            static_cast<double>(j) * kPi / static_cast<double>(n));
    }
    return x;
}

FrontSample sample_uf8_like(std::size_t count) {
    std::size_t m = 2;
    while (true) {
        FrontSample fs;
        for (double t1 : linspace(0.0, 1.0, m)) {
            for (double t2 : linspace(0.0, 1.0, m)) {
                fs.points.push_back({std::cos(0.5 * t1 * kPi) * std::cos(0.5 * t2 * kPi),
                                     std::cos(0.5 * t1 * kPi) * std::sin(0.5 * t2 * kPi),
                                     std::sin(0.5 * t1 * kPi)});
                fs.preimages.push_back(uf3d_preimage(t1, t2));
            }
        }
        dedup(fs);
        if (fs.points.size() >= count || m > 4096) {
            thin(fs, count);
            return fs;
        }
        ++m;
    }
}

FrontSample sample_uf9(std::size_t count) {
    // Two planar patches: x1 in [0, 1/4] or [3/4, 1], mapped through
    // (x1 x2, (1-x1) x2, 1-x2).
    std::size_t m = 2;
    while (true) {
        FrontSample fs;
        for (double u : linspace(0.0, 0.5, m)) {
            const double x1 = (u <= 0.25) ? u : 0.5 + u;
            for (double x2 : linspace(0.0, 1.0, m)) {
                fs.points.push_back({x1 * x2, (1.0 - x1) * x2, 1.0 - x2});
                fs.preimages.push_back(uf3d_preimage(x1, x2));
            }
        }
        dedup(fs);
        if (fs.points.size() >= count || m > 4096) {
            thin(fs, count);
            return fs;
        }
        ++m;
    }
}

FrontSample sample_from_file(const std::string& name, std::size_t count) {
    const auto path = reference_front_dir() / (name + "_front.dat");
    FrontSample fs;
    fs.source = FrontSample::Source::file;
    fs.points = read_front_file(path);
    thin(fs, count);
    return fs;
}

}  // namespace

FrontSample sample_true_front(const std::string& name, std::size_t count) {
    if (count < 2) {
        throw std::invalid_argument("sample_true_front: count must be >= 2");
    }
    // validates the name
    ProblemSpec spec = make_problem(name);

    FrontSample fs;
    if (name == "SCH") {
        fs = sample_sch(count);
    } else if (name == "FON") {
        fs = sample_fon(count);
    } else if (name == "POL" || name == "KUR") {
        fs = sample_from_file(name, count);
    } else if (name == "ZDT1") {
        fs = sample_sqrt_front(count, 30, [](double f1) {
            DecisionVector x(30, 0.0);
            x[0] = f1;
            return x;
        });
    } else if (name == "ZDT2") {
        fs = sample_zdt2(count);
    } else if (name == "ZDT3") {
        fs = sample_zdt3(count);
    } else if (name == "ZDT4") {
        fs = sample_sqrt_front(count, 10, [](double f1) {
            DecisionVector x(10, 0.0);
            x[0] = f1;
            return x;
        });
    } else if (name == "ZDT6") {
        fs = sample_zdt6(count);
    } else if (name == "DTLZ1") {
        fs = sample_dtlz1(count);
    } else if (name == "DTLZ2" || name == "DTLZ3") {
        fs = sample_sphere_octant(count, 12, 0.5, false);
    } else if (name == "DTLZ4") {
        fs = sample_sphere_octant(count, 12, 0.5, true);
    } else if (name == "DTLZ5") {
        fs = sample_dtlz5_curve(count, false);
    } else if (name == "DTLZ6") {
        fs = sample_dtlz5_curve(count, true);
    } else if (name == "DTLZ7") {
        fs = sample_dtlz7(count);
    } else if (name == "UF1") {
        fs = sample_sqrt_front(count, 30,
                               [](double f1) { return uf_sin_tail(f1, 30, -1.0, 1.0); });
    } else if (name == "UF2") {
        fs = sample_uf2(count);
    } else if (name == "UF3") {
        fs = sample_uf3(count);
    } else if (name == "UF4") {
        fs = sample_uf4(count);
    } else if (name == "UF5") {
        fs = sample_uf5(count);
    } else if (name == "UF6") {
        fs = sample_uf6(count);
    } else if (name == "UF7") {
        fs = sample_uf7(count);
    } else if (name == "UF8" || name == "UF10") {
        fs = sample_uf8_like(count);
    } else if (name == "UF9") {
        fs = sample_uf9(count);
    }

    check_mutually_nondominated(fs, spec.name);
    return fs;
}

}  // namespace moea
