#include "moea/problems.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace moea {
namespace {

constexpr double kPi = std::numbers::pi;

// ---- ZDT -------------------------------------------------------------

double zdt_g_linear(const DecisionVector& x) {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += x[i];
    return 1.0 + 9.0 * s / static_cast<double>(x.size() - 1);
}

ObjectiveVector zdt1(const DecisionVector& x) {
    const double f1 = x[0];
    const double g = zdt_g_linear(x);
    return {f1, g * (1.0 - std::sqrt(f1 / g))};
}

ObjectiveVector zdt2(const DecisionVector& x) {
    const double f1 = x[0];
    const double g = zdt_g_linear(x);
    return {f1, g * (1.0 - (f1 / g) * (f1 / g))};
}

ObjectiveVector zdt3(const DecisionVector& x) {
    const double f1 = x[0];
    const double g = zdt_g_linear(x);
    return {f1, g * (1.0 - std::sqrt(f1 / g) - (f1 / g) * std::sin(10.0 * kPi * f1))};
}

ObjectiveVector zdt4(const DecisionVector& x) {
    const double f1 = x[0];
    double g = 1.0 + 10.0 * static_cast<double>(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) {
        g += x[i] * x[i] - 10.0 * std::cos(4.0 * kPi * x[i]);
    }
    return {f1, g * (1.0 - std::sqrt(f1 / g))};
}

ObjectiveVector zdt6(const DecisionVector& x) {
    const double s6 = std::sin(6.0 * kPi * x[0]);
    const double f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(s6, 6);
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += x[i];
    const double g = 1.0 + 9.0 * std::pow(s / static_cast<double>(x.size() - 1), 0.25);
    return {f1, g * (1.0 - (f1 / g) * (f1 / g))};
}

// ---- classic two-objective problems -----------------------------------

ObjectiveVector sch(const DecisionVector& x) {
    return {x[0] * x[0], (x[0] - 2.0) * (x[0] - 2.0)};
}

ObjectiveVector fon(const DecisionVector& x) {
    const double c = 1.0 / std::sqrt(3.0);
    double s1 = 0.0;
    double s2 = 0.0;
    for (double xi : x) {
        s1 += (xi - c) * (xi - c);
        s2 += (xi + c) * (xi + c);
    }
    return {1.0 - std::exp(-s1), 1.0 - std::exp(-s2)};
}

ObjectiveVector pol(const DecisionVector& x) {
    const double a1 = 0.5 * std::sin(1.0) - 2.0 * std::cos(1.0) + std::sin(2.0) -
                      1.5 * std::cos(2.0);
    const double a2 = 1.5 * std::sin(1.0) - std::cos(1.0) + 2.0 * std::sin(2.0) -
                      0.5 * std::cos(2.0);
    const double b1 = 0.5 * std::sin(x[0]) - 2.0 * std::cos(x[0]) + std::sin(x[1]) -
                      1.5 * std::cos(x[1]);
    const double b2 = 1.5 * std::sin(x[0]) - std::cos(x[0]) + 2.0 * std::sin(x[1]) -
                      0.5 * std::cos(x[1]);
    return {1.0 + (a1 - b1) * (a1 - b1) + (a2 - b2) * (a2 - b2),
            (x[0] + 3.0) * (x[0] + 3.0) + (x[1] + 1.0) * (x[1] + 1.0)};
}

ObjectiveVector kur(const DecisionVector& x) {
    double f1 = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        f1 += -10.0 * std::exp(-0.2 * std::sqrt(x[i] * x[i] + x[i + 1] * x[i + 1]));
    }
    double f2 = 0.0;
    for (double xi : x) {
        f2 += std::pow(std::abs(xi), 0.8) + 5.0 * std::sin(xi * xi * xi);
    }
    return {f1, f2};
}

// ---- DTLZ (three objectives, standard k) -------------------------------

double dtlz_g_rastrigin(const DecisionVector& x, std::size_t k) {
    double g = 0.0;
    for (std::size_t i = x.size() - k; i < x.size(); ++i) {
        g += (x[i] - 0.5) * (x[i] - 0.5) - std::cos(20.0 * kPi * (x[i] - 0.5));
    }
    return 100.0 * (static_cast<double>(k) + g);
}

double dtlz_g_sphere(const DecisionVector& x, std::size_t k) {
    double g = 0.0;
    for (std::size_t i = x.size() - k; i < x.size(); ++i) {
        g += (x[i] - 0.5) * (x[i] - 0.5);
    }
    return g;
}

ObjectiveVector dtlz1(const DecisionVector& x) {
    const double g = dtlz_g_rastrigin(x, 5);
    const double c = 0.5 * (1.0 + g);
    return {c * x[0] * x[1], c * x[0] * (1.0 - x[1]), c * (1.0 - x[0])};
}

ObjectiveVector dtlz_spherical(double theta1, double theta2, double g) {
    return {(1.0 + g) * std::cos(theta1) * std::cos(theta2),
            (1.0 + g) * std::cos(theta1) * std::sin(theta2),
            (1.0 + g) * std::sin(theta1)};
}

ObjectiveVector dtlz2(const DecisionVector& x) {
    const double g = dtlz_g_sphere(x, 10);
    return dtlz_spherical(x[0] * kPi / 2.0, x[1] * kPi / 2.0, g);
}

ObjectiveVector dtlz3(const DecisionVector& x) {
    const double g = dtlz_g_rastrigin(x, 10);
    return dtlz_spherical(x[0] * kPi / 2.0, x[1] * kPi / 2.0, g);
}

ObjectiveVector dtlz4(const DecisionVector& x) {
    const double g = dtlz_g_sphere(x, 10);
    const double alpha = 100.0;
    return dtlz_spherical(std::pow(x[0], alpha) * kPi / 2.0,
                          std::pow(x[1], alpha) * kPi / 2.0, g);
}

ObjectiveVector dtlz5(const DecisionVector& x) {
    const double g = dtlz_g_sphere(x, 10);
    const double theta2 = kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[1]);
    return dtlz_spherical(x[0] * kPi / 2.0, theta2, g);
}

ObjectiveVector dtlz6(const DecisionVector& x) {
    double g = 0.0;
    for (std::size_t i = x.size() - 10; i < x.size(); ++i) g += std::pow(x[i], 0.1);
    const double theta2 = kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[1]);
    return dtlz_spherical(x[0] * kPi / 2.0, theta2, g);
}

ObjectiveVector dtlz7(const DecisionVector& x) {
    const std::size_t k = 20;
    double s = 0.0;
    for (std::size_t i = x.size() - k; i < x.size(); ++i) s += x[i];
    const double g = 1.0 + 9.0 * s / static_cast<double>(k);
    double h = 3.0;
    for (std::size_t i = 0; i < 2; ++i) {
        h -= x[i] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * x[i]));
    }
    return {x[0], x[1], (1.0 + g) * h};
}

// ---- UF (CEC-2009 unconstrained instances, n = 30) ----------------------

ObjectiveVector uf1(const DecisionVector& x) {
    const auto n = static_cast<double>(x.size());
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (std::size_t j = 2; j <= x.size(); ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + static_cast<double>(j) * kPi / n);
        if (j % 2 == 1) {
            s1 += y * y;
            ++c1;
        } else {
            s2 += y * y;
            ++c2;
        }
    }
    return {x[0] + 2.0 * s1 / c1, 1.0 - std::sqrt(x[0]) + 2.0 * s2 / c2};
}

ObjectiveVector uf2(const DecisionVector& x) {
    const auto n = static_cast<double>(x.size());
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (std::size_t j = 2; j <= x.size(); ++j) {
        const double jd = static_cast<double>(j);
        const double a = 0.3 * x[0] * x[0] * std::cos(24.0 * kPi * x[0] + 4.0 * jd * kPi / n) +
                         0.6 * x[0];
        double y;
        if (j % 2 == 1) {
            y = x[j - 1] - a * std::cos(6.0 * kPi * x[0] + jd * kPi / n);
            s1 += y * y;
            ++c1;
        } else {
            y = x[j - 1] - a * std::sin(6.0 * kPi * x[0] + jd * kPi / n);
            s2 += y * y;
            ++c2;
        }
    }
    return {x[0] + 2.0 * s1 / c1, 1.0 - std::sqrt(x[0]) + 2.0 * s2 / c2};
}

ObjectiveVector uf3(const DecisionVector& x) {
    const auto n = static_cast<double>(x.size());
    double s1 = 0.0, s2 = 0.0, p1 = 1.0, p2 = 1.0;
    int c1 = 0, c2 = 0;
    for (std::size_t j = 2; j <= x.size(); ++j) {
        const double jd = static_cast<double>(j);
        const double y =
            x[j - 1] - std::pow(x[0], 0.5 * (1.0 + 3.0 * (jd - 2.0) / (n - 2.0)));
        const double c = std::cos(20.0 * y * kPi / std::sqrt(jd));
        if (j % 2 == 1) {
            s1 += y * y;
            p1 *= c;
            ++c1;
        } else {
            s2 += y * y;
            p2 *= c;
            ++c2;
        }
    }
    return {x[0] + 2.0 / c1 * (4.0 * s1 - 2.0 * p1 + 2.0),
            1.0 - std::sqrt(x[0]) + 2.0 / c2 * (4.0 * s2 - 2.0 * p2 + 2.0)};
}

ObjectiveVector uf4(const DecisionVector& x) {
    const auto n = static_cast<double>(x.size());
    auto h = [](double t) { return std::abs(t) / (1.0 + std::exp(2.0 * std::abs(t))); };
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (std::size_t j = 2; j <= x.size(); ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + static_cast<double>(j) * kPi / n);
        if (j % 2 == 1) {
            s1 += h(y);
            ++c1;
        } else {
            s2 += h(y);
            ++c2;
        }
    }
    return {x[0] + 2.0 * s1 / c1, 1.0 - x[0] * x[0] + 2.0 * s2 / c2};
}

ObjectiveVector uf5(const DecisionVector& x) {
    const auto n = static_cast<double>(x.size());
    const double big_n = 10.0, eps = 0.1;
    auto h = [](double t) { return 2.0 * t * t - std::cos(4.0 * kPi * t) + 1.0; };
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (std::size_t j = 2; j <= x.size(); ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + static_cast<double>(j) * kPi / n);
        if (j % 2 == 1) {
            s1 += h(y);
            ++c1;
        } else {
            s2 += h(y);
            ++c2;
        }
    }
    const double hump = (1.0 / (2.0 * big_n) + eps) * std::abs(std::sin(2.0 * big_n * kPi * x[0]));
    return {x[0] + hump + 2.0 * s1 / c1, 1.0 - x[0] + hump + 2.0 * s2 / c2};
}

ObjectiveVector uf6(const DecisionVector& x) {
    const auto n = static_cast<double>(x.size());
    const double big_n = 2.0, eps = 0.1;
    double s1 = 0.0, s2 = 0.0, p1 = 1.0, p2 = 1.0;
    int c1 = 0, c2 = 0;
    for (std::size_t j = 2; j <= x.size(); ++j) {
        const double jd = static_cast<double>(j);
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + jd * kPi / n);
        const double c = std::cos(20.0 * y * kPi / std::sqrt(jd));
        if (j % 2 == 1) {
            s1 += y * y;
            p1 *= c;
            ++c1;
        } else {
            s2 += y * y;
            p2 *= c;
            ++c2;
        }
    }
    const double hump =
        std::max(0.0, 2.0 * (1.0 / (2.0 * big_n) + eps) * std::sin(2.0 * big_n * kPi * x[0]));
    return {x[0] + hump + 2.0 / c1 * (4.0 * s1 - 2.0 * p1 + 2.0),
            1.0 - x[0] + hump + 2.0 / c2 * (4.0 * s2 - 2.0 * p2 + 2.0)};
}

ObjectiveVector uf7(const DecisionVector& x) {
    const auto n = static_cast<double>(x.size());
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (std::size_t j = 2; j <= x.size(); ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + static_cast<double>(j) * kPi / n);
        if (j % 2 == 1) {
            s1 += y * y;
            ++c1;
        } else {
            s2 += y * y;
            ++c2;
        }
    }
    const double r = std::pow(x[0], 0.2);
    return {r + 2.0 * s1 / c1, 1.0 - r + 2.0 * s2 / c2};
}

// Three-objective UF instances share the tail term x_j - 2 x2 sin(2 pi x1 + j pi / n),
// split into groups by j mod 3.
void uf3d_tails(const DecisionVector& x, double (*h)(double), double out[3], int counts[3]) {
    const auto n = static_cast<double>(x.size());
    out[0] = out[1] = out[2] = 0.0;
    counts[0] = counts[1] = counts[2] = 0;
    for (std::size_t j = 3; j <= x.size(); ++j) {
        const double jd = static_cast<double>(j);
        const double y = x[j - 1] - 2.0 * x[1] * std::sin(2.0 * kPi * x[0] + jd * kPi / n);
        const int group = (j % 3 == 1) ? 0 : (j % 3 == 2) ? 1 : 2;
        out[group] += h(y);
        ++counts[group];
    }
}

double square_fn(double t) { return t * t; }
double uf10_h(double t) { return 4.0 * t * t - std::cos(8.0 * kPi * t) + 1.0; }

ObjectiveVector uf8(const DecisionVector& x) {
    double s[3];
    int c[3];
    uf3d_tails(x, square_fn, s, c);
    return {std::cos(0.5 * x[0] * kPi) * std::cos(0.5 * x[1] * kPi) + 2.0 * s[0] / c[0],
            std::cos(0.5 * x[0] * kPi) * std::sin(0.5 * x[1] * kPi) + 2.0 * s[1] / c[1],
            std::sin(0.5 * x[0] * kPi) + 2.0 * s[2] / c[2]};
}

ObjectiveVector uf9(const DecisionVector& x) {
    const double eps = 0.1;
    double s[3];
    int c[3];
    uf3d_tails(x, square_fn, s, c);
    const double e = std::max(0.0, (1.0 + eps) * (1.0 - 4.0 * (2.0 * x[0] - 1.0) * (2.0 * x[0] - 1.0)));
    return {0.5 * (e + 2.0 * x[0]) * x[1] + 2.0 * s[0] / c[0],
            0.5 * (e - 2.0 * x[0] + 2.0) * x[1] + 2.0 * s[1] / c[1],
            1.0 - x[1] + 2.0 * s[2] / c[2]};
}

ObjectiveVector uf10(const DecisionVector& x) {
    double s[3];
    int c[3];
    uf3d_tails(x, uf10_h, s, c);
    return {std::cos(0.5 * x[0] * kPi) * std::cos(0.5 * x[1] * kPi) + 2.0 * s[0] / c[0],
            std::cos(0.5 * x[0] * kPi) * std::sin(0.5 * x[1] * kPi) + 2.0 * s[1] / c[1],
            std::sin(0.5 * x[0] * kPi) + 2.0 * s[2] / c[2]};
}

Bounds uf_two_objective_bounds(std::size_t n, double lo, double hi) {
    Bounds b = Bounds::uniform(n, lo, hi);
    b.lower[0] = 0.0;
    b.upper[0] = 1.0;
    return b;
}

Bounds uf_three_objective_bounds(std::size_t n) {
    Bounds b = Bounds::uniform(n, -2.0, 2.0);
    b.lower[0] = b.lower[1] = 0.0;
    b.upper[0] = b.upper[1] = 1.0;
    return b;
}

Bounds zdt4_bounds() {
    Bounds b = Bounds::uniform(10, -5.0, 5.0);
    b.lower[0] = 0.0;
    b.upper[0] = 1.0;
    return b;
}

}  // namespace

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = {
        "SCH",   "FON",   "POL",   "KUR",   "ZDT1",  "ZDT2",  "ZDT3",
        "ZDT4",  "ZDT6",  "DTLZ1", "DTLZ2", "DTLZ3", "DTLZ4", "DTLZ5",
        "DTLZ6", "DTLZ7", "UF1",   "UF2",   "UF3",   "UF4",   "UF5",
        "UF6",   "UF7",   "UF8",   "UF9",   "UF10"};
    return names;
}

ProblemSpec make_problem(const std::string& name) {
    ProblemSpec p;
    p.name = name;
    p.has_analytic_front = true;

    if (name == "SCH") {
        p.n_vars = 1;
        p.n_objectives = 2;
        p.bounds = Bounds::uniform(1, -1000.0, 1000.0);
        p.objective = sch;
    } else if (name == "FON") {
        p.n_vars = 3;
        p.n_objectives = 2;
        p.bounds = Bounds::uniform(3, -4.0, 4.0);
        p.objective = fon;
    } else if (name == "POL") {
        p.n_vars = 2;
        p.n_objectives = 2;
        p.bounds = Bounds::uniform(2, -kPi, kPi);
        p.has_analytic_front = false;
        p.objective = pol;
    } else if (name == "KUR") {
        p.n_vars = 3;
        p.n_objectives = 2;
        p.bounds = Bounds::uniform(3, -5.0, 5.0);
        p.has_analytic_front = false;
        p.objective = kur;
    } else if (name == "ZDT1") {
        p.n_vars = 30;
        p.n_objectives = 2;
        p.bounds = Bounds::uniform(30, 0.0, 1.0);
        p.objective = zdt1;
    } else if (name == "ZDT2") {
        p.n_vars = 30;
        p.n_objectives = 2;
        p.bounds = Bounds::uniform(30, 0.0, 1.0);
        p.objective = zdt2;
    } else if (name == "ZDT3") {
        p.n_vars = 30;
        p.n_objectives = 2;
        p.bounds = Bounds::uniform(30, 0.0, 1.0);
        p.objective = zdt3;
    } else if (name == "ZDT4") {
        p.n_vars = 10;
        p.n_objectives = 2;
        p.bounds = zdt4_bounds();
        p.objective = zdt4;
    } else if (name == "ZDT6") {
        p.n_vars = 10;
        p.n_objectives = 2;
        p.bounds = Bounds::uniform(10, 0.0, 1.0);
        p.objective = zdt6;
    } else if (name == "DTLZ1") {
        p.n_vars = 7;
        p.n_objectives = 3;
        p.bounds = Bounds::uniform(7, 0.0, 1.0);
        p.objective = dtlz1;
    } else if (name == "DTLZ2") {
        p.n_vars = 12;
        p.n_objectives = 3;
        p.bounds = Bounds::uniform(12, 0.0, 1.0);
        p.objective = dtlz2;
    } else if (name == "DTLZ3") {
        p.n_vars = 12;
        p.n_objectives = 3;
        p.bounds = Bounds::uniform(12, 0.0, 1.0);
        p.objective = dtlz3;
    } else if (name == "DTLZ4") {
        p.n_vars = 12;
        p.n_objectives = 3;
        p.bounds = Bounds::uniform(12, 0.0, 1.0);
        p.objective = dtlz4;
    } else if (name == "DTLZ5") {
        p.n_vars = 12;
        p.n_objectives = 3;
        p.bounds = Bounds::uniform(12, 0.0, 1.0);
        p.objective = dtlz5;
    } else if (name == "DTLZ6") {
        p.n_vars = 12;
        p.n_objectives = 3;
        p.bounds = Bounds::uniform(12, 0.0, 1.0);
        p.objective = dtlz6;
    } else if (name == "DTLZ7") {
        p.n_vars = 22;
        p.n_objectives = 3;
        p.bounds = Bounds::uniform(22, 0.0, 1.0);
        p.objective = dtlz7;
    } else if (name == "UF1") {
        p.n_vars = 30;
        p.n_objectives = 2;
        p.bounds = uf_two_objective_bounds(30, -1.0, 1.0);
        p.objective = uf1;
    } else if (name == "UF2") {
        p.n_vars = 30;
        p.n_objectives = 2;
        p.bounds = uf_two_objective_bounds(30, -1.0, 1.0);
        p.objective = uf2;
    } else if (name == "UF3") {
        p.n_vars = 30;
        p.n_objectives = 2;
        p.bounds = Bounds::uniform(30, 0.0, 1.0);
        p.objective = uf3;
    } else if (name == "UF4") {
        p.n_vars = 30;
        p.n_objectives = 2;
        p.bounds = uf_two_objective_bounds(30, -2.0, 2.0);
        p.objective = uf4;
    } else if (name == "UF5") {
        p.n_vars = 30;
        p.n_objectives = 2;
        p.bounds = uf_two_objective_bounds(30, -1.0, 1.0);
        p.objective = uf5;
    } else if (name == "UF6") {
        p.n_vars = 30;
        p.n_objectives = 2;
        p.bounds = uf_two_objective_bounds(30, -1.0, 1.0);
        p.objective = uf6;
    } else if (name == "UF7") {
        p.n_vars = 30;
        p.n_objectives = 2;
        p.bounds = uf_two_objective_bounds(30, -1.0, 1.0);
        p.objective = uf7;
    } else if (name == "UF8") {
        p.n_vars = 30;
        p.n_objectives = 3;
        p.bounds = uf_three_objective_bounds(30);
        p.objective = uf8;
    } else if (name == "UF9") {
        p.n_vars = 30;
        p.n_objectives = 3;
        p.bounds = uf_three_objective_bounds(30);
        p.objective = uf9;
    } else if (name == "UF10") {
        p.n_vars = 30;
        p.n_objectives = 3;
        p.bounds = uf_three_objective_bounds(30);
        p.objective = uf10;
    } else {
        std::string msg = "unknown problem '" + name + "'; supported:";
        for (const auto& n : problem_names()) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    return p;
}

std::filesystem::path reference_front_dir() {
    if (const char* env = std::getenv("MOEA_DATA_DIR")) {
        return std::filesystem::path(env);
    }
#ifdef MOEA_DEFAULT_DATA_DIR
    return std::filesystem::path(MOEA_DEFAULT_DATA_DIR);
#else
    return std::filesystem::current_path();
#endif
}

std::vector<ObjectiveVector> read_front_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open reference front file: " + path.string());
    }
    std::vector<ObjectiveVector> points;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        ObjectiveVector v;
        double value;
        while (ls >> value) v.push_back(value);
        if (!v.empty()) points.push_back(std::move(v));
    }
    if (points.empty()) {
        throw std::runtime_error("reference front file has no points: " + path.string());
    }
    return points;
}

void write_front_file(const std::filesystem::path& path,
                      const std::vector<ObjectiveVector>& points,
                      const std::string& comment) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write reference front file: " + path.string());
    }
    if (!comment.empty()) out << "# " << comment << "\n";
    char buf[64];
    for (const auto& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", p[i]);
            out << (i ? " " : "") << buf;
        }
        out << "\n";
    }
}

std::vector<ObjectiveVector> nondominated_filter(const std::vector<ObjectiveVector>& points) {
    std::vector<ObjectiveVector> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
            if (j == i) continue;
            if (dominates(points[j], points[i]) == Dominance::FirstDominates) dominated = true;
        }
        if (!dominated) kept.push_back(points[i]);
    }
    return kept;
}

}  // namespace moea
