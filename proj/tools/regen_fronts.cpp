// Regenerates the bundled reference fronts for the problems without a
// closed-form Pareto front (POL, KUR): evaluate a uniform decision-space
// grid of at least 1e6 points, keep the non-dominated set, thin to 1000
// points, and write the front files.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "moea/problems.hpp"

namespace {

using moea::ObjectiveVector;

// Non-dominated filter for two objectives: sort by (f1, f2), sweep keeping
// strictly decreasing f2. Also drops duplicates.
std::vector<ObjectiveVector> pareto_sweep(std::vector<ObjectiveVector> points) {
    std::sort(points.begin(), points.end());
    std::vector<ObjectiveVector> front;
    double best_f2 = std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
        if (p[1] < best_f2) {
            best_f2 = p[1];
            front.push_back(p);
        }
    }
    return front;
}

std::vector<ObjectiveVector> thin(const std::vector<ObjectiveVector>& points, std::size_t count) {
    if (points.size() <= count) return points;
    std::vector<ObjectiveVector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(points[i * (points.size() - 1) / (count - 1)]);
    }
    return out;
}

std::vector<ObjectiveVector> grid_front_2d(const moea::ProblemSpec& p, std::size_t per_dim) {
    std::vector<ObjectiveVector> values;
    values.reserve(per_dim * per_dim);
    moea::DecisionVector x(2);
    for (std::size_t i = 0; i < per_dim; ++i) {
        x[0] = p.bounds.lower[0] +
               p.bounds.width(0) * static_cast<double>(i) / static_cast<double>(per_dim - 1);
        for (std::size_t j = 0; j < per_dim; ++j) {
            x[1] = p.bounds.lower[1] +
                   p.bounds.width(1) * static_cast<double>(j) / static_cast<double>(per_dim - 1);
            values.push_back(p.objective(x));
        }
    }
    return pareto_sweep(std::move(values));
}

std::vector<ObjectiveVector> grid_front_3d(const moea::ProblemSpec& p, std::size_t per_dim) {
    std::vector<ObjectiveVector> values;
    values.reserve(per_dim * per_dim * per_dim);
    moea::DecisionVector x(3);
    for (std::size_t i = 0; i < per_dim; ++i) {
        x[0] = p.bounds.lower[0] +
               p.bounds.width(0) * static_cast<double>(i) / static_cast<double>(per_dim - 1);
        for (std::size_t j = 0; j < per_dim; ++j) {
            x[1] = p.bounds.lower[1] +
                   p.bounds.width(1) * static_cast<double>(j) / static_cast<double>(per_dim - 1);
            for (std::size_t k = 0; k < per_dim; ++k) {
                x[2] = p.bounds.lower[2] + p.bounds.width(2) * static_cast<double>(k) /
                                               static_cast<double>(per_dim - 1);
                values.push_back(p.objective(x));
            }
        }
    }
    return pareto_sweep(std::move(values));
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path out_dir =
        argc > 1 ? std::filesystem::path(argv[1]) : moea::reference_front_dir();
    std::filesystem::create_directories(out_dir);

    {
        const auto pol = moea::make_problem("POL");
        auto front = thin(grid_front_2d(pol, 1024), 1000);
        moea::write_front_file(out_dir / "POL_front.dat", front,
                               "POL reference front: 1024^2 decision grid, non-dominated, "
                               "thinned to 1000");
        std::printf("POL: %zu points -> %s\n", front.size(),
                    (out_dir / "POL_front.dat").c_str());
    }
    {
        const auto kur = moea::make_problem("KUR");
        auto front = thin(grid_front_3d(kur, 250), 1000);
        moea::write_front_file(out_dir / "KUR_front.dat", front,
                               "KUR reference front: 250^3 decision grid, non-dominated, "
                               "thinned to 1000");
        std::printf("KUR: %zu points -> %s\n", front.size(),
                    (out_dir / "KUR_front.dat").c_str());
    }
    return 0;
}
