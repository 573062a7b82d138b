// Compares the serial sweep path against the OpenMP pool on a parabolic
// (r, v) grid and prints the speedup.

#include "bondsim/report.hpp"

#include <chrono>
#include <cstdio>
#include <thread>

int main() {
    bondsim::Scenario base;
    base.model = bondsim::ModelKind::Parabolic;
    base.materials = bondsim::default_params();
    base.materials.K_fabric = 0.17;
    base.stiffness = bondsim::StiffnessModel::quadratic(base.materials);
    base.grid.n_intervals = 100;
    base.parabolic.tau_end = 3.0;

    bondsim::SweepGrid grid;
    grid.model = bondsim::ModelKind::Parabolic;
    grid.r_values = {0.6, 0.7, 0.8, 0.9, 0.95};
    grid.v_values = {0.6, 1.0, 2.0, 6.0};

    auto time_sweep = [&](int workers, const char* dir) {
        auto start = std::chrono::steady_clock::now();
        bondsim::SweepResult res = bondsim::run_sweep(grid, base, dir, workers);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        for (const auto& row : res.rows)
            if (!row.error.empty())
                std::fprintf(stderr, "cell r=%g v=%g failed: %s\n", row.r, row.v,
                             row.error.c_str());
        return secs;
    };

    double serial = time_sweep(1, "bench_serial");
    double parallel = time_sweep(0, "bench_parallel");
    unsigned hw = std::thread::hardware_concurrency();
    std::printf("cells: %zu\n", grid.r_values.size() * grid.v_values.size());
    std::printf("serial reference: %.3f s\n", serial);
    std::printf("openmp (%u threads): %.3f s\n", hw, parallel);
    std::printf("speedup: %.2fx\n", serial / parallel);
    return 0;
}
