// Times the OpenMP sweep kernels against their serial references.
//
//   ./bench_sweeps [base_count] [refine] [zeros]

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ebp/blaschke.hpp"
#include "ebp/boundary.hpp"
#include "ebp/modelspace.hpp"
#include "ebp/sweep.hpp"
#include "ebp/zeroseq.hpp"

namespace {

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int base = argc > 1 ? std::atoi(argv[1]) : 16384;
    const int refine = argc > 2 ? std::atoi(argv[2]) : 64;
    const int count = argc > 3 ? std::atoi(argv[3]) : 30;

    const auto zeros = ebp::generate_geometric(1.0, 0.5, count, ebp::AngleRule::uniform_random(7));
    const ebp::BlaschkeProduct product{zeros};
    const auto grid = ebp::make_grid(zeros, base, refine);

    const auto model_zeros =
        ebp::generate_geometric(1.0, 0.25, std::min(count, 20), ebp::AngleRule::uniform_random(7));
    std::vector<std::complex<double>> beta(model_zeros.size(), {1.0, 0.5});
    const ebp::ModelFunction f{model_zeros, std::move(beta)};
    const auto model_grid = ebp::make_grid(model_zeros, base, refine);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("grid nodes: %zu (boundary), %zu (model)\n\n", grid.size(), model_grid.size());
    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

    struct RowSpec {
        const char* name;
        double t_serial;
        double t_parallel;
    };
    std::vector<RowSpec> rows;

    rows.push_back({"boundary_derivative_sweep",
                    time_best_of(3, [&] { ebp::serial::boundary_derivative_sweep(product, grid); }),
                    time_best_of(3, [&] { ebp::boundary_derivative_sweep(product, grid); })});
    rows.push_back({"boundary_value_sweep",
                    time_best_of(3, [&] { ebp::serial::boundary_value_sweep(product, grid); }),
                    time_best_of(3, [&] { ebp::boundary_value_sweep(product, grid); })});
    rows.push_back({"log_abs_sweep (r=1-2^-8)",
                    time_best_of(3, [&] { ebp::serial::log_abs_sweep(product, 1.0 - 1.0 / 256, grid); }),
                    time_best_of(3, [&] { ebp::log_abs_sweep(product, 1.0 - 1.0 / 256, grid); })});
    rows.push_back({"model_derivative_sweep",
                    time_best_of(3, [&] { ebp::serial::model_derivative_sweep(f, 1.0, model_grid); }),
                    time_best_of(3, [&] { ebp::model_derivative_sweep(f, 1.0, model_grid); })});

    for (const auto& row : rows)
        std::printf("%-28s %12.4f %12.4f %7.2fx\n", row.name, row.t_serial, row.t_parallel,
                    row.t_serial / row.t_parallel);
    return 0;
}
