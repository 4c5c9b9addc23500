// Wall-clock comparison of the serial reference kernels against the
// OpenMP-parallel defaults. The outputs are asserted equal before timing is
// reported, so a speedup line here is also a correctness witness.

#include "bing/chart_dynamics.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        double t0 = now_seconds();
        f();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx\n", name,
                serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t grid = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 768;
    std::size_t samples = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 2'000'000;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif
    std::printf("grid %zu, seam samples %zu\n\n", grid, samples);

    using bing::ExecPolicy;

    {
        auto serial_scan = bing::kp_grid_scan(2, 3, grid, 0.0, ExecPolicy::serial);
        auto parallel_scan = bing::kp_grid_scan(2, 3, grid, 0.0, ExecPolicy::parallel);
        if (serial_scan.candidates.size() != parallel_scan.candidates.size() ||
            serial_scan.min_residual_excluded != parallel_scan.min_residual_excluded) {
            std::fprintf(stderr, "kp_grid_scan policies disagree\n");
            return 1;
        }
        double ts = time_best_of(3, [&] { bing::kp_grid_scan(2, 3, grid, 0.0, ExecPolicy::serial); });
        double tp = time_best_of(3, [&] { bing::kp_grid_scan(2, 3, grid, 0.0, ExecPolicy::parallel); });
        report("kp_grid_scan(2,3)", ts, tp);
    }
    {
        double rs = bing::kp_seam_residual(5, 7, samples, ExecPolicy::serial);
        double rp = bing::kp_seam_residual(5, 7, samples, ExecPolicy::parallel);
        if (rs != rp) {
            std::fprintf(stderr, "kp_seam_residual policies disagree\n");
            return 1;
        }
        double ts = time_best_of(3, [&] { bing::kp_seam_residual(5, 7, samples, ExecPolicy::serial); });
        double tp = time_best_of(3, [&] { bing::kp_seam_residual(5, 7, samples, ExecPolicy::parallel); });
        report("kp_seam_residual(5,7)", ts, tp);
    }
    {
        double rs = bing::x_boundary_residual(2, 3, 4, samples, ExecPolicy::serial);
        double rp = bing::x_boundary_residual(2, 3, 4, samples, ExecPolicy::parallel);
        if (rs != rp) {
            std::fprintf(stderr, "x_boundary_residual policies disagree\n");
            return 1;
        }
        double ts = time_best_of(3, [&] { bing::x_boundary_residual(2, 3, 4, samples, ExecPolicy::serial); });
        double tp = time_best_of(3, [&] { bing::x_boundary_residual(2, 3, 4, samples, ExecPolicy::parallel); });
        report("x_boundary_residual(2,3,4)", ts, tp);
    }
    return 0;
}
