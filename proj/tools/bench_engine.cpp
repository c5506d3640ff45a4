// SPDX-License-Identifier: Apache-2.0
//
// Timing comparison of the serial reference engine against the OpenMP path.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "a2g/scenario.hpp"
#include "a2g/simengine.hpp"

namespace {

double run_timed(const a2g::SimEngine& engine, bool serial, int threads, double* checksum) {
    const auto t0 = std::chrono::steady_clock::now();
    const a2g::RunResult result = serial ? engine.run_serial() : engine.run(threads);
    const auto t1 = std::chrono::steady_clock::now();
    double sum = 0.0;
    for (const a2g::LinkSample& s : result.samples) {
        sum += s.sinr_db;
    }
    *checksum = sum;
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n_drops = argc > 1 ? std::atoi(argv[1]) : 5000;
    const char* band = argc > 2 ? argv[2] : "mid";

    a2g::Scenario scenario;
    scenario.band = a2g::preset(band);
    scenario.n_drops = n_drops;
    scenario.ru_levels = {0.003, 0.5, 1.0};
    scenario.seed = 42;
    const a2g::SimEngine engine(scenario);

    double ref_sum = 0.0;
    const double t_serial = run_timed(engine, true, 0, &ref_sum);
    std::printf("band=%s drops=%d\n", band, n_drops);
    std::printf("serial          %8.3f s  (checksum %.6f)\n", t_serial, ref_sum);

#ifdef _OPENMP
    for (int threads : {2, 4, omp_get_max_threads()}) {
        double sum = 0.0;
        const double t = run_timed(engine, false, threads, &sum);
        std::printf("openmp %2d thr   %8.3f s  speedup %.2fx  %s\n", threads, t, t_serial / t,
                    sum == ref_sum ? "bit-identical" : "MISMATCH");
    }
#else
    std::printf("built without OpenMP\n");
#endif
    return 0;
}
