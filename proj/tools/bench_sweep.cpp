// Times the identity sweeps on the serial reference path against the
// OpenMP path and checks that both reduce to the same residuals.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cayley/identities.hpp"
#include "cayley/sweep.hpp"

namespace {

double run_timed(const cayley::Identity& id, std::uint64_t seed, int trials, cayley::Exec exec,
                 cayley::SweepOutcome* out) {
    const auto t0 = std::chrono::steady_clock::now();
    *out = cayley::sweep(seed, trials, exec, id.kernel);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    int trials = 2000;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--seed") seed = std::stoull(argv[i + 1]);
        if (flag == "--trials") trials = std::stoi(argv[i + 1]);
    }

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("trials per identity: %d\n\n", trials);
    std::printf("%-32s %12s %12s %9s %6s\n", "identity", "serial [ms]", "openmp [ms]", "speedup",
                "match");

    int mismatches = 0;
    for (const cayley::Identity& id : cayley::identity_suite()) {
        cayley::SweepOutcome serial{}, parallel{};
        const double ms_s = run_timed(id, seed, trials, cayley::Exec::serial, &serial);
        const double ms_p = run_timed(id, seed, trials, cayley::Exec::parallel, &parallel);
        const bool match = serial.max_residual == parallel.max_residual &&
                           serial.argmax_trial == parallel.argmax_trial;
        if (!match) ++mismatches;
        std::printf("%-32s %12.2f %12.2f %8.2fx %6s\n", id.name.c_str(), ms_s, ms_p,
                    ms_p > 0 ? ms_s / ms_p : 0.0, match ? "yes" : "NO");
    }

    if (mismatches != 0) {
        std::printf("\n%d identities diverged between the serial and parallel paths\n",
                    mismatches);
        return 1;
    }
    return 0;
}
