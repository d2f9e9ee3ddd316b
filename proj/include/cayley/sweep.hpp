#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cayley/rng.hpp"

namespace cayley {

enum class Exec {
    serial,  // reference path
    parallel // OpenMP over trials
};

struct SweepOutcome {
    double max_residual = 0;
    std::uint64_t argmax_trial = 0;
};

/// Runs `kernel(trial_seed)` for `trials` independent trials and reduces to
/// the worst residual. Each trial derives its own seed, so the parallel
/// path produces bitwise the same residuals as the serial reference; the
/// reduction scans a dense buffer to keep the argmax deterministic too.
template <class Kernel>
SweepOutcome sweep(std::uint64_t seed, int trials, Exec exec, Kernel&& kernel) {
    std::vector<double> residuals(static_cast<std::size_t>(trials), 0.0);

    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
        for (int i = 0; i < trials; ++i) {
            residuals[static_cast<std::size_t>(i)] =
                kernel(derive_seed(seed, static_cast<std::uint64_t>(i)));
        }
    } else {
        for (int i = 0; i < trials; ++i) {
            residuals[static_cast<std::size_t>(i)] =
                kernel(derive_seed(seed, static_cast<std::uint64_t>(i)));
        }
    }

    SweepOutcome out;
    for (int i = 0; i < trials; ++i) {
        const double r = residuals[static_cast<std::size_t>(i)];
        if (r > out.max_residual) {
            out.max_residual = r;
            out.argmax_trial = static_cast<std::uint64_t>(i);
        }
    }
    return out;
}

} // namespace cayley
