#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "cayley/sweep.hpp"

namespace cayley {

/// Shared configuration for the batch commands. `trials == 0` keeps each
/// identity's registered trial count; a positive value overrides all of
/// them. Tolerance overrides are keyed by identity name ("all" applies to
/// every identity).
struct RunConfig {
    std::uint64_t seed = 1;
    int trials = 0;
    std::map<std::string, double> tol_overrides;
    double fd_step = 1e-4;
    int t_grid = 64;
    Exec exec = Exec::parallel;

    void validate() const; // throws ConfigError
};

// Exit codes shared by all commands: 0 success, 1 verification failure,
// 2 input or configuration error. The command functions return 0/1 and
// throw ParseError/ConfigError/NotNull for the exit-2 cases.

/// Runs the registered identity battery and writes a single JSON report
/// with one record per identity and an overall pass flag.
int run_verify(const RunConfig& config, std::ostream& out);

/// Samples the closed-form geodesic through a state (given explicitly or
/// drawn from the seed) on an inclusive t-grid over [0, pi] and writes CSV
/// rows for gamma(t), gamma'(t) and the on-manifold residuals. Non-unit
/// covectors are normalized with a diagnostics notice.
int run_geodesic(const RunConfig& config, const std::optional<std::string>& input_text,
                 std::ostream& out);

/// Compares the pulled-back Kaehler form with the scaled symplectic form on
/// random triples; one JSON line per trial plus a summary line.
int run_form_check(const RunConfig& config, std::ostream& out);

/// Embeds a tangent pair (through the null-cone map) or a null element as
/// an 8x8 complex matrix with its scalar-square certificate.
int run_embed(const RunConfig& config, const std::optional<std::string>& input_text,
              std::ostream& out);

} // namespace cayley
