#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cayley {

/// One machine-checkable identity: the kernel maps a trial seed to a
/// scale-free residual, compared against `tolerance`.
struct Identity {
    std::string name;
    std::string law;
    int trials = 1000;
    double tolerance = 1e-11;
    std::function<double(std::uint64_t)> kernel;
};

/// The full registered battery, in reporting order.
const std::vector<Identity>& identity_suite();

/// Lookup by name; throws ConfigError when absent.
const Identity& find_identity(const std::string& name);

} // namespace cayley
