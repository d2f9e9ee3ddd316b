#pragma once

#include <cstdint>
#include <random>

#include "cayley/jordan.hpp"
#include "cayley/octonion.hpp"

namespace cayley {

/// SplitMix64 step, used to derive independent per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base + 0x9E3779B97F4A7C15ull * (index + 1));
}

/// Seeded source of the random draws used throughout the library. One
/// instance per trial keeps sweeps order-independent and reproducible.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    double normal() { return normal_(eng_); }
    double uniform() { return uniform_(eng_); }
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }
    int uniform_digit() { return uniform_int(-9, 9); }

    OctonionR normal_octonion() {
        OctonionR o;
        for (auto& v : o.c) v = normal();
        return o;
    }

    QuaternionR normal_quaternion() {
        QuaternionR q;
        for (auto& v : q.c) v = normal();
        return q;
    }

    OctonionR integer_octonion() {
        OctonionR o;
        for (auto& v : o.c) v = static_cast<double>(uniform_digit());
        return o;
    }

    JordanR normal_element() {
        JordanR j;
        for (auto& v : j.xi) v = normal();
        for (auto& o : j.x) o = normal_octonion();
        return j;
    }

    JordanC normal_element_c() {
        const JordanR re = normal_element();
        const JordanR im = normal_element();
        return combine(re, im);
    }

private:
    std::mt19937_64 eng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace cayley
