#pragma once

#include "cayley/octonion.hpp"

// Reference implementations used as independent oracles by the test and
// verification suites. Nothing here is called from the library's primary
// code paths, and the quaternion structure constants below are written out
// from the defining relations rather than shared with the main table.

namespace cayley::oracles {

// Quaternion product from the relations e_i^2 = -e0, e1 e2 = e3 (cyclic).
inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kQuatIndex = {{
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
}};

inline constexpr std::array<std::array<std::int8_t, 4>, 4> kQuatSign = {{
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1},
}};

template <class S>
Quaternion<S> quat_mul(const Quaternion<S>& a, const Quaternion<S>& b) {
    Quaternion<S> r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r.c[kQuatIndex[i][j]] += static_cast<double>(kQuatSign[i][j]) * (a.c[i] * b.c[j]);
        }
    }
    return r;
}

/// Doubling-formula product on the split x = a + b e4, y = h + k e4:
///   x y = (a h − theta(k) b) + (k a + b theta(h)) e4.
template <class S>
Octonion<S> cayley_dickson_product(const Octonion<S>& x, const Octonion<S>& y) {
    Quaternion<S> a, b, h, k;
    for (int i = 0; i < 4; ++i) {
        a.c[i] = x.c[i];
        b.c[i] = x.c[i + 4];
        h.c[i] = y.c[i];
        k.c[i] = y.c[i + 4];
    }
    const Quaternion<S> first = quat_mul(a, h) - quat_mul(theta(k), b);
    const Quaternion<S> second = quat_mul(k, a) + quat_mul(b, theta(h));
    Octonion<S> r;
    for (int i = 0; i < 4; ++i) {
        r.c[i] = first.c[i];
        r.c[i + 4] = second.c[i];
    }
    return r;
}

} // namespace cayley::oracles
