#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <type_traits>

namespace cayley {

using complexd = std::complex<double>;

template <class S>
inline constexpr bool is_complex_scalar_v = std::is_same_v<S, complexd>;

/// Magnitude of a scalar coordinate (|x| for real, modulus for complex).
inline double scalar_abs(double v) { return std::abs(v); }
inline double scalar_abs(const complexd& v) { return std::abs(v); }

inline double scalar_abs_sq(double v) { return v * v; }
inline double scalar_abs_sq(const complexd& v) { return std::norm(v); }

inline double scalar_conj(double v) { return v; }
inline complexd scalar_conj(const complexd& v) { return std::conj(v); }

// Structure constants of the octonion basis product e_i * e_j (row = left
// factor): e_i * e_j = kMulSign[i][j] * e_{kMulIndex[i][j]}. The quaternion
// subalgebra is the upper-left 4x4 block.
inline constexpr std::array<std::array<std::uint8_t, 8>, 8> kMulIndex = {{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
}};

inline constexpr std::array<std::array<std::int8_t, 8>, 8> kMulSign = {{
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
}};

/// Octonion with coefficients over S (double or complexd) in the orthonormal
/// basis e0..e7; e0 is the two-sided identity.
template <class S>
struct Octonion {
    std::array<S, 8> c{};

    static Octonion zero() { return {}; }
    static Octonion identity() {
        Octonion o;
        o.c[0] = S(1);
        return o;
    }
    static Octonion basis(int i) {
        Octonion o;
        o.c[static_cast<std::size_t>(i)] = S(1);
        return o;
    }

    Octonion& operator+=(const Octonion& r) {
        for (int i = 0; i < 8; ++i) c[i] += r.c[i];
        return *this;
    }
    Octonion& operator-=(const Octonion& r) {
        for (int i = 0; i < 8; ++i) c[i] -= r.c[i];
        return *this;
    }
    Octonion& operator*=(const S& s) {
        for (auto& v : c) v *= s;
        return *this;
    }

    friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
    friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
    friend Octonion operator*(Octonion a, const S& s) { return a *= s; }
    friend Octonion operator*(const S& s, Octonion a) { return a *= s; }
    friend Octonion operator-(Octonion a) {
        for (auto& v : a.c) v = -v;
        return a;
    }
    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
};

using OctonionR = Octonion<double>;
using OctonionC = Octonion<complexd>;

/// Table-driven product, bilinear over S.
template <class S>
Octonion<S> operator*(const Octonion<S>& a, const Octonion<S>& b) {
    Octonion<S> r;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            r.c[kMulIndex[i][j]] += static_cast<double>(kMulSign[i][j]) * (a.c[i] * b.c[j]);
        }
    }
    return r;
}

/// Conjugation: fixes e0, negates e1..e7. Anti-automorphism of the product.
template <class S>
Octonion<S> theta(const Octonion<S>& a) {
    Octonion<S> r = a;
    for (int i = 1; i < 8; ++i) r.c[i] = -r.c[i];
    return r;
}

/// Bilinear inner product (no conjugation of complex coefficients).
template <class S>
S oct_inner(const Octonion<S>& a, const Octonion<S>& b) {
    S acc{};
    for (int i = 0; i < 8; ++i) acc += a.c[i] * b.c[i];
    return acc;
}

/// Sum of squared coordinate magnitudes; for real octonions this is |x|^2.
template <class S>
double oct_abs_sq(const Octonion<S>& a) {
    double acc = 0;
    for (const auto& v : a.c) acc += scalar_abs_sq(v);
    return acc;
}

inline double oct_norm(const OctonionR& a) { return std::sqrt(oct_abs_sq(a)); }

template <class S>
double oct_max_abs(const Octonion<S>& a) {
    double m = 0;
    for (const auto& v : a.c) m = std::max(m, scalar_abs(v));
    return m;
}

/// Quaternion: the associative subalgebra spanned by e0..e3.
template <class S>
struct Quaternion {
    std::array<S, 4> c{};

    static Quaternion zero() { return {}; }
    static Quaternion identity() {
        Quaternion q;
        q.c[0] = S(1);
        return q;
    }
    static Quaternion basis(int i) {
        Quaternion q;
        q.c[static_cast<std::size_t>(i)] = S(1);
        return q;
    }

    Quaternion& operator+=(const Quaternion& r) {
        for (int i = 0; i < 4; ++i) c[i] += r.c[i];
        return *this;
    }
    Quaternion& operator-=(const Quaternion& r) {
        for (int i = 0; i < 4; ++i) c[i] -= r.c[i];
        return *this;
    }
    Quaternion& operator*=(const S& s) {
        for (auto& v : c) v *= s;
        return *this;
    }

    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator*(Quaternion a, const S& s) { return a *= s; }
    friend Quaternion operator*(const S& s, Quaternion a) { return a *= s; }
    friend Quaternion operator-(Quaternion a) {
        for (auto& v : a.c) v = -v;
        return a;
    }
    friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c == b.c; }
};

using QuaternionR = Quaternion<double>;
using QuaternionC = Quaternion<complexd>;

template <class S>
Quaternion<S> operator*(const Quaternion<S>& a, const Quaternion<S>& b) {
    Quaternion<S> r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r.c[kMulIndex[i][j]] += static_cast<double>(kMulSign[i][j]) * (a.c[i] * b.c[j]);
        }
    }
    return r;
}

template <class S>
Quaternion<S> theta(const Quaternion<S>& a) {
    Quaternion<S> r = a;
    for (int i = 1; i < 4; ++i) r.c[i] = -r.c[i];
    return r;
}

template <class S>
double quat_max_abs(const Quaternion<S>& a) {
    double m = 0;
    for (const auto& v : a.c) m = std::max(m, scalar_abs(v));
    return m;
}

/// Embed a quaternion into the octonion as span{e0..e3}.
template <class S>
Octonion<S> to_octonion(const Quaternion<S>& q) {
    Octonion<S> o;
    for (int i = 0; i < 4; ++i) o.c[i] = q.c[i];
    return o;
}

} // namespace cayley
