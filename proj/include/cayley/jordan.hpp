#pragma once

#include <algorithm>
#include <array>
#include <string>

#include "cayley/errors.hpp"
#include "cayley/octonion.hpp"

namespace cayley {

/// Element of the 27-dimensional Jordan algebra of 3x3 octonionic matrices
/// that are Hermitian under transpose-conjugation: diagonal scalars
/// (xi1, xi2, xi3) and off-diagonal octonions (x1, x2, x3) laid out as
///
///     [ xi1*e0    x3        theta(x2) ]
///     [ theta(x3) xi2*e0    x1        ]
///     [ x2        theta(x1) xi3*e0    ]
///
/// S is double (the real algebra) or complexd (its complexification).
template <class S>
struct JordanElement {
    std::array<S, 3> xi{};
    std::array<Octonion<S>, 3> x{};

    static JordanElement zero() { return {}; }
    static JordanElement identity() {
        JordanElement e;
        e.xi = {S(1), S(1), S(1)};
        return e;
    }
    static JordanElement diagonal(const S& a, const S& b, const S& c) {
        JordanElement e;
        e.xi = {a, b, c};
        return e;
    }

    JordanElement& operator+=(const JordanElement& r) {
        for (int i = 0; i < 3; ++i) {
            xi[i] += r.xi[i];
            x[i] += r.x[i];
        }
        return *this;
    }
    JordanElement& operator-=(const JordanElement& r) {
        for (int i = 0; i < 3; ++i) {
            xi[i] -= r.xi[i];
            x[i] -= r.x[i];
        }
        return *this;
    }
    JordanElement& operator*=(const S& s) {
        for (int i = 0; i < 3; ++i) {
            xi[i] *= s;
            x[i] *= s;
        }
        return *this;
    }

    friend JordanElement operator+(JordanElement a, const JordanElement& b) { return a += b; }
    friend JordanElement operator-(JordanElement a, const JordanElement& b) { return a -= b; }
    friend JordanElement operator*(JordanElement a, const S& s) { return a *= s; }
    friend JordanElement operator*(const S& s, JordanElement a) { return a *= s; }
    friend JordanElement operator-(JordanElement a) { return a *= S(-1); }
    friend bool operator==(const JordanElement& a, const JordanElement& b) {
        return a.xi == b.xi && a.x == b.x;
    }
};

using JordanR = JordanElement<double>;
using JordanC = JordanElement<complexd>;

/// Unconstrained 3x3 octonionic matrix, the intermediate for products.
template <class S>
struct Matrix3O {
    std::array<Octonion<S>, 9> m{};

    Octonion<S>& operator()(int i, int j) { return m[static_cast<std::size_t>(3 * i + j)]; }
    const Octonion<S>& operator()(int i, int j) const {
        return m[static_cast<std::size_t>(3 * i + j)];
    }
};

template <class S>
Matrix3O<S> to_matrix(const JordanElement<S>& j) {
    Matrix3O<S> m;
    for (int i = 0; i < 3; ++i) m(i, i).c[0] = j.xi[i];
    m(0, 1) = j.x[2];
    m(1, 0) = theta(j.x[2]);
    m(1, 2) = j.x[0];
    m(2, 1) = theta(j.x[0]);
    m(2, 0) = j.x[1];
    m(0, 2) = theta(j.x[1]);
    return m;
}

template <class S>
Matrix3O<S> mat_mul(const Matrix3O<S>& a, const Matrix3O<S>& b) {
    Matrix3O<S> c;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Octonion<S> acc;
            for (int k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    }
    return c;
}

template <class S>
double max_abs(const JordanElement<S>& j) {
    double m = 0;
    for (int i = 0; i < 3; ++i) {
        m = std::max(m, scalar_abs(j.xi[i]));
        m = std::max(m, oct_max_abs(j.x[i]));
    }
    return m;
}

/// Reads Jordan coordinates back from a matrix that should be Hermitian,
/// averaging the symmetric pairs. Throws HermiticityViolation if the matrix
/// deviates from Hermiticity beyond tol * scale; such a failure means the
/// arithmetic upstream is broken.
template <class S>
JordanElement<S> jordan_coordinates_checked(const Matrix3O<S>& z, double scale,
                                            double tol = 1e-12) {
    double worst = 0;
    JordanElement<S> r;
    for (int i = 0; i < 3; ++i) {
        r.xi[i] = z(i, i).c[0];
        for (int k = 1; k < 8; ++k) worst = std::max(worst, scalar_abs(z(i, i).c[k]));
    }
    constexpr int rows[3] = {1, 2, 0};
    constexpr int cols[3] = {2, 0, 1};
    for (int s = 0; s < 3; ++s) {
        const Octonion<S> direct = z(rows[s], cols[s]);
        const Octonion<S> mirrored = theta(z(cols[s], rows[s]));
        worst = std::max(worst, oct_max_abs(direct - mirrored));
        r.x[s] = S(0.5) * (direct + mirrored);
    }
    if (worst > tol * std::max(scale, 1.0)) {
        throw HermiticityViolation("jordan product readback residual " + std::to_string(worst) +
                                   " exceeds tolerance at scale " + std::to_string(scale));
    }
    return r;
}

/// Jordan product X∘Y = (XY + YX)/2 computed through the full octonionic
/// matrix product. The Hermiticity of the symmetrized matrix doubles as a
/// built-in self-check.
template <class S>
JordanElement<S> jordan_product(const JordanElement<S>& a, const JordanElement<S>& b) {
    const Matrix3O<S> ma = to_matrix(a);
    const Matrix3O<S> mb = to_matrix(b);
    const Matrix3O<S> ab = mat_mul(ma, mb);
    const Matrix3O<S> ba = mat_mul(mb, ma);
    Matrix3O<S> z;
    for (int k = 0; k < 9; ++k) z.m[k] = S(0.5) * (ab.m[k] + ba.m[k]);
    const double scale = (1.0 + max_abs(a)) * (1.0 + max_abs(b));
    return jordan_coordinates_checked(z, scale);
}

template <class S>
S trace(const JordanElement<S>& a) {
    return a.xi[0] + a.xi[1] + a.xi[2];
}

/// Bilinear inner product (X,Y) = sum(xi_i eta_i + 2 <x_i, y_i>); it equals
/// tr(X∘Y). Not conjugated in the complex case.
template <class S>
S inner(const JordanElement<S>& a, const JordanElement<S>& b) {
    S acc{};
    for (int i = 0; i < 3; ++i) {
        acc += a.xi[i] * b.xi[i];
        acc += S(2) * oct_inner(a.x[i], b.x[i]);
    }
    return acc;
}

inline JordanC conjugate(const JordanC& a) {
    JordanC r;
    for (int i = 0; i < 3; ++i) {
        r.xi[i] = std::conj(a.xi[i]);
        for (int k = 0; k < 8; ++k) r.x[i].c[k] = std::conj(a.x[i].c[k]);
    }
    return r;
}

/// Hermitian pairing <X,Y> = (X, conj(Y)); positive definite.
inline complexd hermitian_inner(const JordanC& a, const JordanC& b) {
    return inner(a, conjugate(b));
}

/// Squared norm: (X,X) for real elements, <X,X> for complex ones.
inline double norm_sq(const JordanR& a) { return inner(a, a); }

inline double norm_sq(const JordanC& a) {
    double acc = 0;
    for (int i = 0; i < 3; ++i) {
        acc += scalar_abs_sq(a.xi[i]);
        acc += 2.0 * oct_abs_sq(a.x[i]);
    }
    return acc;
}

template <class S>
double norm(const JordanElement<S>& a) {
    return std::sqrt(norm_sq(a));
}

/// Freudenthal product
/// X×Y = {2X∘Y − tr(X)Y − tr(Y)X + (tr X tr Y − tr(X∘Y)) E} / 2.
template <class S>
JordanElement<S> freudenthal(const JordanElement<S>& a, const JordanElement<S>& b) {
    const S ta = trace(a);
    const S tb = trace(b);
    const JordanElement<S> ab = jordan_product(a, b);
    JordanElement<S> r = S(2) * ab;
    r -= ta * b;
    r -= tb * a;
    r += (ta * tb - trace(ab)) * JordanElement<S>::identity();
    return S(0.5) * r;
}

/// Cubic form det X = tr(X∘(X×X)) / 3.
template <class S>
S determinant(const JordanElement<S>& a) {
    return trace(jordan_product(a, freudenthal(a, a))) / S(3);
}

inline JordanC complexify(const JordanR& a) {
    JordanC r;
    for (int i = 0; i < 3; ++i) {
        r.xi[i] = complexd(a.xi[i], 0.0);
        for (int k = 0; k < 8; ++k) r.x[i].c[k] = complexd(a.x[i].c[k], 0.0);
    }
    return r;
}

inline JordanC combine(const JordanR& re, const JordanR& im) {
    JordanC r;
    for (int i = 0; i < 3; ++i) {
        r.xi[i] = complexd(re.xi[i], im.xi[i]);
        for (int k = 0; k < 8; ++k) r.x[i].c[k] = complexd(re.x[i].c[k], im.x[i].c[k]);
    }
    return r;
}

inline JordanR real_part(const JordanC& a) {
    JordanR r;
    for (int i = 0; i < 3; ++i) {
        r.xi[i] = a.xi[i].real();
        for (int k = 0; k < 8; ++k) r.x[i].c[k] = a.x[i].c[k].real();
    }
    return r;
}

inline JordanR imag_part(const JordanC& a) {
    JordanR r;
    for (int i = 0; i < 3; ++i) {
        r.xi[i] = a.xi[i].imag();
        for (int k = 0; k < 8; ++k) r.x[i].c[k] = a.x[i].c[k].imag();
    }
    return r;
}

// Flat coordinate order: xi1, xi2, xi3, x1_0..x1_7, x2_0..x2_7, x3_0..x3_7.
inline std::array<double, 27> to_flat(const JordanR& a) {
    std::array<double, 27> v{};
    for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] = a.xi[i];
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 8; ++k) v[static_cast<std::size_t>(3 + 8 * i + k)] = a.x[i].c[k];
    return v;
}

inline JordanR from_flat(const std::array<double, 27>& v) {
    JordanR a;
    for (int i = 0; i < 3; ++i) a.xi[i] = v[static_cast<std::size_t>(i)];
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 8; ++k) a.x[i].c[k] = v[static_cast<std::size_t>(3 + 8 * i + k)];
    return a;
}

// Interleaved (re, im) flattening of a complex element, 54 reals.
inline std::array<double, 54> to_flat_interleaved(const JordanC& a) {
    const auto re = to_flat(real_part(a));
    const auto im = to_flat(imag_part(a));
    std::array<double, 54> v{};
    for (int k = 0; k < 27; ++k) {
        v[static_cast<std::size_t>(2 * k)] = re[static_cast<std::size_t>(k)];
        v[static_cast<std::size_t>(2 * k + 1)] = im[static_cast<std::size_t>(k)];
    }
    return v;
}

inline JordanC from_flat_interleaved(const std::array<double, 54>& v) {
    std::array<double, 27> re{};
    std::array<double, 27> im{};
    for (int k = 0; k < 27; ++k) {
        re[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(2 * k)];
        im[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(2 * k + 1)];
    }
    return combine(from_flat(re), from_flat(im));
}

} // namespace cayley
