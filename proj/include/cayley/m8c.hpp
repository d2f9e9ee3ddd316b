#pragma once

#include <array>

#include "cayley/jordan.hpp"
#include "cayley/kaehler_map.hpp"
#include "cayley/octonion.hpp"

namespace cayley {

/// Involution fixing the quaternion subalgebra and negating the e4..e7
/// half: gamma(h + k e4) = h − k e4. An algebra automorphism commuting
/// with theta.
template <class S>
Octonion<S> gamma(const Octonion<S>& a) {
    Octonion<S> r = a;
    for (int i = 4; i < 8; ++i) r.c[i] = -r.c[i];
    return r;
}

template <class S>
JordanElement<S> gamma(const JordanElement<S>& a) {
    JordanElement<S> r = a;
    for (int i = 0; i < 3; ++i) r.x[i] = gamma(r.x[i]);
    return r;
}

/// Quaternionic Hermitian 3x3 part in the same layout as JordanElement.
template <class S>
struct QuaternionicPart {
    std::array<S, 3> xi{};
    std::array<Quaternion<S>, 3> m{};
};

/// Decomposition X = M + A e4 with x_i = m_i + a_i e4.
template <class S>
struct SplitParts {
    QuaternionicPart<S> quaternionic; // M
    std::array<Quaternion<S>, 3> a{}; // a_1, a_2, a_3
};

template <class S>
SplitParts<S> split(const JordanElement<S>& x) {
    SplitParts<S> s;
    s.quaternionic.xi = x.xi;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 4; ++k) {
            s.quaternionic.m[i].c[k] = x.x[i].c[k];
            s.a[i].c[k] = x.x[i].c[k + 4];
        }
    }
    return s;
}

template <class S>
JordanElement<S> reassemble(const SplitParts<S>& s) {
    JordanElement<S> x;
    x.xi = s.quaternionic.xi;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 4; ++k) {
            x.x[i].c[k] = s.quaternionic.m[i].c[k];
            x.x[i].c[k + 4] = s.a[i].c[k];
        }
    }
    return x;
}

/// 4x4 matrix over the (complexified) quaternions. Quaternions associate,
/// so the Jordan product needs no Hermiticity bookkeeping.
template <class S>
struct QuatMat4 {
    std::array<Quaternion<S>, 16> h{};

    Quaternion<S>& operator()(int i, int j) { return h[static_cast<std::size_t>(4 * i + j)]; }
    const Quaternion<S>& operator()(int i, int j) const {
        return h[static_cast<std::size_t>(4 * i + j)];
    }

    static QuatMat4 identity() {
        QuatMat4 e;
        for (int i = 0; i < 4; ++i) e(i, i) = Quaternion<S>::identity();
        return e;
    }

    QuatMat4& operator+=(const QuatMat4& r) {
        for (int k = 0; k < 16; ++k) h[k] += r.h[k];
        return *this;
    }
    QuatMat4& operator-=(const QuatMat4& r) {
        for (int k = 0; k < 16; ++k) h[k] -= r.h[k];
        return *this;
    }
    QuatMat4& operator*=(const S& s) {
        for (auto& q : h) q *= s;
        return *this;
    }
    friend QuatMat4 operator+(QuatMat4 a, const QuatMat4& b) { return a += b; }
    friend QuatMat4 operator-(QuatMat4 a, const QuatMat4& b) { return a -= b; }
    friend QuatMat4 operator*(const S& s, QuatMat4 a) { return a *= s; }
};

using QuatMat4C = QuatMat4<complexd>;

template <class S>
QuatMat4<S> mat_mul(const QuatMat4<S>& a, const QuatMat4<S>& b) {
    QuatMat4<S> c;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Quaternion<S> acc;
            for (int k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    }
    return c;
}

template <class S>
QuatMat4<S> j4_product(const QuatMat4<S>& a, const QuatMat4<S>& b) {
    const QuatMat4<S> ab = mat_mul(a, b);
    const QuatMat4<S> ba = mat_mul(b, a);
    QuatMat4<S> z;
    for (int k = 0; k < 16; ++k) z.h[k] = S(0.5) * (ab.h[k] + ba.h[k]);
    return z;
}

template <class S>
S j4_trace(const QuatMat4<S>& a) {
    S acc{};
    for (int i = 0; i < 4; ++i) acc += a(i, i).c[0];
    return acc;
}

/// Trace form (A,B) = tr(A∘B), the Euclidean inner product on Hermitian
/// matrices, extended bilinearly to the complexification.
template <class S>
S j4_trace_form(const QuatMat4<S>& a, const QuatMat4<S>& b) {
    return j4_trace(j4_product(a, b));
}

template <class S>
double max_abs(const QuatMat4<S>& a) {
    double m = 0;
    for (const auto& q : a.h) m = std::max(m, quat_max_abs(q));
    return m;
}

/// The trace-zero quaternionic-Hermitian image of X = M + A e4:
///
///   g(X) = [ tr(M)/2    i a_1  i a_2  i a_3 ]
///          [ i θ(a_1)                       ]
///          [ i θ(a_2)    M − (tr M / 2) E   ]
///          [ i θ(a_3)                       ]
///
/// Linear in X, with tr g(X) = 0.
QuatMat4C g_map(const JordanC& x);
inline QuatMat4C g_map(const JordanR& x) { return g_map(complexify(x)); }

struct Matrix2C {
    std::array<complexd, 4> m{};
    complexd& operator()(int i, int j) { return m[static_cast<std::size_t>(2 * i + j)]; }
    const complexd& operator()(int i, int j) const {
        return m[static_cast<std::size_t>(2 * i + j)];
    }
};

/// The isomorphism of the complexified quaternions onto 2x2 complex
/// matrices:
///   rho(z0 + z1 e1 + z2 e2 + z3 e3) = [ z0 + z1 i   z2 + z3 i ]
///                                     [ −z2 + z3 i  z0 − z1 i ].
Matrix2C rho(const QuaternionC& q);

struct Matrix8C {
    std::array<complexd, 64> m{};

    complexd& operator()(int i, int j) { return m[static_cast<std::size_t>(8 * i + j)]; }
    const complexd& operator()(int i, int j) const {
        return m[static_cast<std::size_t>(8 * i + j)];
    }

    static Matrix8C identity();
    friend Matrix8C operator-(Matrix8C a, const Matrix8C& b) {
        for (int k = 0; k < 64; ++k) a.m[k] -= b.m[k];
        return a;
    }
    friend Matrix8C operator*(const complexd& s, Matrix8C a) {
        for (auto& v : a.m) v *= s;
        return a;
    }
};

Matrix8C mat_mul(const Matrix8C& a, const Matrix8C& b);
Matrix8C transpose(const Matrix8C& a);
complexd mat_trace(const Matrix8C& a);
double max_abs(const Matrix8C& a);
double frobenius_sq(const Matrix8C& a);

/// Blockwise extension of rho to quaternionic 4x4 matrices.
Matrix8C rho(const QuatMat4C& h);

/// The block-diagonal symmetry J = diag(j, j, j, j), j = [[0,1],[-1,0]];
/// every rho image of a Hermitian quaternionic matrix satisfies
/// J A = transpose(A) J.
Matrix8C symmetry_j();

struct EmbedResult {
    Matrix8C B;       // rho(g(A))
    complexd lambda;  // (gamma(A), A) / 4, with B^2 = lambda * Id
    double residual;  // ||B^2 − lambda Id|| / max(||B||_F^2, floor), max-abs entrywise
};

/// Embeds a null element as an 8x8 complex matrix with its scalar-square
/// certificate.
EmbedResult embed_null(const NullElement& a);

} // namespace cayley
