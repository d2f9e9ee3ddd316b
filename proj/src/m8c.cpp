#include "cayley/m8c.hpp"

#include <cmath>

namespace cayley {

QuatMat4C g_map(const JordanC& x) {
    const SplitParts<complexd> s = split(x);
    const complexd half_tr = complexd(0.5, 0.0) * (x.xi[0] + x.xi[1] + x.xi[2]);
    const complexd i_unit(0.0, 1.0);

    QuatMat4C g;
    g(0, 0).c[0] = half_tr;
    for (int k = 0; k < 3; ++k) {
        g(0, k + 1) = i_unit * s.a[k];
        g(k + 1, 0) = i_unit * theta(s.a[k]);
    }
    // M block in the Jordan layout, diagonal shifted by -tr(M)/2.
    for (int i = 0; i < 3; ++i) g(i + 1, i + 1).c[0] = x.xi[i] - half_tr;
    g(1, 2) = s.quaternionic.m[2];
    g(2, 1) = theta(s.quaternionic.m[2]);
    g(2, 3) = s.quaternionic.m[0];
    g(3, 2) = theta(s.quaternionic.m[0]);
    g(3, 1) = s.quaternionic.m[1];
    g(1, 3) = theta(s.quaternionic.m[1]);
    return g;
}

Matrix2C rho(const QuaternionC& q) {
    const complexd i_unit(0.0, 1.0);
    Matrix2C r;
    r(0, 0) = q.c[0] + i_unit * q.c[1];
    r(0, 1) = q.c[2] + i_unit * q.c[3];
    r(1, 0) = -q.c[2] + i_unit * q.c[3];
    r(1, 1) = q.c[0] - i_unit * q.c[1];
    return r;
}

Matrix8C Matrix8C::identity() {
    Matrix8C e;
    for (int i = 0; i < 8; ++i) e(i, i) = complexd(1.0, 0.0);
    return e;
}

Matrix8C mat_mul(const Matrix8C& a, const Matrix8C& b) {
    Matrix8C c;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            complexd acc(0.0, 0.0);
            for (int k = 0; k < 8; ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    }
    return c;
}

Matrix8C transpose(const Matrix8C& a) {
    Matrix8C t;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) t(i, j) = a(j, i);
    return t;
}

complexd mat_trace(const Matrix8C& a) {
    complexd acc(0.0, 0.0);
    for (int i = 0; i < 8; ++i) acc += a(i, i);
    return acc;
}

double max_abs(const Matrix8C& a) {
    double m = 0;
    for (const auto& v : a.m) m = std::max(m, std::abs(v));
    return m;
}

double frobenius_sq(const Matrix8C& a) {
    double acc = 0;
    for (const auto& v : a.m) acc += std::norm(v);
    return acc;
}

Matrix8C rho(const QuatMat4C& h) {
    Matrix8C b;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const Matrix2C blk = rho(h(i, j));
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) b(2 * i + p, 2 * j + q) = blk(p, q);
        }
    }
    return b;
}

Matrix8C symmetry_j() {
    Matrix8C j;
    for (int k = 0; k < 4; ++k) {
        j(2 * k, 2 * k + 1) = complexd(1.0, 0.0);
        j(2 * k + 1, 2 * k) = complexd(-1.0, 0.0);
    }
    return j;
}

EmbedResult embed_null(const NullElement& a) {
    EmbedResult out;
    out.B = rho(g_map(a.A));
    out.lambda = complexd(0.25, 0.0) * inner(gamma(a.A), a.A);
    const Matrix8C square = mat_mul(out.B, out.B);
    const Matrix8C target = out.lambda * Matrix8C::identity();
    out.residual = max_abs(square - target) / std::max(frobenius_sq(out.B), 1e-12);
    return out;
}

} // namespace cayley
