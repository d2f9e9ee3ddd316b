#include "cayley/identities.hpp"

#include <cmath>
#include <numbers>

#include "cayley/cayley_plane.hpp"
#include "cayley/errors.hpp"
#include "cayley/jordan.hpp"
#include "cayley/kaehler_map.hpp"
#include "cayley/m8c.hpp"
#include "cayley/octonion.hpp"
#include "cayley/oracles.hpp"
#include "cayley/rng.hpp"

namespace cayley {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

double rel(double diff, double scale) { return diff / std::max(scale, 1e-12); }

double oct_table_vs_doubling(std::uint64_t seed) {
    RandomSource rs(seed);
    const OctonionR x = rs.integer_octonion();
    const OctonionR y = rs.integer_octonion();
    return oct_max_abs(x * y - oracles::cayley_dickson_product(x, y));
}

double oct_alternativity(std::uint64_t seed) {
    RandomSource rs(seed);
    const OctonionR x = rs.normal_octonion();
    const OctonionR y = rs.normal_octonion();
    const double left = oct_max_abs((x * x) * y - x * (x * y));
    const double right = oct_max_abs((y * x) * x - y * (x * x));
    return rel(std::max(left, right), oct_abs_sq(x) * oct_norm(y));
}

double oct_norm_multiplicative(std::uint64_t seed) {
    RandomSource rs(seed);
    const OctonionR x = rs.normal_octonion();
    const OctonionR y = rs.normal_octonion();
    const double lhs = oct_norm(x * y);
    const double prod = oct_norm(x) * oct_norm(y);
    return rel(std::abs(lhs - prod), prod);
}

double oct_artin_words(std::uint64_t seed) {
    RandomSource rs(seed);
    const OctonionR a = rs.normal_octonion();
    const OctonionR b = rs.normal_octonion();
    const OctonionR* w[2] = {&a, &b};
    double worst = 0;
    for (int mask = 0; mask < 8; ++mask) {
        const OctonionR& p = *w[mask & 1];
        const OctonionR& q = *w[(mask >> 1) & 1];
        const OctonionR& r = *w[(mask >> 2) & 1];
        worst = std::max(worst, oct_max_abs((p * q) * r - p * (q * r)));
    }
    const double n = std::max(oct_norm(a), oct_norm(b));
    return rel(worst, n * n * n);
}

double oct_theta_antiautomorphism(std::uint64_t seed) {
    RandomSource rs(seed);
    const OctonionR x = rs.normal_octonion();
    const OctonionR y = rs.normal_octonion();
    return rel(oct_max_abs(theta(x * y) - theta(y) * theta(x)), oct_norm(x) * oct_norm(y));
}

double jordan_trace_associativity(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanR x = rs.normal_element();
    const JordanR y = rs.normal_element();
    const JordanR z = rs.normal_element();
    const double lhs = inner(jordan_product(x, y), z);
    const double rhs = inner(x, jordan_product(y, z));
    return rel(std::abs(lhs - rhs), norm(x) * norm(y) * norm(z));
}

double jordan_cayley_hamilton(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanR x = rs.normal_element();
    const JordanR lhs = jordan_product(x, freudenthal(x, x));
    const JordanR rhs = determinant(x) * JordanR::identity();
    const double n = norm(x);
    return rel(max_abs(lhs - rhs), n * n * n);
}

double jordan_adjoint_identity(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanR x = rs.normal_element();
    const JordanR adj = freudenthal(x, x);
    const double n = norm(x);
    return rel(max_abs(freudenthal(adj, adj) - determinant(x) * x), n * n * n * n);
}

double jordan_power_identity(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanR x = rs.normal_element();
    const JordanR y = rs.normal_element();
    const JordanR xx = jordan_product(x, x);
    const JordanR lhs = jordan_product(xx, jordan_product(x, y));
    const JordanR rhs = jordan_product(x, jordan_product(xx, y));
    const double n = norm(x);
    return rel(max_abs(lhs - rhs), n * n * n * norm(y));
}

double jordan_commutativity(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanR x = rs.normal_element();
    const JordanR y = rs.normal_element();
    return max_abs(jordan_product(x, y) - jordan_product(y, x));
}

double jordan_inner_trace_form(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanR x = rs.normal_element();
    const JordanR y = rs.normal_element();
    return rel(std::abs(inner(x, y) - trace(jordan_product(x, y))), norm(x) * norm(y));
}

double plane_point_invariants(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    return plane_point_residuals(s.X).max();
}

double plane_chart_quaternionic(std::uint64_t seed) {
    RandomSource rs(seed);
    OctonionR u, v;
    for (int i = 0; i < 4; ++i) {
        u.c[i] = rs.normal();
        v.c[i] = rs.normal();
    }
    const PlanePoint x = chart_point(u, v, rs.uniform_int(1, 3));
    return plane_point_residuals(x).max();
}

double tangent_pair_invariants(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const TangentResiduals r = tangent_residuals(s.X, s.Y);
    const double n = norm(s.Y);
    return std::max({rel(r.tangency, n), rel(r.trace, n), rel(r.det, n * n * n)});
}

double tangent_cube_identity(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const double nsq = inner(s.Y, s.Y);
    const JordanR yy = jordan_product(s.Y, s.Y);
    const double d = max_abs(jordan_product(s.Y, yy) - (0.5 * nsq) * s.Y);
    return rel(d, nsq * std::sqrt(nsq));
}

double tangent_square_base(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const double nsq = inner(s.Y, s.Y);
    const JordanR yy = jordan_product(s.Y, s.Y);
    return rel(max_abs(jordan_product(s.X, yy) - (0.5 * nsq) * s.X), nsq);
}

double tangent_det_shift(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const double n = std::max(1.0, norm(s.Y));
    const double d =
        std::max(std::abs(determinant(s.X + s.Y)), std::abs(determinant(s.X - s.Y)));
    return rel(d, n * n * n);
}

double tangent_square_norm(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const double nsq = inner(s.Y, s.Y);
    const double lhs = norm_sq(jordan_product(s.Y, s.Y));
    return rel(std::abs(lhs - 0.5 * nsq * nsq), nsq * nsq);
}

double tangent_square_square(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const double nsq = inner(s.Y, s.Y);
    const JordanR yy = jordan_product(s.Y, s.Y);
    return rel(max_abs(jordan_product(yy, yy) - (0.5 * nsq) * yy), nsq * nsq);
}

double metric_norm_ratio(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const double nsq = inner(s.Y, s.Y);
    return rel(std::abs(nsq - 2.0 * metric_norm_sq(s)), nsq);
}

double null_det_trace(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const JordanC a = tau(s).A;
    const double nsq = inner(s.Y, s.Y); // = ||A||
    return std::max(rel(std::abs(determinant(a)), nsq * nsq * nsq),
                    rel(std::abs(trace(a)), nsq));
}

double geodesic_on_manifold(std::uint64_t seed) {
    const TangentPair s = random_state(seed, true);
    double worst = 0;
    for (int k = 0; k < 64; ++k) {
        const double t = kPi * static_cast<double>(k) / 63.0;
        const TangentPair g = geodesic(s, t);
        worst = std::max(worst, plane_point_residuals(g.X).max());
        worst = std::max(worst, tangent_residuals(g.X, g.Y).max());
        worst = std::max(worst, std::abs(metric_norm(g) - 1.0));
    }
    return worst;
}

double geodesic_period(std::uint64_t seed) {
    RandomSource rs(seed);
    const TangentPair s = random_state(derive_seed(seed, 1), true);
    double worst = 0;
    for (int k = 0; k < 4; ++k) {
        const double t = kPi * rs.uniform();
        const TangentPair g0 = geodesic(s, t);
        const TangentPair g1 = geodesic(s, t + kPi);
        worst = std::max({worst, max_abs(g1.X - g0.X), max_abs(g1.Y - g0.Y)});
    }
    return worst;
}

double tau_null_membership(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const JordanC a = tau(s).A;
    const double nsq = inner(s.Y, s.Y);
    return rel(norm(jordan_product(a, a)), nsq * nsq);
}

double tau_freudenthal_membership(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    return is_null(tau(s).A).relative;
}

double sigma_tau_roundtrip(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const TangentPair back = sigma(tau(s));
    const double scale = std::max(1.0, std::max(max_abs(s.X), max_abs(s.Y)));
    return rel(std::max(max_abs(back.X - s.X), max_abs(back.Y - s.Y)), scale);
}

double tau_sigma_roundtrip(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const NullElement a = tau(s);
    const NullElement again = tau(sigma(a));
    return rel(max_abs(again.A - a.A), max_abs(a.A));
}

double tau_norm_relation(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const JordanC a = tau(s).A;
    const double nsq = inner(s.Y, s.Y);
    const double r1 = std::abs(norm(a) - nsq) / nsq;
    const double r2 = std::abs(norm_sq(a) - nsq * nsq) / (nsq * nsq);
    return std::max(r1, r2);
}

double flow_equivariance(std::uint64_t seed) {
    const TangentPair s = random_state(seed, true);
    const JordanC a0 = tau(s).A;
    const double scale = max_abs(a0);
    double worst = 0;
    for (int k = 0; k < 64; ++k) {
        const double t = kPi * static_cast<double>(k) / 63.0;
        const JordanC at = tau(geodesic(s, t)).A;
        const complexd phase(std::cos(2.0 * t), -std::sin(2.0 * t));
        worst = std::max(worst, rel(max_abs(at - phase * a0), scale));
    }
    return worst;
}

double hamiltonian_invariance(std::uint64_t seed) {
    RandomSource rs(seed);
    const TangentPair s = random_state(derive_seed(seed, 1), true);
    const NullElement a = tau(s);
    const double h0 = hamiltonian(a.A);
    double worst = 0;
    for (int k = 0; k < 8; ++k) {
        const double t = 2.0 * kPi * rs.uniform();
        worst = std::max(worst, std::abs(hamiltonian(flow(a, t).A) - h0));
        worst = std::max(worst, std::abs(hamiltonian(tau(geodesic(s, t)).A) - h0));
    }
    return rel(worst, h0);
}

double flow_preserves_null(std::uint64_t seed) {
    RandomSource rs(seed);
    const TangentPair s = random_state(derive_seed(seed, 1), false);
    const NullElement a = tau(s);
    double worst = 0;
    for (int k = 0; k < 8; ++k) {
        worst = std::max(worst, is_null(flow(a, 2.0 * kPi * rs.uniform()).A).relative);
    }
    return worst;
}

double hamiltonian_metric_norm(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const double np = metric_norm(s);
    return rel(std::abs(hamiltonian(tau(s).A) - np), np);
}

double cogeodesic_matches_geodesic(std::uint64_t seed) {
    RandomSource rs(seed);
    const TangentPair s = random_state(derive_seed(seed, 1), true);
    const double t = kPi * rs.uniform();
    const TangentPair g = geodesic(s, t);
    const TangentPair c = cogeodesic_flow(s, t);
    return std::max(max_abs(g.X - c.X), max_abs(g.Y - c.Y));
}

double cogeodesic_norm_constancy(std::uint64_t seed) {
    RandomSource rs(seed);
    TangentPair s = random_state(derive_seed(seed, 1), false);
    s.Y *= 0.25 + 3.0 * rs.uniform();
    const double n0 = metric_norm(s);
    double worst = 0;
    for (int k = 0; k < 4; ++k) {
        const TangentPair c = cogeodesic_flow(s, 2.0 * kPi * rs.uniform());
        worst = std::max(worst, std::abs(metric_norm(c) - n0));
        worst = std::max(worst, tangent_residuals(c.X, c.Y).tangency);
    }
    return rel(worst, n0);
}

double kaehler_form_antisymmetry(std::uint64_t seed) {
    const TangentPair s = random_state(derive_seed(seed, 1), true);
    const NullElement a = tau(s);
    const BundleTangent t1 = bundle_tangent(s, derive_seed(seed, 2));
    const BundleTangent t2 = bundle_tangent(s, derive_seed(seed, 3));
    const double uv = kaehler_form_value(a, t1.push, t2.push, kFdStepDefault);
    const double vu = kaehler_form_value(a, t2.push, t1.push, kFdStepDefault);
    return rel(std::abs(uv + vu), std::max(std::abs(uv), std::abs(vu)));
}

double kaehler_form_j_invariance(std::uint64_t seed) {
    const TangentPair s = random_state(derive_seed(seed, 1), true);
    const NullElement a = tau(s);
    const BundleTangent t1 = bundle_tangent(s, derive_seed(seed, 2));
    const BundleTangent t2 = bundle_tangent(s, derive_seed(seed, 3));
    const complexd i_unit(0.0, 1.0);
    const double uv = kaehler_form_value(a, t1.push, t2.push, kFdStepDefault);
    const double jj = kaehler_form_value(a, i_unit * t1.push, i_unit * t2.push, kFdStepDefault);
    return rel(std::abs(uv - jj), std::abs(uv));
}

double symplectic_form_algebra(std::uint64_t seed) {
    RandomSource rs(seed);
    const TangentPair s = random_state(derive_seed(seed, 1), true);
    const BundleTangent t1 = bundle_tangent(s, derive_seed(seed, 2));
    const BundleTangent t2 = bundle_tangent(s, derive_seed(seed, 3));
    const BundleTangent t3 = bundle_tangent(s, derive_seed(seed, 4));
    const double alpha = rs.normal();
    const double beta = rs.normal();
    BundleTangent combo;
    combo.V = alpha * t1.V + beta * t2.V;
    combo.W = alpha * t1.W + beta * t2.W;
    const double lhs = symplectic_form_value(s, combo, t3);
    const double rhs = alpha * symplectic_form_value(s, t1, t3) +
                       beta * symplectic_form_value(s, t2, t3);
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    const double skew = std::abs(symplectic_form_value(s, t1, t1));
    return std::max(rel(std::abs(lhs - rhs), scale), skew);
}

double pullback_identity(std::uint64_t seed) {
    const TangentPair s = random_state(derive_seed(seed, 1), false);
    return pullback_check(s, derive_seed(seed, 2), kFdStepDefault).rel_err;
}

double gamma_automorphism(std::uint64_t seed) {
    RandomSource rs(seed);
    OctonionC x, y;
    for (int i = 0; i < 8; ++i) {
        x.c[i] = complexd(rs.normal(), rs.normal());
        y.c[i] = complexd(rs.normal(), rs.normal());
    }
    const double scale = std::sqrt(oct_abs_sq(x) * oct_abs_sq(y));
    double worst = oct_max_abs(gamma(x * y) - gamma(x) * gamma(y)) / std::max(scale, 1e-12);
    worst = std::max(worst, rel(oct_max_abs(theta(gamma(x)) - gamma(theta(x))),
                                std::sqrt(oct_abs_sq(x))));
    worst = std::max(worst, rel(oct_max_abs(gamma(gamma(x)) - x), std::sqrt(oct_abs_sq(x))));
    return worst;
}

double split_reassemble(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanC x = rs.normal_element_c();
    return max_abs(reassemble(split(x)) - x);
}

double g_trace_zero(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanC x = rs.normal_element_c();
    return rel(std::abs(j4_trace(g_map(x))), norm(x));
}

double g_product_rule(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanC x = rs.normal_element_c();
    const JordanC y = rs.normal_element_c();
    const QuatMat4C lhs = j4_product(g_map(x), g_map(y));
    QuatMat4C rhs = g_map(gamma(freudenthal(x, y)));
    const complexd lam = complexd(0.25, 0.0) * inner(gamma(x), y);
    for (int i = 0; i < 4; ++i) rhs(i, i).c[0] += lam;
    return rel(max_abs(lhs - rhs), norm(x) * norm(y));
}

double g_inner_rule(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanC x = rs.normal_element_c();
    const JordanC y = rs.normal_element_c();
    const complexd lhs = j4_trace_form(g_map(x), g_map(y));
    const complexd rhs = inner(gamma(x), y);
    return rel(std::abs(lhs - rhs), norm(x) * norm(y));
}

double rho_multiplicative(std::uint64_t seed) {
    RandomSource rs(seed);
    QuaternionC p, q;
    for (int i = 0; i < 4; ++i) {
        p.c[i] = complexd(rs.normal(), rs.normal());
        q.c[i] = complexd(rs.normal(), rs.normal());
    }
    const Matrix2C lhs = rho(p * q);
    const Matrix2C rp = rho(p);
    const Matrix2C rq = rho(q);
    double worst = 0;
    double scale = 0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const complexd prod = rp(i, 0) * rq(0, j) + rp(i, 1) * rq(1, j);
            worst = std::max(worst, std::abs(lhs(i, j) - prod));
            scale = std::max(scale, std::abs(lhs(i, j)));
        }
    }
    return rel(worst, std::max(scale, 1.0));
}

double rho_j_symmetry(std::uint64_t seed) {
    RandomSource rs(seed);
    const JordanC x = rs.normal_element_c();
    const Matrix8C b = rho(g_map(x));
    const Matrix8C jb = mat_mul(symmetry_j(), b);
    const Matrix8C btj = mat_mul(transpose(b), symmetry_j());
    return rel(max_abs(jb - btj), max_abs(b));
}

double embed_scalar_square(std::uint64_t seed) {
    const TangentPair s = random_state(seed, false);
    const EmbedResult e = embed_null(tau(s));
    const double tr_res = std::abs(mat_trace(e.B)) / std::max(std::sqrt(frobenius_sq(e.B)), 1e-12);
    return std::max(e.residual, tr_res);
}

std::vector<Identity> build_suite() {
    std::vector<Identity> v;
    auto add = [&](std::string name, std::string law, int trials, double tol,
                   std::function<double(std::uint64_t)> fn) {
        v.push_back(Identity{std::move(name), std::move(law), trials, tol, std::move(fn)});
    };

    add("oct_table_vs_doubling", "table product == doubling-formula product (integer coords)",
        10000, 0.0, oct_table_vs_doubling);
    add("oct_alternativity", "(xx)y = x(xy), (yx)x = y(xx)", 10000, 1e-12, oct_alternativity);
    add("oct_norm_multiplicative", "|xy| = |x||y|", 10000, 1e-12, oct_norm_multiplicative);
    add("oct_artin_words", "both bracketings of all 3-letter words in {a,b} agree", 10000,
        1e-12, oct_artin_words);
    add("oct_theta_antiautomorphism", "theta(xy) = theta(y) theta(x)", 10000, 1e-12,
        oct_theta_antiautomorphism);

    add("jordan_trace_associativity", "(X∘Y, Z) = (X, Y∘Z)", 1000, 1e-11,
        jordan_trace_associativity);
    add("jordan_cayley_hamilton", "X∘(X×X) = det(X) E", 1000, 1e-11, jordan_cayley_hamilton);
    add("jordan_adjoint_identity", "(X×X)×(X×X) = det(X) X", 1000, 1e-11,
        jordan_adjoint_identity);
    add("jordan_power_identity", "(X∘X)∘(X∘Y) = X∘((X∘X)∘Y)", 1000, 1e-11,
        jordan_power_identity);
    add("jordan_commutativity", "X∘Y = Y∘X", 1000, 0.0, jordan_commutativity);
    add("jordan_inner_trace_form", "(X, Y) = tr(X∘Y)", 1000, 1e-12, jordan_inner_trace_form);

    add("plane_point_invariants", "X∘X = X, tr X = 1, det X = 0", 1000, 1e-11,
        plane_point_invariants);
    add("plane_chart_quaternionic", "quaternionic charts satisfy the plane invariants", 1000,
        1e-11, plane_chart_quaternionic);
    add("tangent_pair_invariants", "X∘Y = Y/2, tr Y = 0, det Y = 0", 1000, 1e-11,
        tangent_pair_invariants);
    add("tangent_cube_identity", "Y∘(Y∘Y) = ||Y||^2 Y / 2", 1000, 1e-11, tangent_cube_identity);
    add("tangent_square_base", "X∘(Y∘Y) = ||Y||^2 X / 2", 1000, 1e-11, tangent_square_base);
    add("tangent_det_shift", "det(X ± Y) = 0", 1000, 1e-11, tangent_det_shift);
    add("tangent_square_norm", "||Y∘Y||^2 = ||Y||^4 / 2", 1000, 1e-11, tangent_square_norm);
    add("tangent_square_square", "(Y∘Y)∘(Y∘Y) = ||Y||^2 (Y∘Y) / 2", 1000, 1e-11,
        tangent_square_square);
    add("metric_norm_ratio", "||Y||^2 = 2 ||Y||_P^2", 1000, 1e-12, metric_norm_ratio);
    add("null_det_trace", "det A = 0, tr A = 0 on the null cone", 1000, 1e-11, null_det_trace);

    add("geodesic_on_manifold", "geodesics stay on the plane with unit speed (64-point grid)",
        100, 1e-10, geodesic_on_manifold);
    add("geodesic_period", "gamma(t + pi) = gamma(t)", 100, 1e-9, geodesic_period);

    add("tau_null_membership", "tau(X,Y)∘tau(X,Y) = 0", 1000, 1e-10, tau_null_membership);
    add("tau_freudenthal_membership", "tau images: A×A = 0 and tr A = 0", 1000, 1e-10,
        tau_freudenthal_membership);
    add("sigma_tau_roundtrip", "sigma(tau(X,Y)) = (X,Y)", 1000, 1e-10, sigma_tau_roundtrip);
    add("tau_sigma_roundtrip", "tau(sigma(A)) = A on the null cone", 1000, 1e-10,
        tau_sigma_roundtrip);
    add("tau_norm_relation", "||tau(X,Y)|| = ||Y||^2", 1000, 1e-12, tau_norm_relation);
    add("flow_equivariance", "tau(gamma(t), gamma'(t)) = e^(-2it) tau(X,Y)", 100, 1e-9,
        flow_equivariance);
    add("hamiltonian_invariance", "the Hamiltonian is constant along the flow and geodesics",
        100, 1e-10, hamiltonian_invariance);
    add("flow_preserves_null", "e^(-2it) A stays on the null cone", 100, 1e-10,
        flow_preserves_null);
    add("hamiltonian_metric_norm", "hamiltonian(tau(X,Y)) = ||Y||_P", 1000, 1e-12,
        hamiltonian_metric_norm);
    add("cogeodesic_matches_geodesic", "sigma ∘ flow_t ∘ tau = geodesic flow on unit covectors",
        100, 1e-10, cogeodesic_matches_geodesic);
    add("cogeodesic_norm_constancy", "||Y(t)||_P is constant under the conjugated flow", 100,
        1e-10, cogeodesic_norm_constancy);

    add("kaehler_form_antisymmetry", "omega_K(U,V) = -omega_K(V,U)", 50, 1e-12,
        kaehler_form_antisymmetry);
    add("kaehler_form_j_invariance", "omega_K(JU,JV) = omega_K(U,V)", 50, 1e-12,
        kaehler_form_j_invariance);
    add("symplectic_form_algebra", "omega_O is bilinear and alternating", 100, 1e-12,
        symplectic_form_algebra);
    add("pullback_identity", "pulled-back Kaehler form = symplectic form / sqrt(2)", 100, 1e-3,
        pullback_identity);

    add("gamma_automorphism", "gamma(xy) = gamma(x)gamma(y), gamma^2 = id, theta gamma = gamma theta",
        10000, 1e-12, gamma_automorphism);
    add("split_reassemble", "X = M + A e4 decomposition is lossless", 1000, 0.0,
        split_reassemble);
    add("g_trace_zero", "tr g(X) = 0", 1000, 1e-12, g_trace_zero);
    add("g_product_rule", "g(X)∘g(Y) = g(gamma(X×Y)) + (gamma(X),Y) E / 4", 1000, 1e-10,
        g_product_rule);
    add("g_inner_rule", "(g(X), g(Y)) = (gamma(X), Y)", 1000, 1e-11, g_inner_rule);
    add("rho_multiplicative", "rho(pq) = rho(p) rho(q)", 1000, 1e-12, rho_multiplicative);
    add("rho_j_symmetry", "J rho(H) = transpose(rho(H)) J", 1000, 1e-12, rho_j_symmetry);
    add("embed_scalar_square", "rho(g(A))^2 = (gamma(A),A) Id / 4, tr rho(g(A)) = 0", 1000,
        1e-9, embed_scalar_square);

    return v;
}

} // namespace

const std::vector<Identity>& identity_suite() {
    static const std::vector<Identity> suite = build_suite();
    return suite;
}

const Identity& find_identity(const std::string& name) {
    for (const Identity& id : identity_suite()) {
        if (id.name == name) return id;
    }
    throw ConfigError("unknown identity: " + name);
}

} // namespace cayley
