#include "cayley/kaehler_map.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/rng.hpp"

namespace cayley {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kCurveStep = 1e-6;
} // namespace

NullResidualReport is_null(const JordanC& a) {
    NullResidualReport r;
    const double nsq = norm_sq(a);
    r.nonzero = nsq >= 1e-24;
    r.product_residual = norm(jordan_product(a, a));
    r.freudenthal_residual = norm(freudenthal(a, a));
    r.trace_residual = std::abs(trace(a));
    const double quad_scale = std::max(nsq, 1e-12);
    const double lin_scale = std::max(std::sqrt(nsq), 1e-12);
    r.relative = std::max({r.product_residual / quad_scale, r.freudenthal_residual / quad_scale,
                           r.trace_residual / lin_scale});
    r.null = r.nonzero && r.relative <= kNullTolerance;
    return r;
}

NullElement make_null(const JordanC& a) {
    const NullResidualReport r = is_null(a);
    if (!r.nonzero) {
        throw NotNull("make_null: A = 0 violates the A != 0 requirement");
    }
    if (!r.null) {
        throw NotNull("make_null: relative null-cone residual " + std::to_string(r.relative) +
                      " exceeds " + std::to_string(kNullTolerance));
    }
    return NullElement{a};
}

NullElement tau(const TangentPair& state) {
    const double nsq = inner(state.Y, state.Y);
    if (nsq < 1e-24) {
        throw ZeroCovector("tau: covector norm below 1e-12");
    }
    const JordanR re = nsq * state.X - jordan_product(state.Y, state.Y);
    const JordanR im = (std::sqrt(nsq) / kSqrt2) * state.Y;
    return NullElement{combine(re, im)};
}

TangentPair sigma(const NullElement& a) {
    const double na = norm(a.A);
    const JordanC abar = conjugate(a.A);
    const JordanC xc =
        (complexd(0.5 / na, 0.0)) * (a.A + abar) +
        (complexd(1.0 / (na * na), 0.0)) * jordan_product(a.A, abar);
    const JordanC yc = complexd(0.0, -1.0 / (kSqrt2 * std::sqrt(na))) * (a.A - abar);
    return TangentPair{real_part(xc), real_part(yc)};
}

NullElement flow(const NullElement& a, double t) {
    const complexd phase(std::cos(2.0 * t), -std::sin(2.0 * t));
    return NullElement{phase * a.A};
}

TangentPair cogeodesic_flow(const TangentPair& state, double t) {
    return sigma(flow(tau(state), t));
}

double potential(const JordanC& a) {
    const double nsq = norm_sq(a);
    if (nsq < 1e-24) {
        throw ZeroElement("potential: undefined at A = 0");
    }
    return std::pow(nsq, 0.25);
}

double hamiltonian(const JordanC& a) { return potential(a) / kSqrt2; }

namespace {

// Accumulated per complex pair so that multiplication by i (which swaps and
// negates within a pair) leaves the value bitwise unchanged.
double norm_of(std::span<const double> v) {
    double acc = 0;
    for (std::size_t k = 0; k + 1 < v.size(); k += 2) acc += v[k] * v[k] + v[k + 1] * v[k + 1];
    return std::sqrt(acc);
}

// Multiplication by i on interleaved (re, im) coordinates.
std::vector<double> j_rotate(std::span<const double> v) {
    std::vector<double> w(v.size());
    for (std::size_t k = 0; k + 1 < v.size(); k += 2) {
        w[k] = -v[k + 1];
        w[k + 1] = v[k];
    }
    return w;
}

double hessian_bilinear(const RealFunction& f, std::span<const double> p,
                        std::span<const double> u, std::span<const double> v, double h) {
    const std::size_t n = p.size();
    std::vector<double> q(n);
    // The perturbation is summed before adding the base point, which makes
    // the stencil bitwise symmetric under (u, su) <-> (v, sv) and under
    // direction negation; the two-form properties then hold exactly.
    auto eval = [&](double su, double sv) {
        for (std::size_t k = 0; k < n; ++k) q[k] = p[k] + (su * u[k] + sv * v[k]);
        return f(q);
    };
    return (eval(h, h) - eval(h, -h) - eval(-h, h) + eval(-h, -h)) / (4.0 * h * h);
}

} // namespace

double complex_hessian_two_form(const RealFunction& f, std::span<const double> p,
                                std::span<const double> u, std::span<const double> v,
                                double step) {
    const double nu = norm_of(u);
    const double nv = norm_of(v);
    if (nu < 1e-14 || nv < 1e-14) return 0.0;
    std::vector<double> uh(u.begin(), u.end());
    std::vector<double> vh(v.begin(), v.end());
    for (auto& x : uh) x /= nu;
    for (auto& x : vh) x /= nv;
    const std::vector<double> ju = j_rotate(uh);
    const std::vector<double> jv = j_rotate(vh);
    const double val =
        0.5 * (hessian_bilinear(f, p, ju, vh, step) - hessian_bilinear(f, p, uh, jv, step));
    return val * nu * nv;
}

double kaehler_form_value(const NullElement& a, const JordanC& u, const JordanC& v,
                          double step_rel) {
    if (step_rel < kFdStepMin) {
        throw StepTooSmall("kaehler_form_value: relative step below 1e-7");
    }
    if (step_rel > kFdStepMax) {
        throw StepTooLarge("kaehler_form_value: relative step above 1e-1");
    }
    const auto p = to_flat_interleaved(a.A);
    const auto uf = to_flat_interleaved(u);
    const auto vf = to_flat_interleaved(v);
    const RealFunction f = [](std::span<const double> q) {
        std::array<double, 54> buf{};
        std::copy(q.begin(), q.end(), buf.begin());
        return potential(from_flat_interleaved(buf));
    };
    const double h = step_rel * norm(a.A);
    return complex_hessian_two_form(f, p, uf, vf, h);
}

namespace {

TangentPair curve_point(const TangentPair& state, const JordanR& z_tangent, double z_norm,
                        const JordanR& u, double s) {
    PlanePoint base = state.X;
    if (z_norm >= 1e-10) {
        const TangentPair unit{state.X, (1.0 / z_norm) * z_tangent};
        base = geodesic(unit, z_norm * s).X;
    }
    const JordanR fiber = tangent_project(base, state.Y + s * u);
    return TangentPair{base, fiber};
}

} // namespace

BundleTangent bundle_tangent_along(const TangentPair& state, const JordanR& z,
                                   const JordanR& u) {
    if (inner(state.Y, state.Y) < 1e-24) {
        throw ZeroCovector("bundle_tangent: base state has zero covector");
    }
    const JordanR zt = tangent_project(state.X, z);
    const double zn = std::sqrt(0.5 * inner(zt, zt));

    const double h = kCurveStep;
    const TangentPair cp = curve_point(state, zt, zn, u, h);
    const TangentPair cm = curve_point(state, zt, zn, u, -h);

    BundleTangent t;
    t.V = (0.5 / h) * (cp.X - cm.X);
    t.W = (0.5 / h) * (cp.Y - cm.Y);
    if (max_abs(t.V) < 1e-10 && max_abs(t.W) < 1e-10) {
        throw DegenerateDirection("bundle_tangent: differentiated curve is stationary");
    }

    // Clean the finite-difference noise: V back onto the half-eigenspace,
    // W by solving (L_X - 1/2) dW = -R on the 0- and 1-eigenspaces.
    t.V = tangent_project(state.X, t.V);
    const JordanR r = jordan_product(state.X, t.W) + jordan_product(t.V, state.Y) - 0.5 * t.W;
    const PeirceComponents pc = peirce_split(state.X, r);
    t.W += 2.0 * pc.zero - 2.0 * pc.one;

    const JordanC ap = tau(cp).A;
    const JordanC am = tau(cm).A;
    t.push = complexd(0.5 / h, 0.0) * (ap - am);
    return t;
}

BundleTangent bundle_tangent(const TangentPair& state, std::uint64_t seed) {
    RandomSource rs(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        const JordanR z = rs.normal_element();
        const JordanR u = rs.normal_element();
        try {
            return bundle_tangent_along(state, z, u);
        } catch (const DegenerateDirection&) {
            continue;
        }
    }
    throw DegenerateDirection("bundle_tangent: no usable direction after 16 attempts");
}

double constraint_residual(const TangentPair& state, const JordanR& v, const JordanR& w) {
    const double r1 = max_abs(jordan_product(state.X, v) - 0.5 * v);
    const double r2 = std::abs(trace(v));
    const double r3 =
        max_abs(jordan_product(state.X, w) + jordan_product(v, state.Y) - 0.5 * w);
    const double scale = std::max({1.0, max_abs(v), max_abs(w), max_abs(state.Y)});
    return std::max({r1, r2, r3}) / scale;
}

double symplectic_form_value(const TangentPair& state, const BundleTangent& t1,
                             const BundleTangent& t2) {
    for (const auto* t : {&t1, &t2}) {
        const double r = constraint_residual(state, t->V, t->W);
        if (r > 1e-8) {
            throw ConstraintViolation("symplectic_form_value: linearized constraint residual " +
                                      std::to_string(r));
        }
    }
    return -0.5 * (inner(t2.V, t1.W) - inner(t1.V, t2.W));
}

FormValueReport pullback_check(const TangentPair& state, std::uint64_t seed, double fd_step) {
    const BundleTangent t1 = bundle_tangent(state, derive_seed(seed, 1));
    const BundleTangent t2 = bundle_tangent(state, derive_seed(seed, 2));
    const NullElement a = tau(state);
    FormValueReport rep;
    rep.fd_step = fd_step;
    rep.lhs = kaehler_form_value(a, t1.push, t2.push, fd_step);
    rep.rhs = symplectic_form_value(state, t1, t2) / kSqrt2;
    rep.rel_err = std::abs(rep.lhs - rep.rhs) /
                  std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-12});
    return rep;
}

} // namespace cayley
