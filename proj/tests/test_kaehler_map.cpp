#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cayley/cayley_plane.hpp"
#include "cayley/errors.hpp"
#include "cayley/kaehler_map.hpp"
#include "cayley/rng.hpp"

using namespace cayley;

namespace {

constexpr double kPi = std::numbers::pi;

JordanR e11() { return JordanR::diagonal(1.0, 0.0, 0.0); }

JordanR model_f() {
    JordanR f;
    f.x[2] = OctonionR::identity();
    return f;
}

TangentPair model_state() { return TangentPair{e11(), model_f()}; }

} // namespace

TEST_CASE("tau at the model state") {
    const NullElement a = tau(model_state());
    // Real part diag(1, -1, 0); imaginary part F.
    CHECK(max_abs(real_part(a.A) - JordanR::diagonal(1.0, -1.0, 0.0)) <= 1e-15);
    CHECK(max_abs(imag_part(a.A) - model_f()) <= 1e-15);
    CHECK(max_abs(jordan_product(a.A, a.A)) <= 1e-15);
    CHECK(std::abs(norm(a.A) - 2.0) <= 1e-15); // ||A|| = ||Y||^2 = 2
    CHECK(is_null(a.A).null);
}

TEST_CASE("tau rejects the zero covector and scales quadratically") {
    TangentPair s = model_state();
    s.Y = JordanR::zero();
    CHECK_THROWS_AS((void)tau(s), ZeroCovector);

    const TangentPair base = model_state();
    TangentPair scaled = base;
    scaled.Y *= 3.0;
    CHECK(std::abs(norm(tau(scaled).A) - 9.0 * norm(tau(base).A)) <= 1e-12);
}

TEST_CASE("sigma inverts tau at the model state") {
    NullElement a{combine(JordanR::diagonal(1.0, -1.0, 0.0), model_f())};
    const TangentPair s = sigma(a);
    CHECK(max_abs(s.X - e11()) <= 1e-14);
    CHECK(max_abs(s.Y - model_f()) <= 1e-14);
}

TEST_CASE("sigma/tau round trips on random states") {
    for (int k = 0; k < 100; ++k) {
        TangentPair s = random_state(derive_seed(101, static_cast<std::uint64_t>(k)), false);
        const NullElement a = tau(s);
        const double nsq = inner(s.Y, s.Y);
        CHECK(norm(jordan_product(a.A, a.A)) <= 1e-10 * nsq * nsq);
        CHECK(std::abs(norm(a.A) - nsq) <= 1e-12 * nsq);
        CHECK(std::abs(norm_sq(a.A) - nsq * nsq) <= 1e-12 * nsq * nsq); // <A,A> = ||Y||^4
        CHECK(std::abs(inner(a.A, a.A)) <= 1e-11 * nsq * nsq); // bilinear self-pairing vanishes

        const TangentPair back = sigma(a);
        const double scale = std::max(1.0, max_abs(s.Y));
        CHECK(max_abs(back.X - s.X) <= 1e-10 * scale);
        CHECK(max_abs(back.Y - s.Y) <= 1e-10 * scale);

        const NullElement again = tau(back);
        CHECK(max_abs(again.A - a.A) <= 1e-10 * max_abs(a.A));
    }
}

TEST_CASE("sigma homogeneity: lambda A keeps X and scales Y by sqrt(lambda)") {
    const TangentPair s = random_state(31337, false);
    const NullElement a = tau(s);
    const double lam = 2.719;
    const TangentPair s1 = sigma(a);
    const TangentPair s2 = sigma(NullElement{complexd(lam, 0.0) * a.A});
    CHECK(max_abs(s2.X - s1.X) <= 1e-11);
    CHECK(max_abs(s2.Y - std::sqrt(lam) * s1.Y) <= 1e-11 * std::max(1.0, max_abs(s1.Y)));
}

TEST_CASE("is_null classification") {
    CHECK(is_null(tau(model_state()).A).null);
    const NullResidualReport e_report = is_null(complexify(JordanR::identity()));
    CHECK_FALSE(e_report.null);
    CHECK(e_report.nonzero);
    const NullResidualReport zero_report = is_null(JordanC::zero());
    CHECK_FALSE(zero_report.null);
    CHECK_FALSE(zero_report.nonzero);
    CHECK_THROWS_AS((void)make_null(complexify(JordanR::identity())), NotNull);
    CHECK_THROWS_AS((void)make_null(JordanC::zero()), NotNull);
}

TEST_CASE("flow is the scalar phase action") {
    const NullElement a = tau(model_state());
    CHECK(max_abs(flow(a, 0.0).A - a.A) == 0.0);
    CHECK(max_abs(flow(a, kPi / 2.0).A + a.A) <= 1e-15);
    CHECK(max_abs(flow(a, kPi).A - a.A) <= 1e-15);
    CHECK(is_null(flow(a, 0.37).A).relative <= 1e-12);
    CHECK(std::abs(norm(flow(a, 0.37).A) - norm(a.A)) <= 1e-13);
}

TEST_CASE("cogeodesic flow matches the closed-form geodesic on unit states") {
    const TangentPair s = model_state();
    const TangentPair c0 = cogeodesic_flow(s, 0.0);
    CHECK(max_abs(c0.X - s.X) <= 1e-14);
    CHECK(max_abs(c0.Y - s.Y) <= 1e-14);

    for (int k = 0; k < 20; ++k) {
        const TangentPair u = random_state(derive_seed(313, static_cast<std::uint64_t>(k)), true);
        const double t = kPi * (static_cast<double>(k) + 0.25) / 20.0;
        const TangentPair g = geodesic(u, t);
        const TangentPair c = cogeodesic_flow(u, t);
        CHECK(max_abs(c.X - g.X) <= 1e-10);
        CHECK(max_abs(c.Y - g.Y) <= 1e-10);
    }
}

TEST_CASE("cogeodesic flow preserves the metric norm of any covector") {
    RandomSource rs(127);
    for (int k = 0; k < 20; ++k) {
        TangentPair s = random_state(derive_seed(127, static_cast<std::uint64_t>(k)), false);
        s.Y *= 0.2 + 3.0 * rs.uniform();
        const double n0 = metric_norm(s);
        const TangentPair c = cogeodesic_flow(s, 2.0 * kPi * rs.uniform());
        CHECK(std::abs(metric_norm(c) - n0) <= 1e-10 * n0);
        CHECK(tangent_residuals(c.X, c.Y).tangency <= 1e-10 * std::max(1.0, norm(c.Y)));
    }

    TangentPair zero = model_state();
    zero.Y = JordanR::zero();
    CHECK_THROWS_AS((void)cogeodesic_flow(zero, 0.3), ZeroCovector);
}

TEST_CASE("potential and hamiltonian") {
    const NullElement a = tau(model_state());
    CHECK(std::abs(potential(a.A) - std::sqrt(2.0)) <= 1e-15);
    CHECK(std::abs(hamiltonian(a.A) - 1.0) <= 1e-15);
    CHECK_THROWS_AS((void)potential(JordanC::zero()), ZeroElement);

    // homogeneity and flow invariance
    CHECK(std::abs(potential(complexd(4.0, 0.0) * a.A) - 2.0 * potential(a.A)) <= 1e-14);
    CHECK(std::abs(hamiltonian(flow(a, 1.234).A) - hamiltonian(a.A)) <= 1e-14);

    for (int k = 0; k < 50; ++k) {
        const TangentPair s = random_state(derive_seed(11, static_cast<std::uint64_t>(k)), false);
        CHECK(std::abs(hamiltonian(tau(s).A) - metric_norm(s)) <= 1e-12 * metric_norm(s));
    }
}

TEST_CASE("flat calibration: f(z) = |z|^2 has form value 2 on (1, i)") {
    const RealFunction f = [](std::span<const double> q) {
        return q[0] * q[0] + q[1] * q[1];
    };
    const std::array<double, 2> p{0.3, -0.7};
    const std::array<double, 2> one{1.0, 0.0};
    const std::array<double, 2> i_dir{0.0, 1.0};
    const double val = complex_hessian_two_form(f, p, one, i_dir, 1e-4);
    CHECK(std::abs(val - 2.0) <= 1e-6);
    const double swapped = complex_hessian_two_form(f, p, i_dir, one, 1e-4);
    CHECK(std::abs(swapped + 2.0) <= 1e-6);
}

TEST_CASE("kaehler form value validates the step range") {
    const NullElement a = tau(model_state());
    const JordanC u = complexify(model_f());
    CHECK_THROWS_AS((void)kaehler_form_value(a, u, u, 1e-8), StepTooSmall);
    CHECK_THROWS_AS((void)kaehler_form_value(a, u, u, 0.5), StepTooLarge);
}

TEST_CASE("bundle tangents satisfy the linearized constraints") {
    for (int k = 0; k < 25; ++k) {
        const TangentPair s =
            random_state(derive_seed(69, static_cast<std::uint64_t>(k)), k % 2 == 0);
        const BundleTangent t = bundle_tangent(s, derive_seed(70, static_cast<std::uint64_t>(k)));
        CHECK(constraint_residual(s, t.V, t.W) <= 1e-8);

        // deterministic per seed
        const BundleTangent t2 = bundle_tangent(s, derive_seed(70, static_cast<std::uint64_t>(k)));
        CHECK(max_abs(t.V - t2.V) == 0.0);
        CHECK(max_abs(t.W - t2.W) == 0.0);
        CHECK(max_abs(t.push - t2.push) == 0.0);
    }
}

TEST_CASE("pushforward scales linearly with the curve speed") {
    const TangentPair s = random_state(2024, true);
    RandomSource rs(2025);
    const JordanR z = rs.normal_element();
    const JordanR u = rs.normal_element();
    const BundleTangent t1 = bundle_tangent_along(s, z, u);
    const BundleTangent t2 = bundle_tangent_along(s, 2.0 * z, 2.0 * u);
    CHECK(max_abs(t2.V - 2.0 * t1.V) <= 1e-6 * std::max(1.0, max_abs(t1.V)));
    CHECK(max_abs(t2.W - 2.0 * t1.W) <= 1e-6 * std::max(1.0, max_abs(t1.W)));
    CHECK(max_abs(t2.push - complexd(2.0, 0.0) * t1.push) <=
          1e-6 * std::max(1.0, max_abs(t1.push)));
}

TEST_CASE("symplectic form is alternating, bilinear and constraint-checked") {
    const TangentPair s = random_state(777, true);
    const BundleTangent t1 = bundle_tangent(s, 1);
    const BundleTangent t2 = bundle_tangent(s, 2);
    CHECK(symplectic_form_value(s, t1, t1) == 0.0);
    CHECK(std::abs(symplectic_form_value(s, t1, t2) + symplectic_form_value(s, t2, t1)) <=
          1e-15);

    BundleTangent combo;
    combo.V = 2.0 * t1.V - 3.0 * t2.V;
    combo.W = 2.0 * t1.W - 3.0 * t2.W;
    const BundleTangent t3 = bundle_tangent(s, 3);
    const double lhs = symplectic_form_value(s, combo, t3);
    const double rhs = 2.0 * symplectic_form_value(s, t1, t3) -
                       3.0 * symplectic_form_value(s, t2, t3);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));

    BundleTangent garbage;
    RandomSource rs(778);
    garbage.V = rs.normal_element();
    garbage.W = rs.normal_element();
    CHECK_THROWS_AS((void)symplectic_form_value(s, garbage, t1), ConstraintViolation);
}

TEST_CASE("degenerate pair gives zero on both sides") {
    const TangentPair s = random_state(909, true);
    const NullElement a = tau(s);
    const BundleTangent t = bundle_tangent(s, 1);
    CHECK(kaehler_form_value(a, t.push, t.push, 1e-4) == 0.0);
    CHECK(symplectic_form_value(s, t, t) == 0.0);
}

TEST_CASE("pullback identity at the model state and on random states") {
    const FormValueReport model = pullback_check(model_state(), 99, 1e-4);
    CHECK(model.rel_err <= 1e-3);

    double worst = 0;
    for (int k = 0; k < 20; ++k) {
        const std::uint64_t seed = derive_seed(555, static_cast<std::uint64_t>(k));
        const TangentPair s = random_state(derive_seed(seed, 1), false);
        const FormValueReport r = pullback_check(s, derive_seed(seed, 2), 1e-4);
        worst = std::max(worst, r.rel_err);
    }
    CHECK(worst <= 1e-3);
}

TEST_CASE("halving the finite-difference step quarters the pullback error") {
    // Measured where the h^2 truncation term dominates rounding noise.
    double err_coarse = 0;
    double err_fine = 0;
    for (int k = 0; k < 20; ++k) {
        const std::uint64_t seed = derive_seed(444, static_cast<std::uint64_t>(k));
        const TangentPair s = random_state(derive_seed(seed, 1), false);
        err_coarse = std::max(err_coarse, pullback_check(s, derive_seed(seed, 2), 8e-4).rel_err);
        err_fine = std::max(err_fine, pullback_check(s, derive_seed(seed, 2), 4e-4).rel_err);
    }
    const double ratio = err_coarse / err_fine;
    CHECK(ratio >= 3.0);
    CHECK(ratio <= 5.0);
}
