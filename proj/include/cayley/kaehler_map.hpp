#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "cayley/cayley_plane.hpp"
#include "cayley/jordan.hpp"

namespace cayley {

/// A nonzero complexified element on the null cone: A∘A = 0. Construct via
/// tau(), flow() or make_null(); make_null admits residuals up to 1e-8 and
/// never re-projects.
struct NullElement {
    JordanC A;
};

struct NullResidualReport {
    double product_residual = 0;     // ||A∘A||
    double freudenthal_residual = 0; // ||A×A||
    double trace_residual = 0;       // |tr A|
    double relative = 0;             // scale-free max of the three
    bool nonzero = false;
    bool null = false;
};

inline constexpr double kNullTolerance = 1e-8;

NullResidualReport is_null(const JordanC& A);
NullElement make_null(const JordanC& A);

/// The map onto the null cone:
///   tau(X, Y) = (||Y||^2 X − Y∘Y) ⊗ 1 + (||Y||/√2) Y ⊗ i,
/// with ||tau(X,Y)|| = ||Y||^2. Throws ZeroCovector for ||Y|| < 1e-12.
NullElement tau(const TangentPair& state);

/// Inverse of tau:
///   X = (A + conj A)/(2||A||) + A∘conj(A)/||A||^2,
///   Y = −(i/√2) ||A||^(−1/2) (A − conj A).
TangentPair sigma(const NullElement& a);

/// Scalar flow A ↦ e^(−2it) A; preserves the null cone and ||A||.
NullElement flow(const NullElement& a, double t);

/// sigma ∘ flow_t ∘ tau. Defined for any nonzero covector; on unit covectors
/// it coincides with the closed-form geodesic.
TangentPair cogeodesic_flow(const TangentPair& state, double t);

/// potential(A) = <A,A>^(1/4) = ||A||^(1/2); hamiltonian = potential/√2,
/// which equals ||Y||_P on tau images. Throw ZeroElement at A = 0.
double potential(const JordanC& a);
double hamiltonian(const JordanC& a);

/// Central-difference evaluation of the two-form i ∂̄∂ f of a real function
/// on a complex vector space with interleaved (re, im) real coordinates:
///   omega(U, V) = [H(JU, V) − H(U, JV)] / 2,
/// H the real Hessian bilinear form at p, J multiplication by i, with the
/// sign convention fixed so that f(z) = |z|^2 gives omega(1, i) = 2.
/// `step` is the absolute perturbation applied along unit directions.
using RealFunction = std::function<double(std::span<const double>)>;
double complex_hessian_two_form(const RealFunction& f, std::span<const double> p,
                                std::span<const double> u, std::span<const double> v,
                                double step);

inline constexpr double kFdStepMin = 1e-7;
inline constexpr double kFdStepMax = 1e-1;
inline constexpr double kFdStepDefault = 1e-4;

/// i ∂̄∂ ||A||^(1/2) at A, evaluated on ambient tangent vectors U, V.
/// `step_rel` is relative to ||A||; outside [1e-7, 1e-1] this throws
/// StepTooSmall / StepTooLarge.
double kaehler_form_value(const NullElement& a, const JordanC& u, const JordanC& v,
                          double step_rel);

/// Tangent vector to the tangent bundle at `state`, as a pair (V, W) of
/// base and fiber components satisfying the linearized constraints
///   X∘V = V/2,  tr V = 0,  X∘W + V∘Y = W/2,
/// together with its pushforward under tau (central difference along the
/// generating curve).
struct BundleTangent {
    JordanR V;
    JordanR W;
    JordanC push;
};

/// Differentiates the curve s ↦ (gamma_Z(s), P_{gamma_Z(s)}(Y + sU)) at
/// s = 0 and projects the constraint residuals out. Z and U are arbitrary
/// ambient directions.
BundleTangent bundle_tangent_along(const TangentPair& state, const JordanR& z,
                                   const JordanR& u);

/// Seeded wrapper around bundle_tangent_along with random directions;
/// resamples on DegenerateDirection.
BundleTangent bundle_tangent(const TangentPair& state, std::uint64_t seed);

/// Max relative residual of the linearized constraints for (V, W) at state.
double constraint_residual(const TangentPair& state, const JordanR& v, const JordanR& w);

/// Canonical symplectic form on the tangent bundle,
///   omega(t1, t2) = −[(V2, W1) − (V1, W2)] / 2,
/// the sign pinned by the pullback calibration against the flat-model
/// Kaehler form. Throws ConstraintViolation if an argument fails the
/// linearized constraints beyond 1e-8.
double symplectic_form_value(const TangentPair& state, const BundleTangent& t1,
                             const BundleTangent& t2);

struct FormValueReport {
    double lhs = 0;     // pulled-back Kaehler form value
    double rhs = 0;     // symplectic form value / √2
    double rel_err = 0; // |lhs − rhs| / max(|lhs|, |rhs|, floor)
    double fd_step = 0;
};

/// Draws two bundle tangents at `state` and compares the pulled-back
/// Kaehler form against the symplectic form scaled by 1/√2.
FormValueReport pullback_check(const TangentPair& state, std::uint64_t seed, double fd_step);

} // namespace cayley
