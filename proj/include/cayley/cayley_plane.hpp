#pragma once

#include <cstdint>

#include "cayley/jordan.hpp"

namespace cayley {

/// A point of the projective plane of primitive idempotents:
/// X∘X = X, tr X = 1 (and consequently det X = 0).
using PlanePoint = JordanR;

/// A plane point together with a tangent vector at it: X∘Y = Y/2
/// (and consequently tr Y = 0, det Y = 0).
struct TangentPair {
    JordanR X;
    JordanR Y;
};

struct PlaneResiduals {
    double idempotency = 0; // max-abs of X∘X − X
    double unit_trace = 0;  // |tr X − 1|
    double det = 0;         // |det X|
    double max() const;
};

struct TangentResiduals {
    double tangency = 0; // max-abs of X∘Y − Y/2
    double trace = 0;    // |tr Y|
    double det = 0;      // |det Y|
    double max() const;
};

PlaneResiduals plane_point_residuals(const JordanR& X);
TangentResiduals tangent_residuals(const JordanR& X, const JordanR& Y);

// Post-check policy for constructors: warn above kWarnResidual, throw
// InvariantViolation above kFailResidual. Separates rounding noise from
// logic errors.
inline constexpr double kWarnResidual = 1e-11;
inline constexpr double kFailResidual = 1e-8;

void validate_plane_point(const JordanR& X, const char* where);
void validate_tangent_pair(const TangentPair& s, const char* where);

/// Veronese chart: with z the octonion column vector carrying 1 in slot
/// `chart` (1-based) and u, v in the remaining slots in increasing order,
/// returns z z^* / (1 + |u|^2 + |v|^2). Post-checked against the plane
/// point invariants.
PlanePoint chart_point(const OctonionR& u, const OctonionR& v, int chart);

/// Projection onto the 1/2-eigenspace of multiplication by the idempotent
/// base: P(V) = 4(X∘V − X∘(X∘V)). Multiplication by a primitive idempotent
/// has spectrum {0, 1/2, 1}, and 4(t − t^2) is 1 at 1/2 and 0 at 0 and 1.
JordanR tangent_project(const PlanePoint& base, const JordanR& V);

struct PeirceComponents {
    JordanR zero;
    JordanR half;
    JordanR one;
};

/// Splits V into the {0, 1/2, 1} eigenspaces of multiplication by X.
PeirceComponents peirce_split(const PlanePoint& X, const JordanR& V);

/// Riemannian metric (Y1,Y2)_P = tr(Y1∘Y2)/2 = (Y1,Y2)/2 on a common base
/// point. Throws BaseMismatch when the base points differ.
double metric(const TangentPair& a, const TangentPair& b);

inline double metric_norm_sq(const TangentPair& s) { return 0.5 * inner(s.Y, s.Y); }
double metric_norm(const TangentPair& s);

/// Draws a plane point from a random chart and a tangent vector by
/// projecting a 27-coordinate Gaussian; normalizes to metric norm 1 when
/// `unit` is set. Deterministic per seed; resamples the tangent up to 16
/// times before raising DegenerateTangent.
TangentPair random_state(std::uint64_t seed, bool unit);

/// Closed-form unit-speed geodesic through state (X, Y), ||Y||_P = 1:
///   gamma(t)  = cos 2t (X − Y∘Y/2) + (sin 2t) Y / 2 + Y∘Y/2
///   gamma'(t) = −2 sin 2t (X − Y∘Y/2) + cos 2t Y
/// Throws NotUnitSpeed unless ||Y||_P = 1 within 1e-9. Non-unit covectors
/// are handled by cogeodesic_flow, which conjugates through the null cone.
TangentPair geodesic(const TangentPair& state, double t);

} // namespace cayley
