#include "cayley/cayley_plane.hpp"

#include <cmath>
#include <string>

#include "cayley/diagnostics.hpp"
#include "cayley/errors.hpp"
#include "cayley/rng.hpp"

namespace cayley {

double PlaneResiduals::max() const { return std::max({idempotency, unit_trace, det}); }
double TangentResiduals::max() const { return std::max({tangency, trace, det}); }

PlaneResiduals plane_point_residuals(const JordanR& X) {
    PlaneResiduals r;
    r.idempotency = max_abs(jordan_product(X, X) - X);
    r.unit_trace = std::abs(trace(X) - 1.0);
    r.det = std::abs(determinant(X));
    return r;
}

TangentResiduals tangent_residuals(const JordanR& X, const JordanR& Y) {
    TangentResiduals r;
    r.tangency = max_abs(jordan_product(X, Y) - 0.5 * Y);
    r.trace = std::abs(trace(Y));
    r.det = std::abs(determinant(Y));
    return r;
}

namespace {

void enforce(double residual, double scale, const char* where) {
    const double rel = residual / std::max(scale, 1.0);
    if (rel > kFailResidual) {
        throw InvariantViolation(std::string(where) + ": invariant residual " +
                                 std::to_string(rel) + " exceeds hard tolerance");
    }
    if (rel > kWarnResidual) {
        warn(std::string(where) + ": invariant residual " + std::to_string(rel) +
             " above warn threshold");
    }
}

} // namespace

void validate_plane_point(const JordanR& X, const char* where) {
    enforce(plane_point_residuals(X).max(), 1.0, where);
}

void validate_tangent_pair(const TangentPair& s, const char* where) {
    validate_plane_point(s.X, where);
    const double scale = std::max(1.0, norm_sq(s.Y));
    enforce(tangent_residuals(s.X, s.Y).max(), scale, where);
}

PlanePoint chart_point(const OctonionR& u, const OctonionR& v, int chart) {
    if (chart < 1 || chart > 3) {
        throw ConfigError("chart index must be 1, 2 or 3");
    }
    std::array<OctonionR, 3> z;
    int slot = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == chart - 1) {
            z[i] = OctonionR::identity();
        } else {
            z[i] = (slot++ == 0) ? u : v;
        }
    }
    const double inv = 1.0 / (1.0 + oct_abs_sq(u) + oct_abs_sq(v));
    Matrix3O<double> m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m(i, j) = inv * (z[i] * theta(z[j]));
    }
    // Entries live in the associative subalgebra generated by u and v, so
    // the rank-one square is idempotent; the post-check still runs.
    const PlanePoint X = jordan_coordinates_checked(m, 1.0);
    validate_plane_point(X, "chart_point");
    return X;
}

JordanR tangent_project(const PlanePoint& base, const JordanR& V) {
    const JordanR xv = jordan_product(base, V);
    return 4.0 * (xv - jordan_product(base, xv));
}

PeirceComponents peirce_split(const PlanePoint& X, const JordanR& V) {
    const JordanR lv = jordan_product(X, V);
    const JordanR llv = jordan_product(X, lv);
    PeirceComponents p;
    p.one = 2.0 * llv - lv;
    p.half = 4.0 * (lv - llv);
    p.zero = V - p.half - p.one;
    return p;
}

double metric(const TangentPair& a, const TangentPair& b) {
    const double scale = std::max(1.0, max_abs(a.X));
    if (max_abs(a.X - b.X) > 1e-9 * scale) {
        throw BaseMismatch("metric: tangent vectors live at different base points");
    }
    return 0.5 * inner(a.Y, b.Y);
}

double metric_norm(const TangentPair& s) { return std::sqrt(metric_norm_sq(s)); }

TangentPair random_state(std::uint64_t seed, bool unit) {
    RandomSource rs(seed);
    const int chart = rs.uniform_int(1, 3);
    const OctonionR u = rs.normal_octonion();
    const OctonionR v = rs.normal_octonion();
    const PlanePoint X = chart_point(u, v, chart);

    for (int attempt = 0; attempt < 16; ++attempt) {
        const JordanR V = rs.normal_element();
        JordanR Y = tangent_project(X, V);
        const double n = std::sqrt(0.5 * inner(Y, Y));
        if (n < 1e-8) continue;
        if (unit) Y *= 1.0 / n;
        TangentPair s{X, Y};
        validate_tangent_pair(s, "random_state");
        return s;
    }
    throw DegenerateTangent("random_state: projected tangent repeatedly degenerate");
}

TangentPair geodesic(const TangentPair& state, double t) {
    const double speed = metric_norm(state);
    if (std::abs(speed - 1.0) > 1e-9) {
        throw NotUnitSpeed("geodesic: ||Y||_P = " + std::to_string(speed) +
                           ", expected a unit covector");
    }
    const JordanR yy = jordan_product(state.Y, state.Y);
    const JordanR axis = state.X - 0.5 * yy;
    const double c = std::cos(2.0 * t);
    const double s = std::sin(2.0 * t);
    TangentPair out;
    out.X = c * axis + (0.5 * s) * state.Y + 0.5 * yy;
    out.Y = (-2.0 * s) * axis + c * state.Y;
    return out;
}

} // namespace cayley
