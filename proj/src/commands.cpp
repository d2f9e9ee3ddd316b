#include "cayley/commands.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "cayley/cayley_plane.hpp"
#include "cayley/diagnostics.hpp"
#include "cayley/errors.hpp"
#include "cayley/identities.hpp"
#include "cayley/json_io.hpp"
#include "cayley/kaehler_map.hpp"
#include "cayley/m8c.hpp"

namespace cayley {

using nlohmann::json;

void RunConfig::validate() const {
    if (trials < 0) {
        throw ConfigError("trials must be >= 1");
    }
    if (fd_step < kFdStepMin || fd_step > kFdStepMax) {
        throw ConfigError("fd-step must lie in [1e-7, 1e-1]");
    }
    if (t_grid < 1) {
        throw ConfigError("t-grid must be >= 1");
    }
    for (const auto& [name, tol] : tol_overrides) {
        if (name != "all") find_identity(name); // throws on unknown names
        if (!(tol >= 0.0)) throw ConfigError("tolerance override must be >= 0");
    }
}

int run_verify(const RunConfig& config, std::ostream& out) {
    config.validate();
    const auto& suite = identity_suite();

    json records = json::array();
    bool all_pass = true;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const Identity& id = suite[i];
        const int trials = config.trials > 0 ? config.trials : id.trials;
        double tolerance = id.tolerance;
        if (auto it = config.tol_overrides.find("all"); it != config.tol_overrides.end()) {
            tolerance = it->second;
        }
        if (auto it = config.tol_overrides.find(id.name); it != config.tol_overrides.end()) {
            tolerance = it->second;
        }
        const SweepOutcome o =
            sweep(derive_seed(config.seed, i), trials, config.exec, id.kernel);
        const bool pass = o.max_residual <= tolerance;
        all_pass = all_pass && pass;
        records.push_back(json{{"name", id.name},
                               {"law", id.law},
                               {"trials", trials},
                               {"max_residual", o.max_residual},
                               {"worst_trial", o.argmax_trial},
                               {"tolerance", tolerance},
                               {"pass", pass}});
    }

    const json report{{"seed", config.seed}, {"identities", records}, {"pass", all_pass}};
    out << report.dump(2) << '\n';
    return all_pass ? 0 : 1;
}

namespace {

TangentPair geodesic_input_state(const RunConfig& config,
                                 const std::optional<std::string>& input_text) {
    if (!input_text) {
        return random_state(config.seed, true);
    }
    TangentPair s = tangent_pair_from_json(parse_document(*input_text));
    try {
        validate_plane_point(s.X, "geodesic input");
    } catch (const InvariantViolation& e) {
        throw ParseError(std::string("input is not a plane point: ") + e.what());
    }
    const double n = metric_norm(s);
    if (n < 1e-12) {
        throw ParseError("input covector is zero");
    }
    if (std::abs(n - 1.0) > 1e-9) {
        warn("geodesic: normalized input covector from ||Y||_P = " + std::to_string(n));
        s.Y *= 1.0 / n;
    }
    try {
        validate_tangent_pair(s, "geodesic input");
    } catch (const InvariantViolation& e) {
        throw ParseError(std::string("input is not a tangent pair: ") + e.what());
    }
    return s;
}

void write_csv_header(std::ostream& out) {
    out << "t";
    const auto coords = [&](const char* prefix) {
        out << ',' << prefix << "xi1" << ',' << prefix << "xi2" << ',' << prefix << "xi3";
        for (int i = 1; i <= 3; ++i)
            for (int k = 0; k < 8; ++k) out << ',' << prefix << 'x' << i << '_' << k;
    };
    coords("");
    coords("d_");
    out << ",res_point,res_tangent,res_speed\n";
}

} // namespace

int run_geodesic(const RunConfig& config, const std::optional<std::string>& input_text,
                 std::ostream& out) {
    config.validate();
    const TangentPair s = geodesic_input_state(config, input_text);

    out << std::setprecision(17);
    write_csv_header(out);
    for (int k = 0; k < config.t_grid; ++k) {
        const double t = config.t_grid == 1
                             ? 0.0
                             : std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(config.t_grid - 1);
        const TangentPair g = geodesic(s, t);
        out << t;
        for (double v : to_flat(g.X)) out << ',' << v;
        for (double v : to_flat(g.Y)) out << ',' << v;
        out << ',' << plane_point_residuals(g.X).max();
        out << ',' << tangent_residuals(g.X, g.Y).max();
        out << ',' << std::abs(metric_norm(g) - 1.0) << '\n';
    }
    return 0;
}

int run_form_check(const RunConfig& config, std::ostream& out) {
    config.validate();
    const int trials = config.trials > 0 ? config.trials : 100;
    double tolerance = 1e-3;
    if (auto it = config.tol_overrides.find("pullback_identity"); it != config.tol_overrides.end()) {
        tolerance = it->second;
    }

    std::vector<FormValueReport> reports(static_cast<std::size_t>(trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (config.exec == Exec::parallel)
#endif
    for (int k = 0; k < trials; ++k) {
        const std::uint64_t s = derive_seed(config.seed, static_cast<std::uint64_t>(k));
        const TangentPair state = random_state(derive_seed(s, 1), false);
        reports[static_cast<std::size_t>(k)] =
            pullback_check(state, derive_seed(s, 2), config.fd_step);
    }

    double max_err = 0;
    for (int k = 0; k < trials; ++k) {
        const FormValueReport& r = reports[static_cast<std::size_t>(k)];
        max_err = std::max(max_err, r.rel_err);
        json line = to_json(r);
        line["trial"] = k;
        out << line.dump() << '\n';
    }
    const bool pass = max_err <= tolerance;
    out << json{{"trials", trials}, {"max_rel_err", max_err}, {"tolerance", tolerance},
                {"pass", pass}}
               .dump()
        << '\n';
    return pass ? 0 : 1;
}

int run_embed(const RunConfig& config, const std::optional<std::string>& input_text,
              std::ostream& out) {
    config.validate();
    NullElement a{};
    if (!input_text) {
        a = tau(random_state(config.seed, false));
    } else {
        const json doc = parse_document(*input_text);
        if (doc.is_object() && doc.contains("X") && doc.contains("Y")) {
            TangentPair s = tangent_pair_from_json(doc);
            try {
                validate_tangent_pair(s, "embed input");
            } catch (const InvariantViolation& e) {
                throw ParseError(std::string("input is not a tangent pair: ") + e.what());
            }
            if (metric_norm(s) < 1e-12) throw ParseError("input covector is zero");
            a = tau(s);
        } else if (doc.is_object() && doc.contains("xi") && doc.contains("x")) {
            a = make_null(jordan_c_from_json(doc)); // NotNull on off-cone input
        } else {
            throw ParseError("expected {\"X\":...,\"Y\":...} or a complex element {\"xi\":...,\"x\":...}");
        }
    }

    const EmbedResult e = embed_null(a);
    json doc;
    doc["A"] = to_json(a.A);
    doc["B"] = to_json(e.B);
    doc["lambda"] = json::array({e.lambda.real(), e.lambda.imag()});
    doc["residual"] = e.residual;
    out << doc.dump(2) << '\n';
    return 0;
}

} // namespace cayley
