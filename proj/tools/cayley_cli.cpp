// Batch driver: identity verification sweeps, geodesic sampling, pullback
// form checks and null-cone embeddings, with deterministic seeding and
// machine-readable reports. Exit codes: 0 success, 1 verification failure,
// 2 input or configuration error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayley/commands.hpp"
#include "cayley/errors.hpp"

namespace {

struct CommonFlags {
    cayley::RunConfig config;
    std::vector<std::string> tol_specs;
    std::string out_path;
    std::string in_path;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_input) {
    cmd->add_option("--seed", f.config.seed, "Base seed for all random draws");
    cmd->add_option("--trials", f.config.trials, "Trial count override (>= 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", f.tol_specs,
                    "Tolerance override, name=value (repeatable; name 'all' hits every identity)");
    cmd->add_option("--fd-step", f.config.fd_step, "Relative finite-difference step");
    cmd->add_option("--t-grid", f.config.t_grid, "Number of grid points on [0, pi]")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", f.out_path, "Write data output to this file instead of stdout");
    if (with_input) {
        cmd->add_option("--in", f.in_path, "Read the input document from this file ('-' = stdin)");
    }
}

void apply_tol_specs(CommonFlags& f) {
    for (const std::string& spec : f.tol_specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
            throw cayley::ConfigError("--tol expects name=value, got '" + spec + "'");
        }
        const std::string name = spec.substr(0, eq);
        double value = 0;
        try {
            value = std::stod(spec.substr(eq + 1));
        } catch (const std::exception&) {
            throw cayley::ConfigError("--tol value in '" + spec + "' is not a number");
        }
        f.config.tol_overrides[name] = value;
    }
}

std::optional<std::string> read_input(const CommonFlags& f, bool default_to_stdin) {
    if (f.in_path == "-" || (f.in_path.empty() && default_to_stdin)) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    if (f.in_path.empty()) return std::nullopt;
    std::ifstream in(f.in_path);
    if (!in) {
        throw cayley::ConfigError("cannot open input file '" + f.in_path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int with_output(const CommonFlags& f, const std::function<int(std::ostream&)>& body) {
    if (f.out_path.empty()) {
        return body(std::cout);
    }
    std::ofstream out(f.out_path);
    if (!out) {
        throw cayley::ConfigError("cannot open output file '" + f.out_path + "'");
    }
    return body(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exceptional Jordan algebra toolkit: octonionic projective-plane "
                 "geometry, null-cone maps and their verification sweeps"};
    app.require_subcommand(1);

    CommonFlags verify_f, geodesic_f, form_f, embed_f;
    bool embed_seeded = false;

    CLI::App* verify = app.add_subcommand("verify", "Run the identity battery, report JSON");
    add_common(verify, verify_f, false);

    CLI::App* geod = app.add_subcommand("geodesic", "Sample a closed-form geodesic as CSV");
    add_common(geod, geodesic_f, true);

    CLI::App* form = app.add_subcommand("form-check",
                                        "Compare the pulled-back Kaehler form with the "
                                        "symplectic form (JSON lines)");
    add_common(form, form_f, false);

    CLI::App* embed = app.add_subcommand("embed", "Embed a state or null element into 8x8 "
                                                  "complex matrices");
    add_common(embed, embed_f, true);
    const CLI::Option* embed_seed_opt = embed->get_option("--seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    embed_seeded = embed_seed_opt->count() > 0;

    try {
        if (verify->parsed()) {
            apply_tol_specs(verify_f);
            return with_output(verify_f,
                               [&](std::ostream& out) { return cayley::run_verify(verify_f.config, out); });
        }
        if (geod->parsed()) {
            apply_tol_specs(geodesic_f);
            const auto input = read_input(geodesic_f, false);
            return with_output(geodesic_f, [&](std::ostream& out) {
                return cayley::run_geodesic(geodesic_f.config, input, out);
            });
        }
        if (form->parsed()) {
            apply_tol_specs(form_f);
            return with_output(form_f,
                               [&](std::ostream& out) { return cayley::run_form_check(form_f.config, out); });
        }
        if (embed->parsed()) {
            apply_tol_specs(embed_f);
            // Without --seed the input comes from --in or stdin.
            const auto input = read_input(embed_f, !embed_seeded && embed_f.in_path.empty());
            return with_output(embed_f, [&](std::ostream& out) {
                return cayley::run_embed(embed_f.config, input, out);
            });
        }
    } catch (const cayley::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cayley::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cayley::NotNull& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cayley::AlgebraError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
