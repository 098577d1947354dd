// corrcyl: lateral electrostatic / van der Waals forces near a corrugated
// conducting cylinder.  Subcommands: sweep, figure, validate, regime-map.
//
// Exit codes: 0 success, 1 validation failure, 2 convergence failure in a
// single-point (or figure) invocation.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "corrcyl/config.hpp"
#include "corrcyl/sweep.hpp"

namespace {

using namespace corrcyl;

int print_diagnostics(const std::string& path, const cli::ParsedConfig& parsed) {
    for (const auto& d : parsed.diagnostics) {
        if (d.line > 0)
            std::fprintf(stderr, "%s:%d: %s\n", path.c_str(), d.line,
                         d.message.c_str());
        else
            std::fprintf(stderr, "%s: %s\n", path.c_str(), d.message.c_str());
    }
    return parsed.diagnostics.empty() ? 0 : 1;
}

int run_sweep_command(const std::string& config_path, bool require_regime_map) {
    const auto parsed = cli::load_config(config_path);
    if (print_diagnostics(config_path, parsed) != 0) return 1;
    const auto& spec = *parsed.spec;
    if (require_regime_map && spec.target != cli::Target::regime_map) {
        std::fprintf(stderr, "%s: regime-map requires 'target = regime_map'\n",
                     config_path.c_str());
        return 1;
    }

    const auto ds = cli::run_sweep_to_file(spec);
    std::printf("%s: %zu rows -> %s%s\n", cli::target_name(spec.target),
                ds.rows.size(), spec.output_path.c_str(),
                ds.all_converged ? "" : " (with convergence failures)");

    const bool single_point = ds.rows.size() == 1;
    if (single_point && !ds.all_converged) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lateral vdW and electrostatic forces near a corrugated "
                 "conducting cylinder"};
    app.require_subcommand(1);

    std::string config_path, figure_id, out_dir = ".";
    double rel_tol = 0.0;

    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep from a config");
    sweep->add_option("config", config_path, "config file")->required();

    auto* regime = app.add_subcommand("regime-map", "regime classification grid");
    regime->add_option("config", config_path, "config file")->required();

    auto* validate = app.add_subcommand("validate", "check a config file");
    validate->add_option("config", config_path, "config file")->required();

    auto* figure = app.add_subcommand("figure", "reproduce a published figure");
    figure->add_option("id", figure_id, "fig3|fig5|fig6|fig7|fig8|fig9|fig10|fig11")
        ->required();
    figure->add_option("--out", out_dir, "output directory");
    figure->add_option("--rel-tol", rel_tol, "override figure-suite tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return run_sweep_command(config_path, false);
        if (regime->parsed()) return run_sweep_command(config_path, true);
        if (validate->parsed()) {
            const auto parsed = corrcyl::cli::load_config(config_path);
            if (print_diagnostics(config_path, parsed) != 0) return 1;
            std::printf("%s: ok (target %s, %d points)\n", config_path.c_str(),
                        corrcyl::cli::target_name(parsed.spec->target),
                        parsed.spec->swept.points() *
                            (parsed.spec->swept2 ? parsed.spec->swept2->points() : 1));
            return 0;
        }
        if (figure->parsed()) {
            const auto id = corrcyl::cli::parse_figure_id(figure_id);
            if (!id) {
                std::fprintf(stderr, "unknown figure id '%s'\n", figure_id.c_str());
                return 1;
            }
            auto cfg = corrcyl::cli::figure_numerics();
            if (rel_tol > 0.0) cfg.rel_tol = rel_tol;
            const auto out = corrcyl::cli::reproduce_figure(*id, out_dir, cfg);
            std::printf("%s -> %s, %s%s\n", figure_id.c_str(), out.csv_path.c_str(),
                        out.plot_path.c_str(),
                        out.all_converged ? "" : " (with convergence failures)");
            return out.all_converged ? 0 : 2;
        }
    } catch (const corrcyl::ConvergenceError& e) {
        std::fprintf(stderr, "convergence failure: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
