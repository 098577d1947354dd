// Parameter sweeps and figure reproduction: deterministic CSV datasets plus
// declarative gnuplot scripts for an external renderer.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corrcyl/config.hpp"

namespace corrcyl::cli {

struct SweepDataset {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // deterministic order
    bool all_converged = true;

    std::string to_csv() const;
};

/// Worker count: CORRCYL_WORKERS overrides hardware concurrency.
int worker_count();

/// Run every sweep point (concurrently, deterministic row order).
/// Per-point convergence failures are recorded in-row, never thrown.
SweepDataset run_sweep(const SweepSpec& spec);

/// Convenience: run and write spec.output_path.
SweepDataset run_sweep_to_file(const SweepSpec& spec);

enum class FigureId { fig3, fig5, fig6, fig7, fig8, fig9, fig10, fig11 };

std::optional<FigureId> parse_figure_id(const std::string& name);
const char* figure_name(FigureId id);

/// Caption parameters, checked against the hard-coded generator inputs by a
/// golden-file test.
struct FigureCaption {
    std::vector<double> a_values;  // cylinder radii (curves)
    double k_c = 0.0;
    double d = 0.0;      // fixed standoff (profile figures)
    double beta = 0.0;   // vdW figures
    double theta = 0.0;
    double varphi = 0.0;
    bool azimuthal = false;
    bool has_plane_reference = false;
};

FigureCaption figure_caption(FigureId id);

struct FigureOutput {
    std::string csv_path;
    std::string plot_path;
    bool all_converged = true;
};

/// Emit <out_dir>/<id>.csv and <out_dir>/<id>.gp.
FigureOutput reproduce_figure(FigureId id, const std::string& out_dir,
                              const NumericsConfig& cfg);

/// Numerics used by the figure suite when none are supplied.
NumericsConfig figure_numerics();

}  // namespace corrcyl::cli
