#pragma once

#include "bondsim/config.hpp"
#include "bondsim/figures.hpp"

#include <string>
#include <vector>

namespace bondsim {

/// Format a double with 17 significant digits (lossless round-trip, so
/// repeated runs produce byte-identical CSVs).
std::string format_value(double v);

/// What a run produced: output files, duration, solver counters.
struct RunManifest {
    std::string scenario_echo;
    std::vector<std::string> files;
    double wall_seconds = 0.0;
    long steps = 0;
    long rejections = 0;
    std::vector<std::string> notes;

    void write(const std::string& path) const;
};

/// Execute the scenario in `config_path`, writing trace/field CSVs, a
/// summary CSV and a manifest into out_dir.
RunManifest run_scenario(const std::string& config_path, const std::string& out_dir);
RunManifest run_scenario(const Config& cfg, const std::string& out_dir,
                         const std::string& tag = "run");

struct SweepRow {
    double r = 0.0;
    double v = 0.0;
    double peak = 0.0;        ///< peak centerline temperature [C]
    double homogenized = 0.0; ///< parabolic only; NaN otherwise
    bool bonded = false;
    std::string error;        ///< empty on success
};

struct SweepResult {
    std::vector<SweepRow> rows; ///< grid order: r outer, v inner
    std::string csv_path;
};

/// Run every (r, v) cell of the grid over the base scenario. Cells are
/// independent; `workers` > 1 runs them on an OpenMP pool, `workers` == 1
/// is the serial reference path. Per-cell failures land in the row.
SweepResult run_sweep(const SweepGrid& grid, const Scenario& base,
                      const std::string& out_dir, int workers = 0);

/// Emit the preset scenario(s) for one figure id as CSV files.
/// Known ids: fig6 fig7 fig8 fig11 fig13 fig15 fig16 fig17 fig18.
RunManifest emit_figure_data(const std::string& figure_id, const std::string& out_dir,
                             const FigureOptions& options = {});

std::vector<std::string> known_figure_ids();

} // namespace bondsim
