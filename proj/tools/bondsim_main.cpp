#include "bondsim/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

void apply_overrides(bondsim::Scenario& sc, int grid_n, double tau_end) {
    if (grid_n > 0) {
        sc.grid.n_intervals = grid_n;
        sc.grid.validate();
    }
    if (tau_end > 0.0) {
        sc.parabolic.tau_end = tau_end;
        sc.parabolic.validate();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bondsim: thermal bonding process simulator for non-woven fabric"};
    app.require_subcommand(1);

    std::string out_dir = "out";
    int workers = 0;
    int grid_n = 0;
    double tau_end = 0.0;
    app.add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
    app.add_option("--workers", workers, "Sweep worker count (0 = all processors)");
    app.add_option("--grid-n", grid_n, "Parabolic grid interval count override");
    app.add_option("--tau-end", tau_end, "Scaled-time horizon override");

    std::string config_path, figure_id;
    auto* run = app.add_subcommand("run", "Run one scenario config");
    run->add_option("config", config_path, "Scenario config file")->required();
    auto* sweep = app.add_subcommand("sweep", "Run a (r, v) parameter sweep");
    sweep->add_option("config", config_path, "Sweep config file")->required();
    auto* figure = app.add_subcommand("figure", "Emit plot-ready CSV data for a built-in figure preset");
    figure->add_option("id", figure_id, "Figure id (fig6 fig7 fig8 fig11 fig13 fig15 fig16 fig17 fig18)")
        ->required();
    auto* validate = app.add_subcommand("validate", "Parse and validate a config, run nothing");
    validate->add_option("config", config_path, "Scenario or sweep config file")->required();
    // let the global flags appear after the subcommand as well
    for (auto* sub : {run, sweep, figure, validate}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            bondsim::Config cfg = bondsim::Config::parse_file(config_path);
            {
                // Validate with overrides before running.
                bondsim::Scenario sc = bondsim::scenario_from_config(cfg);
                apply_overrides(sc, grid_n, tau_end);
            }
            if (grid_n > 0 || tau_end > 0.0) {
                // Re-run through the config path so the manifest echoes the
                // effective values.
                std::string text;
                for (const auto& [k, v] : cfg.entries()) text += k + " = " + v + "\n";
                if (grid_n > 0) text += "model.grid_n = " + std::to_string(grid_n) + "\n";
                if (tau_end > 0.0)
                    text += "model.tau_end = " + bondsim::format_value(tau_end) + "\n";
                cfg = bondsim::Config::parse_string(text, config_path);
            }
            bondsim::RunManifest manifest = bondsim::run_scenario(cfg, out_dir);
            for (const auto& f : manifest.files) std::printf("%s\n", f.c_str());
        } else if (sweep->parsed()) {
            bondsim::Config cfg = bondsim::Config::parse_file(config_path);
            bondsim::Scenario base = bondsim::scenario_from_config(cfg);
            apply_overrides(base, grid_n, tau_end);
            bondsim::SweepGrid grid = bondsim::sweep_from_config(cfg);
            bondsim::SweepResult res = bondsim::run_sweep(grid, base, out_dir, workers);
            std::printf("%s\n", res.csv_path.c_str());
            for (const auto& row : res.rows)
                if (!row.error.empty())
                    std::fprintf(stderr, "cell r=%g v=%g failed: %s\n", row.r, row.v,
                                 row.error.c_str());
        } else if (figure->parsed()) {
            bondsim::FigureOptions opt;
            opt.grid_n = grid_n;
            opt.tau_end = tau_end;
            bondsim::RunManifest manifest =
                bondsim::emit_figure_data(figure_id, out_dir, opt);
            for (const auto& f : manifest.files) std::printf("%s\n", f.c_str());
            for (const auto& n : manifest.notes) std::fprintf(stderr, "note: %s\n", n.c_str());
        } else if (validate->parsed()) {
            bondsim::Config cfg = bondsim::Config::parse_file(config_path);
            if (cfg.has("sweep.r_values")) {
                bondsim::Scenario base = bondsim::scenario_from_config(cfg);
                bondsim::sweep_from_config(cfg).validate(base.materials);
            } else {
                bondsim::Scenario sc = bondsim::scenario_from_config(cfg);
                apply_overrides(sc, grid_n, tau_end);
            }
            std::printf("ok\n");
        }
    } catch (const bondsim::ValidationError& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return kExitValidation;
    } catch (const bondsim::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitValidation;
    } catch (const bondsim::NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
