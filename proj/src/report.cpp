#include "bondsim/report.hpp"

#include "bondsim/thickness_fit.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;

namespace bondsim {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string join_path(const std::string& dir, const std::string& file) {
    return (fs::path(dir) / file).string();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
}

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header)
        : path_(path), out_(path) {
        if (!out_) throw Error("cannot open '" + path + "' for writing");
        for (std::size_t i = 0; i < header.size(); ++i)
            out_ << (i ? "," : "") << header[i];
        out_ << "\n";
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out_ << (i ? "," : "") << cells[i];
        out_ << "\n";
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream out_;
};

std::string phase_name(Phase p) { return p == Phase::Contact ? "contact" : "relaxation"; }

void write_trace_csv(const std::string& path, const TemperatureTrace& trace) {
    CsvWriter csv(path, {"abscissa", "strain", "temperature_C", "heating_term", "flux_term"});
    for (const auto& p : trace.samples)
        csv.row({format_value(p.abscissa), format_value(p.strain), format_value(p.T),
                 format_value(p.heating_term), format_value(p.flux_term)});
}

void write_field_csv(const std::string& path, const Grid& grid,
                     const std::vector<TemperatureField>& snapshots) {
    CsvWriter csv(path, {"tau", "zeta", "temperature_C", "phase"});
    for (const auto& f : snapshots)
        for (int k = 0; k < grid.n_nodes(); ++k)
            csv.row({format_value(f.tau), format_value(grid.node(k)),
                     format_value(f.values[k]), phase_name(f.phase)});
}

void write_parabolic_summary(const std::string& path, const RollerSetup& setup,
                             const ParabolicResult& res, double threshold) {
    CsvWriter csv(path, {"r", "v_fabric", "peak_centerline_C", "homogenized_C", "bonded_flag"});
    csv.row({format_value(setup.r), format_value(setup.v_fabric),
             format_value(res.peak_centerline), format_value(res.homogenized),
             res.peak_centerline >= threshold ? "1" : "0"});
}

LumpedScenario lumped_from_scenario(const Scenario& sc) {
    LumpedScenario ls;
    ls.materials = sc.materials;
    ls.stiffness = sc.stiffness;
    ls.include_flux = sc.include_flux;
    switch (sc.model) {
    case ModelKind::Adiabatic:
        ls.mode = LumpedMode::AdiabaticInStrain;
        break;
    case ModelKind::ConstantSpeed:
        ls.mode = LumpedMode::ConstantSpeedInStrain;
        ls.compression_time = sc.compression_time;
        ls.target_ratio = sc.target_ratio;
        break;
    case ModelKind::RollerLumped:
        ls.mode = LumpedMode::RollerScaledTime;
        ls.roller = sc.roller;
        break;
    case ModelKind::Parabolic:
        throw ValidationError("internal: parabolic scenario routed to lumped runner");
    }
    return ls;
}

std::vector<double> uniform_points(double from, double to, int n) {
    std::vector<double> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = from + (to - from) * i / double(n - 1);
    return pts;
}

std::vector<double> default_snapshot_taus(double tau_end) {
    std::vector<double> taus;
    for (int i = 0; i <= 10; ++i) taus.push_back(i / 10.0);
    for (int i = 1; i <= 10; ++i) taus.push_back(1.0 + (tau_end - 1.0) * i / 10.0);
    return taus;
}

std::string scenario_echo(const Scenario& sc) {
    nlohmann::json j;
    switch (sc.model) {
    case ModelKind::Adiabatic: j["model"] = "adiabatic"; break;
    case ModelKind::ConstantSpeed: j["model"] = "constant_speed"; break;
    case ModelKind::RollerLumped: j["model"] = "roller"; break;
    case ModelKind::Parabolic: j["model"] = "parabolic"; break;
    }
    j["stiffness"] = sc.stiffness.variant == SofteningLaw::Linear ? "linear" : "quadratic";
    j["materials"] = {{"T_ambient", sc.materials.T_ambient},
                      {"T_steel", sc.materials.T_steel},
                      {"Cp_fabric", sc.materials.Cp_fabric},
                      {"w_fabric", sc.materials.w_fabric},
                      {"h_min", sc.materials.h_min},
                      {"K_fabric", sc.materials.K_fabric},
                      {"K_steel", sc.materials.K_steel},
                      {"kappa0", sc.materials.kappa0}};
    j["roller"] = {{"R", sc.roller.R}, {"v_fabric", sc.roller.v_fabric}, {"r", sc.roller.r}};
    if (sc.model == ModelKind::ConstantSpeed) {
        j["compression_time_s"] = sc.compression_time;
        j["target_ratio"] = sc.target_ratio;
    }
    if (sc.model == ModelKind::Parabolic) {
        j["grid_n"] = sc.grid.n_intervals;
        j["tau_end"] = sc.parabolic.tau_end;
    }
    return j.dump();
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace

void RunManifest::write(const std::string& path) const {
    nlohmann::json j;
    j["scenario"] = nlohmann::json::parse(scenario_echo.empty() ? "{}" : scenario_echo);
    j["files"] = files;
    j["wall_seconds"] = wall_seconds;
    j["solver"] = {{"steps", steps}, {"rejections", rejections}};
    j["notes"] = notes;
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

RunManifest run_scenario(const std::string& config_path, const std::string& out_dir) {
    Config cfg = Config::parse_file(config_path);
    return run_scenario(cfg, out_dir);
}

RunManifest run_scenario(const Config& cfg, const std::string& out_dir, const std::string& tag) {
    Scenario sc = scenario_from_config(cfg);
    ensure_dir(out_dir);
    Timer timer;
    RunManifest manifest;
    manifest.scenario_echo = scenario_echo(sc);

    if (sc.model == ModelKind::Parabolic) {
        ParabolicResult res = run_parabolic(sc.roller, sc.materials, sc.grid, sc.parabolic,
                                            default_snapshot_taus(sc.parabolic.tau_end));
        std::string field_path = join_path(out_dir, tag + "_field.csv");
        std::string summary_path = join_path(out_dir, tag + "_summary.csv");
        write_field_csv(field_path, sc.grid, res.snapshots);
        write_parabolic_summary(summary_path, sc.roller, res, sc.bond_threshold);
        manifest.files = {field_path, summary_path};
        manifest.steps = res.steps;
        if (!res.homogenized_converged)
            manifest.notes.push_back("outgoing field not homogenized at tau_end (spread " +
                                     format_value(res.homogenized_spread) + " C)");
    } else {
        LumpedScenario ls = lumped_from_scenario(sc);
        double span = lumped_span_end(ls);
        IntegratorStats stats;
        TemperatureTrace trace =
            run_lumped(ls, uniform_points(span / sc.output_points, span, sc.output_points),
                       &stats);
        std::string trace_path = join_path(out_dir, tag + "_trace.csv");
        write_trace_csv(trace_path, trace);
        manifest.files = {trace_path};
        manifest.steps = stats.steps_accepted;
        manifest.rejections = stats.steps_rejected;
    }

    manifest.wall_seconds = timer.seconds();
    std::string manifest_path = join_path(out_dir, tag + "_manifest.json");
    manifest.write(manifest_path);
    manifest.files.push_back(manifest_path);
    return manifest;
}

namespace {

SweepRow sweep_cell(const SweepGrid& grid, const Scenario& base, double r, double v) {
    SweepRow row;
    row.r = r;
    row.v = v;
    row.homogenized = std::nan("");
    try {
        RollerSetup setup = base.roller;
        setup.r = r;
        setup.v_fabric = v;
        setup.h_min = base.materials.h_min;
        if (grid.model == ModelKind::Parabolic) {
            ParabolicResult res = run_parabolic(setup, base.materials, base.grid,
                                                base.parabolic, {});
            row.peak = res.peak_centerline;
            row.homogenized = res.homogenized;
        } else {
            LumpedScenario ls;
            ls.materials = base.materials;
            ls.stiffness = base.stiffness;
            ls.mode = LumpedMode::RollerScaledTime;
            ls.roller = setup;
            row.peak = run_lumped(ls).peak_temperature();
        }
        row.bonded = row.peak >= grid.bond_threshold;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

} // namespace

SweepResult run_sweep(const SweepGrid& grid, const Scenario& base, const std::string& out_dir,
                      int workers) {
    grid.validate(base.materials);
    ensure_dir(out_dir);

    const int nr = (int)grid.r_values.size();
    const int nv = (int)grid.v_values.size();
    std::vector<SweepRow> rows(nr * nv);

#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
    if (workers != 1) {
#pragma omp parallel for collapse(2) schedule(dynamic)
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nv; ++j)
                rows[i * nv + j] = sweep_cell(grid, base, grid.r_values[i], grid.v_values[j]);
    } else
#else
    (void)workers;
#endif
    {
        // Serial reference path; also what the benchmark compares against.
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nv; ++j)
                rows[i * nv + j] = sweep_cell(grid, base, grid.r_values[i], grid.v_values[j]);
    }

    SweepResult result;
    result.rows = std::move(rows);
    result.csv_path = join_path(out_dir, "sweep.csv");
    CsvWriter csv(result.csv_path,
                  {"r", "v_fabric", "peak_centerline_C", "homogenized_C", "bonded", "error"});
    for (const auto& row : result.rows)
        csv.row({format_value(row.r), format_value(row.v),
                 row.error.empty() ? format_value(row.peak) : "",
                 row.error.empty() && !std::isnan(row.homogenized)
                     ? format_value(row.homogenized)
                     : "",
                 row.error.empty() ? (row.bonded ? "1" : "0") : "",
                 row.error});
    return result;
}

std::vector<std::string> known_figure_ids() {
    return {"fig6", "fig7", "fig8", "fig11", "fig13", "fig15", "fig16", "fig17", "fig18"};
}

namespace {

void emit_fit_curve(RunManifest& manifest, const std::string& out_dir, const std::string& name,
                    const PressureFit& fit, double x_min, double x_max, int n) {
    CsvWriter csv(join_path(out_dir, name), {"x_mm", "pressure_MPa"});
    for (int i = 0; i < n; ++i) {
        double x = x_min + (x_max - x_min) * i / double(n - 1);
        csv.row({format_value(x), format_value(eval_fit(fit, x))});
    }
    manifest.files.push_back(csv.path());
}

void emit_lumped_trace(RunManifest& manifest, const std::string& out_dir,
                       const std::string& name, const LumpedScenario& ls,
                       double span) {
    TemperatureTrace trace = run_lumped(ls, uniform_points(span / 512.0, span, 512));
    std::string path = join_path(out_dir, name);
    write_trace_csv(path, trace);
    manifest.files.push_back(path);
}

void emit_parabolic_figure(RunManifest& manifest, const std::string& out_dir,
                           const std::string& id, double v_fabric, double r,
                           const FigureOptions& opt) {
    MaterialParams m = default_params();
    m.K_fabric = 0.17; // the parabolic equations carry only the fabric conductivity
    RollerSetup setup{0.2, v_fabric, r, m.h_min};
    Grid grid{opt.grid_n > 0 ? opt.grid_n : 100};
    ParabolicControl ctl;
    if (opt.tau_end > 0.0) ctl.tau_end = opt.tau_end;
    ParabolicResult res =
        run_parabolic(setup, m, grid, ctl, default_snapshot_taus(ctl.tau_end));
    std::string field_path = join_path(out_dir, id + "_field.csv");
    std::string summary_path = join_path(out_dir, id + "_summary.csv");
    write_field_csv(field_path, grid, res.snapshots);
    write_parabolic_summary(summary_path, setup, res, 150.0);
    manifest.files.push_back(field_path);
    manifest.files.push_back(summary_path);
    manifest.steps += res.steps;
    if (id == "fig16" && (res.homogenized < 25.0 || res.homogenized > 55.0))
        manifest.notes.push_back(
            "fig16 homogenized outgoing temperature " + format_value(res.homogenized) +
            " C lies outside the 25-55 C estimate");
}

} // namespace

RunManifest emit_figure_data(const std::string& figure_id, const std::string& out_dir,
                             const FigureOptions& options) {
    ensure_dir(out_dir);
    Timer timer;
    RunManifest manifest;
    manifest.scenario_echo = "{\"figure\":\"" + figure_id + "\"}";

    MaterialParams m = default_params();

    if (figure_id == "fig6") {
        emit_fit_curve(manifest, out_dir, "fig6_base.csv", base_fit(), 0.0, 1.2, 601);
    } else if (figure_id == "fig7") {
        emit_fit_curve(manifest, out_dir, "fig7_base_plus_ten.csv", base_plus_ten_fit(),
                       -1.1, 0.11, 601);
    } else if (figure_id == "fig8") {
        SingleSheetCurve curve =
            single_sheet_curve(uniform_points(options.fit_x_min, options.fit_x_max, 401));
        CsvWriter csv(join_path(out_dir, "fig8_single_sheet.csv"),
                      {"w_single_mm", "pressure_MPa"});
        for (const auto& p : curve.points)
            csv.row({format_value(p.w_single_mm), format_value(p.pressure_mpa)});
        manifest.files.push_back(csv.path());
        for (double x : curve.failed_samples)
            manifest.notes.push_back("equilibrium solve failed at x = " + format_value(x) +
                                     " mm");
    } else if (figure_id == "fig11") {
        LumpedScenario ls;
        ls.materials = m;
        ls.mode = LumpedMode::AdiabaticInStrain;
        ls.stiffness = StiffnessModel::linear(m);
        emit_lumped_trace(manifest, out_dir, "fig11_linear.csv", ls, 0.4);
        ls.stiffness = StiffnessModel::quadratic(m);
        emit_lumped_trace(manifest, out_dir, "fig11_quadratic.csv", ls, 0.4);
    } else if (figure_id == "fig13") {
        LumpedScenario ls;
        ls.materials = m;
        ls.stiffness = StiffnessModel::quadratic(m);
        ls.mode = LumpedMode::ConstantSpeedInStrain;
        ls.target_ratio = 0.6;
        const struct { const char* tag; double dt; } cases[] = {
            {"dt10ms", 10e-3}, {"dt1ms", 1e-3}, {"dt0p1ms", 0.1e-3}};
        for (const auto& c : cases) {
            ls.compression_time = c.dt;
            ls.include_flux = true;
            emit_lumped_trace(manifest, out_dir, std::string("fig13_") + c.tag + "_flux.csv",
                              ls, 1.0 - ls.target_ratio);
            ls.include_flux = false;
            emit_lumped_trace(manifest, out_dir,
                              std::string("fig13_") + c.tag + "_noflux.csv", ls,
                              1.0 - ls.target_ratio);
        }
    } else if (figure_id == "fig15") {
        LumpedScenario ls;
        ls.materials = m;
        ls.stiffness = StiffnessModel::quadratic(m);
        ls.mode = LumpedMode::RollerScaledTime;
        ls.roller = RollerSetup{0.2, 6.0, 0.6, m.h_min};
        ls.include_flux = true;
        emit_lumped_trace(manifest, out_dir, "fig15_flux.csv", ls, 1.0);
        ls.include_flux = false;
        emit_lumped_trace(manifest, out_dir, "fig15_noflux.csv", ls, 1.0);
    } else if (figure_id == "fig16") {
        emit_parabolic_figure(manifest, out_dir, "fig16", 6.0, 0.8, options);
    } else if (figure_id == "fig17") {
        emit_parabolic_figure(manifest, out_dir, "fig17", 0.6, 0.8, options);
    } else if (figure_id == "fig18") {
        emit_parabolic_figure(manifest, out_dir, "fig18", 6.0, 0.95, options);
    } else {
        std::string ids;
        for (const auto& id : known_figure_ids()) ids += (ids.empty() ? "" : " ") + id;
        throw ValidationError("unknown figure id '" + figure_id + "'; valid ids: " + ids);
    }

    manifest.wall_seconds = timer.seconds();
    std::string manifest_path = join_path(out_dir, figure_id + "_manifest.json");
    manifest.write(manifest_path);
    manifest.files.push_back(manifest_path);
    return manifest;
}

} // namespace bondsim
