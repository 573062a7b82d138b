#include "bondsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace bondsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return (char)std::tolower(c); });
    return s;
}

} // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& name) {
    Config cfg;
    cfg.name_ = name;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(name + ":" + std::to_string(lineno) +
                                  ": unterminated section header");
            section = lower(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(name + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        std::string key = lower(trim(line.substr(0, eq)));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(name + ":" + std::to_string(lineno) + ": empty key");
        cfg.entries_[section.empty() ? key : section + "." + key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    try {
        std::size_t pos = 0;
        double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' is not a number: '" + it->second + "'");
    }
}

int Config::get_int(const std::string& key, int fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' is not an integer: '" + it->second + "'");
    }
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    std::string v = lower(it->second);
    if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "off" || v == "no" || v == "0") return false;
    throw ConfigError("config: key '" + key + "' is not a boolean: '" + it->second + "'");
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return {};
    std::vector<double> out;
    std::istringstream in(it->second);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError("config: key '" + key + "' has non-numeric entry '" + tok + "'");
        }
    }
    return out;
}

void SweepGrid::validate(const MaterialParams& materials) const {
    if (r_values.empty() || v_values.empty())
        throw ValidationError("sweep: r_values and v_values must be non-empty");
    for (double r : r_values)
        if (!(r > 0.5 && r < 1.0))
            throw ValidationError("sweep: compression ratio r must lie in (0.5, 1), got " +
                                  std::to_string(r));
    for (double v : v_values)
        if (!(v > 0.0))
            throw ValidationError("sweep: line speed must be positive");
    if (!(bond_threshold <= materials.T_max_quadratic))
        throw ValidationError("sweep: bond threshold must not exceed T_max_quadratic");
}

MaterialParams materials_from_config(const Config& cfg) {
    MaterialParams m = default_params();
    m.T_ambient = cfg.get_double("materials.t_ambient", m.T_ambient);
    m.T_max_linear = cfg.get_double("materials.t_max_linear", m.T_max_linear);
    m.T_max_quadratic = cfg.get_double("materials.t_max_quadratic", m.T_max_quadratic);
    m.Cp_fabric = cfg.get_double("materials.cp_fabric", m.Cp_fabric);
    m.w_fabric = cfg.get_double("materials.w_fabric", m.w_fabric);
    m.h_min = cfg.get_double("materials.h_min", m.h_min);
    m.h_max = cfg.get_double("materials.h_max", m.h_max);
    m.K_fabric = cfg.get_double("materials.k_fabric", m.K_fabric);
    m.K_steel = cfg.get_double("materials.k_steel", m.K_steel);
    m.T_steel = cfg.get_double("materials.t_steel", m.T_steel);
    m.rho_pp = cfg.get_double("materials.rho_pp", m.rho_pp);
    m.kappa0 = cfg.get_double("materials.kappa0", m.kappa0);
    m.validate();
    return m;
}

Scenario scenario_from_config(const Config& cfg) {
    Scenario sc;
    sc.materials = materials_from_config(cfg);

    std::string variant = cfg.get_string("stiffness.variant", "quadratic");
    if (variant == "linear")
        sc.stiffness = StiffnessModel::linear(sc.materials);
    else if (variant == "quadratic")
        sc.stiffness = StiffnessModel::quadratic(sc.materials);
    else
        throw ValidationError("stiffness: variant must be 'linear' or 'quadratic', got '" +
                              variant + "'");

    std::string model = cfg.get_string("model.type", "roller");
    if (model == "adiabatic")
        sc.model = ModelKind::Adiabatic;
    else if (model == "constant_speed")
        sc.model = ModelKind::ConstantSpeed;
    else if (model == "roller")
        sc.model = ModelKind::RollerLumped;
    else if (model == "parabolic")
        sc.model = ModelKind::Parabolic;
    else
        throw ValidationError("model: type must be adiabatic|constant_speed|roller|parabolic, got '" +
                              model + "'");

    sc.roller.R = cfg.get_double("roller.radius_m", 0.2);
    sc.roller.v_fabric = cfg.get_double("roller.line_speed_m_s", 6.0);
    sc.roller.r = cfg.get_double("roller.compression_ratio", 0.8);
    sc.roller.h_min = sc.materials.h_min;

    sc.compression_time = cfg.get_double("model.compression_time_s", sc.compression_time);
    sc.target_ratio = cfg.get_double("model.target_ratio", sc.target_ratio);
    sc.include_flux = cfg.get_bool("model.include_flux", sc.include_flux);
    sc.output_points = cfg.get_int("model.output_points", sc.output_points);
    sc.grid.n_intervals = cfg.get_int("model.grid_n", sc.grid.n_intervals);
    sc.parabolic.tau_step = cfg.get_double("model.tau_step", sc.parabolic.tau_step);
    sc.parabolic.tau_end = cfg.get_double("model.tau_end", sc.parabolic.tau_end);
    sc.bond_threshold = cfg.get_double("model.bond_threshold_c", sc.bond_threshold);

    if (sc.model == ModelKind::RollerLumped || sc.model == ModelKind::Parabolic)
        sc.roller.validate();
    if (sc.model == ModelKind::Parabolic) {
        sc.grid.validate();
        sc.parabolic.validate();
    }
    if (sc.model == ModelKind::ConstantSpeed) {
        if (!(sc.compression_time > 0.0))
            throw ValidationError("model: compression_time_s must be positive");
        if (!(sc.target_ratio > 0.5 && sc.target_ratio < 1.0))
            throw ValidationError("model: target_ratio must lie in (0.5, 1)");
    }
    if (sc.output_points < 2)
        throw ValidationError("model: output_points must be >= 2");
    return sc;
}

SweepGrid sweep_from_config(const Config& cfg) {
    SweepGrid grid;
    grid.r_values = cfg.get_double_list("sweep.r_values");
    grid.v_values = cfg.get_double_list("sweep.v_values");
    std::string model = cfg.get_string("sweep.model", "parabolic");
    if (model == "roller")
        grid.model = ModelKind::RollerLumped;
    else if (model == "parabolic")
        grid.model = ModelKind::Parabolic;
    else
        throw ValidationError("sweep: model must be 'roller' or 'parabolic', got '" +
                              model + "'");
    grid.bond_threshold = cfg.get_double("sweep.bond_threshold_c", 150.0);
    return grid;
}

} // namespace bondsim
