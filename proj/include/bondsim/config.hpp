#pragma once

#include "bondsim/errors.hpp"
#include "bondsim/lumped.hpp"
#include "bondsim/parabolic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bondsim {

/// Flat sectioned key-value config ("[section]" headers, "key = value"
/// lines, '#' comments). Keys are looked up as "section.key".
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& name = "<string>");

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
    std::string name_;
};

enum class ModelKind { Adiabatic, ConstantSpeed, RollerLumped, Parabolic };

/// One fully-resolved scenario, validated against every module invariant.
struct Scenario {
    ModelKind model = ModelKind::RollerLumped;
    MaterialParams materials;
    StiffnessModel stiffness;
    RollerSetup roller{0.2, 6.0, 0.8, 14.0e-6};
    double compression_time = 1e-3; ///< [s], constant-speed model
    double target_ratio = 0.6;      ///< r, constant-speed model
    bool include_flux = true;
    int output_points = 512;
    Grid grid;
    ParabolicControl parabolic;
    double bond_threshold = 150.0; ///< [C]
};

/// Sweep over (r, v) cells of one model.
struct SweepGrid {
    std::vector<double> r_values;
    std::vector<double> v_values;
    ModelKind model = ModelKind::Parabolic;
    double bond_threshold = 150.0;

    void validate(const MaterialParams& materials) const;
};

MaterialParams materials_from_config(const Config& cfg);
Scenario scenario_from_config(const Config& cfg);
SweepGrid sweep_from_config(const Config& cfg);

} // namespace bondsim
