#pragma once

#include "bondsim/errors.hpp"

namespace bondsim {

/// Physical constants of the fabric, the polypropylene it is made of and
/// the roller steel, plus the derived areal quantities.
///
/// Temperatures are in degrees Celsius throughout; conductivities and
/// specific heats keep their SI kelvin-based units (only temperature
/// differences enter the models).
struct MaterialParams {
    double T_ambient = 20.0;       ///< ambient / web inlet temperature [C]
    double T_max_linear = 90.0;    ///< stiffness vanishes here, linear law [C]
    double T_max_quadratic = 160.0;///< stiffness vanishes here, quadratic law [C]
    double Cp_fabric = 1800.0;     ///< specific heat [J/(kg K)]
    double w_fabric = 0.0126;      ///< areal density [kg/m^2]
    double h_min = 14.0e-6;        ///< fully-compressed fabric thickness [m]
    double h_max = 97.0e-6;        ///< uncompressed fabric thickness [m], informational
    double K_fabric = 0.17;        ///< fabric thermal conductivity [W/(m K)]
    double K_steel = 50.0;         ///< steel thermal conductivity [W/(m K)]
    double T_steel = 20.0;         ///< roller surface temperature [C]
    double rho_pp = 900.0;         ///< polypropylene density [kg/m^3]
    double kappa0 = 16.0e6;        ///< stiffness fit numerator [Pa]

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

/// Baseline parameter set. Rollers are unheated, so T_steel defaults to
/// T_ambient; K_steel = 50 is the lumped-model default, scenario presets
/// override it where needed.
MaterialParams default_params();

/// Weight by unit area of a rectangular sample: mass / (side_a * side_b).
double areal_density(double mass_kg, double side_a_m, double side_b_m);

/// Thickness of the fully-compressed fabric: areal density / bulk density.
double min_thickness(double areal_kg_m2, double density_kg_m3);

} // namespace bondsim
