#include "bondsim/materials.hpp"

#include <string>

namespace bondsim {

namespace {

void require_positive(double value, const char* field) {
    if (!(value > 0.0))
        throw ValidationError(std::string("materials: ") + field +
                              " must be strictly positive, got " + std::to_string(value));
}

} // namespace

void MaterialParams::validate() const {
    require_positive(Cp_fabric, "Cp_fabric");
    require_positive(w_fabric, "w_fabric");
    require_positive(h_min, "h_min");
    require_positive(K_fabric, "K_fabric");
    require_positive(K_steel, "K_steel");
    require_positive(rho_pp, "rho_pp");
    require_positive(kappa0, "kappa0");
    if (!(T_ambient < T_max_linear))
        throw ValidationError("materials: T_ambient must be below T_max_linear");
    if (!(T_max_linear < T_max_quadratic))
        throw ValidationError("materials: T_max_linear must be below T_max_quadratic");
    if (h_max > 0.0 && !(h_min < h_max))
        throw ValidationError("materials: h_min must be below h_max");
}

MaterialParams default_params() {
    MaterialParams p;
    p.validate();
    return p;
}

double areal_density(double mass_kg, double side_a_m, double side_b_m) {
    if (!(mass_kg > 0.0)) throw ValidationError("areal_density: mass must be positive");
    if (!(side_a_m > 0.0) || !(side_b_m > 0.0))
        throw ValidationError("areal_density: sample sides must be positive");
    return mass_kg / (side_a_m * side_b_m);
}

double min_thickness(double areal_kg_m2, double density_kg_m3) {
    if (!(areal_kg_m2 > 0.0))
        throw ValidationError("min_thickness: areal density must be positive");
    if (!(density_kg_m3 > 0.0))
        throw ValidationError("min_thickness: bulk density must be positive");
    return areal_kg_m2 / density_kg_m3;
}

} // namespace bondsim
