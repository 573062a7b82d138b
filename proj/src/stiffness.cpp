#include "bondsim/stiffness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bondsim {

StiffnessModel StiffnessModel::linear(const MaterialParams& m) {
    return {SofteningLaw::Linear, m.T_max_linear, m.T_ambient};
}

StiffnessModel StiffnessModel::quadratic(const MaterialParams& m) {
    return {SofteningLaw::Quadratic, m.T_max_quadratic, m.T_ambient};
}

void StiffnessModel::validate() const {
    if (!(cutoff_temperature > reference_temperature))
        throw ValidationError("stiffness: cutoff_temperature must exceed reference_temperature");
}

double StiffnessModel::softening(double T) const {
    double f = std::max(0.0, (cutoff_temperature - T) /
                                 (cutoff_temperature - reference_temperature));
    return variant == SofteningLaw::Quadratic ? f * f : f;
}

double kappa_fabric(double s, double kappa0) {
    if (s >= 0.5 - kStrainPoleEps)
        throw SingularityError("kappa_fabric: strain " + std::to_string(s) +
                               " at or beyond the pole at s = 0.5");
    return kappa0 / (1.0 - 2.0 * s);
}

double kappa(double s, double T, const StiffnessModel& model, double kappa0) {
    return kappa_fabric(s, kappa0) * model.softening(T);
}

double pressure(double s, double T, const StiffnessModel& model, double kappa0) {
    return kappa(s, T, model, kappa0) * s;
}

} // namespace bondsim
