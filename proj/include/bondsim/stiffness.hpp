#pragma once

#include "bondsim/materials.hpp"

namespace bondsim {

enum class SofteningLaw { Linear, Quadratic };

/// Temperature softening of the fabric stiffness: a clamped linear factor
/// max(0, (T_cut - T)/(T_cut - T_ref)), applied once (Linear) or squared
/// (Quadratic).
struct StiffnessModel {
    SofteningLaw variant = SofteningLaw::Quadratic;
    double cutoff_temperature = 160.0;   ///< [C]
    double reference_temperature = 20.0; ///< [C]

    static StiffnessModel linear(const MaterialParams& m);
    static StiffnessModel quadratic(const MaterialParams& m);

    void validate() const;

    /// The clamped softening multiplier in [0, ...], already raised to the
    /// variant's power.
    double softening(double T) const;
};

// Strain convention: s = 0 is the fully-compressed reference state,
// s > 0 further compression. The fit diverges at s = 0.5; evaluation is
// rejected within eps_pole of the pole rather than clamped.
inline constexpr double kStrainPoleEps = 1e-6;

/// Fitted cold modulus kappa0 / (1 - 2 s) [Pa].
double kappa_fabric(double s, double kappa0);

/// Temperature-softened modulus [Pa].
double kappa(double s, double T, const StiffnessModel& model, double kappa0);

/// Pressure per unit area kappa(s, T) * s [Pa].
double pressure(double s, double T, const StiffnessModel& model, double kappa0);

} // namespace bondsim
