#pragma once

#include "bondsim/integrators.hpp"
#include "bondsim/kinematics.hpp"
#include "bondsim/stiffness.hpp"

#include <optional>
#include <vector>

namespace bondsim {

enum class LumpedMode {
    AdiabaticInStrain,    ///< pressure heating only, abscissa = strain
    ConstantSpeedInStrain,///< heating + roller flux at constant strain rate
    RollerScaledTime      ///< full roller kinematics, abscissa = tau
};

/// A zero-dimensional temperature model run.
struct LumpedScenario {
    MaterialParams materials;
    StiffnessModel stiffness;
    LumpedMode mode = LumpedMode::AdiabaticInStrain;

    // ConstantSpeedInStrain: compression to strain 1 - target_ratio in
    // compression_time seconds, at speed 2 h_min (1 - r) / compression_time.
    double compression_time = 0.0; ///< [s]
    double target_ratio = 0.0;     ///< r

    // RollerScaledTime
    std::optional<RollerSetup> roller;

    /// Disables the steel flux term (fig. 13-style comparisons). Ignored by
    /// the adiabatic mode, which never has one.
    bool include_flux = true;

    StepControl control;

    void validate() const;

    /// Constant compression speed 2 h_min (1 - r) / compression_time [m/s].
    double compression_speed() const;
};

struct TraceSample {
    double abscissa; ///< strain or tau, mode dependent
    double strain;
    double T;            ///< [C]
    double heating_term; ///< pressure-work part of dT/dabscissa
    double flux_term;    ///< steel-flux part of dT/dabscissa
};

struct TemperatureTrace {
    std::vector<TraceSample> samples;
    LumpedMode mode = LumpedMode::AdiabaticInStrain;

    double peak_temperature() const;
};

// Right-hand sides, exposed for direct evaluation in tests and for the
// per-term CSV columns.
double rhs_adiabatic(double s, double T, const LumpedScenario& sc);
double rhs_constant_speed(double s, double T, const LumpedScenario& sc);
double rhs_roller_scaled(double tau, double T, const LumpedScenario& sc);

/// The heating and flux contributions of the mode's rhs, separately.
void lumped_terms(double abscissa, double T, const LumpedScenario& sc,
                  double& heating, double& flux);

/// Abscissa span of the scenario: [0, 1 - r] in strain modes, [0, 1] in
/// scaled time.
double lumped_span_end(const LumpedScenario& sc);

/// Integrate the scenario from T(0) = T_ambient, sampling at output_points
/// (defaults to 512 uniform points over the span when empty).
TemperatureTrace run_lumped(const LumpedScenario& sc,
                            std::vector<double> output_points = {},
                            IntegratorStats* stats = nullptr);

} // namespace bondsim
