#pragma once

#include "bondsim/integrators.hpp"
#include "bondsim/kinematics.hpp"
#include "bondsim/materials.hpp"

#include <vector>

namespace bondsim {

/// Uniform grid on the rescaled thickness coordinate zeta in [-1, 1].
/// N must be even so zeta = 0 is a node for centerline reporting.
struct Grid {
    int n_intervals = 100;

    void validate() const;
    double delta_zeta() const { return 2.0 / n_intervals; }
    int n_nodes() const { return n_intervals + 1; }
    double node(int k) const { return -1.0 + k * delta_zeta(); }
    int center_index() const { return n_intervals / 2; }
};

enum class Phase { Contact, Relaxation };

/// Through-thickness temperature profile at one scaled time.
struct TemperatureField {
    double tau = 0.0;
    std::vector<double> values; ///< T_k [C], k = 0..N
    Phase phase = Phase::Contact;
    double thickness = 0.0;     ///< h(tau) [m]
};

struct ParabolicControl {
    double tau_step = 1e-3;   ///< macro step; sub-stepped internally for monotonicity
    double tau_end = 5.0;
    double source_tol = 1e-10;///< fixed-point tolerance on the lagged source [C]
    int source_max_iter = 50;

    void validate() const;
};

/// Clamped volumetric heat source at each node; zero past tau = 1.
std::vector<double> source_term(double tau, const std::vector<double>& values,
                                const CompressionSchedule& schedule,
                                const MaterialParams& materials);

/// Contact-phase (tau <= 1) method-of-lines right side: Dirichlet rows
/// pinned, interior rows diffusion plus source.
std::vector<double> rhs_contact(double tau, const TemperatureField& field,
                                const Grid& grid, const CompressionSchedule& schedule,
                                const MaterialParams& materials);

/// Relaxation-phase (tau >= 1) right side: insulated boundary rows, no
/// source, thickness frozen at h_min r.
std::vector<double> rhs_relaxation(double tau, const TemperatureField& field,
                                   const Grid& grid, const CompressionSchedule& schedule,
                                   const MaterialParams& materials);

struct ParabolicResult {
    std::vector<TemperatureField> snapshots;
    double peak_centerline = 0.0;  ///< max over tau of T at zeta = 0 [C]
    double homogenized = 0.0;      ///< mean field at tau_end [C]
    double homogenized_spread = 0.0; ///< max - min at tau_end [C]
    bool homogenized_converged = false; ///< spread < 0.1 C
    long steps = 0;
};

/// Integrate the contact system on [0, 1] and the relaxation system on
/// [1, tau_end] with an implicit trapezoidal stepper (tridiagonal solve per
/// step, source lagged and fixed-point corrected). Snapshots are emitted at
/// snapshot_taus (sorted, within [0, tau_end]).
ParabolicResult run_parabolic(const RollerSetup& setup, const MaterialParams& materials,
                              const Grid& grid, const ParabolicControl& control,
                              const std::vector<double>& snapshot_taus);

} // namespace bondsim
