#pragma once

#include "bondsim/errors.hpp"

namespace bondsim {

/// Roller geometry and line speed. r is the compression ratio d_r / h_min,
/// the nip gap over the fully-compressed fabric thickness.
struct RollerSetup {
    double R;        ///< roller radius [m]
    double v_fabric; ///< line speed [m/s]
    double r;        ///< compression ratio, (0.5, 1)
    double h_min;    ///< fully-compressed fabric thickness [m]

    void validate() const;
};

/// Kinematic state of the nip at one instant.
struct ScheduleSample {
    double theta; ///< roller angle [rad], 0 at the nip center
    double s;     ///< strain
    double v;     ///< strain rate [1/s]
    double h;     ///< half-gap fabric thickness h_min (1 - s) [m]
};

/// Derived compression schedule: angular velocity, contact angle, bonding
/// time and the strain/velocity/thickness profiles in physical and scaled
/// time. Scaled time tau = t / delta_t, so contact is exactly tau in [0, 1];
/// past tau = 1 the strain plateaus at 1 - r with zero rate.
class CompressionSchedule {
public:
    explicit CompressionSchedule(const RollerSetup& setup);

    const RollerSetup& setup() const { return setup_; }
    double omega() const { return omega_; }   ///< v_fabric / R [rad/s]
    double theta0() const { return theta0_; } ///< small-angle contact angle [rad]
    double delta_t() const { return delta_t_; } ///< bonding time theta0/omega [s]

    /// Exact arccos form of the contact angle, for verification of the
    /// small-angle approximation.
    double theta0_exact() const;

    ScheduleSample at_scaled(double tau) const;

    /// Strain and strain rate in physical time [s].
    double strain_at(double t) const;
    double strain_rate_at(double t) const;

private:
    RollerSetup setup_;
    double omega_;
    double theta0_;
    double delta_t_;
};

} // namespace bondsim
