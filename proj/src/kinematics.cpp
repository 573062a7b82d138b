#include "bondsim/kinematics.hpp"

#include <cmath>
#include <string>

namespace bondsim {

void RollerSetup::validate() const {
    if (!(R > 0.0)) throw ValidationError("roller: radius R must be positive");
    if (!(v_fabric > 0.0)) throw ValidationError("roller: line speed must be positive");
    if (!(h_min > 0.0)) throw ValidationError("roller: h_min must be positive");
    if (!(r < 1.0))
        throw ValidationError("roller: compression ratio r must be below 1, got " +
                              std::to_string(r));
    // r > 0.5 keeps the max strain 1 - r below the stiffness pole at s = 0.5.
    if (!(r > 0.5))
        throw ValidationError("roller: compression ratio r must exceed 0.5, got " +
                              std::to_string(r));
}

CompressionSchedule::CompressionSchedule(const RollerSetup& setup) : setup_(setup) {
    setup_.validate();
    omega_ = setup_.v_fabric / setup_.R;
    theta0_ = std::sqrt(setup_.h_min * (1.0 - setup_.r) / setup_.R);
    delta_t_ = theta0_ / omega_;
}

double CompressionSchedule::theta0_exact() const {
    return std::acos(1.0 - setup_.h_min * (1.0 - setup_.r) / (2.0 * setup_.R));
}

ScheduleSample CompressionSchedule::at_scaled(double tau) const {
    const double one_minus_r = 1.0 - setup_.r;
    ScheduleSample out;
    if (tau <= 1.0) {
        out.theta = (tau - 1.0) * theta0_;
        out.s = one_minus_r * tau * (2.0 - tau);
        out.v = 2.0 / theta0_ * omega_ * one_minus_r * (1.0 - tau);
    } else {
        // Past the nip center the strain plateaus; no elastic recovery.
        out.theta = (tau - 1.0) * theta0_;
        out.s = one_minus_r;
        out.v = 0.0;
    }
    out.h = setup_.h_min * (1.0 - out.s);
    return out;
}

double CompressionSchedule::strain_at(double t) const {
    if (t >= delta_t_) return 1.0 - setup_.r;
    double theta = omega_ * t - theta0_;
    return 1.0 - setup_.r - setup_.R / setup_.h_min * theta * theta;
}

double CompressionSchedule::strain_rate_at(double t) const {
    if (t >= delta_t_) return 0.0;
    return 2.0 * setup_.R * omega_ / setup_.h_min * (theta0_ - omega_ * t);
}

} // namespace bondsim
