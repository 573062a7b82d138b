#pragma once

#include "bondsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace bondsim {

/// Error control for the adaptive ODE integrator.
struct StepControl {
    double rel_tol = 1e-8;
    double abs_tol = 1e-8;      ///< [C]
    long max_steps = 1000000;
    double initial_step = 1e-6; ///< in the integration variable

    void validate() const;
};

/// Tridiagonal linear system; lower[0] and upper[n-1] are unused.
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diagonal;
    std::vector<double> upper;
    std::vector<double> rhs;
};

/// Thomas elimination without pivoting. Throws NumericalError naming the
/// index on a zero pivot.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& system);

/// Cumulative solver counters for run manifests.
struct IntegratorStats {
    long steps_accepted = 0;
    long steps_rejected = 0;
};

namespace detail {

inline double state_axpy(double y, double a, double x) { return y + a * x; }

inline std::vector<double> state_axpy(std::vector<double> y, double a,
                                      const std::vector<double>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
    return y;
}

inline double error_ratio(double err, double y0, double y1, double rel, double abs) {
    double scale = abs + rel * std::max(std::fabs(y0), std::fabs(y1));
    return std::fabs(err) / scale;
}

inline double error_ratio(const std::vector<double>& err, const std::vector<double>& y0,
                          const std::vector<double>& y1, double rel, double abs) {
    double worst = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        double scale = abs + rel * std::max(std::fabs(y0[i]), std::fabs(y1[i]));
        worst = std::max(worst, std::fabs(err[i]) / scale);
    }
    return worst;
}

} // namespace detail

/// Dormand-Prince 5(4) embedded pair with step rejection. Integrates
/// y' = rhs(x, y) over [x0, x1] and samples the solution at output_points
/// (which must be non-decreasing and inside the span); steps are shortened
/// to land on each output point exactly.
template <class State, class Rhs>
std::vector<State> integrate_adaptive(Rhs&& rhs, double x0, double x1,
                                      State initial, const StepControl& control,
                                      const std::vector<double>& output_points,
                                      IntegratorStats* stats = nullptr) {
    control.validate();

    // Butcher tableau of the Dormand-Prince 5(4) pair.
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    using detail::state_axpy;

    std::vector<State> samples;
    samples.reserve(output_points.size());
    std::size_t next_out = 0;
    double x = x0;
    State y = std::move(initial);
    double h = std::min(control.initial_step, x1 - x0);
    if (h <= 0.0) h = (x1 - x0) * 1e-6;

    while (next_out < output_points.size() && output_points[next_out] <= x) {
        samples.push_back(y);
        ++next_out;
    }

    long steps = 0;
    State k1 = rhs(x, y);
    while (x < x1 && next_out < output_points.size()) {
        if (++steps > control.max_steps)
            throw NumericalError("integrate_adaptive: max_steps exceeded at x = " +
                                 std::to_string(x));
        double target = std::min(x1, output_points[next_out]);
        bool clipped = x + h >= target;
        double hs = clipped ? target - x : h;

        State y2 = state_axpy(y, hs * a21, k1);
        State k2 = rhs(x + c2 * hs, y2);
        State y3 = state_axpy(state_axpy(y, hs * a31, k1), hs * a32, k2);
        State k3 = rhs(x + c3 * hs, y3);
        State y4 = state_axpy(state_axpy(state_axpy(y, hs * a41, k1), hs * a42, k2),
                              hs * a43, k3);
        State k4 = rhs(x + c4 * hs, y4);
        State y5 = state_axpy(
            state_axpy(state_axpy(state_axpy(y, hs * a51, k1), hs * a52, k2),
                       hs * a53, k3),
            hs * a54, k4);
        State k5 = rhs(x + c5 * hs, y5);
        State y6 = state_axpy(
            state_axpy(state_axpy(state_axpy(state_axpy(y, hs * a61, k1), hs * a62, k2),
                                  hs * a63, k3),
                       hs * a64, k4),
            hs * a65, k5);
        State k6 = rhs(x + hs, y6);
        State ynew = state_axpy(
            state_axpy(state_axpy(state_axpy(state_axpy(y, hs * b1, k1), hs * b3, k3),
                                  hs * b4, k4),
                       hs * b5, k5),
            hs * b6, k6);
        State k7 = rhs(x + hs, ynew);
        State err = state_axpy(
            state_axpy(state_axpy(state_axpy(state_axpy(state_axpy(
                                                 state_axpy(y, -1.0, y), hs * e1, k1),
                                             hs * e3, k3),
                                  hs * e4, k4),
                       hs * e5, k5),
            hs * e6, k6),
            hs * e7, k7);

        double ratio =
            detail::error_ratio(err, y, ynew, control.rel_tol, control.abs_tol);
        if (ratio <= 1.0) {
            x += hs;
            y = std::move(ynew);
            k1 = std::move(k7); // FSAL
            if (stats) ++stats->steps_accepted;
            while (next_out < output_points.size() && output_points[next_out] <= x) {
                samples.push_back(y);
                ++next_out;
            }
        } else if (stats) {
            ++stats->steps_rejected;
        }
        double factor = ratio > 0.0 ? 0.9 * std::pow(ratio, -0.2) : 5.0;
        factor = std::clamp(factor, 0.2, 5.0);
        h = std::max(hs * factor, (x1 - x0) * 1e-14);
    }
    return samples;
}

} // namespace bondsim
