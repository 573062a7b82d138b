#include "bondsim/thickness_fit.hpp"

#include <cmath>
#include <string>

namespace bondsim {

void PressureFit::validate() const {
    if (!(const_den > 0.0))
        throw ValidationError("pressure fit: const_den must be positive");
    if (!(exponent_num > 0.0))
        throw ValidationError("pressure fit: exponent_num must be positive");
}

// Fit coefficients carry the full printed precision; they are data, not
// quantities we re-fit.
PressureFit base_fit() {
    return {5461.352911, 0.0, 2.92599, 0.0038158166, 6.4490865, 1.624481};
}

PressureFit base_plus_ten_fit() {
    return {716.33893, 0.9703, 12.67189680, 14.10752, 0.92219399, 30.037944};
}

double eval_fit(const PressureFit& fit, double x_mm) {
    double u = x_mm + fit.shift;
    if (u <= 0.0) return 0.0;
    double num = fit.amplitude * std::pow(u, fit.exponent_num);
    double den = fit.const_den + fit.coeff_den * std::pow(u, fit.exponent_den);
    return num / den;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const RootOptions& opt) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw NumericalError("find_root: no sign change in bracket [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
    // Converge the bracket around the sign change, then verify the residual.
    // Accepting any sub-tolerance residual instead would pick arbitrary
    // points on the flat plateau of the pressure fits, where the residual is
    // tiny everywhere.
    constexpr double kBracketTol = 1e-13;
    double a = lo, b = hi, fa = flo, fb = fhi;
    int same_side = 0;
    int last_side = 0;
    for (int it = 0; it < opt.max_iterations && std::fabs(b - a) > kBracketTol; ++it) {
        // Secant proposal, safeguarded to stay inside the bracket; fall back
        // to bisection when it escapes or keeps crawling along one side.
        double mid = 0.5 * (a + b);
        double sec = b - fb * (b - a) / (fb - fa);
        bool use_secant = std::isfinite(sec) && sec > std::min(a, b) &&
                          sec < std::max(a, b) && same_side < 2;
        double x = use_secant ? sec : mid;
        double fx = f(x);
        if (fx == 0.0) return x;
        int side;
        if (fa * fx < 0.0) {
            b = x;
            fb = fx;
            side = 1;
        } else {
            a = x;
            fa = fx;
            side = -1;
        }
        same_side = (use_secant && side == last_side) ? same_side + 1 : 0;
        last_side = side;
    }
    double x = 0.5 * (a + b);
    double fx = f(x);
    if (std::fabs(b - a) <= kBracketTol && std::fabs(fx) <= opt.tol_pressure) return x;
    throw NumericalError("find_root: residual " + std::to_string(fx) +
                         " above tolerance after " + std::to_string(opt.max_iterations) +
                         " iterations");
}

double solve_w_of_x(double x_mm, const RootOptions& opt) {
    const PressureFit ten = base_plus_ten_fit();
    const PressureFit base = base_fit();
    double target = eval_fit(ten, x_mm);
    if (!(target > 0.0))
        throw NumericalError("solve_w_of_x: stack pressure is zero at x = " +
                             std::to_string(x_mm) + " mm, no equilibrium to solve");
    auto residual = [&](double w) { return target - eval_fit(base, x_mm - w); };
    return find_root(residual, -1.0, 0.0, opt);
}

SingleSheetCurve single_sheet_curve(const std::vector<double>& x_samples_mm,
                                    const RootOptions& opt) {
    SingleSheetCurve curve;
    const PressureFit ten = base_plus_ten_fit();
    for (double x : x_samples_mm) {
        try {
            double w = solve_w_of_x(x, opt);
            curve.points.push_back({x, w / 10.0, eval_fit(ten, x)});
        } catch (const NumericalError&) {
            curve.failed_samples.push_back(x);
        }
    }
    return curve;
}

double thickness_from_threshold(const PressureFit& fit, int sheets) {
    if (sheets < 1)
        throw ValidationError("thickness_from_threshold: sheet count must be >= 1");
    return fit.shift / sheets * 1e-3; // mm -> m
}

} // namespace bondsim
