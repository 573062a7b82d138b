#pragma once

#include "bondsim/errors.hpp"

#include <functional>
#include <vector>

namespace bondsim {

/// One fitted dynamometer pressure curve,
///   P(x) = amplitude * max(0, x + shift)^exponent_num
///          / (const_den + coeff_den * max(0, x + shift)^exponent_den),
/// with x in mm and P in MPa. P is identically zero for x <= -shift.
struct PressureFit {
    double amplitude;
    double shift;        ///< x-offset inside max(0, x + shift) [mm]
    double exponent_num;
    double const_den;
    double coeff_den;
    double exponent_den;

    void validate() const;
};

/// Press disk alone (zero-thickness offset curve).
PressureFit base_fit();

/// Press disk plus ten stacked fabric sheets.
PressureFit base_plus_ten_fit();

/// Evaluate a fit at displacement x [mm] -> pressure [MPa].
double eval_fit(const PressureFit& fit, double x_mm);

struct RootOptions {
    double tol_pressure = 1e-9; ///< equilibrium residual tolerance [MPa]
    int max_iterations = 200;
};

/// Safeguarded bracketed root finder: bisection refined by secant steps.
/// The bracket [lo, hi] must straddle a sign change of f.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const RootOptions& opt = {});

/// Solve the press/fabric equilibrium for the fabric displacement w at
/// total displacement x: base_plus_ten(x) = base(x - w), w in [-1, 0] mm.
double solve_w_of_x(double x_mm, const RootOptions& opt = {});

struct SingleSheetPoint {
    double x_mm;        ///< total displacement fed to the solver
    double w_single_mm; ///< per-sheet fabric displacement w/10
    double pressure_mpa;
};

struct SingleSheetCurve {
    std::vector<SingleSheetPoint> points;
    std::vector<double> failed_samples; ///< x values where the solve failed
};

/// The single-sheet displacement/pressure construction: for each sample x,
/// (w(x)/10, base_plus_ten(x)). Failed samples are skipped and reported.
SingleSheetCurve single_sheet_curve(const std::vector<double>& x_samples_mm,
                                    const RootOptions& opt = {});

/// Uncompressed stack thickness estimate: the fit's growth threshold
/// divided by the sheet count, converted mm -> m.
double thickness_from_threshold(const PressureFit& fit, int sheets);

} // namespace bondsim
