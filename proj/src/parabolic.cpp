#include "bondsim/parabolic.hpp"

#include "bondsim/stiffness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bondsim {

void Grid::validate() const {
    if (n_intervals < 4) throw ValidationError("grid: N must be >= 4");
    if (n_intervals % 2 != 0)
        throw ValidationError("grid: N must be even so zeta = 0 is a node");
}

void ParabolicControl::validate() const {
    if (!(tau_step > 0.0)) throw ValidationError("parabolic: tau_step must be positive");
    if (!(tau_end >= 1.0)) throw ValidationError("parabolic: tau_end must be >= 1");
    if (!(source_tol > 0.0)) throw ValidationError("parabolic: source_tol must be positive");
}

namespace {

// Coefficient of the second difference in the rescaled system [per tau].
double diffusion_coef(double h, const Grid& grid, const CompressionSchedule& sched,
                      const MaterialParams& m) {
    double dz = grid.delta_zeta();
    return sched.delta_t() * m.K_fabric /
           (h * dz * dz * m.w_fabric * m.Cp_fabric);
}

double clamp_sq(double T, const MaterialParams& m) {
    double f = std::max(0.0, (m.T_max_quadratic - T) / (m.T_max_quadratic - m.T_ambient));
    return f * f;
}

} // namespace

std::vector<double> source_term(double tau, const std::vector<double>& values,
                                const CompressionSchedule& schedule,
                                const MaterialParams& materials) {
    std::vector<double> q(values.size(), 0.0);
    if (tau > 1.0) return q;
    ScheduleSample k = schedule.at_scaled(tau);
    double base = k.v * k.s * kappa_fabric(k.s, materials.kappa0) / 2.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        q[i] = base * clamp_sq(values[i], materials);
    return q;
}

std::vector<double> rhs_contact(double tau, const TemperatureField& field,
                                const Grid& grid, const CompressionSchedule& schedule,
                                const MaterialParams& materials) {
    const int n = grid.n_nodes();
    const std::vector<double>& T = field.values;
    std::vector<double> dT(n, 0.0);
    ScheduleSample k = schedule.at_scaled(tau);
    double a = diffusion_coef(k.h, grid, schedule, materials);
    double c = schedule.delta_t() / (materials.w_fabric * materials.Cp_fabric);
    std::vector<double> q = source_term(tau, T, schedule, materials);
    for (int i = 1; i + 1 < n; ++i)
        dT[i] = a * (T[i - 1] - 2.0 * T[i] + T[i + 1]) + c * q[i];
    return dT;
}

std::vector<double> rhs_relaxation(double tau, const TemperatureField& field,
                                   const Grid& grid, const CompressionSchedule& schedule,
                                   const MaterialParams& materials) {
    const int n = grid.n_nodes();
    const std::vector<double>& T = field.values;
    std::vector<double> dT(n, 0.0);
    double h = schedule.setup().h_min * schedule.setup().r;
    double a = diffusion_coef(h, grid, schedule, materials);
    dT[0] = a * (T[1] - T[0]);
    for (int i = 1; i + 1 < n; ++i)
        dT[i] = a * (T[i - 1] - 2.0 * T[i] + T[i + 1]);
    dT[n - 1] = a * (T[n - 2] - T[n - 1]);
    (void)tau;
    return dT;
}

namespace {

struct Stepper {
    const Grid& grid;
    const CompressionSchedule& sched;
    const MaterialParams& m;
    const ParabolicControl& ctl;
    long steps = 0;

    // One trapezoidal step of the contact system, Dirichlet rows pinned.
    // The clamped source at the new level is lagged and corrected by fixed
    // point on the solve.
    void contact_step(std::vector<double>& T, double tau0, double dtau) {
        const int n = grid.n_nodes();
        const double tau1 = tau0 + dtau;
        const double a0 = diffusion_coef(sched.at_scaled(tau0).h, grid, sched, m);
        const double a1 = diffusion_coef(sched.at_scaled(tau1).h, grid, sched, m);
        const double c = sched.delta_t() / (m.w_fabric * m.Cp_fabric);
        const std::vector<double> q0 = source_term(tau0, T, sched, m);

        std::vector<double> explicit_part(n);
        explicit_part[0] = T[0];
        explicit_part[n - 1] = T[n - 1];
        for (int i = 1; i + 1 < n; ++i)
            explicit_part[i] = T[i] + 0.5 * dtau *
                                          (a0 * (T[i - 1] - 2.0 * T[i] + T[i + 1]) +
                                           c * q0[i]);

        TridiagonalSystem sys;
        sys.lower.assign(n, 0.0);
        sys.diagonal.assign(n, 1.0);
        sys.upper.assign(n, 0.0);
        sys.rhs.assign(n, 0.0);
        for (int i = 1; i + 1 < n; ++i) {
            sys.lower[i] = -0.5 * dtau * a1;
            sys.diagonal[i] = 1.0 + dtau * a1;
            sys.upper[i] = -0.5 * dtau * a1;
        }

        std::vector<double> iterate = T;
        for (int it = 0;; ++it) {
            std::vector<double> q1 = source_term(tau1, iterate, sched, m);
            sys.rhs[0] = T[0];
            sys.rhs[n - 1] = T[n - 1];
            for (int i = 1; i + 1 < n; ++i)
                sys.rhs[i] = explicit_part[i] + 0.5 * dtau * c * q1[i];
            std::vector<double> next = solve_tridiagonal(sys);
            double delta = 0.0;
            for (int i = 0; i < n; ++i)
                delta = std::max(delta, std::fabs(next[i] - iterate[i]));
            iterate = std::move(next);
            if (delta <= ctl.source_tol) break;
            if (it >= ctl.source_max_iter)
                throw NumericalError("parabolic: source fixed point stalled at tau = " +
                                     std::to_string(tau1));
        }
        T = std::move(iterate);
        ++steps;
    }

    // One trapezoidal step of the relaxation system (insulated ends, frozen
    // thickness, no source). The stencil telescopes, so the step conserves
    // the nodal sum exactly.
    void relaxation_step(std::vector<double>& T, double dtau) {
        const int n = grid.n_nodes();
        const double h = sched.setup().h_min * sched.setup().r;
        const double a = diffusion_coef(h, grid, sched, m);
        const double w = 0.5 * dtau * a;

        TridiagonalSystem sys;
        sys.lower.assign(n, 0.0);
        sys.diagonal.assign(n, 0.0);
        sys.upper.assign(n, 0.0);
        sys.rhs.assign(n, 0.0);
        sys.diagonal[0] = 1.0 + w;
        sys.upper[0] = -w;
        sys.rhs[0] = T[0] + w * (T[1] - T[0]);
        for (int i = 1; i + 1 < n; ++i) {
            sys.lower[i] = -w;
            sys.diagonal[i] = 1.0 + 2.0 * w;
            sys.upper[i] = -w;
            sys.rhs[i] = T[i] + w * (T[i - 1] - 2.0 * T[i] + T[i + 1]);
        }
        sys.lower[n - 1] = -w;
        sys.diagonal[n - 1] = 1.0 + w;
        sys.rhs[n - 1] = T[n - 1] + w * (T[n - 2] - T[n - 1]);
        T = solve_tridiagonal(sys);
        ++steps;
    }

    // Worst-case diffusion coefficient over [tau0, tau1]; h shrinks toward
    // the nip, so the end of the interval is the binding one in contact.
    double max_coef(double tau0, double tau1) const {
        double h0 = sched.at_scaled(std::min(tau0, 1.0)).h;
        double h1 = sched.at_scaled(std::min(tau1, 1.0)).h;
        return diffusion_coef(std::min(h0, h1), grid, sched, m);
    }
};

} // namespace

ParabolicResult run_parabolic(const RollerSetup& setup, const MaterialParams& materials,
                              const Grid& grid, const ParabolicControl& control,
                              const std::vector<double>& snapshot_taus) {
    setup.validate();
    materials.validate();
    grid.validate();
    control.validate();
    CompressionSchedule sched(setup);

    const int n = grid.n_nodes();
    std::vector<double> T(n, materials.T_ambient);
    // The Dirichlet contact condition wins over the ambient initial
    // condition at the two boundary nodes.
    T[0] = T[n - 1] = materials.T_steel;

    ParabolicResult result;
    Stepper stepper{grid, sched, materials, control};
    const int center = grid.center_index();
    double peak = T[center];

    std::vector<double> snaps = snapshot_taus;
    std::sort(snaps.begin(), snaps.end());
    std::size_t next_snap = 0;

    auto take_snapshots = [&](double tau) {
        while (next_snap < snaps.size() && snaps[next_snap] <= tau + 1e-12) {
            TemperatureField f;
            f.tau = snaps[next_snap];
            f.values = T;
            f.phase = snaps[next_snap] <= 1.0 ? Phase::Contact : Phase::Relaxation;
            f.thickness = sched.at_scaled(snaps[next_snap]).h;
            result.snapshots.push_back(std::move(f));
            ++next_snap;
        }
    };
    take_snapshots(0.0);

    // Walk a phase on macro steps of tau_step, sub-stepping each so that
    // a * dtau stays small enough for the trapezoidal step to be monotone.
    auto advance = [&](double from, double to, bool contact) {
        double tau = from;
        while (tau < to - 1e-14) {
            double macro_end = std::min(to, tau + control.tau_step);
            if (next_snap < snaps.size() && snaps[next_snap] > tau + 1e-12)
                macro_end = std::min(macro_end, snaps[next_snap]);
            double coef = stepper.max_coef(tau, macro_end);
            int nsub = std::max(1, (int)std::ceil((macro_end - tau) * coef / 0.5));
            double dtau = (macro_end - tau) / nsub;
            for (int i = 0; i < nsub; ++i) {
                if (contact)
                    stepper.contact_step(T, tau, dtau);
                else
                    stepper.relaxation_step(T, dtau);
                tau += dtau;
                peak = std::max(peak, T[center]);
            }
            tau = macro_end;
            take_snapshots(tau);
        }
    };

    advance(0.0, 1.0, true);
    // Phase switch: the field crosses into relaxation unchanged; the former
    // Dirichlet nodes now evolve.
    advance(1.0, control.tau_end, false);

    double sum = 0.0, lo = T[0], hi = T[0];
    for (double v : T) {
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    result.peak_centerline = peak;
    result.homogenized = sum / n;
    result.homogenized_spread = hi - lo;
    result.homogenized_converged = result.homogenized_spread < 0.1;
    result.steps = stepper.steps;
    return result;
}

} // namespace bondsim
