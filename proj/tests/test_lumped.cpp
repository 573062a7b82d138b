#include "bondsim/lumped.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace bondsim;

namespace {

LumpedScenario adiabatic_quadratic() {
    LumpedScenario sc;
    sc.materials = default_params();
    sc.stiffness = StiffnessModel::quadratic(sc.materials);
    sc.mode = LumpedMode::AdiabaticInStrain;
    return sc;
}

// Closed-form solution of the quadratic adiabatic model: with
// u = (Tmax - T)/(Tmax - T0), du/ds = -g(s) u^2 / (Tmax - T0) where
// g(s) = s kappa(s)/(Cp w), so 1/u(s) = 1 + G(s)/(Tmax - T0) with
// G(s) = kappa0 (-s/2 - log(1 - 2s)/4)/(Cp w).
double adiabatic_quadratic_exact(double s, const MaterialParams& m) {
    double G = m.kappa0 * (-s / 2.0 - std::log(1.0 - 2.0 * s) / 4.0) /
               (m.Cp_fabric * m.w_fabric);
    double span = m.T_max_quadratic - m.T_ambient;
    double u = 1.0 / (1.0 + G / span);
    return m.T_max_quadratic - span * u;
}

std::vector<double> uniform(double to, int n) {
    std::vector<double> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = to * (i + 1) / double(n);
    return pts;
}

} // namespace

TEST_CASE("adiabatic right side anchors") {
    LumpedScenario sc = adiabatic_quadratic();
    CHECK(rhs_adiabatic(0.2, 160.0, sc) == 0.0);
    CHECK(rhs_adiabatic(0.0, 20.0, sc) == 0.0);
    double expected = 0.1 * (16e6 / 0.8) / (1800.0 * 0.0126);
    CHECK(rhs_adiabatic(0.1, 20.0, sc) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(8.818e4).epsilon(1e-3));
}

TEST_CASE("constant-speed right side decomposes into heating plus flux") {
    LumpedScenario sc = adiabatic_quadratic();
    sc.mode = LumpedMode::ConstantSpeedInStrain;
    sc.target_ratio = 0.6;
    sc.compression_time = 10e-3;
    CHECK(rhs_constant_speed(0.0, sc.materials.T_steel, sc) == 0.0);

    double heating, flux;
    lumped_terms(0.2, 100.0, sc, heating, flux);
    LumpedScenario ad = adiabatic_quadratic();
    CHECK(heating == doctest::Approx(rhs_adiabatic(0.2, 100.0, ad)).epsilon(1e-14));
    double v = 2.0 * 14e-6 * 0.4 / 10e-3;
    CHECK(v == doctest::Approx(1.12e-3).epsilon(1e-12));
    double expected_flux = 4.0 * 50.0 * (20.0 - 100.0) / (v * 0.8) / (1800.0 * 0.0126);
    CHECK(flux == doctest::Approx(expected_flux).epsilon(1e-12));
    CHECK(expected_flux == doctest::Approx(-7.87e5).epsilon(2e-3));
}

TEST_CASE("roller scaled-time right side anchors") {
    LumpedScenario sc = adiabatic_quadratic();
    sc.mode = LumpedMode::RollerScaledTime;
    sc.roller = RollerSetup{0.2, 6.0, 0.6, sc.materials.h_min};
    CHECK(rhs_roller_scaled(0.0, sc.materials.T_steel, sc) == 0.0);
    double heating, flux;
    lumped_terms(1.0, 100.0, sc, heating, flux);
    CHECK(heating == 0.0); // v(1) = 0
    CHECK(flux < 0.0);     // only the steel flux remains
}

TEST_CASE("physical-time and scaled-time models produce the same trace") {
    // Integrates the combined model in t directly and compares against the
    // scaled-time right side after t = tau delta_t.
    LumpedScenario sc = adiabatic_quadratic();
    sc.mode = LumpedMode::RollerScaledTime;
    sc.roller = RollerSetup{0.2, 6.0, 0.6, sc.materials.h_min};
    CompressionSchedule sched(*sc.roller);
    const MaterialParams& m = sc.materials;

    auto rhs_physical = [&](double t, double T) {
        double s = sched.strain_at(t);
        double v = sched.strain_rate_at(t);
        double soft = sc.stiffness.softening(T);
        double heating = v * s * kappa_fabric(s, m.kappa0) * soft;
        double flux = 4.0 * m.K_steel * (m.T_steel - T) / (m.h_min * (1.0 - s));
        return (heating + flux) / (m.Cp_fabric * m.w_fabric);
    };

    StepControl tight;
    tight.rel_tol = tight.abs_tol = 1e-10;
    std::vector<double> taus = uniform(1.0, 32);
    std::vector<double> times;
    for (double tau : taus) times.push_back(tau * sched.delta_t());
    StepControl tight_t = tight;
    tight_t.initial_step = sched.delta_t() * 1e-6;
    auto in_t = integrate_adaptive(rhs_physical, 0.0, sched.delta_t(), m.T_ambient,
                                   tight_t, times);
    sc.control = tight;
    TemperatureTrace in_tau = run_lumped(sc, taus);
    REQUIRE(in_t.size() == taus.size());
    REQUIRE(in_tau.samples.size() == taus.size() + 1);
    for (std::size_t i = 0; i < taus.size(); ++i)
        CHECK(std::fabs(in_t[i] - in_tau.samples[i + 1].T) <= 1e-6);
}

TEST_CASE("negligible stiffness keeps the adiabatic trace at ambient") {
    LumpedScenario sc = adiabatic_quadratic();
    sc.materials.kappa0 = 1e-30;
    TemperatureTrace trace = run_lumped(sc, uniform(0.4, 64));
    for (const auto& p : trace.samples)
        CHECK(p.T == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("adiabatic quadratic model against the closed-form oracle") {
    LumpedScenario sc = adiabatic_quadratic();
    sc.control.rel_tol = sc.control.abs_tol = 1e-10;
    TemperatureTrace trace = run_lumped(sc, uniform(0.4, 64));
    for (const auto& p : trace.samples) {
        if (p.abscissa == 0.0) continue;
        double exact = adiabatic_quadratic_exact(p.abscissa, sc.materials);
        CHECK(p.T == doctest::Approx(exact).epsilon(1e-6));
    }
    // saturation: melting range reached by strain 0.1, never crossed
    TemperatureTrace fine = run_lumped(sc, uniform(0.1, 8));
    CHECK(fine.samples.back().T >= 150.0);
    double prev = -1e300;
    for (const auto& p : trace.samples) {
        CHECK(p.T < 160.0);
        CHECK(p.T >= prev); // non-decreasing in the abscissa
        prev = p.T;
    }
}

TEST_CASE("flux-only model against the closed-form linear ODE") {
    // With negligible stiffness the constant-speed model reduces to
    // dT/ds = A (T_steel - T)/(1 - s), whose solution is
    // T = T_steel + (T0 - T_steel)(1 - s)^A.
    LumpedScenario sc = adiabatic_quadratic();
    sc.materials.kappa0 = 1e-30;
    sc.materials.T_steel = 15.0;
    sc.mode = LumpedMode::ConstantSpeedInStrain;
    sc.target_ratio = 0.6;
    sc.compression_time = 1e-5;
    sc.control.rel_tol = sc.control.abs_tol = 1e-10;
    double v = sc.compression_speed();
    double A = 4.0 * sc.materials.K_steel /
               (v * sc.materials.Cp_fabric * sc.materials.w_fabric);
    TemperatureTrace trace = run_lumped(sc, uniform(0.4, 32));
    for (const auto& p : trace.samples) {
        double exact = 15.0 + (20.0 - 15.0) * std::pow(1.0 - p.abscissa, A);
        CHECK(std::fabs(p.T - exact) <= 1e-6);
    }
}

TEST_CASE("flux ordering across compression times") {
    LumpedScenario sc = adiabatic_quadratic();
    sc.mode = LumpedMode::ConstantSpeedInStrain;
    sc.target_ratio = 0.6;
    std::vector<double> pts = uniform(0.4, 128);
    std::vector<double> peaks;
    for (double dt : {0.1e-3, 1e-3, 10e-3}) {
        sc.compression_time = dt;
        sc.include_flux = true;
        TemperatureTrace with_flux = run_lumped(sc, pts);
        sc.include_flux = false;
        TemperatureTrace without = run_lumped(sc, pts);
        for (std::size_t i = 0; i < with_flux.samples.size(); ++i)
            CHECK(with_flux.samples[i].T <= without.samples[i].T + 1e-9);
        peaks.push_back(with_flux.peak_temperature());
    }
    CHECK(peaks[0] > peaks[1]); // 0.1 ms hottest
    CHECK(peaks[1] > peaks[2]);
}

TEST_CASE("temperature stays inside the physical bracket") {
    LumpedScenario sc = adiabatic_quadratic();
    sc.mode = LumpedMode::RollerScaledTime;
    sc.roller = RollerSetup{0.2, 6.0, 0.7, sc.materials.h_min};
    TemperatureTrace trace = run_lumped(sc);
    for (const auto& p : trace.samples) {
        CHECK(p.T >= std::min(sc.materials.T_ambient, sc.materials.T_steel) - 1e-9);
        CHECK(p.T <= sc.materials.T_max_quadratic);
    }
    // abscissa strictly increasing
    for (std::size_t i = 1; i < trace.samples.size(); ++i)
        CHECK(trace.samples[i].abscissa > trace.samples[i - 1].abscissa);
}

TEST_CASE("linear and quadratic variants coincide with zero source") {
    LumpedScenario sc = adiabatic_quadratic();
    sc.materials.kappa0 = 1e-30;
    sc.materials.T_steel = sc.materials.T_ambient;
    sc.mode = LumpedMode::ConstantSpeedInStrain;
    sc.target_ratio = 0.6;
    sc.compression_time = 1e-3;
    TemperatureTrace quad = run_lumped(sc, uniform(0.4, 16));
    sc.stiffness = StiffnessModel::linear(sc.materials);
    TemperatureTrace lin = run_lumped(sc, uniform(0.4, 16));
    for (std::size_t i = 0; i < quad.samples.size(); ++i)
        CHECK(quad.samples[i].T == doctest::Approx(lin.samples[i].T).epsilon(1e-12));
}

TEST_CASE("refining tolerances barely moves the answer") {
    LumpedScenario sc = adiabatic_quadratic();
    sc.mode = LumpedMode::ConstantSpeedInStrain;
    sc.target_ratio = 0.6;
    sc.compression_time = 1e-3;
    std::vector<double> pts = {0.4};
    sc.control.rel_tol = sc.control.abs_tol = 1e-8;
    double coarse = run_lumped(sc, pts).samples.back().T;
    sc.control.rel_tol = sc.control.abs_tol = 1e-10;
    double fine = run_lumped(sc, pts).samples.back().T;
    CHECK(std::fabs(coarse - fine) < 10.0 * 1e-8 * std::fabs(fine) + 1e-7);
}

TEST_CASE("scenario validation") {
    LumpedScenario sc = adiabatic_quadratic();
    sc.mode = LumpedMode::ConstantSpeedInStrain;
    sc.compression_time = 0.0;
    CHECK_THROWS_AS(sc.validate(), ValidationError);
    sc.compression_time = 1e-3;
    sc.target_ratio = 0.4;
    CHECK_THROWS_AS(sc.validate(), ValidationError);
    sc.mode = LumpedMode::RollerScaledTime;
    CHECK_THROWS_AS(sc.validate(), ValidationError); // roller missing
}
