#include "bondsim/integrators.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace bondsim;

namespace {

// Dense Gaussian elimination with partial pivoting, the brute-force oracle.
std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const int n = (int)b.size();
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int row = col + 1; row < n; ++row)
            if (std::fabs(a[row][col]) > std::fabs(a[piv][col])) piv = row;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (int row = col + 1; row < n; ++row) {
            double f = a[row][col] / a[col][col];
            for (int k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int row = n - 1; row >= 0; --row) {
        double s = b[row];
        for (int k = row + 1; k < n; ++k) s -= a[row][k] * x[k];
        x[row] = s / a[row][row];
    }
    return x;
}

std::vector<double> uniform(double from, double to, int n) {
    std::vector<double> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = from + (to - from) * (i + 1) / double(n);
    return pts;
}

} // namespace

TEST_CASE("zero derivative keeps the state constant") {
    auto rhs = [](double, double) { return 0.0; };
    auto out = integrate_adaptive(rhs, 0.0, 1.0, 3.5, StepControl{}, uniform(0.0, 1.0, 16));
    REQUIRE(out.size() == 16);
    for (double v : out) CHECK(v == 3.5);
}

TEST_CASE("exponential decay against the closed form") {
    auto rhs = [](double, double y) { return -y; };
    auto out = integrate_adaptive(rhs, 0.0, 1.0, 1.0, StepControl{}, {1.0});
    REQUIRE(out.size() == 1);
    CHECK(std::fabs(out[0] - std::exp(-1.0)) < 1e-8);
}

TEST_CASE("tightening tolerances never increases the error") {
    auto rhs = [](double, double y) { return -y; };
    double prev_err = 1e300;
    for (double tol : {1e-4, 1e-6, 1e-8, 1e-10}) {
        StepControl c;
        c.rel_tol = c.abs_tol = tol;
        auto out = integrate_adaptive(rhs, 0.0, 1.0, 1.0, c, {1.0});
        double err = std::fabs(out[0] - std::exp(-1.0));
        CHECK(err <= prev_err * 1.001 + 1e-15);
        prev_err = err;
    }
}

TEST_CASE("observed order matches the pair's design order") {
    // Loose tolerances plus output points at the step spacing pin the step
    // size, turning the adaptive loop into a fixed-step one.
    auto rhs = [](double, double y) { return -y; };
    auto run_fixed = [&](double h) {
        StepControl c;
        c.rel_tol = c.abs_tol = 1.0;
        c.initial_step = h;
        int n = (int)std::round(1.0 / h);
        auto out = integrate_adaptive(rhs, 0.0, 1.0, 1.0, c, uniform(0.0, 1.0, n));
        return std::fabs(out.back() - std::exp(-1.0));
    };
    double e1 = run_fixed(1.0 / 16);
    double e2 = run_fixed(1.0 / 32);
    double order = std::log2(e1 / e2);
    CHECK(order > 4.5);
    CHECK(order < 5.5);
}

TEST_CASE("max_steps is enforced") {
    auto rhs = [](double, double y) { return -1e12 * y; };
    StepControl c;
    c.max_steps = 10;
    CHECK_THROWS_AS(integrate_adaptive(rhs, 0.0, 1.0, 1.0, c, {1.0}), NumericalError);
}

TEST_CASE("vector states integrate componentwise") {
    auto rhs = [](double, const std::vector<double>& y) {
        return std::vector<double>{-y[0], -2.0 * y[1]};
    };
    auto out = integrate_adaptive(rhs, 0.0, 1.0, std::vector<double>{1.0, 1.0},
                                  StepControl{}, {1.0});
    REQUIRE(out.size() == 1);
    CHECK(std::fabs(out[0][0] - std::exp(-1.0)) < 1e-8);
    CHECK(std::fabs(out[0][1] - std::exp(-2.0)) < 1e-8);
}

TEST_CASE("tridiagonal identity system") {
    TridiagonalSystem sys;
    sys.lower = {0, 0, 0};
    sys.diagonal = {1, 1, 1};
    sys.upper = {0, 0, 0};
    sys.rhs = {4.0, -1.0, 2.5};
    CHECK(solve_tridiagonal(sys) == sys.rhs);
}

TEST_CASE("tridiagonal 3x3 hand-solved system") {
    // [2 1 0; 1 3 1; 0 1 2] x = [3, 5, 3] -> x = [1, 1, 1]
    TridiagonalSystem sys;
    sys.lower = {0, 1, 1};
    sys.diagonal = {2, 3, 2};
    sys.upper = {1, 1, 0};
    sys.rhs = {3, 5, 3};
    auto x = solve_tridiagonal(sys);
    for (double v : x) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("tridiagonal residual on random diagonally dominant systems") {
    std::mt19937 gen(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5 + trial;
        TridiagonalSystem sys;
        sys.lower.assign(n, 0.0);
        sys.diagonal.assign(n, 0.0);
        sys.upper.assign(n, 0.0);
        sys.rhs.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            if (i > 0) sys.lower[i] = dist(gen);
            if (i + 1 < n) sys.upper[i] = dist(gen);
            sys.diagonal[i] =
                3.0 + std::fabs(sys.lower[i]) + std::fabs(sys.upper[i]) + dist(gen);
            sys.rhs[i] = 10.0 * dist(gen);
        }
        auto x = solve_tridiagonal(sys);
        double res = 0.0, rhs_norm = 0.0;
        for (int i = 0; i < n; ++i) {
            double ax = sys.diagonal[i] * x[i];
            if (i > 0) ax += sys.lower[i] * x[i - 1];
            if (i + 1 < n) ax += sys.upper[i] * x[i + 1];
            res = std::max(res, std::fabs(ax - sys.rhs[i]));
            rhs_norm = std::max(rhs_norm, std::fabs(sys.rhs[i]));
        }
        CHECK(res <= 1e-12 * rhs_norm);
    }
}

TEST_CASE("tridiagonal SPD system matches the dense oracle") {
    const int n = 12;
    TridiagonalSystem sys;
    sys.lower.assign(n, -1.0);
    sys.diagonal.assign(n, 2.5);
    sys.upper.assign(n, -1.0);
    sys.rhs.assign(n, 0.0);
    for (int i = 0; i < n; ++i) sys.rhs[i] = std::sin(i + 1.0);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        dense[i][i] = 2.5;
        if (i > 0) dense[i][i - 1] = -1.0;
        if (i + 1 < n) dense[i][i + 1] = -1.0;
    }
    auto x = solve_tridiagonal(sys);
    auto y = dense_solve(dense, sys.rhs);
    for (int i = 0; i < n; ++i)
        CHECK(x[i] == doctest::Approx(y[i]).epsilon(1e-10));
}

TEST_CASE("zero pivot names the index") {
    TridiagonalSystem sys;
    sys.lower = {0, 0};
    sys.diagonal = {0, 1};
    sys.upper = {0, 0};
    sys.rhs = {1, 1};
    CHECK_THROWS_WITH_AS(solve_tridiagonal(sys), doctest::Contains("index 0"),
                         NumericalError);
}
