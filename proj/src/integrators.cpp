#include "bondsim/integrators.hpp"

#include <cmath>
#include <string>

namespace bondsim {

void StepControl::validate() const {
    if (!(rel_tol > 0.0)) throw ValidationError("step control: rel_tol must be positive");
    if (!(abs_tol > 0.0)) throw ValidationError("step control: abs_tol must be positive");
    if (max_steps < 1) throw ValidationError("step control: max_steps must be >= 1");
}

std::vector<double> solve_tridiagonal(const TridiagonalSystem& system) {
    const std::size_t n = system.diagonal.size();
    if (system.lower.size() != n || system.upper.size() != n || system.rhs.size() != n)
        throw ValidationError("solve_tridiagonal: band/rhs lengths inconsistent");
    if (n == 0) return {};

    std::vector<double> c(n), d(n);
    double pivot = system.diagonal[0];
    if (pivot == 0.0) throw NumericalError("solve_tridiagonal: zero pivot at index 0");
    c[0] = system.upper[0] / pivot;
    d[0] = system.rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = system.diagonal[i] - system.lower[i] * c[i - 1];
        if (pivot == 0.0)
            throw NumericalError("solve_tridiagonal: zero pivot at index " +
                                 std::to_string(i));
        c[i] = system.upper[i] / pivot;
        d[i] = (system.rhs[i] - system.lower[i] * d[i - 1]) / pivot;
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

} // namespace bondsim
