#pragma once

#include <functional>

namespace hypspec {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to absolute
/// tolerance `tol`. Deterministic: identical inputs subdivide identically.
/// Throws QuadratureFailure when the tolerance cannot be reached within the
/// subdivision budget.
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

/// Single non-adaptive K15 panel (used for fixed-panel composite rules where
/// bitwise-stable partitions matter more than adaptivity).
double gk15_panel(const std::function<double(double)>& f, double a, double b,
                  double* err = nullptr);

} // namespace hypspec
