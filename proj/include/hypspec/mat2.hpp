#pragma once

#include <array>
#include <cmath>

#include "hypspec/errors.hpp"

namespace hypspec {

/// 2x2 real matrix with value semantics; the workhorse for SL(2,R) arithmetic.
struct Mat2 {
    // row-major: [ a b ; c d ]
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mat2 identity() { return Mat2{}; }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    // For M in SL(2,R): cosh(dist(i, M.i)) = ||M||_F^2 / 2.
    double frobenius_sq() const { return a * a + b * b + c * c + d * d; }

    Mat2 inverse_sl2() const { return Mat2{d, -b, -c, a}; }

    Mat2 operator*(const Mat2& o) const {
        return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
                    c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 operator-() const { return Mat2{-a, -b, -c, -d}; }

    double max_abs_diff(const Mat2& o) const {
        double m = std::fabs(a - o.a);
        m = std::max(m, std::fabs(b - o.b));
        m = std::max(m, std::fabs(c - o.c));
        m = std::max(m, std::fabs(d - o.d));
        return m;
    }
};

/// Hyperbolic translation length from an SL(2,R) trace: ell = 2*arccosh(|t|/2).
/// Throws NotHyperbolic for |t| <= 2.
inline double trace_to_length(double t) {
    double ht = std::fabs(t) / 2.0;
    if (ht <= 1.0)
        throw NotHyperbolic("trace_to_length: |trace| <= 2 (not hyperbolic)");
    return 2.0 * std::acosh(ht);
}

} // namespace hypspec
