#include "hypspec/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hypspec/errors.hpp"
#include "hypspec/quadrature.hpp"

namespace hypspec {

RmtKind rmt_kind_parse(const std::string& text) {
    if (text == "goe") return RmtKind::goe;
    if (text == "gue") return RmtKind::gue;
    if (text == "gse") return RmtKind::gse;
    throw ConfigError("unknown ensemble kind: " + text);
}

std::string rmt_kind_name(RmtKind k) {
    switch (k) {
        case RmtKind::goe: return "goe";
        case RmtKind::gue: return "gue";
        default: return "gse";
    }
}

namespace {

// r * tanh(pi r) resp. r * coth(pi r); the coth branch has limit 1/pi at 0.
double weyl_factor(double r, SpectralKind kind) {
    const double x = M_PI * r;
    if (kind == SpectralKind::laplace) return r * std::tanh(x);
    if (std::fabs(x) < 1e-3) {
        // r*coth(pi r) = 1/pi + pi r^2/3 - (pi r)^3 r /45 + ...
        return 1.0 / M_PI + x * r / 3.0 - x * x * x * r / 45.0;
    }
    return r / std::tanh(x);
}

} // namespace

double weyl_term(const TestFunction& tf, const WindowParams& w, int genus,
                 SpectralKind kind) {
    if (genus == 1) return 0.0;
    const double tol = tf.quadrature_tol();

    // Truncation radius: walk the envelope of f outward until the certified
    // tail bound is beyond reach. The integrand is
    // [f(L(r-tau)) + f(L(r+tau))] * r * K(pi r), K bounded near 1 for r >= 1.
    double s_end = 8.0;
    const double s_cap = std::min(tf.grid_radius(), 1e6);
    for (;;) {
        const double r_end = w.tau + s_end / w.L;
        const double tail =
            tf.tail_envelope(s_end) * (r_end + 1.0) * (s_end + w.L) / w.L;
        if (tail < 0.1 * tol) break;
        s_end *= 1.5;
        if (s_end > s_cap)
            throw QuadratureFailure("weyl_term: cannot certify the tail bound");
    }
    const double r_end = w.tau + s_end / w.L;

    auto integrand = [&](double r) {
        return h_window(tf, w, r) * weyl_factor(r, kind);
    };
    // integrand is even; 2 * integral over [0, r_end]
    QuadResult q = integrate_gk(integrand, 0.0, r_end, 0.45 * tol);
    return static_cast<double>(genus - 1) * 2.0 * q.value;
}

namespace {

// zeta at odd integers 3, 5, ..., for the kernel series below. Direct sum
// plus the Euler-Maclaurin tail
//   sum_{n>=a} n^-m = a^{1-m}/(m-1) + a^-m/2 + m a^{-m-1}/12
//                     - m(m+1)(m+2) a^{-m-3}/720 + O(a^{-m-5});
// with a = 101 the remainder is below 1e-14 relative for every m >= 3.
double zeta_odd(int m) {
    const int cut = 100;
    double s = 0.0;
    for (int n = 1; n <= cut; ++n) s += std::pow(n, -m);
    const double a = cut + 1;
    s += std::pow(a, 1.0 - m) / (m - 1.0);
    s += 0.5 * std::pow(a, -static_cast<double>(m));
    s += m / 12.0 * std::pow(a, -1.0 - m);
    s -= m * (m + 1.0) * (m + 2.0) / 720.0 * std::pow(a, -3.0 - m);
    return s;
}

// K(y) = sum_{n>=1} sinh^2(y/(2n))/n = (1/2) sum_{k>=1} zeta(2k+1) y^{2k}/(2k)!
// (entire in y; the series is truncated when terms fall below 1e-18 of the
// running sum).
double power_sum_kernel(double y) {
    static const std::vector<double> zetas = [] {
        std::vector<double> z;
        for (int k = 1; k <= 80; ++k) z.push_back(zeta_odd(2 * k + 1));
        return z;
    }();
    const double y2 = y * y;
    double term = 0.5 * y2 / 2.0;  // k = 1: y^2/(2!) * 1/2
    double sum = 0.0;
    for (std::size_t k = 1; k <= zetas.size(); ++k) {
        const double contrib = zetas[k - 1] * term;
        sum += contrib;
        if (contrib < 1e-18 * sum) return sum;
        term *= y2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    }
    throw QuadratureFailure("i_fq kernel series did not converge (y too large)");
}

} // namespace

double i_fq(const TestFunction& tf, const WindowParams& w, const FluxQ& q) {
    if (q.is_infinite()) return 0.0;
    const double qv = static_cast<double>(q.value());
    const double A = tf.support_radius();
    const double L = w.L;

    // Substituting y = nx in the n-th term turns the sum-of-integrals into a
    // single integral against the kernel K(y) = sum_n sinh^2(y/(2n))/n:
    //   I = (4/L) int_0^{AL/q} fhat(qy/L) K(y) cos(q tau y) / sinh(qy/2) dy.
    // No n-truncation is involved; K is evaluated from its zeta series.
    auto integrand = [&](double y) {
        if (y <= 0.0) return 0.0;
        return tf.fhat(qv * y / L) * power_sum_kernel(y) *
               std::cos(qv * w.tau * y) / std::sinh(0.5 * qv * y);
    };
    const double tol = std::max(1e-14, 1e-3 * tf.quadrature_tol());
    QuadResult r = integrate_gk(integrand, 0.0, A * L / qv, tol);
    return 4.0 / L * r.value;
}

double rmt_density(const TestFunction& tf, RmtKind kind) {
    const double A = tf.support_radius();
    const int panels = 64;
    double weight;
    switch (kind) {
        case RmtKind::goe: weight = 2.0; break;
        case RmtKind::gue: weight = 1.0; break;
        default: weight = 0.5; break;
    }
    // int_R weight*|x| |fhat|^2 dx = 2*weight * int_0^A x fhat(x)^2 dx.
    // Fixed panels keep the partition identical for all three kinds; the
    // weight is a power of two, so goe = 2*gue and gse = gue/2 exactly.
    auto integrand = [&](double x) {
        const double fh = tf.fhat(x);
        return weight * x * fh * fh;
    };
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = A * i / panels;
        const double b = A * (i + 1) / panels;
        sum += gk15_panel(integrand, a, b);
    }
    return 2.0 * sum;
}

} // namespace hypspec
