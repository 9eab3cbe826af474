#include "hypspec/test_function.hpp"

#include <cmath>
#include <mutex>

#include "hypspec/errors.hpp"

namespace hypspec {

namespace {

// Normalised bump transform (support radius 1).
double bump_fhat1(double u) {
    const double u2 = u * u;
    if (u2 >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u2));
}

} // namespace

// Grid of f_1(r) = 2 int_0^1 bump_fhat1(u) cos(ur) du on r in [0, R]; the
// bump at radius A is recovered exactly as f_A(r) = A * f_1(A r).
struct TestFunction::Grid {
    double radius = 0.0;
    double step = 0.0;
    std::vector<double> values;       // f_1 at k*step
    std::vector<double> suffix_max;   // envelope per 256-point block, suffix max

    double interp(double r_abs) const {
        const double x = r_abs / step;
        const auto n = static_cast<std::ptrdiff_t>(values.size());
        auto k = static_cast<std::ptrdiff_t>(x);
        if (k >= n - 2) return 0.0;
        const double t = x - static_cast<double>(k);
        // 4-point Lagrange on k-1..k+2; mirror across 0 (f is even).
        const std::ptrdiff_t km1 = k >= 1 ? k - 1 : 1;
        const double fm1 = values[static_cast<std::size_t>(km1)];
        const double f0 = values[static_cast<std::size_t>(k)];
        const double f1 = values[static_cast<std::size_t>(k + 1)];
        const double f2 = values[static_cast<std::size_t>(k + 2)];
        const double tm = t - 1.0, tp = t + 1.0, t2 = t - 2.0;
        return -t * tm * t2 / 6.0 * fm1 + tp * tm * t2 / 2.0 * f0 -
               tp * t * t2 / 2.0 * f1 + tp * t * tm / 6.0 * f2;
    }

    double envelope(double r_abs) const {
        const auto block = static_cast<std::size_t>(r_abs / (256.0 * step));
        if (block >= suffix_max.size()) return suffix_max.back();
        return suffix_max[block];
    }
};

namespace {

std::shared_ptr<const TestFunction::Grid> build_bump_grid() {
    auto grid = std::make_shared<TestFunction::Grid>();
    // f_1 decays like exp(-sqrt(2r)); radius 2000 puts the grid tail (and the
    // aliasing floor) below 1e-19, enough to certify 1e-10 integral tails.
    grid->radius = 2000.0;
    const int n = 1 << 18;
    grid->step = grid->radius / n;
    grid->values.assign(static_cast<std::size_t>(n) + 3, 0.0);

    // Sample the transform at du = pi / radius and evaluate the cosine sum;
    // by Poisson summation the only error is the aliased tail of f_1 beyond
    // 2*radius - r, far below double precision here.
    const double du = M_PI / grid->radius;
    const int m = static_cast<int>(1.0 / du);  // support is |u| < 1
    std::vector<double> coeff(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j)
        coeff[static_cast<std::size_t>(j)] = bump_fhat1(j * du);

    for (int k = 0; k <= n; ++k) {
        const double alpha = M_PI * static_cast<double>(k) / n;
        const double two_cos = 2.0 * std::cos(alpha);
        // Chebyshev recurrence for cos(j*alpha)
        double c_prev = 1.0;                // j = 0
        double c_cur = std::cos(alpha);     // j = 1
        double acc = 0.5 * coeff[0];
        for (int j = 1; j <= m; ++j) {
            acc += coeff[static_cast<std::size_t>(j)] * c_cur;
            const double c_next = two_cos * c_cur - c_prev;
            c_prev = c_cur;
            c_cur = c_next;
        }
        grid->values[static_cast<std::size_t>(k)] = 2.0 * du * acc;
    }

    const std::size_t blocks = (grid->values.size() + 255) / 256;
    grid->suffix_max.assign(blocks, 0.0);
    for (std::size_t b = blocks; b-- > 0;) {
        double mx = b + 1 < blocks ? grid->suffix_max[b + 1] : 0.0;
        const std::size_t lo = b * 256;
        const std::size_t hi = std::min(grid->values.size(), lo + 256);
        for (std::size_t i = lo; i < hi; ++i)
            mx = std::max(mx, std::fabs(grid->values[i]));
        grid->suffix_max[b] = mx;
    }
    return grid;
}

std::shared_ptr<const TestFunction::Grid> shared_bump_grid() {
    static std::shared_ptr<const TestFunction::Grid> g = build_bump_grid();
    return g;
}

} // namespace

TestFunction TestFunction::bump(double support_radius, double quadrature_tol) {
    if (support_radius <= 0.0)
        throw QuadratureFailure("bump: support radius must be positive");
    TestFunction tf;
    tf.A_ = support_radius;
    tf.tol_ = quadrature_tol;
    tf.tag_ = "bump";
    tf.grid_ = shared_bump_grid();
    return tf;
}

TestFunction TestFunction::fejer(double support_radius, double quadrature_tol) {
    if (support_radius <= 0.0)
        throw QuadratureFailure("fejer: support radius must be positive");
    TestFunction tf;
    tf.A_ = support_radius;
    tf.tol_ = quadrature_tol;
    tf.tag_ = "fejer";
    return tf;
}

double TestFunction::fhat(double u) const {
    if (tag_ == "bump") return bump_fhat1(u / A_);
    const double t = std::fabs(u) / A_;
    return t >= 1.0 ? 0.0 : 1.0 - t;
}

double TestFunction::f(double r) const {
    if (tag_ == "bump") {
        const double s = std::fabs(A_ * r);
        return A_ * grid_->interp(s);
    }
    // Fejer kernel: A * (sin(Ar/2)/(Ar/2))^2
    const double x = 0.5 * A_ * r;
    if (std::fabs(x) < 1e-6) {
        const double x2 = x * x;
        return A_ * (1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 45.0);
    }
    const double s = std::sin(x) / x;
    return A_ * s * s;
}

double TestFunction::tail_envelope(double r_abs) const {
    if (tag_ == "bump") return A_ * grid_->envelope(std::fabs(A_ * r_abs));
    const double x = 0.5 * A_ * r_abs;
    return x < 1.0 ? A_ : A_ / (x * x);
}

double TestFunction::grid_radius() const {
    if (tag_ == "bump") return grid_->radius / A_;
    return 1e308;  // closed form everywhere
}

double h_window(const TestFunction& tf, const WindowParams& w, double r) {
    return tf.f(w.L * (r - w.tau)) + tf.f(w.L * (r + w.tau));
}

double hhat_window(const TestFunction& tf, const WindowParams& w, double u) {
    return 2.0 / w.L * tf.fhat(u / w.L) * std::cos(w.tau * u);
}

} // namespace hypspec
