#include "hypspec/rmt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <thread>

#include "hypspec/errors.hpp"
#include "hypspec/philox.hpp"

namespace hypspec {

namespace {

int beta_of(RmtKind k) {
    switch (k) {
        case RmtKind::goe: return 1;
        case RmtKind::gue: return 2;
        default: return 4;
    }
}

// Support radius of the semicircle for the sampler conventions below.
double support_radius(int beta, int n) { return std::sqrt(2.0 * beta * n); }

// Dumitriu-Edelman tridiagonal model: diagonal N(0,1), off-diagonal
// chi_{beta k}/sqrt(2), k = n-1..1; eigenvalues follow the beta-Hermite
// density with semicircle support [-sqrt(2 beta n), sqrt(2 beta n)].
std::vector<double> tridiag_eigs(int n, int beta, PhiloxStream& rng) {
    Eigen::VectorXd diag(n), sub(n - 1);
    for (int i = 0; i < n; ++i) diag[i] = rng.next_normal();
    for (int k = 0; k < n - 1; ++k)
        sub[k] = rng.next_chi(beta * (n - 1 - k)) * M_SQRT1_2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> dense_goe_eigs(int n, PhiloxStream& rng) {
    Eigen::MatrixXd a(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a(i, j) = rng.next_normal();
    Eigen::MatrixXd h = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> dense_gue_eigs(int n, PhiloxStream& rng) {
    Eigen::MatrixXcd a(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            a(i, j) = std::complex<double>(rng.next_normal(), rng.next_normal());
    Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(out.begin(), out.end());
    return out;
}

// Quaternion self-dual draw embedded as a 2N x 2N complex Hermitian matrix
// [[A, B], [-conj(B), conj(A)]]; every eigenvalue appears twice.
std::vector<double> dense_gse_eigs_raw(int n, PhiloxStream& rng) {
    Eigen::MatrixXcd a(n, n), b(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            a(i, j) = std::complex<double>(rng.next_normal(), rng.next_normal());
            b(i, j) = std::complex<double>(rng.next_normal(), rng.next_normal());
        }
    Eigen::MatrixXcd m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = a;
    m.topRightCorner(n, n) = b;
    m.bottomLeftCorner(n, n) = -b.conjugate();
    m.bottomRightCorner(n, n) = a.conjugate();
    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(),
                            es.eigenvalues().data() + 2 * n);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

void validate_ensemble(const EnsembleSpec& spec) {
    if (spec.dimension < 64) throw ConfigError("ensemble dimension must be >= 64");
    if (spec.replicas < 100) throw ConfigError("ensemble replicas must be >= 100");
    if (!(spec.window_center > -1.0 && spec.window_center < 1.0))
        throw ConfigError("window_center must lie in (-1, 1)");
    if (spec.window_width < 8.0)
        throw ConfigError("window width must be >= 8 mean spacings");
    if (spec.window_width > spec.dimension / 8.0)
        throw ConfigError("window width exceeds N/8; window would leave the bulk");
}

std::vector<double> sample_spectrum(const EnsembleSpec& spec, std::uint64_t seed,
                                    std::uint64_t stream) {
    PhiloxStream rng(seed, stream);
    const int n = spec.dimension;
    if (!spec.use_dense) return tridiag_eigs(n, beta_of(spec.kind), rng);
    switch (spec.kind) {
        case RmtKind::goe: return dense_goe_eigs(n, rng);
        case RmtKind::gue: return dense_gue_eigs(n, rng);
        default: {
            // keep one eigenvalue per Kramers doublet
            std::vector<double> raw = dense_gse_eigs_raw(n, rng);
            std::vector<double> out;
            out.reserve(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < raw.size(); i += 2)
                out.push_back(0.5 * (raw[i] + raw[i + 1]));
            return out;
        }
    }
}

std::vector<double> sample_gse_dense_raw(int dimension, std::uint64_t seed,
                                         std::uint64_t stream) {
    PhiloxStream rng(seed, stream);
    return dense_gse_eigs_raw(dimension, rng);
}

namespace {

// CDF of the semicircle density on [-1, 1].
double semicircle_cdf(double x) {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / M_PI;
}

} // namespace

std::vector<double> unfold(const std::vector<double>& eigs, int dimension,
                           RmtKind kind) {
    const double radius = support_radius(beta_of(kind), dimension);
    std::vector<double> out;
    out.reserve(eigs.size());
    for (double lam : eigs)
        out.push_back(dimension * semicircle_cdf(lam / radius));
    return out;
}

namespace {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPSPEC_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

VarianceEstimate statistic_variance(const EnsembleSpec& spec, const TestFunction& tf,
                                    std::uint64_t seed, int workers) {
    validate_ensemble(spec);
    const double x0 = spec.dimension * semicircle_cdf(spec.window_center);
    const double w = spec.window_width;

    std::vector<double> stats(static_cast<std::size_t>(spec.replicas));
    const int nw = resolve_workers(workers);
    std::vector<std::thread> threads;
    for (int t = 0; t < nw; ++t) {
        threads.emplace_back([&, t]() {
            for (int r = t; r < spec.replicas; r += nw) {
                auto eigs = sample_spectrum(spec, seed, static_cast<std::uint64_t>(r));
                auto x = unfold(eigs, spec.dimension, spec.kind);
                double s = 0.0;
                for (double xi : x) s += tf.f((xi - x0) / w);
                stats[static_cast<std::size_t>(r)] = s;
            }
        });
    }
    for (auto& th : threads) th.join();

    double mean = 0.0;
    for (double s : stats) mean += s;
    mean /= spec.replicas;
    double m2 = 0.0, m4 = 0.0;
    for (double s : stats) {
        const double y = (s - mean) * (s - mean);
        m2 += y;
        m4 += y * y;
    }
    const double n = spec.replicas;
    VarianceEstimate est;
    est.mean = mean;
    est.variance = m2 / (n - 1.0);
    m2 /= n;
    m4 /= n;
    est.standard_error = std::sqrt(std::max(0.0, m4 - m2 * m2) / n);
    est.replicas = spec.replicas;
    return est;
}

} // namespace hypspec
