#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hypspec/errors.hpp"
#include "hypspec/rmt.hpp"

using namespace hypspec;

TEST_CASE("ensemble spec validation") {
    EnsembleSpec ok;
    CHECK_NOTHROW(validate_ensemble(ok));
    EnsembleSpec bad = ok;
    bad.dimension = 32;
    CHECK_THROWS_AS(validate_ensemble(bad), ConfigError);
    bad = ok;
    bad.window_width = 4.0;
    CHECK_THROWS_AS(validate_ensemble(bad), ConfigError);
    bad = ok;
    bad.window_width = 100.0;  // > N/8 = 64
    CHECK_THROWS_AS(validate_ensemble(bad), ConfigError);
    bad = ok;
    bad.window_center = 1.5;
    CHECK_THROWS_AS(validate_ensemble(bad), ConfigError);
}

TEST_CASE("dense GSE draws carry Kramers doublets") {
    auto raw = sample_gse_dense_raw(64, 5, 0);
    REQUIRE(raw.size() == 128);
    for (std::size_t i = 0; i < raw.size(); i += 2)
        CHECK(std::fabs(raw[i] - raw[i + 1]) < 1e-8);
}

TEST_CASE("sampling is deterministic per (seed, stream)") {
    EnsembleSpec es;
    es.kind = RmtKind::gue;
    es.dimension = 128;
    auto a = sample_spectrum(es, 17, 3);
    auto b = sample_spectrum(es, 17, 3);
    auto c = sample_spectrum(es, 17, 4);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("empirical spectral density matches the semicircle (chi^2 at 1%)") {
    // Pool 100 draws; bin the bulk and compare to semicircle cell masses.
    // Eigenvalue repulsion only reduces the count fluctuations, so the
    // plain chi^2 threshold is conservative.
    for (RmtKind kind : {RmtKind::goe, RmtKind::gue, RmtKind::gse}) {
        EnsembleSpec es;
        es.kind = kind;
        es.dimension = 256;
        const double beta = kind == RmtKind::goe ? 1 : (kind == RmtKind::gue ? 2 : 4);
        const double radius = std::sqrt(2.0 * beta * es.dimension);
        const int bins = 20;
        const double lo = -0.9, hi = 0.9;  // stay clear of the edge
        std::vector<double> counts(bins, 0.0);
        const int draws = 100;
        double total = 0.0;
        for (int d = 0; d < draws; ++d) {
            auto eigs = sample_spectrum(es, 1000 + d, 0);
            for (double ev : eigs) {
                const double x = ev / radius;
                if (x < lo || x >= hi) continue;
                ++counts[static_cast<std::size_t>((x - lo) / (hi - lo) * bins)];
                ++total;
            }
        }
        auto sc_cdf = [](double x) {
            return 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / M_PI;
        };
        const double mass = sc_cdf(hi) - sc_cdf(lo);
        double chi2 = 0.0;
        for (int b = 0; b < bins; ++b) {
            const double x0 = lo + (hi - lo) * b / bins;
            const double x1 = lo + (hi - lo) * (b + 1) / bins;
            const double expect = total * (sc_cdf(x1) - sc_cdf(x0)) / mass;
            const double diff = counts[static_cast<std::size_t>(b)] - expect;
            chi2 += diff * diff / expect;
        }
        CAPTURE(rmt_kind_name(kind));
        // chi^2_{0.99, 19 dof} = 36.19
        CHECK(chi2 < 36.19);
    }
}

TEST_CASE("unfolding: endpoints, monotonicity, unit bulk spacing") {
    EnsembleSpec es;
    es.kind = RmtKind::gue;
    es.dimension = 512;
    const int n = es.dimension;
    const double radius = std::sqrt(2.0 * 2.0 * n);

    // endpoints of the support map to 0 and N
    std::vector<double> edges{-radius, radius};
    auto mapped = unfold(edges, n, RmtKind::gue);
    CHECK(mapped[0] == 0.0);
    CHECK(mapped[1] == static_cast<double>(n));

    double spacing_sum = 0.0;
    long spacing_cnt = 0;
    for (int d = 0; d < 200; ++d) {
        auto eigs = sample_spectrum(es, 90 + d, 0);
        auto x = unfold(eigs, n, RmtKind::gue);
        CHECK(std::is_sorted(x.begin(), x.end()));
        // bulk: middle half
        for (int i = n / 4; i < 3 * n / 4; ++i)
            spacing_sum += x[static_cast<std::size_t>(i + 1)] -
                           x[static_cast<std::size_t>(i)],
                ++spacing_cnt;
    }
    const double mean_spacing = spacing_sum / static_cast<double>(spacing_cnt);
    CHECK(mean_spacing > 0.98);
    CHECK(mean_spacing < 1.02);
}

TEST_CASE("two-dimensional GOE spacing closed form") {
    // For the conventions here, E[lambda_max - lambda_min] at N=2 equals
    // sqrt(pi) (Rayleigh mean with sigma = sqrt(2)).
    EnsembleSpec es;
    es.kind = RmtKind::goe;
    es.dimension = 2;
    const int draws = 40000;
    double acc = 0.0;
    for (int d = 0; d < draws; ++d) {
        auto eigs = sample_spectrum(es, 123, static_cast<std::uint64_t>(d));
        acc += eigs[1] - eigs[0];
    }
    const double mean = acc / draws;
    // sd of the Rayleigh is sqrt(2 - pi/2) * sqrt(2) ~ 0.93
    const double se = 0.93 / std::sqrt(static_cast<double>(draws));
    CHECK(std::fabs(mean - std::sqrt(M_PI)) < 5.0 * se);
}

TEST_CASE("statistic_variance: determinism and worker independence") {
    EnsembleSpec es;
    es.kind = RmtKind::gue;
    es.dimension = 128;
    es.replicas = 120;
    es.window_width = 12.0;
    TestFunction tf = TestFunction::bump(1.0);
    auto a = statistic_variance(es, tf, 5, 1);
    auto b = statistic_variance(es, tf, 5, 3);
    CHECK(a.variance == b.variance);
    CHECK(a.standard_error == b.standard_error);
    CHECK(a.variance > 0.0);
    CHECK(a.standard_error > 0.0);
}

TEST_CASE("tridiagonal and dense samplers agree statistically (gue)") {
    TestFunction tf = TestFunction::bump(1.0);
    EnsembleSpec tri;
    tri.kind = RmtKind::gue;
    tri.dimension = 128;
    tri.replicas = 300;
    tri.window_width = 16.0;
    EnsembleSpec dense = tri;
    dense.use_dense = true;
    auto a = statistic_variance(tri, tf, 11);
    auto b = statistic_variance(dense, tf, 12);
    const double tol = 4.0 * std::hypot(a.standard_error, b.standard_error);
    CHECK(std::fabs(a.variance - b.variance) < tol);
}

TEST_CASE("ratio law goe ~ 2 gue ~ 4 gse at matched parameters") {
    TestFunction tf = TestFunction::bump(1.0);
    EnsembleSpec es;
    es.dimension = 256;
    es.replicas = 500;
    es.window_width = 16.0;
    es.kind = RmtKind::goe;
    auto goe = statistic_variance(es, tf, 31);
    es.kind = RmtKind::gue;
    auto gue = statistic_variance(es, tf, 32);
    es.kind = RmtKind::gse;
    auto gse = statistic_variance(es, tf, 33);
    CHECK(std::fabs(goe.variance - 2.0 * gue.variance) <
          3.0 * std::hypot(goe.standard_error, 2.0 * gue.standard_error));
    CHECK(std::fabs(gue.variance - 2.0 * gse.variance) <
          3.0 * std::hypot(gue.standard_error, 2.0 * gse.standard_error));
}

TEST_CASE("window-width independence within MC error (gue)") {
    TestFunction tf = TestFunction::bump(1.0);
    EnsembleSpec es;
    es.kind = RmtKind::gue;
    es.dimension = 256;
    es.replicas = 400;
    es.window_width = 12.0;
    auto a = statistic_variance(es, tf, 21);
    es.window_width = 24.0;
    auto b = statistic_variance(es, tf, 22);
    const double tol = 3.0 * std::hypot(a.standard_error, b.standard_error);
    CHECK(std::fabs(a.variance - b.variance) < tol);
}
