#pragma once

#include <cstdint>
#include <vector>

#include "hypspec/kernels.hpp"
#include "hypspec/test_function.hpp"

namespace hypspec {

/// A Monte-Carlo ensemble experiment for the smoothed linear statistic in
/// unfolded coordinates.
struct EnsembleSpec {
    RmtKind kind = RmtKind::gue;
    int dimension = 512;        // N >= 64
    int replicas = 2000;        // >= 100 for variance estimates
    double window_center = 0.0; // semicircle coordinate in (-1, 1)
    double window_width = 32.0; // W >= 8 mean spacings, W <= N/8 (bulk)
    bool use_dense = false;     // dense samplers kept as a cross-check
};

void validate_ensemble(const EnsembleSpec& spec);  // throws ConfigError

/// Eigenvalues of one draw, ascending. Tridiagonal beta-ensemble samplers by
/// default (O(N^2) per draw); dense GOE/GUE/GSE behind `use_dense`. For GSE
/// each Kramers doublet is emitted once (the dense path deduplicates).
/// Deterministic in (seed, stream).
std::vector<double> sample_spectrum(const EnsembleSpec& spec, std::uint64_t seed,
                                    std::uint64_t stream = 0);

/// Dense GSE draw before doublet deduplication (2N values); test hook for
/// the Kramers degeneracy.
std::vector<double> sample_gse_dense_raw(int dimension, std::uint64_t seed,
                                         std::uint64_t stream = 0);

/// Unfolds eigenvalues with the semicircle CDF: x_i = N * F_sc(lambda_i / R)
/// with R the ensemble support radius; unit mean spacing in the bulk.
std::vector<double> unfold(const std::vector<double>& eigs, int dimension,
                           RmtKind kind);

struct VarianceEstimate {
    double variance = 0.0;
    double standard_error = 0.0;
    double mean = 0.0;
    int replicas = 0;
};

/// MC variance over replicas of S = sum_i f((x_i - x0)/W) with x0 the
/// unfolded window center. Replica-parallel with per-replica RNG streams and
/// a reduction in replica order (worker-count independent).
VarianceEstimate statistic_variance(const EnsembleSpec& spec, const TestFunction& tf,
                                    std::uint64_t seed, int workers = 0);

} // namespace hypspec
