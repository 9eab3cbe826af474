#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "hypspec/flux.hpp"
#include "hypspec/kernels.hpp"
#include "hypspec/spectrum.hpp"
#include "hypspec/test_function.hpp"

namespace hypspec {

/// Which trace formula drives the experiment, and whether the counting
/// function is halved (Kramers degeneracy: dirac with q = 2 only).
struct OperatorKind {
    SpectralKind kind = SpectralKind::laplace;
    bool halve_counting = false;
};

/// Validates the (operator, q) combination: dirac requires q even or
/// infinity (the character must send -1 to -1). Sets halve_counting for
/// dirac q=2. Throws InvalidFluxSpec.
OperatorKind make_operator(SpectralKind kind, const FluxQ& q);

struct StatReport {
    std::complex<double> exact_mean;
    double exact_variance = 0.0;
    std::complex<double> mc_mean;
    double mc_mean_se = 0.0;
    double mc_variance = 0.0;
    double mc_variance_se = 0.0;
    double reference_variance = 0.0;  // rmt density + |I_{f,q}|^2
    double rmt_reference = 0.0;
    std::string rmt_reference_kind;
    double ifq_value = 0.0;
    double cutoff_NL = 0.0;           // A*L
    std::int64_t sample_count = 0;
    std::uint64_t seed = 0;
    std::string q_label;
    SpectralKind op_kind = SpectralKind::laplace;
    bool halved = false;
    bool degenerate = false;          // q = 1: a single atom, variance 0
    WindowParams window;
    double support_radius = 0.0;
};

/// The oscillating part of the smoothed counting function evaluated through
/// the geometric side of the trace formula:
///   N^osc(theta) = sum_{n>=1} sum_gamma [sigma^n] ell hhat(n ell)
///                  e(theta.[gamma] n) / (2 sinh(n ell / 2)),
/// halved for dirac q=2. Requires spec.L_max >= A*L (IncompleteSpectrum).
std::complex<double> geometric_side(const LengthSpectrum& spec,
                                    const FluxVector& theta,
                                    const TestFunction& tf, const WindowParams& w,
                                    const OperatorKind& op);

/// Trace-formula prediction for the full smoothed count sum_j h_{L,tau}(r_j):
/// Weyl term plus the real part of the geometric side (both halved when
/// applicable).
double counting_estimate(const LengthSpectrum& spec, const FluxVector& theta,
                         const TestFunction& tf, const WindowParams& w,
                         const OperatorKind& op, int genus);

/// Exact nu_q-average of geometric_side over theta (character orthogonality:
/// only terms with n.[gamma] = 0 mod q survive; exact zero-vector condition
/// for q = infinity).
std::complex<double> exact_theta_mean(const LengthSpectrum& spec, const FluxQ& q,
                                      const TestFunction& tf, const WindowParams& w,
                                      const OperatorKind& op);

/// Exact nu_q-variance E|Z|^2 - |EZ|^2 via the pairing condition
/// n1.[gamma_1] = n2.[gamma_2] mod q; computed by residue-class grouping.
double exact_theta_variance(const LengthSpectrum& spec, const FluxQ& q,
                            const TestFunction& tf, const WindowParams& w,
                            const OperatorKind& op);

/// Monte-Carlo flux experiment: `samples` draws of theta ~ nu_q with one RNG
/// stream per draw (worker-count independent), exact moments, and the
/// asymptotic reference values.
StatReport mc_flux_experiment(const LengthSpectrum& spec, const FluxSpec& flux,
                              const TestFunction& tf, const WindowParams& w,
                              const OperatorKind& op, std::int64_t samples,
                              std::uint64_t seed, int workers = 0);

/// The RMT density matching (op, q) in the paper's theorems.
RmtKind reference_kind(SpectralKind kind, const FluxQ& q);

namespace detail {

/// One geometric-side term: real coefficient and its homology multiple.
struct GeomTerm {
    double coeff;        // [sigma^n] ell hhat(n ell) / (2 sinh(n ell/2)), halved if needed
    HomologyVector vec;  // n * [gamma]
};

/// Terms mirror power_extend(spec, A*L) one-to-one.
std::vector<GeomTerm> geometric_terms(const LengthSpectrum& spec,
                                      const TestFunction& tf, const WindowParams& w,
                                      const OperatorKind& op);

} // namespace detail

} // namespace hypspec
