#pragma once

#include "hypspec/flux.hpp"
#include "hypspec/test_function.hpp"

namespace hypspec {

enum class SpectralKind { laplace, dirac };
enum class RmtKind { goe, gue, gse };

RmtKind rmt_kind_parse(const std::string& text);
std::string rmt_kind_name(RmtKind k);

/// Smooth term of the trace formula:
///   (genus-1) * int h_{L,tau}(r) * r * tanh(pi r) dr      (laplace)
///   (genus-1) * int h_{L,tau}(r) * r * coth(pi r) dr      (dirac)
/// The dirac integrand is finite at r = 0 (limit 1/pi times h(0)).
double weyl_term(const TestFunction& tf, const WindowParams& w, int genus,
                 SpectralKind kind);

/// The variance correction integral:
///   I_{f,q}(L,tau) = (4/L) int_0^inf sum_n fhat(nqx/L)
///                     sinh^2(x/2)/sinh(nqx/2) cos(nq tau x) dx,
/// and identically 0 for q = infinity. Evaluated through the exact
/// regrouping y = nx, which folds the n-sum into a smooth kernel and leaves
/// one finite oscillatory integral (no term truncation); the acceptance
/// suite checks it against the literal term-sum at halved tolerance.
double i_fq(const TestFunction& tf, const WindowParams& w, const FluxQ& q);

/// Limiting number-variance densities:
///   GOE: int 2|x| |fhat|^2 dx,  GUE: int |x| |fhat|^2 dx,
///   GSE: int |x|/2 |fhat|^2 dx.
/// Computed on a shared fixed panel partition so the exact factor-of-two
/// ratios survive to the last bit.
double rmt_density(const TestFunction& tf, RmtKind kind);

} // namespace hypspec
