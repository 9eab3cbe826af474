#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypspec/homology.hpp"
#include "hypspec/philox.hpp"

namespace hypspec {

/// The measure index q in N union {infinity}. Infinity is a distinguished
/// state, never a sentinel integer, so no arithmetic can touch it.
class FluxQ {
  public:
    static FluxQ infinity() { return FluxQ(); }
    static FluxQ finite(std::int64_t q);
    static FluxQ parse(const std::string& text);  // "inf" or a positive int

    bool is_infinite() const { return !q_.has_value(); }
    std::int64_t value() const;  // throws InvalidFluxSpec when infinite
    bool is_even() const { return !is_infinite() && value() % 2 == 0; }
    std::string to_string() const;

    friend bool operator==(const FluxQ& x, const FluxQ& y) { return x.q_ == y.q_; }

  private:
    FluxQ() = default;
    std::optional<std::int64_t> q_;
};

struct FluxSpec {
    FluxQ q = FluxQ::infinity();
    int genus = 2;
};

/// A point theta of the torus T^{2g}; entries in [0,1), and m/q atoms when
/// drawn from a finite-q measure.
struct FluxVector {
    std::vector<double> theta;
    /// Exact atom numerators when the vector was drawn with finite q.
    std::vector<std::int64_t> numerators;  // empty for q = infinity

    std::string to_string(const FluxQ& q) const;
};

/// One draw from nu_q^{2g}: i.i.d. uniform entries (q = infinity) or i.i.d.
/// uniform atoms {0, 1/q, ..., (q-1)/q}. Deterministic given the stream.
FluxVector sample_flux(const FluxSpec& spec, PhiloxStream& rng);

/// e(n * theta . h) = exp(2 pi i n sum theta_k h_k).
std::complex<double> char_eval(const FluxVector& theta, const HomologyVector& h,
                               std::int64_t n);

/// q / gcd(gcd|h|, q); gcd of the zero vector is 0, so q*(0, q) = 1.
std::int64_t q_star(const HomologyVector& h, std::int64_t q);

/// ker_q[gamma] = { n in Z_q : n h = 0 mod q }; for q = infinity the kernel
/// is {0} when h != 0 and all of Z otherwise (flagged, not materialised).
struct KernelSet {
    bool all_integers = false;
    std::vector<std::int64_t> residues;  // sorted; meaningful when !all_integers
};
KernelSet ker_q(const HomologyVector& h, const FluxQ& q);

/// Pairing condition of the variance kernel: n1 h1 = n2 h2 entrywise mod q
/// (exact equality when q = infinity).
bool pairing_ok(std::int64_t n1, const HomologyVector& h1, std::int64_t n2,
                const HomologyVector& h2, const FluxQ& q);

/// True iff every entry of theta lies in {0, 1/2} within 1e-12, i.e. the
/// character is real-valued.
bool is_real_character(const FluxVector& theta);

} // namespace hypspec
