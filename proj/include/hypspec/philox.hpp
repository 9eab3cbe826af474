#pragma once

#include <cmath>
#include <cstdint>

namespace hypspec {

/// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
/// numbers: as easy as 1, 2, 3"). A stream is (seed, stream index); blocks
/// are produced by bumping a 64-bit counter, so any number of streams can be
/// consumed independently and reproducibly across thread layouts.
class PhiloxStream {
  public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (idx_ == 4) {
            generate_block();
            idx_ = 0;
        }
        return out_[idx_++];
    }

    std::uint64_t next_u64() {
        std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t v = next_u64();
            if (v < limit) return v % n;
        }
    }

    /// Standard normal via Box-Muller (no rejection; pairs cached).
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        while (u1 == 0.0) u1 = next_double();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double ang = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(ang);
        have_spare_ = true;
        return r * std::cos(ang);
    }

    /// chi_k distributed value (k >= 1): sqrt of Gamma(k/2, 2).
    double next_chi(int k) {
        if (k == 1) return std::fabs(next_normal());
        return std::sqrt(2.0 * next_gamma(0.5 * k));
    }

  private:
    // Marsaglia-Tsang for alpha >= 1 (callers guarantee alpha >= 1 here).
    double next_gamma(double alpha) {
        const double d = alpha - 1.0 / 3.0;
        const double c = 1.0 / (3.0 * std::sqrt(d));
        for (;;) {
            double x = next_normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            const double u = next_double();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 &&
                std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return d * v;
        }
    }

    static void round(std::uint32_t& c0, std::uint32_t& c1, std::uint32_t& c2,
                      std::uint32_t& c3, std::uint32_t k0, std::uint32_t k1) {
        const std::uint64_t p0 = 0xD2511F53ULL * c0;
        const std::uint64_t p1 = 0xCD9E8D57ULL * c2;
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        const std::uint32_t n0 = hi1 ^ c1 ^ k0;
        const std::uint32_t n1 = lo1;
        const std::uint32_t n2 = hi0 ^ c3 ^ k1;
        const std::uint32_t n3 = lo0;
        c0 = n0; c1 = n1; c2 = n2; c3 = n3;
    }

    void generate_block() {
        std::uint32_t c0 = static_cast<std::uint32_t>(block_);
        std::uint32_t c1 = static_cast<std::uint32_t>(block_ >> 32);
        std::uint32_t c2 = stream_lo_;
        std::uint32_t c3 = stream_hi_;
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int r = 0; r < 10; ++r) {
            round(c0, c1, c2, c3, k0, k1);
            k0 += 0x9E3779B9u;  // golden-ratio Weyl constants
            k1 += 0xBB67AE85u;
        }
        out_[0] = c0; out_[1] = c1; out_[2] = c2; out_[3] = c3;
        ++block_;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t block_ = 0;
    std::uint32_t out_[4] = {0, 0, 0, 0};
    int idx_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace hypspec
