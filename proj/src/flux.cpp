#include "hypspec/flux.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "hypspec/errors.hpp"

namespace hypspec {

FluxQ FluxQ::finite(std::int64_t q) {
    if (q < 1) throw InvalidFluxSpec("q must be >= 1");
    FluxQ f;
    f.q_ = q;
    return f;
}

FluxQ FluxQ::parse(const std::string& text) {
    if (text == "inf" || text == "INF" || text == "infinity") return infinity();
    char* end = nullptr;
    long v = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0' || v < 1)
        throw InvalidFluxSpec("q must be a positive integer or 'inf', got: " + text);
    return finite(v);
}

std::int64_t FluxQ::value() const {
    if (!q_) throw InvalidFluxSpec("finite q required, got q = infinity");
    return *q_;
}

std::string FluxQ::to_string() const {
    return is_infinite() ? "inf" : std::to_string(*q_);
}

std::string FluxVector::to_string(const FluxQ& q) const {
    std::string out = "(";
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (i) out += ", ";
        if (!q.is_infinite() && i < numerators.size())
            out += std::to_string(numerators[i]) + "/" + q.to_string();
        else
            out += std::to_string(theta[i]);
    }
    return out + ")";
}

FluxVector sample_flux(const FluxSpec& spec, PhiloxStream& rng) {
    const std::size_t dim = static_cast<std::size_t>(2 * spec.genus);
    FluxVector v;
    v.theta.resize(dim);
    if (spec.q.is_infinite()) {
        for (auto& t : v.theta) t = rng.next_double();
    } else {
        const std::int64_t q = spec.q.value();
        v.numerators.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const auto m = static_cast<std::int64_t>(
                rng.next_below(static_cast<std::uint64_t>(q)));
            v.numerators[i] = m;
            v.theta[i] = static_cast<double>(m) / static_cast<double>(q);
        }
    }
    return v;
}

std::complex<double> char_eval(const FluxVector& theta, const HomologyVector& h,
                               std::int64_t n) {
    double dot = 0.0;
    const std::size_t dim = std::min(theta.theta.size(), h.size());
    for (std::size_t i = 0; i < dim; ++i)
        dot += theta.theta[i] * static_cast<double>(h[i]);
    const double arg = 2.0 * M_PI * static_cast<double>(n) * dot;
    return {std::cos(arg), std::sin(arg)};
}

std::int64_t q_star(const HomologyVector& h, std::int64_t q) {
    if (q < 1) throw InvalidFluxSpec("q_star: q must be a positive integer");
    std::int64_t g = 0;  // gcd over entries; stays 0 for the zero vector
    for (auto v : h) g = std::gcd(g, std::llabs(v));
    return q / std::gcd(g, q);  // gcd(0, q) = q
}

KernelSet ker_q(const HomologyVector& h, const FluxQ& q) {
    KernelSet out;
    if (q.is_infinite()) {
        if (homology_is_zero(h))
            out.all_integers = true;
        else
            out.residues = {0};
        return out;
    }
    const std::int64_t qs = q_star(h, q.value());
    for (std::int64_t n = 0; n < q.value(); n += qs) out.residues.push_back(n);
    return out;
}

bool pairing_ok(std::int64_t n1, const HomologyVector& h1, std::int64_t n2,
                const HomologyVector& h2, const FluxQ& q) {
    const std::size_t dim = h1.size();
    if (h2.size() != dim) return false;
    if (q.is_infinite()) {
        for (std::size_t i = 0; i < dim; ++i)
            if (n1 * h1[i] != n2 * h2[i]) return false;
        return true;
    }
    const std::int64_t qv = q.value();
    for (std::size_t i = 0; i < dim; ++i) {
        std::int64_t r = (n1 * h1[i] - n2 * h2[i]) % qv;
        if (r != 0) return false;
    }
    return true;
}

bool is_real_character(const FluxVector& theta) {
    for (double t : theta.theta) {
        const bool near0 = std::fabs(t) <= 1e-12 || std::fabs(t - 1.0) <= 1e-12;
        const bool near_half = std::fabs(t - 0.5) <= 1e-12;
        if (!near0 && !near_half) return false;
    }
    return true;
}

} // namespace hypspec
