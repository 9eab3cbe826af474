#include "hypspec/trace_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

#include "hypspec/errors.hpp"

namespace hypspec {

OperatorKind make_operator(SpectralKind kind, const FluxQ& q) {
    OperatorKind op;
    op.kind = kind;
    if (kind == SpectralKind::dirac) {
        if (!q.is_infinite() && q.value() % 2 != 0)
            throw InvalidFluxSpec(
                "dirac experiments require even q or q = infinity (chi(-1) = -1)");
        op.halve_counting = !q.is_infinite() && q.value() == 2;
    }
    return op;
}

RmtKind reference_kind(SpectralKind kind, const FluxQ& q) {
    if (kind == SpectralKind::laplace) {
        if (!q.is_infinite() && q.value() <= 2) return RmtKind::goe;
        return RmtKind::gue;
    }
    if (!q.is_infinite() && q.value() == 2) return RmtKind::gse;
    return RmtKind::gue;
}

namespace detail {

std::vector<GeomTerm> geometric_terms(const LengthSpectrum& spec,
                                      const TestFunction& tf, const WindowParams& w,
                                      const OperatorKind& op) {
    const double NL = tf.support_radius() * w.L;
    if (spec.L_max < NL - 1e-9)
        throw IncompleteSpectrum("spectrum L_max " + std::to_string(spec.L_max) +
                                 " < A*L = " + std::to_string(NL));
    const double scale = op.halve_counting ? 0.5 : 1.0;
    std::vector<GeomTerm> terms;
    for (const PowerEntry& pe : power_extend(spec, NL)) {
        const GeodesicClass& c = spec.classes[pe.class_index];
        const double nl = pe.total_length;
        double coeff = c.length * hhat_window(tf, w, nl) / (2.0 * std::sinh(nl / 2.0));
        if (op.kind == SpectralKind::dirac && c.sigma < 0 && (pe.n % 2) != 0)
            coeff = -coeff;
        coeff *= scale;
        GeomTerm t;
        t.coeff = coeff;
        t.vec.resize(c.homology.size());
        for (std::size_t i = 0; i < c.homology.size(); ++i)
            t.vec[i] = pe.n * c.homology[i];
        terms.push_back(std::move(t));
    }
    return terms;
}

namespace {

// Group coefficients by the character-relevant residue of n*[gamma].
std::map<HomologyVector, double> group_terms(const std::vector<GeomTerm>& terms,
                                             const FluxQ& q) {
    std::map<HomologyVector, double> groups;
    for (const GeomTerm& t : terms) {
        HomologyVector key = t.vec;
        if (!q.is_infinite()) {
            const std::int64_t qv = q.value();
            for (auto& v : key) {
                v %= qv;
                if (v < 0) v += qv;
            }
        }
        groups[key] += t.coeff;
    }
    return groups;
}

} // namespace

} // namespace detail

std::complex<double> geometric_side(const LengthSpectrum& spec,
                                    const FluxVector& theta,
                                    const TestFunction& tf, const WindowParams& w,
                                    const OperatorKind& op) {
    std::complex<double> z = 0.0;
    for (const auto& t : detail::geometric_terms(spec, tf, w, op)) {
        double dot = 0.0;
        for (std::size_t i = 0; i < t.vec.size(); ++i)
            dot += theta.theta[i] * static_cast<double>(t.vec[i]);
        const double arg = 2.0 * M_PI * dot;
        z += t.coeff * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

double counting_estimate(const LengthSpectrum& spec, const FluxVector& theta,
                         const TestFunction& tf, const WindowParams& w,
                         const OperatorKind& op, int genus) {
    const double scale = op.halve_counting ? 0.5 : 1.0;
    const double smooth = scale * weyl_term(tf, w, genus, op.kind);
    return smooth + geometric_side(spec, theta, tf, w, op).real();
}

std::complex<double> exact_theta_mean(const LengthSpectrum& spec, const FluxQ& q,
                                      const TestFunction& tf, const WindowParams& w,
                                      const OperatorKind& op) {
    double mean = 0.0;
    for (const auto& t : detail::geometric_terms(spec, tf, w, op)) {
        bool survives;
        if (q.is_infinite()) {
            survives = homology_is_zero(t.vec);
        } else {
            survives = true;
            for (auto v : t.vec)
                if (v % q.value() != 0) { survives = false; break; }
        }
        if (survives) mean += t.coeff;
    }
    return {mean, 0.0};
}

double exact_theta_variance(const LengthSpectrum& spec, const FluxQ& q,
                            const TestFunction& tf, const WindowParams& w,
                            const OperatorKind& op) {
    const auto terms = detail::geometric_terms(spec, tf, w, op);
    const auto groups = detail::group_terms(terms, q);
    // E|Z|^2 = sum over residue classes r of S_r^2; the mean is S_0, so the
    // variance is the sum over r != 0. Nonnegative by construction.
    double var = 0.0;
    for (const auto& [key, s] : groups) {
        bool zero = homology_is_zero(key);
        if (!zero) var += s * s;
    }
    return var;
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

StatReport mc_flux_experiment(const LengthSpectrum& spec, const FluxSpec& flux,
                              const TestFunction& tf, const WindowParams& w,
                              const OperatorKind& op, std::int64_t samples,
                              std::uint64_t seed, int workers) {
    if (samples < 2)
        throw InvalidFluxSpec("mc_flux_experiment: samples must be >= 2");
    if (op.kind == SpectralKind::dirac && !flux.q.is_infinite() &&
        flux.q.value() % 2 != 0)
        throw InvalidFluxSpec("dirac experiments require even q or infinity");

    const auto terms = detail::geometric_terms(spec, tf, w, op);
    const auto groups = detail::group_terms(terms, flux.q);
    std::vector<std::pair<HomologyVector, double>> glist(groups.begin(), groups.end());

    // Character values factor over coordinates: e(theta.v) is a product of
    // powers of the 2g phases e(theta_k). Tabulating those powers per draw
    // replaces one sincos per group by four complex multiplies.
    const std::size_t dim = static_cast<std::size_t>(2 * flux.genus);
    if (!glist.empty() && glist.front().first.size() != dim)
        throw InvalidFluxSpec("flux genus does not match the spectrum's genus");
    std::vector<std::int64_t> vmin(dim, 0), vmax(dim, 0);
    for (const auto& [vec, coeff] : glist) {
        (void)coeff;
        for (std::size_t i = 0; i < dim; ++i) {
            vmin[i] = std::min(vmin[i], vec[i]);
            vmax[i] = std::max(vmax[i], vec[i]);
        }
    }

    // One RNG stream per draw: the draw set is independent of the worker
    // layout, and the reduction below runs in draw order.
    std::vector<std::complex<double>> zs(static_cast<std::size_t>(samples));
    const int nw = resolve_workers(workers);
    std::vector<std::thread> threads;
    for (int t = 0; t < nw; ++t) {
        threads.emplace_back([&, t]() {
            std::vector<std::vector<std::complex<double>>> pow_table(dim);
            std::vector<std::size_t> zero_off(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                pow_table[i].resize(static_cast<std::size_t>(vmax[i] - vmin[i]) + 1);
                zero_off[i] = static_cast<std::size_t>(-vmin[i]);
            }
            for (std::int64_t k = t; k < samples; k += nw) {
                PhiloxStream rng(seed, static_cast<std::uint64_t>(k));
                FluxVector theta = sample_flux(flux, rng);
                for (std::size_t i = 0; i < dim; ++i) {
                    const double arg = 2.0 * M_PI * theta.theta[i];
                    const std::complex<double> zp(std::cos(arg), std::sin(arg));
                    const std::complex<double> zm = std::conj(zp);
                    auto& tab = pow_table[i];
                    const std::size_t z0 = zero_off[i];
                    tab[z0] = 1.0;
                    for (std::size_t m = z0 + 1; m < tab.size(); ++m)
                        tab[m] = tab[m - 1] * zp;
                    for (std::size_t m = z0; m-- > 0;) tab[m] = tab[m + 1] * zm;
                }
                std::complex<double> z = 0.0;
                for (const auto& [vec, coeff] : glist) {
                    auto idx = [&](std::size_t i) {
                        return static_cast<std::size_t>(
                            static_cast<std::int64_t>(zero_off[i]) + vec[i]);
                    };
                    std::complex<double> chi = pow_table[0][idx(0)];
                    for (std::size_t i = 1; i < dim; ++i) chi *= pow_table[i][idx(i)];
                    z += coeff * chi;
                }
                zs[static_cast<std::size_t>(k)] = z;
            }
        });
    }
    for (auto& th : threads) th.join();

    const bool degenerate = !flux.q.is_infinite() && flux.q.value() == 1;

    std::complex<double> zbar = 0.0;
    if (degenerate) {
        zbar = zs.front();  // a single atom: every draw is identical
    } else {
        for (const auto& z : zs) zbar += z;
        zbar /= static_cast<double>(samples);
    }

    double m2 = 0.0, m4 = 0.0;
    for (const auto& z : zs) {
        const double y = std::norm(z - zbar);
        m2 += y;
        m4 += y * y;
    }
    const double n = static_cast<double>(samples);
    const double var_unbiased = m2 / (n - 1.0);
    m2 /= n;
    m4 /= n;

    StatReport rep;
    rep.exact_mean = exact_theta_mean(spec, flux.q, tf, w, op);
    rep.exact_variance = exact_theta_variance(spec, flux.q, tf, w, op);
    rep.mc_mean = zbar;
    rep.mc_variance = degenerate ? 0.0 : var_unbiased;
    rep.degenerate = degenerate;
    rep.mc_mean_se = rep.degenerate ? 0.0 : std::sqrt(var_unbiased / n);
    rep.mc_variance_se =
        rep.degenerate ? 0.0 : std::sqrt(std::max(0.0, m4 - m2 * m2) / n);
    const RmtKind rk = reference_kind(op.kind, flux.q);
    rep.rmt_reference = rmt_density(tf, rk);
    rep.rmt_reference_kind = rmt_kind_name(rk);
    rep.ifq_value = i_fq(tf, w, flux.q);
    rep.reference_variance = rep.rmt_reference + rep.ifq_value * rep.ifq_value;
    rep.cutoff_NL = tf.support_radius() * w.L;
    rep.sample_count = samples;
    rep.seed = seed;
    rep.q_label = flux.q.to_string();
    rep.op_kind = op.kind;
    rep.halved = op.halve_counting;
    rep.window = w;
    rep.support_radius = tf.support_radius();
    return rep;
}

} // namespace hypspec
