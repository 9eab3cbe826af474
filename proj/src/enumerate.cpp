#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

#include "hypspec/errors.hpp"
#include "hypspec/spectrum.hpp"

namespace hypspec {

namespace {

// Geometry of the search. Words are grown letter by letter, Dehn-reduced by
// construction (no forbidden window is ever created). A word w is pruned
// when the base-point displacement d(i, w.i) exceeds
//     D_cut = L_max + 2*R + prefix_slack,
// where R is the circumradius of a fundamental domain: every conjugacy
// class of translation length ell has a representative whose axis passes
// within R of the base point and whose displacement is therefore below
// ell + 2R; the slack covers the wander of the word path around the
// geodesic it tracks. The slack default is validated empirically by the
// brute-force completeness oracle and by slack-doubling tests.
//
// A visited word is harvested as a class candidate when
//   (a) 2 < |tr| <= 2*cosh(L_max/2), and
//   (b) sinh^2(d/2) <= cosh^2(R + margin) * sinh^2(ell/2),
// i.e. its axis passes within R + margin of the base point. (b) is exact in
// the matrix data: sinh^2(d/2) = (||M||_F^2/2 - 1)/2 and
// sinh^2(ell/2) = tr^2/4 - 1.
struct SearchParams {
    double cosh_Dcut;
    double tr_cut;        // 2*cosh(L_max/2)
    double harvest_c2;    // cosh^2(R + margin)
    int horizon;
};

struct Harvest {
    std::map<Word, char> seen_nf;  // ordered: deterministic merge
};

// circumradius of the fundamental polygon; for the Bolza octagon this is
// arccosh(3 + 2*sqrt(2)) ~ 2.448. For loaded generator sets the same value
// is used as a generic tube radius; the completeness oracle guards it.
double fundamental_circumradius() { return std::acosh(3.0 + 2.0 * std::sqrt(2.0)); }

class Enumerator {
  public:
    Enumerator(const GeneratorSet& gens, double L_max, const EnumOptions& opts)
        : gens_(gens), tab_(detail::tables_for(gens)) {
        const double R = fundamental_circumradius();
        params_.cosh_Dcut = std::cosh(L_max + 2.0 * R + opts.prefix_slack);
        params_.tr_cut = 2.0 * std::cosh(L_max / 2.0);
        const double cr = std::cosh(R + 0.10);
        params_.harvest_c2 = cr * cr;
        params_.horizon =
            opts.letter_horizon > 0 ? opts.letter_horizon
                                    : static_cast<int>(std::ceil(3.0 * L_max));
        lmats_.resize(static_cast<std::size_t>(gens.alphabet_size()));
        for (int c = 0; c < gens.alphabet_size(); ++c) {
            const Mat2& g = gens.matrices[static_cast<std::size_t>(c >> 1)];
            lmats_[static_cast<std::size_t>(c)] = (c & 1) ? g.inverse_sl2() : g;
        }
    }

    // Seed words of depth exactly `depth` (plus shorter harvested on the way),
    // used to split the search across workers deterministically.
    void expand_roots(int depth, std::vector<std::pair<Word, Mat2>>& roots,
                      Harvest& local) {
        Word w;
        Mat2 m;
        expand_roots_rec(w, m, depth, roots, local);
    }

    void dfs(const Word& root, const Mat2& m, Harvest& local) {
        Word w = root;
        dfs_rec(w, m, local);
    }

    void harvest_if_candidate(const Word& w, const Mat2& m, Harvest& local) {
        const double tr = m.trace();
        const double at = std::fabs(tr);
        if (at <= 2.0 || at > params_.tr_cut) return;
        const double sinh2_half_d = (m.frobenius_sq() / 2.0 - 1.0) / 2.0;
        const double sinh2_half_ell = tr * tr / 4.0 - 1.0;
        if (sinh2_half_d > params_.harvest_c2 * sinh2_half_ell) return;
        Word nf = cyclic_normal_form(w, gens_);
        local.seen_nf.emplace(std::move(nf), 1);
    }

  private:
    void expand_roots_rec(Word& w, const Mat2& m, int depth,
                          std::vector<std::pair<Word, Mat2>>& roots, Harvest& local) {
        if (static_cast<int>(w.size()) == depth) {
            roots.emplace_back(w, m);
            return;
        }
        for (Letter c = 0; c < gens_.alphabet_size(); ++c) {
            if (!extend_ok(w, c)) continue;
            Mat2 m2 = m * lmats_[c];
            if (m2.frobenius_sq() / 2.0 > params_.cosh_Dcut) continue;
            w.push_back(c);
            harvest_if_candidate(w, m2, local);
            expand_roots_rec(w, m2, depth, roots, local);
            w.pop_back();
        }
    }

    void dfs_rec(Word& w, const Mat2& m, Harvest& local) {
        if (static_cast<int>(w.size()) >= params_.horizon) return;
        for (Letter c = 0; c < gens_.alphabet_size(); ++c) {
            if (!extend_ok(w, c)) continue;
            Mat2 m2 = m * lmats_[c];
            if (m2.frobenius_sq() / 2.0 > params_.cosh_Dcut) continue;
            w.push_back(c);
            harvest_if_candidate(w, m2, local);
            dfs_rec(w, m2, local);
            w.pop_back();
        }
    }

    bool extend_ok(const Word& w, Letter c) const {
        const std::size_t n = w.size();
        if (n > 0 && c == letter_inverse(w[n - 1])) return false;
        const int half = tab_.half_len;
        if (static_cast<int>(n) >= half) {
            Letter win[16];
            for (int k = 0; k < half; ++k)
                win[k] = w[n - static_cast<std::size_t>(half) + static_cast<std::size_t>(k)];
            win[half] = c;
            if (tab_.forbidden_window(win)) return false;
        }
        return true;
    }

    const GeneratorSet& gens_;
    const detail::RelatorTables& tab_;
    SearchParams params_;
    std::vector<Mat2> lmats_;
};

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

LengthSpectrum enumerate_classes(const GeneratorSet& gens, double L_max,
                                 const EnumOptions& opts) {
    if (L_max > 30.0)
        throw CutoffTooLarge("enumerate_classes: L_max > 30");
    require_valid_generators(gens);

    Enumerator en(gens, L_max, opts);
    const int workers = resolve_workers(opts.workers);

    // Split the word tree at a fixed depth; shallow harvests happen during
    // root expansion so every visited word is inspected exactly once.
    Harvest root_harvest;
    std::vector<std::pair<Word, Mat2>> roots;
    en.expand_roots(2, roots, root_harvest);

    std::vector<Harvest> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) {
        threads.emplace_back([&, t]() {
            for (std::size_t i = static_cast<std::size_t>(t); i < roots.size();
                 i += static_cast<std::size_t>(workers))
                en.dfs(roots[i].first, roots[i].second,
                       parts[static_cast<std::size_t>(t)]);
        });
    }
    for (auto& th : threads) th.join();

    // Deterministic merge: the class set is a set union keyed by the exact
    // normal form; all per-class data is recomputed from the normal form, so
    // discovery order cannot leak into the output.
    std::map<Word, char> all(std::move(root_harvest.seen_nf));
    for (auto& p : parts) all.insert(p.seen_nf.begin(), p.seen_nf.end());

    LengthSpectrum spec;
    spec.gens_label = gens.label;
    spec.L_max = L_max;
    for (const auto& [nf, tag] : all) {
        (void)tag;
        Mat2 m = word_to_matrix(nf, gens);
        double ell = trace_to_length(m.trace());
        if (ell > L_max + 1e-12) continue;  // trace cutoff edge, fp-tolerant
        if (!is_primitive(nf, gens)) continue;
        GeodesicClass cls;
        cls.normal_form = nf;
        cls.trace = m.trace();
        cls.length = ell;
        cls.homology = abelianize(nf, gens.genus);
        cls.sigma = m.trace() > 0 ? +1 : -1;
        spec.classes.push_back(std::move(cls));
    }
    std::sort(spec.classes.begin(), spec.classes.end(),
              [](const GeodesicClass& x, const GeodesicClass& y) {
                  if (x.length != y.length) return x.length < y.length;
                  return x.normal_form < y.normal_form;
              });
    return spec;
}

std::vector<PowerEntry> power_extend(const LengthSpectrum& spec, double NL_max) {
    std::vector<PowerEntry> out;
    for (std::size_t i = 0; i < spec.classes.size(); ++i) {
        const double ell = spec.classes[i].length;
        for (int n = 1; n * ell <= NL_max; ++n)
            out.push_back(PowerEntry{i, n, n * ell});
    }
    return out;
}

void check_spectrum_invariants(const LengthSpectrum& spec, const GeneratorSet& gens) {
    const double tol = 1e-9;
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < spec.classes.size(); ++i) {
        const GeodesicClass& c = spec.classes[i];
        if (c.length > spec.L_max + tol)
            throw InvariantViolation("class length exceeds L_max");
        if (std::fabs(c.length - trace_to_length(c.trace)) > tol)
            throw InvariantViolation("length/trace identity violated");
        if (c.sigma != (c.trace > 0 ? +1 : -1))
            throw InvariantViolation("sigma does not match trace sign");
        if (static_cast<int>(c.homology.size()) != 2 * gens.genus)
            throw InvariantViolation("homology vector has wrong dimension");
        if (!index.emplace(c.normal_form, i).second)
            throw InvariantViolation("duplicate normal form");
        if (i > 0) {
            const GeodesicClass& p = spec.classes[i - 1];
            if (c.length < p.length ||
                (c.length == p.length && c.normal_form < p.normal_form))
                throw InvariantViolation("classes not sorted by (length, word)");
        }
    }
    for (const GeodesicClass& c : spec.classes) {
        Word inv_nf = cyclic_normal_form(word_inverse(c.normal_form), gens);
        auto it = index.find(inv_nf);
        if (it == index.end())
            throw InvariantViolation("orientation reversal closure fails");
        const GeodesicClass& r = spec.classes[it->second];
        if (std::fabs(r.length - c.length) > tol || r.sigma != c.sigma)
            throw InvariantViolation("reversed class disagrees in length or sigma");
        HomologyVector neg = homology_negate(c.homology);
        if (r.homology != neg)
            throw InvariantViolation("reversed class homology is not negated");
        if (!is_primitive(c.normal_form, gens))
            throw InvariantViolation("non-primitive class in spectrum");
    }
    // Root scan: a power class delta^m inside the cutoff would have its
    // primitive root delta in the spectrum too (ell/m < L_max); catching it
    // here guards primitivity end to end, independent of is_primitive.
    for (const GeodesicClass& c : spec.classes) {
        for (int m = 2; c.length / m >= spec.classes.front().length - tol; ++m) {
            const double root_len = c.length / m;
            auto lo = std::lower_bound(
                spec.classes.begin(), spec.classes.end(), root_len - 1e-7,
                [](const GeodesicClass& x, double v) { return x.length < v; });
            for (; lo != spec.classes.end() && lo->length <= root_len + 1e-7; ++lo) {
                Word pw = cyclic_normal_form(word_power(lo->normal_form, m), gens);
                if (pw == c.normal_form)
                    throw InvariantViolation("spectrum contains a proper power");
            }
        }
    }
}

} // namespace hypspec
