#include "hypspec/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "hypspec/errors.hpp"

namespace hypspec {

namespace detail {

std::uint64_t RelatorTables::key(const Letter* p, int n) {
    // 6 bits per letter, +1 so a leading a_1 is distinguishable; fits any
    // window up to 10 letters (genus <= 4 uses at most 2g+1 = 9).
    std::uint64_t k = 0;
    for (int i = 0; i < n; ++i) k = (k << 6) | (static_cast<std::uint64_t>(p[i]) + 1);
    return k;
}

RelatorTables::RelatorTables(const GeneratorSet& gens)
    : genus(gens.genus), relator_len(4 * gens.genus), half_len(2 * gens.genus) {
    // the packed window key holds half_len + 1 letters at 6 bits each
    if (half_len + 1 > 10)
        throw InvalidGenerators("relator tables support genus <= 4 only");
    const Word& r = gens.relator;
    if (static_cast<int>(r.size()) != relator_len)
        throw InvalidGenerators("relator must have length 4*genus");

    std::vector<Word> bases = {r, word_inverse(r)};
    for (const Word& base : bases) {
        for (int s = 0; s < relator_len; ++s) {
            Word rot(base.begin() + s, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + s);
            symmetrized.push_back(rot);
        }
    }
    // Dehn's algorithm relies on distinct shifts sharing no long prefix;
    // for the canonical surface relator all pieces are single letters.
    std::set<Word> uniq(symmetrized.begin(), symmetrized.end());
    if (static_cast<int>(uniq.size()) != 8 * genus)
        throw InvalidGenerators("symmetrized relator set is degenerate");

    for (const Word& rot : symmetrized) {
        // subword of length half+1 -> inverse of the length (half-1) rest
        Word rep_long = word_inverse(Word(rot.begin() + half_len + 1, rot.end()));
        long_piece_replacement.emplace(key(rot.data(), half_len + 1), rep_long);
        // exact half -> inverse of the complementary half
        Word rep_half = word_inverse(Word(rot.begin() + half_len, rot.end()));
        half_exchange.emplace(key(rot.data(), half_len), rep_half);
    }
    if (static_cast<int>(long_piece_replacement.size()) != 8 * genus ||
        static_cast<int>(half_exchange.size()) != 8 * genus)
        throw InvalidGenerators("relator windows collide; presentation unsupported");
}

bool RelatorTables::forbidden_window(const Letter* p) const {
    return long_piece_replacement.count(key(p, half_len + 1)) != 0;
}

const RelatorTables& tables_for(const GeneratorSet& gens) {
    // keyed by (genus, relator); generator matrices do not matter here
    static std::mutex mu;
    static std::map<std::pair<int, Word>, RelatorTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(gens.genus, gens.relator);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, RelatorTables(gens)).first;
    return it->second;
}

} // namespace detail

Mat2 word_to_matrix(const Word& w, const GeneratorSet& gens) {
    Mat2 m;
    for (Letter c : w) {
        const Mat2& g = gens.matrices[static_cast<std::size_t>(letter_gen(c))];
        m = m * (letter_is_inverse(c) ? g.inverse_sl2() : g);
    }
    return m;
}

int sigma_sign(const Word& w, const GeneratorSet& gens) {
    double t = word_to_matrix(w, gens).trace();
    if (std::fabs(t) <= 2.0)
        throw NotHyperbolic("sigma_sign: |trace| <= 2");
    return t > 0 ? +1 : -1;
}

Word dehn_reduce(const Word& w_in, const GeneratorSet& gens) {
    const auto& tab = detail::tables_for(gens);
    const int win = tab.half_len + 1;
    Word w = free_reduce(w_in);
    bool changed = true;
    while (changed) {
        changed = false;
        const int n = static_cast<int>(w.size());
        for (int i = 0; i + win <= n; ++i) {
            auto it = tab.long_piece_replacement.find(
                detail::RelatorTables::key(w.data() + i, win));
            if (it == tab.long_piece_replacement.end()) continue;
            Word next(w.begin(), w.begin() + i);
            next.insert(next.end(), it->second.begin(), it->second.end());
            next.insert(next.end(), w.begin() + i + win, w.end());
            w = free_reduce(next);
            changed = true;
            break;
        }
    }
    return w;
}

bool is_dehn_reduced(const Word& w, const GeneratorSet& gens) {
    if (!is_freely_reduced(w)) return false;
    const auto& tab = detail::tables_for(gens);
    const int win = tab.half_len + 1;
    for (int i = 0; i + win <= static_cast<int>(w.size()); ++i)
        if (tab.forbidden_window(w.data() + i)) return false;
    return true;
}

Word cyclic_dehn_reduce(const Word& w_in, const GeneratorSet& gens) {
    const auto& tab = detail::tables_for(gens);
    const int win = tab.half_len + 1;
    Word w = dehn_reduce(w_in, gens);
    for (;;) {
        const int n = static_cast<int>(w.size());
        if (n >= 2 && w.front() == letter_inverse(w.back())) {
            w = dehn_reduce(Word(w.begin() + 1, w.end() - 1), gens);
            continue;
        }
        if (n >= win) {
            // windows crossing the seam: rotate the offending window to the
            // front, then plain Dehn reduction rewrites it
            Word ww = word_concat(w, w);
            bool rotated = false;
            for (int i = 1; i < n && !rotated; ++i) {
                if (i + win <= n) continue;  // covered by dehn_reduce already
                if (tab.forbidden_window(ww.data() + i)) {
                    Word rot(w.begin() + i, w.end());
                    rot.insert(rot.end(), w.begin(), w.begin() + i);
                    w = dehn_reduce(rot, gens);
                    rotated = true;
                }
            }
            if (rotated) continue;
        }
        return w;
    }
}

namespace {

Word lex_min_rotation(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n <= 1) return w;
    int best = 0;
    for (int i = 1; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            Letter a = w[static_cast<std::size_t>((i + k) % n)];
            Letter b = w[static_cast<std::size_t>((best + k) % n)];
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    }
    Word out(w.begin() + best, w.end());
    out.insert(out.end(), w.begin(), w.begin() + best);
    return out;
}

} // namespace

namespace detail {

std::vector<Word> minimal_closure(const Word& w_in, const GeneratorSet& gens) {
    const auto& tab = tables_for(gens);
    const int half = tab.half_len;

    Word start = cyclic_dehn_reduce(w_in, gens);
    if (start.empty())
        throw TrivialWord("cyclic_normal_form: word represents the identity");

    // Close the minimal-length representatives under half-relator exchanges;
    // restart whenever an exchange shortens the word further.
    for (;;) {
        const int n = static_cast<int>(start.size());
        std::set<Word> seen;
        std::vector<Word> todo{lex_min_rotation(start)};
        Word shorter;
        while (!todo.empty() && shorter.empty()) {
            Word cur = todo.back();
            todo.pop_back();
            if (!seen.insert(cur).second) continue;
            if (n < half) continue;
            Word ww = word_concat(cur, cur);
            for (int i = 0; i < n; ++i) {
                auto it = tab.half_exchange.find(
                    RelatorTables::key(ww.data() + i, half));
                if (it == tab.half_exchange.end()) continue;
                Word cand = it->second;
                cand.insert(cand.end(), ww.begin() + i + half, ww.begin() + i + n);
                cand = cyclic_dehn_reduce(cand, gens);
                if (static_cast<int>(cand.size()) < n) {
                    shorter = cand;
                    break;
                }
                Word rot = lex_min_rotation(cand);
                if (!seen.count(rot)) todo.push_back(rot);
            }
        }
        if (!shorter.empty()) {
            start = shorter;
            continue;
        }
        return std::vector<Word>(seen.begin(), seen.end());
    }
}

} // namespace detail

Word cyclic_normal_form(const Word& w_in, const GeneratorSet& gens) {
    return detail::minimal_closure(w_in, gens).front();  // sorted; lex minimum
}

namespace {

bool cyclically_periodic(const Word& w) {
    const int n = static_cast<int>(w.size());
    for (int d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (int i = 0; i < n && periodic; ++i)
            periodic = w[static_cast<std::size_t>(i)] ==
                       w[static_cast<std::size_t>((i + d) % n)];
        if (periodic) return true;
    }
    return false;
}

} // namespace

bool is_primitive(const Word& w, const GeneratorSet& gens) {
    for (const Word& member : detail::minimal_closure(w, gens))
        if (cyclically_periodic(member)) return false;
    return true;
}

ValidationReport validate_generators(const GeneratorSet& gens) {
    ValidationReport rep;
    const int g = gens.genus;
    if (g < 2) {
        rep.message = "genus must be >= 2";
        return rep;
    }
    if (static_cast<int>(gens.matrices.size()) != 2 * g) {
        rep.message = "expected 2*genus generator matrices";
        return rep;
    }
    rep.min_trace = gens.matrices.front().trace();
    for (const Mat2& m : gens.matrices) {
        rep.max_det_residual = std::max(rep.max_det_residual, std::fabs(m.det() - 1.0));
        rep.min_trace = std::min(rep.min_trace, m.trace());
    }
    if (rep.max_det_residual > 1e-12) {
        rep.message = "generator determinant differs from 1 beyond 1e-12";
        return rep;
    }
    if (rep.min_trace <= 2.0) {
        rep.message = "generator trace <= 2 (not a positive-trace hyperbolic lift)";
        return rep;
    }
    Mat2 prod = word_to_matrix(gens.relator, gens);
    double res_plus = prod.max_abs_diff(Mat2::identity());
    double res_minus = prod.max_abs_diff(-Mat2::identity());
    rep.relator_sign = res_plus <= res_minus ? +1 : -1;
    rep.relator_residual = std::min(res_plus, res_minus);
    if (rep.relator_residual > 1e-9) {
        rep.message = "relator product is not +/-I within 1e-9";
        return rep;
    }
    if (gens.relator_sign != rep.relator_sign) {
        rep.message = "recorded relator_sign disagrees with the matrix product";
        return rep;
    }
    rep.ok = true;
    rep.message = "ok";
    return rep;
}

void require_valid_generators(const GeneratorSet& gens) {
    ValidationReport rep = validate_generators(gens);
    if (!rep.ok)
        throw InvalidGenerators("generator set '" + gens.label + "': " + rep.message);
}

namespace {

Word canonical_relator(int genus) {
    Word r;
    for (int i = 0; i < genus; ++i) {
        Letter ai = make_letter(i, false);
        Letter bi = make_letter(genus + i, false);
        r.push_back(ai);
        r.push_back(bi);
        r.push_back(letter_inverse(ai));
        r.push_back(letter_inverse(bi));
    }
    return r;
}

} // namespace

GeneratorSet load_generators(const std::string& path) {
    if (path == "bolza") return bolza_generators();
    std::ifstream in(path);
    if (!in) throw InvalidGenerators("cannot open generator config: " + path);
    GeneratorSet gens;
    gens.genus = 0;
    std::string line;
    std::vector<Mat2> mats;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok) || tok[0] == '#') continue;
        if (tok == "label") {
            ss >> gens.label;
        } else if (tok == "genus") {
            ss >> gens.genus;
        } else if (tok == "matrix") {
            Mat2 m;
            if (!(ss >> m.a >> m.b >> m.c >> m.d))
                throw InvalidGenerators("bad matrix line: " + line);
            mats.push_back(m);
        } else {
            throw InvalidGenerators("unknown directive '" + tok + "' in " + path);
        }
    }
    if (gens.genus < 2) throw InvalidGenerators("config must set genus >= 2");
    if (static_cast<int>(mats.size()) != 2 * gens.genus)
        throw InvalidGenerators("config must provide exactly 2*genus matrices");
    gens.matrices = std::move(mats);
    gens.relator = canonical_relator(gens.genus);
    Mat2 prod = word_to_matrix(gens.relator, gens);
    gens.relator_sign =
        prod.max_abs_diff(Mat2::identity()) <= prod.max_abs_diff(-Mat2::identity())
            ? +1
            : -1;
    require_valid_generators(gens);
    return gens;
}

} // namespace hypspec
