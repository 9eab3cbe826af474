#include <doctest.h>

#include <cmath>

#include "hypspec/errors.hpp"
#include "hypspec/homology.hpp"
#include "hypspec/philox.hpp"
#include "hypspec/presentation.hpp"
#include "hypspec/word.hpp"

using namespace hypspec;

namespace {

// letters for genus 2, matching the alphabet order
const Letter A1 = make_letter(0, false), A1i = make_letter(0, true);
const Letter A2 = make_letter(1, false), A2i = make_letter(1, true);
const Letter B1 = make_letter(2, false), B1i = make_letter(2, true);
const Letter B2 = make_letter(3, false), B2i = make_letter(3, true);

Word random_reduced_word(PhiloxStream& rng, int len, int alphabet = 8) {
    Word w;
    while (static_cast<int>(w.size()) < len) {
        Letter c = static_cast<Letter>(rng.next_below(alphabet));
        if (!w.empty() && c == letter_inverse(w.back())) continue;
        w.push_back(c);
    }
    return w;
}

} // namespace

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
    CHECK(free_reduce({A1, A1i, B2}) == Word{B2});
    CHECK(free_reduce({}) == Word{});
    CHECK(free_reduce({A1, B1, A1i}) == Word{A1, B1, A1i});
    // nested cancellation
    CHECK(free_reduce({A1, B1, B1i, A1i}) == Word{});
}

TEST_CASE("word text round trip") {
    Word w{A1, B2i, A2};
    CHECK(word_to_text(w) == "1,-4,2");
    CHECK(word_from_text("1,-4,2", 2) == w);
    CHECK(word_to_text(Word{}) == "e");
    CHECK(word_from_text("e", 2).empty());
    CHECK_THROWS(word_from_text("0", 2));
    CHECK_THROWS(word_from_text("5", 2));
}

TEST_CASE("dehn_reduce kills the relator and fixes generators") {
    GeneratorSet gens = bolza_generators();
    CHECK(dehn_reduce(gens.relator, gens).empty());
    CHECK(dehn_reduce({A1}, gens) == Word{A1});

    // relator with last letter dropped reduces to the inverse of that letter
    Word r = gens.relator;
    Letter last = r.back();
    r.pop_back();
    Word red = dehn_reduce(r, gens);
    REQUIRE(red.size() == 1);
    CHECK(red[0] == letter_inverse(last));
    // matrices agree up to relator_sign
    Mat2 lhs = word_to_matrix(r, gens);
    Mat2 rhs = word_to_matrix(red, gens);
    const double res_direct = lhs.max_abs_diff(rhs);
    const double res_flip = lhs.max_abs_diff(-rhs);
    CHECK(std::min(res_direct, res_flip) < 1e-8);
}

TEST_CASE("dehn_reduce preserves the group element up to relator sign") {
    GeneratorSet gens = bolza_generators();
    PhiloxStream rng(42, 0);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = random_reduced_word(rng, 1 + static_cast<int>(rng.next_below(14)));
        Word red = dehn_reduce(w, gens);
        CHECK(red.size() <= w.size());
        CHECK(is_dehn_reduced(red, gens));
        Mat2 mw = word_to_matrix(w, gens);
        Mat2 mr = word_to_matrix(red, gens);
        CHECK(std::min(mw.max_abs_diff(mr), mw.max_abs_diff(-mr)) < 1e-8);
    }
}

TEST_CASE("cyclic_normal_form identifies conjugates") {
    GeneratorSet gens = bolza_generators();
    CHECK(cyclic_normal_form({A1, B1, A1i}, gens) == cyclic_normal_form({B1}, gens));
    CHECK_THROWS_AS(cyclic_normal_form(gens.relator, gens), TrivialWord);
    CHECK_THROWS_AS(cyclic_normal_form(Word{}, gens), TrivialWord);

    PhiloxStream rng(7, 0);
    for (int trial = 0; trial < 60; ++trial) {
        Word w = random_reduced_word(rng, 1 + static_cast<int>(rng.next_below(10)));
        Word base;
        try {
            base = cyclic_normal_form(w, gens);
        } catch (const TrivialWord&) {
            continue;
        }
        // rotation invariance
        for (std::size_t k = 1; k < w.size(); ++k) {
            Word rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            CHECK(cyclic_normal_form(rot, gens) == base);
        }
        // conjugation invariance
        for (int c = 0; c < 5; ++c) {
            Word conj = random_reduced_word(rng, 1 + static_cast<int>(rng.next_below(6)));
            Word ww = word_concat(word_concat(conj, w), word_inverse(conj));
            CHECK(cyclic_normal_form(free_reduce(ww), gens) == base);
        }
        // |trace| is a conjugacy invariant through the normal form
        const double t_w = std::fabs(word_to_matrix(w, gens).trace());
        const double t_nf = std::fabs(word_to_matrix(base, gens).trace());
        CHECK(t_w == doctest::Approx(t_nf).epsilon(1e-9));
    }
}

TEST_CASE("is_primitive on words") {
    GeneratorSet gens = bolza_generators();
    CHECK(is_primitive({A1}, gens));
    CHECK_FALSE(is_primitive({A1, A1}, gens));
    CHECK_FALSE(is_primitive({A1, B2, A1, B2, A1, B2}, gens));
    CHECK(is_primitive({A1, B2}, gens));
}

TEST_CASE("abelianize is a homomorphism") {
    CHECK(abelianize({A1, B1, A1i, B1i}, 2) == HomologyVector{0, 0, 0, 0});
    CHECK(abelianize({A1}, 2) == HomologyVector{1, 0, 0, 0});
    CHECK(abelianize({A1, B2, A1, B2i}, 2) == HomologyVector{2, 0, 0, 0});

    PhiloxStream rng(3, 0);
    for (int trial = 0; trial < 50; ++trial) {
        Word u = random_reduced_word(rng, static_cast<int>(rng.next_below(9)));
        Word v = random_reduced_word(rng, static_cast<int>(rng.next_below(9)));
        HomologyVector hu = abelianize(u, 2), hv = abelianize(v, 2);
        HomologyVector sum(4);
        for (int i = 0; i < 4; ++i) sum[static_cast<std::size_t>(i)] =
            hu[static_cast<std::size_t>(i)] + hv[static_cast<std::size_t>(i)];
        CHECK(abelianize(word_concat(u, v), 2) == sum);
    }
}

TEST_CASE("relator tables build for genus 3 and 4 presentations") {
    for (int g : {3, 4}) {
        GeneratorSet gens;
        gens.genus = g;
        gens.label = "synthetic";
        for (int i = 0; i < g; ++i) {
            Letter ai = make_letter(i, false);
            Letter bi = make_letter(g + i, false);
            gens.relator.push_back(ai);
            gens.relator.push_back(bi);
            gens.relator.push_back(letter_inverse(ai));
            gens.relator.push_back(letter_inverse(bi));
        }
        const auto& tab = detail::tables_for(gens);
        CHECK(tab.half_len == 2 * g);
        CHECK(static_cast<int>(tab.symmetrized.size()) == 8 * g);
        CHECK(dehn_reduce(gens.relator, gens).empty());
    }
}

TEST_CASE("trace_to_length closed forms and inverse") {
    const double t = 2.0 * (1.0 + std::sqrt(2.0));
    CHECK(trace_to_length(t) == doctest::Approx(3.0571425).epsilon(1e-6));
    CHECK(trace_to_length(2.0 * std::cosh(0.5)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(trace_to_length(2.0), NotHyperbolic);
    CHECK_THROWS_AS(trace_to_length(-1.5), NotHyperbolic);
    for (double ell = 0.25; ell <= 30.0; ell += 0.83) {
        CHECK(trace_to_length(2.0 * std::cosh(ell / 2.0)) ==
              doctest::Approx(ell).epsilon(1e-12));
    }
}
