#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hypspec/errors.hpp"
#include "hypspec/presentation.hpp"

using namespace hypspec;

TEST_CASE("bolza generator set passes validation") {
    GeneratorSet gens = bolza_generators();
    ValidationReport rep = validate_generators(gens);
    INFO(rep.message);
    CHECK(rep.ok);
    CHECK(rep.max_det_residual < 1e-12);
    CHECK(rep.min_trace > 2.0);
    CHECK(rep.relator_residual < 1e-9);
    // the positive-trace lifts of the Bolza group close up to +I
    CHECK(rep.relator_sign == +1);
    CHECK(gens.relator_sign == rep.relator_sign);
}

TEST_CASE("validation rejects corrupted generator sets") {
    GeneratorSet gens = bolza_generators();
    SUBCASE("determinant != 1") {
        gens.matrices[1].a *= 2.0;
        CHECK_FALSE(validate_generators(gens).ok);
        CHECK_THROWS_AS(require_valid_generators(gens), InvalidGenerators);
    }
    SUBCASE("negative trace lift") {
        gens.matrices[2] = -gens.matrices[2];
        CHECK_FALSE(validate_generators(gens).ok);
    }
    SUBCASE("wrong relator sign recorded") {
        gens.relator_sign = -1;
        CHECK_FALSE(validate_generators(gens).ok);
    }
}

TEST_CASE("load_generators round trip through config file") {
    GeneratorSet gens = bolza_generators();
    const std::string path = "test_gens_roundtrip.cfg";
    {
        std::ofstream out(path);
        out << "label bolza-copy\ngenus 2\n";
        out.precision(17);
        for (const Mat2& m : gens.matrices)
            out << "matrix " << m.a << ' ' << m.b << ' ' << m.c << ' ' << m.d << '\n';
    }
    GeneratorSet loaded = load_generators(path);
    CHECK(loaded.label == "bolza-copy");
    CHECK(loaded.genus == 2);
    CHECK(loaded.relator_sign == gens.relator_sign);
    for (int i = 0; i < 4; ++i)
        CHECK(loaded.matrices[static_cast<std::size_t>(i)].max_abs_diff(
                  gens.matrices[static_cast<std::size_t>(i)]) < 1e-15);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_generators("no_such_file.cfg"), InvalidGenerators);
}

TEST_CASE("sigma_sign: positive lifts, inverse and power laws") {
    GeneratorSet gens = bolza_generators();
    for (int g = 0; g < 4; ++g) {
        Word w{make_letter(g, false)};
        CHECK(sigma_sign(w, gens) == +1);
    }
    // sigma(w^{-1}) = sigma(w), sigma(w^n) = sigma(w)^n on a few short words
    std::vector<Word> words = {
        {make_letter(0, false)},
        {make_letter(0, false), make_letter(2, false)},
        {make_letter(1, true), make_letter(3, false), make_letter(0, false)},
        {make_letter(2, false), make_letter(1, false), make_letter(3, true)}};
    for (const Word& w : words) {
        const int s = sigma_sign(w, gens);
        CHECK(sigma_sign(word_inverse(w), gens) == s);
        for (int n = 2; n <= 4; ++n) {
            int sn = sigma_sign(word_power(w, n), gens);
            int expect = (n % 2 == 0) ? +1 : s;
            CHECK(sn == expect);
        }
    }
    CHECK_THROWS_AS(sigma_sign(Word{}, gens), NotHyperbolic);
}

TEST_CASE("word_to_matrix basics") {
    GeneratorSet gens = bolza_generators();
    CHECK(word_to_matrix(Word{}, gens).max_abs_diff(Mat2::identity()) == 0.0);
    Word cancel{make_letter(0, false), make_letter(0, true)};
    CHECK(word_to_matrix(cancel, gens).max_abs_diff(Mat2::identity()) < 1e-12);
    Mat2 rel = word_to_matrix(gens.relator, gens);
    Mat2 target = gens.relator_sign > 0 ? Mat2::identity() : -Mat2::identity();
    CHECK(rel.max_abs_diff(target) < 1e-9);
    for (const Mat2& m : gens.matrices) CHECK(std::fabs(m.det() - 1.0) < 1e-12);
}

TEST_CASE("dehn moves only insert relators (matrix identity up to sign)") {
    GeneratorSet gens = bolza_generators();
    // w and dehn_reduce(w) differ by relator insertions, so their matrices
    // agree up to a power of relator_sign; with relator_sign = +1, exactly.
    Word w = gens.relator;
    w.insert(w.end(), {make_letter(0, false), make_letter(2, false)});
    Word red = dehn_reduce(w, gens);
    CHECK(word_to_matrix(w, gens).max_abs_diff(word_to_matrix(red, gens)) < 1e-8);
}
