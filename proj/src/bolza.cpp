#include <cmath>
#include <complex>

#include "hypspec/errors.hpp"
#include "hypspec/presentation.hpp"

namespace hypspec {

namespace {

using C = std::complex<double>;

struct CMat2 {
    C a, b, c, d;
    CMat2 operator*(const CMat2& o) const {
        return CMat2{a * o.a + b * o.c, a * o.b + b * o.d,
                     c * o.a + d * o.c, c * o.b + d * o.d};
    }
    CMat2 inverse_det1() const { return CMat2{d, -b, -c, a}; }
};

// Side-pairing translation of the regular hyperbolic octagon in the disk
// model (SU(1,1)): a boost of trace 2(1+sqrt 2) along the direction k*pi/4.
CMat2 octagon_pairing(int k) {
    const double s2 = std::sqrt(2.0);
    const double beta = std::sqrt(2.0 + 2.0 * s2);
    const C ph = std::polar(1.0, k * M_PI / 4.0);
    return CMat2{C(1.0 + s2, 0.0), beta * ph, beta * std::conj(ph), C(1.0 + s2, 0.0)};
}

// Conjugate an SU(1,1) matrix into SL(2,R) with the Cayley map
// T: z -> (z-i)/(z+i), i.e. W = T^{-1} M T, then normalise to det 1 and
// positive trace.
Mat2 to_sl2r(const CMat2& m) {
    const C i(0.0, 1.0);
    // T = [[1,-i],[1,i]], T^{-1} = [[1/2, 1/2],[i/2, -i/2]]
    const CMat2 T{C(1, 0), -i, C(1, 0), i};
    const CMat2 Tinv{C(0.5, 0), C(0.5, 0), 0.5 * i, -0.5 * i};
    CMat2 w = Tinv * m * T;
    const double imag_resid =
        std::max(std::max(std::fabs(w.a.imag()), std::fabs(w.b.imag())),
                 std::max(std::fabs(w.c.imag()), std::fabs(w.d.imag())));
    if (imag_resid > 1e-9)
        throw InvalidGenerators("Cayley transform produced a non-real matrix");
    Mat2 r{w.a.real(), w.b.real(), w.c.real(), w.d.real()};
    const double s = std::sqrt(std::fabs(r.det()));
    r = Mat2{r.a / s, r.b / s, r.c / s, r.d / s};
    if (r.trace() < 0) r = -r;
    return r;
}

} // namespace

GeneratorSet bolza_generators() {
    // The octagon pairings g_0..g_3 satisfy
    //   g_0 g_1^{-1} g_2 g_3^{-1} g_0^{-1} g_1 g_2^{-1} g_3 = I.
    // Writing h_k = g_k^{(-1)^k} turns this into
    //   h_0 h_1 h_2 h_3 h_0^{-1} h_1^{-1} h_2^{-1} h_3^{-1} = I,
    // and the free-group substitution
    //   a_1 = h_0,  b_1 = h_1 h_2 h_3,  a_2 = h_1 h_2,  b_2 = h_3 h_1^{-1}
    // carries [a_1,b_1][a_2,b_2] onto that relator verbatim (the h_k are
    // recovered as h_0=a_1, h_3=a_2^{-1}b_1, h_1=b_2^{-1}a_2^{-1}b_1,
    // h_2=h_1^{-1}a_2, so the four words form a free basis).
    CMat2 h[4] = {octagon_pairing(0), octagon_pairing(1).inverse_det1(),
                  octagon_pairing(2), octagon_pairing(3).inverse_det1()};

    GeneratorSet gens;
    gens.genus = 2;
    gens.label = "bolza";
    gens.matrices.resize(4);
    gens.matrices[0] = to_sl2r(h[0]);                          // a_1
    gens.matrices[1] = to_sl2r(h[1] * h[2]);                   // a_2
    gens.matrices[2] = to_sl2r(h[1] * h[2] * h[3]);            // b_1
    gens.matrices[3] = to_sl2r(h[3] * h[1].inverse_det1());    // b_2

    for (int i = 0; i < 2; ++i) {
        Letter ai = make_letter(i, false);
        Letter bi = make_letter(2 + i, false);
        gens.relator.push_back(ai);
        gens.relator.push_back(bi);
        gens.relator.push_back(letter_inverse(ai));
        gens.relator.push_back(letter_inverse(bi));
    }

    Mat2 prod = word_to_matrix(gens.relator, gens);
    gens.relator_sign =
        prod.max_abs_diff(Mat2::identity()) <= prod.max_abs_diff(-Mat2::identity())
            ? +1
            : -1;
    return gens;
}

} // namespace hypspec
