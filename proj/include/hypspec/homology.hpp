#pragma once

#include <cstdint>
#include <vector>

#include "hypspec/word.hpp"

namespace hypspec {

/// Integer homology class in the ordered basis (a_1,...,a_g,b_1,...,b_g);
/// always of length exactly 2g.
using HomologyVector = std::vector<std::int64_t>;

/// Signed generator counts; a homomorphism to Z^{2g}.
inline HomologyVector abelianize(const Word& w, int genus) {
    HomologyVector h(static_cast<std::size_t>(2 * genus), 0);
    for (Letter c : w)
        h[static_cast<std::size_t>(letter_gen(c))] += letter_is_inverse(c) ? -1 : +1;
    return h;
}

inline HomologyVector homology_negate(const HomologyVector& h) {
    HomologyVector out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) out[i] = -h[i];
    return out;
}

inline bool homology_is_zero(const HomologyVector& h) {
    for (auto v : h)
        if (v != 0) return false;
    return true;
}

} // namespace hypspec
