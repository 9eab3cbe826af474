#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypspec {

// A letter is an index into the ordered alphabet
//   a_1 < a_1^{-1} < a_2 < a_2^{-1} < ... < b_g < b_g^{-1},
// encoded as letter = 2*gen + (1 if inverse), gen in [0, 2g) enumerating
// (a_1, ..., a_g, b_1, ..., b_g).  Comparing encoded letters therefore gives
// exactly the lexicographic order used for normal forms.
using Letter = std::uint8_t;

inline Letter letter_inverse(Letter c) { return static_cast<Letter>(c ^ 1u); }
inline int letter_gen(Letter c) { return c >> 1; }
inline bool letter_is_inverse(Letter c) { return (c & 1u) != 0; }
inline Letter make_letter(int gen, bool inv) {
    return static_cast<Letter>(2 * gen + (inv ? 1 : 0));
}

/// A word in the surface-group generators. Operations that return Word
/// guarantee free reduction where documented; the raw container does not.
using Word = std::vector<Letter>;

/// Removes all adjacent letter-inverse pairs. Same group element.
inline Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter c : w) {
        if (!out.empty() && out.back() == letter_inverse(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

inline Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(letter_inverse(*it));
    return out;
}

inline Word word_concat(const Word& u, const Word& v) {
    Word out = u;
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

inline Word word_power(const Word& w, int n) {
    Word out;
    out.reserve(w.size() * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.insert(out.end(), w.begin(), w.end());
    return out;
}

inline bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == letter_inverse(w[i - 1])) return false;
    return true;
}

/// Signed-index text form used by the cache file: a_1=1,...,b_g=2g, inverses
/// negative, letters comma-separated. Empty word prints as "e".
std::string word_to_text(const Word& w);
Word word_from_text(const std::string& text, int genus);

/// Human-readable form like "a1.b2'.a1" (prime marks an inverse).
std::string word_pretty(const Word& w, int genus);

} // namespace hypspec
