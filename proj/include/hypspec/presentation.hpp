#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hypspec/mat2.hpp"
#include "hypspec/word.hpp"

namespace hypspec {

/// A marked surface-group presentation together with SL(2,R) generator lifts.
///
/// The group is <a_i, b_i | [a_1,b_1]...[a_g,b_g]>. `matrices` holds the 2g
/// lifts in alphabet order (a_1,...,a_g,b_1,...,b_g), each hyperbolic with
/// positive trace. `relator_sign` records whether the lift product along the
/// relator equals +I or -I (it is independent of the per-generator sign
/// choice, since every generator occurs once with each exponent).
struct GeneratorSet {
    int genus = 2;
    std::vector<Mat2> matrices;   // size 2g, positive-trace lifts
    Word relator;                 // [a_1,b_1]...[a_g,b_g], length 4g
    std::string label;
    int relator_sign = +1;

    int alphabet_size() const { return 4 * genus; }
};

struct ValidationReport {
    bool ok = false;
    int relator_sign = 0;
    double max_det_residual = 0.0;    // |det - 1|
    double min_trace = 0.0;           // over generators
    double relator_residual = 0.0;    // entrywise distance to relator_sign * I
    std::string message;              // failing invariant, when !ok
};

/// The built-in genus-2 generator set for the Bolza (regular octagon)
/// surface. Constructed from the octagon side-pairing translations; see
/// bolza.cpp for the derivation of the canonical generators.
GeneratorSet bolza_generators();

/// Reads a generator set from a structured text config:
///   label <text>
///   genus <g>
///   matrix <a> <b> <c> <d>     (2g lines, row-major, alphabet order)
/// The label "bolza" bypasses the file format and returns the built-in set.
GeneratorSet load_generators(const std::string& path);

/// Checks all GeneratorSet invariants; throws nothing, reports instead.
ValidationReport validate_generators(const GeneratorSet& gens);

/// Same checks, throwing InvalidGenerators on the first failure.
void require_valid_generators(const GeneratorSet& gens);

/// Product of generator lifts along the word. Empty word -> identity.
Mat2 word_to_matrix(const Word& w, const GeneratorSet& gens);

/// Sign of the trace of the literal lift product; the spin sign sigma.
/// Throws NotHyperbolic when |trace| <= 2 (identity or elliptic product).
int sigma_sign(const Word& w, const GeneratorSet& gens);

/// Dehn reduction: repeatedly replaces any subword that is more than half of
/// a cyclic shift of the relator (or its inverse) by the shorter complement.
/// Result represents the same element and contains no such subword.
Word dehn_reduce(const Word& w, const GeneratorSet& gens);

/// True when `w` is freely reduced and contains no more-than-half relator
/// piece (the property dehn_reduce guarantees).
bool is_dehn_reduced(const Word& w, const GeneratorSet& gens);

/// Canonical conjugacy representative: cyclically Dehn-reduce, close under
/// exchanging exact relator halves, take the lexicographic minimum over all
/// rotations of all closure members. Two words are conjugate in the group
/// iff their normal forms are identical. Throws TrivialWord on the identity.
Word cyclic_normal_form(const Word& w, const GeneratorSet& gens);

/// Cyclic Dehn reduction only (shortest length, no closure/minimisation).
Word cyclic_dehn_reduce(const Word& w, const GeneratorSet& gens);

/// True iff no minimal-length conjugacy representative is a k>=2 repetition
/// of a shorter cyclic word. (Checking the normal form alone is not enough:
/// a half-relator exchange can turn a periodic representative into an
/// aperiodic one of the same length.) Throws TrivialWord on the identity.
bool is_primitive(const Word& w, const GeneratorSet& gens);

namespace detail {

/// Precomputed tables for Dehn's algorithm on one symmetrized relator set:
/// the 4g cyclic shifts of the relator and of its inverse, the forbidden
/// (half+1)-letter windows, and the half-word exchange map.
struct RelatorTables {
    int genus = 0;
    int relator_len = 0;                       // 4g
    int half_len = 0;                          // 2g
    std::vector<Word> symmetrized;             // 8g words of length 4g
    // forbidden windows of length half_len+1, flattened for lookup
    std::unordered_map<std::uint64_t, Word> long_piece_replacement;
    std::unordered_map<std::uint64_t, Word> half_exchange;

    static std::uint64_t key(const Letter* p, int n);
    explicit RelatorTables(const GeneratorSet& gens);
    bool forbidden_window(const Letter* p) const;  // window of length half_len+1
};

const RelatorTables& tables_for(const GeneratorSet& gens);

/// All minimal-length cyclically-Dehn-reduced conjugacy representatives,
/// each stored as its lexicographically least rotation. The normal form is
/// the least member; primitivity must inspect every member.
std::vector<Word> minimal_closure(const Word& w, const GeneratorSet& gens);

} // namespace detail

} // namespace hypspec
