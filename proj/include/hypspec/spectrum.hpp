#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypspec/homology.hpp"
#include "hypspec/presentation.hpp"
#include "hypspec/word.hpp"

namespace hypspec {

/// One primitive oriented geodesic conjugacy class.
struct GeodesicClass {
    Word normal_form;       // canonical conjugacy representative
    double length = 0.0;    // 2*arccosh(|trace|/2)
    HomologyVector homology;
    int sigma = +1;         // sign of the lift-product trace
    double trace = 0.0;     // trace of word_to_matrix(normal_form)
};

/// The decorated primitive length spectrum up to a cutoff, sorted by
/// (length, normal_form).
struct LengthSpectrum {
    std::string gens_label;
    double L_max = 0.0;
    std::vector<GeodesicClass> classes;
    int format_version = 1;
};

struct EnumOptions {
    int workers = 0;        // 0 = hardware default (env HYPSPEC_WORKERS wins)
    // Ball slack beyond L_max + 2*circumradius for prefix pruning. The
    // completeness tests pin this empirically; see docs in enumerate.cpp.
    double prefix_slack = 2.5;
    int letter_horizon = 0; // 0 = ceil(3*L_max)
};

/// Enumerates every primitive oriented conjugacy class with length <= L_max.
/// Deterministic: the result (and hence the cache file) is byte-identical
/// regardless of worker count. Throws CutoffTooLarge for L_max > 30.
LengthSpectrum enumerate_classes(const GeneratorSet& gens, double L_max,
                                 const EnumOptions& opts = {});

/// (class index, power n, n*length) for every pair with n*length <= NL_max.
struct PowerEntry {
    std::size_t class_index;
    int n;
    double total_length;
};
std::vector<PowerEntry> power_extend(const LengthSpectrum& spec, double NL_max);

/// Checks all LengthSpectrum invariants (primitivity and normal-form
/// canonicity are trusted from construction; lengths, sorting, uniqueness,
/// orientation closure and the length/trace identity are verified).
/// Throws InvariantViolation.
void check_spectrum_invariants(const LengthSpectrum& spec, const GeneratorSet& gens);

} // namespace hypspec
