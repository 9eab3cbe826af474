#pragma once

#include <string>

#include "hypspec/spectrum.hpp"

namespace hypspec {

/// Versioned, sorted, line-oriented cache format:
///   HYPSPEC v1 <gens_label> <L_max>
///   <letters csv> <length> <2g homology ints> <sigma> <trace>
/// Doubles are written with 17 significant digits so the round-trip is exact
/// and files are byte-identical across worker counts.
void write_spectrum(const LengthSpectrum& spec, const std::string& path);

/// Reads and validates against all LengthSpectrum invariants using `gens`.
/// Throws FormatVersionMismatch, CorruptRecord or InvariantViolation.
LengthSpectrum read_spectrum(const std::string& path, const GeneratorSet& gens);

/// Convenience: resolves the generator set from the header label (built-in
/// labels only; currently "bolza").
LengthSpectrum read_spectrum(const std::string& path);

} // namespace hypspec
