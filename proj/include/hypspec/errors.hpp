#pragma once

#include <stdexcept>
#include <string>

namespace hypspec {

// Error taxonomy used across the library. The CLI maps these onto exit codes:
// validation errors -> 1, incomplete/corrupt input -> 2, numeric failures -> 3.

struct TrivialWord : std::runtime_error {
    explicit TrivialWord(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotHyperbolic : std::runtime_error {
    explicit NotHyperbolic(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidGenerators : std::runtime_error {
    explicit InvalidGenerators(const std::string& msg) : std::runtime_error(msg) {}
};

struct CutoffTooLarge : std::runtime_error {
    explicit CutoffTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatVersionMismatch : std::runtime_error {
    explicit FormatVersionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct CorruptRecord : std::runtime_error {
    explicit CorruptRecord(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct IncompleteSpectrum : std::runtime_error {
    explicit IncompleteSpectrum(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidFluxSpec : std::runtime_error {
    explicit InvalidFluxSpec(const std::string& msg) : std::runtime_error(msg) {}
};

struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hypspec
