#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

// Input matrix fails the Hermiticity tolerance.
struct NonHermitianInput : std::runtime_error {
  explicit NonHermitianInput(const std::string& what) : std::runtime_error(what) {}
};

// An entropy argument left its domain by more than round-off; callers in the
// lossy pipeline map this to an indeterminate status instead of emitting NaN.
struct IndeterminateEntropy : std::runtime_error {
  explicit IndeterminateEntropy(const std::string& what) : std::runtime_error(what) {}
};

// Scalar argument outside its admissible interval (beyond clamp tolerance).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// The normalized closed-form rate is singular at eta = 1/2; use the analytic
// limit routine instead.
struct EtaSingular : std::runtime_error {
  explicit EtaSingular(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive integration exhausted its panel budget before reaching tolerance.
struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

// Spectrum tabulation hit its horizon cap before the kernel envelope decayed.
// Only raised on request; by default the condition is reported as a flag,
// since slowly decaying ohmic tails are routine at small coupling.
struct TruncationWarning : std::runtime_error {
  explicit TruncationWarning(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zeno
