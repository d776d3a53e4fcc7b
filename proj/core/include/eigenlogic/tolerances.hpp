#pragma once

#include <cstddef>

namespace eigenlogic {

// Absolute max-norm tolerance for dense-operator comparisons (idempotence,
// Hermiticity, oracle equivalence). All quantities involved are short
// products/sums of exactly representable values.
inline constexpr double kOperatorTol = 1e-12;

// Unit-norm tolerance for state vectors and trace-1 checks.
inline constexpr double kNormTol = 1e-12;

// Tolerance for probability comparisons; looser than kOperatorTol because
// sums over up to 2^20 amplitudes accumulate rounding.
inline constexpr double kProbabilityTol = 1e-10;

// Threshold under which a probability counts as zero (zero-prior decisions).
inline constexpr double kZeroProbabilityTol = 1e-12;

// Default classification tolerance for the quantum Bayes case analysis;
// user-settable per call.
inline constexpr double kDefaultClassifyTol = 1e-9;

// Size caps. Diagonal-projector operations are O(2^n); the dense oracle
// path is O(4^n) and capped much lower.
inline constexpr std::size_t kMaxDiagonalQubits = 20;
inline constexpr std::size_t kMaxDenseQubits = 10;

// Cap on the number of events accepted by the inclusion-exclusion expansion
// (2^n subset terms).
inline constexpr std::size_t kMaxUnionEvents = 12;

}  // namespace eigenlogic
