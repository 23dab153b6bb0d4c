#pragma once

#include <cstdint>

namespace mcone::defaults {

// Hermiticity check on construction of operators.
inline constexpr double kHermTol = 1e-10;

// Positivity / charge / trace-preservation checks.
inline constexpr double kTol = 1e-9;

// Mixing-distance comparisons.
inline constexpr double kMixTol = 1e-8;

// An entry of a stochastic matrix counts as "in the support" above this.
inline constexpr double kSupportTol = 1e-9;

// Jacobi sweeps stop when the off-diagonal Frobenius mass drops below this.
inline constexpr double kJacobiOffTol = 1e-12;

// Eigenvalues this close to zero belong to neither part of a decomposition.
inline constexpr double kEigenZeroTol = 1e-12;

// Singular values above this count towards the numerical rank.
inline constexpr double kRankTol = 1e-9;

// Sample grid for quantum mixing profiles.
inline constexpr int kProfileGrid = 2048;

// Randomized channel isometry verdicts.
inline constexpr int kIsometrySamples = 200;

// Largest classical dimension the transport oracle accepts.
inline constexpr int kTransportDimBound = 16;

// Every seeded sweep defaults to this.
inline constexpr std::uint64_t kSeed = 42;

}  // namespace mcone::defaults
