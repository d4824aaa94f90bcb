#pragma once

#include <cstddef>

namespace mcmeasure::tolerance {

// Row sums of a transition matrix must be within this of 1.
inline constexpr double kRowSum = 1e-9;
// Probability vectors (stationary, Perron, Gibbs initial) sum to 1 within this.
inline constexpr double kDistribution = 1e-12;
// Power iteration stops once successive normalized iterates agree to this.
inline constexpr double kPowerIteration = 1e-13;
inline constexpr std::size_t kMaxPowerIterations = 100000;
// Eigen-residual bound, infinity norm.
inline constexpr double kResidual = 1e-10;
// Guard for "initial distribution equals the stationary one".
inline constexpr double kStationaryStart = 1e-12;
// Upper bound on cylinders touched by any enumeration.
inline constexpr std::size_t kEnumerationCap = 10'000'000;
// Largest supported alphabet.
inline constexpr std::size_t kMaxAlphabet = 64;
// A chain is monofractal when tau is affine to this precision at q = -2, 2.
inline constexpr double kMonofractal = 1e-9;

}  // namespace mcmeasure::tolerance
