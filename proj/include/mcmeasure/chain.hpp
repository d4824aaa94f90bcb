#pragma once

#include "mcmeasure/spectral.hpp"

#include <cstddef>
#include <vector>

namespace mcmeasure {

/// Restriction of a chain to the states it can actually visit.
struct LiveBlock {
  std::vector<std::size_t> states;  // increasing original indices
  TransitionMatrix transition;      // P restricted to `states`
};

/// A validated (initial distribution, transition matrix) pair on the
/// alphabet {0, ..., ell-1}. Obtain one through validate_chain().
class MarkovChainSpec {
 public:
  std::size_t ell() const noexcept { return transition_.order(); }
  const Distribution& initial() const noexcept { return initial_; }
  const TransitionMatrix& transition() const noexcept { return transition_; }

  /// Whether the full positive-entry pattern of P is strongly connected.
  bool pattern_irreducible() const noexcept { return transition_.irreducible(); }

  /// Whether P restricted to the states reachable from the initial support
  /// is strongly connected. Every chain-level spectral operation needs this.
  bool irreducible() const noexcept { return live_irreducible_; }

  /// States visited with positive probability at some time.
  const std::vector<bool>& live() const noexcept { return live_; }
  const LiveBlock& live_block() const noexcept { return block_; }

  /// Throws Errc::not_irreducible unless irreducible().
  void require_irreducible() const;

 private:
  friend MarkovChainSpec validate_chain(std::size_t, Vector, Matrix);
  MarkovChainSpec(Distribution initial, TransitionMatrix transition);

  Distribution initial_;
  TransitionMatrix transition_;
  std::vector<bool> live_;
  LiveBlock block_;
  bool live_irreducible_ = false;
};

/// Validates dimensions, nonnegativity, row sums (1e-9), p_ij != 1 and a
/// nonzero initial vector, which is rescaled to sum 1.
MarkovChainSpec validate_chain(std::size_t ell, Vector initial, Matrix transition);

MarkovChainSpec validate_chain(std::size_t ell, const std::vector<double>& initial,
                               const std::vector<std::vector<double>>& transition);

}  // namespace mcmeasure
