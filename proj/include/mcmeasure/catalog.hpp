#pragma once

// Named chain families used by the tests, the acceptance suite and the
// shipped configs.

#include "mcmeasure/chain.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mcmeasure::catalog {

/// Ternary Cantor chain: rows (1/2, 0, 1/2), initial (1/2, 0, 1/2).
MarkovChainSpec cantor();

/// Independent digits: every row and the initial vector equal p.
MarkovChainSpec bernoulli(const std::vector<double>& p);

/// ell = 2, rows (p, 1-p) and (1-p, p), initial (1/2, 1/2).
MarkovChainSpec tukia(double p);

/// Row-normalized random walk on Z_ell (steps +-1 with probability 1/2).
/// For ell = 2 both steps land on the same state, giving ((0,1),(1,0)).
Matrix z_walk_matrix(std::size_t ell);

/// Walk on Z_ell with uniform initial vector; ell >= 3.
MarkovChainSpec z_walk(std::size_t ell);

/// ((1-a, a), (b, 1-b)) started from its stationary vector (b, a)/(a+b).
MarkovChainSpec two_state(double a, double b);
MarkovChainSpec two_state(double a, double b, const std::vector<double>& initial);

/// Every row a random permutation of a (retried until irreducible on the
/// live block); uniform initial vector.
MarkovChainSpec permuted_rows(const std::vector<double>& a, std::uint64_t seed);

/// 4-state chain with uniform nonzero entries per row that is still multifractal.
MarkovChainSpec four_state_nonuniform();

/// 3-state chain with rows (1/3,1/3,1/3), (1/2,0,1/2), (1/2,0,1/2) and a
/// uniform initial vector; its dimension is below that of its support.
MarkovChainSpec three_state_nonmaximal();

/// Random chain on ell states: a positive cycle through all states plus each
/// other entry positive with probability `density`; every row has at least
/// two positive entries. Random positive initial vector.
MarkovChainSpec random_chain(std::size_t ell, std::uint64_t seed, double density = 0.6);

/// Same transition matrix, initial vector replaced by the stationary one.
MarkovChainSpec with_stationary_start(const MarkovChainSpec& chain);

struct Named {
  std::string name;
  MarkovChainSpec chain;
};

/// Small chains whose generations up to 10 can be enumerated.
std::vector<Named> corpus();

}  // namespace mcmeasure::catalog
