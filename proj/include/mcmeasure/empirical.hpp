#pragma once

// Finite-depth diagnostics that check the exact formulas by recursion or
// enumeration: partition sums, entropy sequences, box counts, shift
// invariance and the weak quasi-Bernoulli ratios.

#include "mcmeasure/chain.hpp"
#include "mcmeasure/measure.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mcmeasure {

/// S_n = S_1 P_q^{n-1} held as exp(log_scale) * unit, |unit|_1 = 1.
class PartitionState {
 public:
  PartitionState(const MarkovChainSpec& chain, double q);

  void advance();

  std::size_t depth() const noexcept { return depth_; }
  double log_scale() const noexcept { return log_scale_; }
  const Vector& unit() const noexcept { return unit_; }

  /// Natural log of sum over generation-n intervals of m(I)^q.
  double log_total() const noexcept { return log_scale_; }

 private:
  Matrix pq_;
  std::size_t depth_ = 1;
  double log_scale_ = 0.0;
  Vector unit_;
};

/// log_ell of sum_{I in F_n} m(I)^q, by the vector recurrence (n >= 1).
double partition_sum(const MarkovChainSpec& chain, double q, std::size_t n);

/// partition_sum / n.
double empirical_tau(const MarkovChainSpec& chain, double q, std::size_t n);

/// Error-constant estimate C = 2n |tau_{2n} - tau_n| for |tau_n - tau| <= C/n.
struct RateEstimate {
  std::size_t n = 0;
  double tau_n = 0.0;
  double tau_2n = 0.0;
  double constant = 0.0;
};

RateEstimate empirical_tau_rate(const MarkovChainSpec& chain, double q, std::size_t n);

/// H_1..H_{n_max}, H_n the base-ell entropy of F_n divided by n.
std::vector<double> entropy_sequence(const MarkovChainSpec& chain, std::size_t n_max);

/// log_ell(N_n) / n.
double box_count_dim(const MarkovChainSpec& chain, std::size_t n);

/// Natural log of a positive exact count.
double log_count(const BigCount& n);

/// Largest |m(sigma^-1 I_w) - m(I_w)| over positive-mass words of length <= n.
/// Throws Errc::not_stationary_start unless initial P = initial.
double shift_invariance_deviation(const MarkovChainSpec& chain, std::size_t n);

/// Closed-form weak quasi-Bernoulli data for a stationary-start chain.
struct QuasiBernoulliTable {
  std::size_t horizon = 0;  // smallest k with P + ... + P^k > 0 on the live block
  Matrix sum_of_powers;     // P + ... + P^k (ell x ell, zero off the live block)
  Matrix ratio;             // sum_of_powers(i,j) / nu_j on live pairs, 0 elsewhere
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

QuasiBernoulliTable quasi_bernoulli_table(const MarkovChainSpec& chain);

struct RatioRange {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

/// Extremes of sum_{j<k} m(I ∩ sigma^{-(gen I + j)} J) / (m(I) m(J)) over
/// positive-mass I, J of generation <= n_max, using the closed-form product.
RatioRange quasi_bernoulli_ratio(const MarkovChainSpec& chain, std::size_t n_max);

/// A word of generation 1 or 2 whose masses differ between the two chains
/// (by more than 1e-12), or nullopt if none does.
std::optional<Word> distinguish(const MarkovChainSpec& a, const MarkovChainSpec& b);

/// Whether initial P = initial within tolerance::kStationaryStart.
bool has_stationary_start(const MarkovChainSpec& chain);

}  // namespace mcmeasure
