#pragma once

// Gibbs rescalings Q_q = lambda_q^-1 D_q^-1 P_q D_q of a chain and the
// maximal-dimension chain Q_0.

#include "mcmeasure/chain.hpp"

#include <cstddef>

namespace mcmeasure {

struct GibbsChain {
  double q = 0.0;
  MarkovChainSpec base;
  MarkovChainSpec chain;  // transition Q_q, initial alpha * p_i^q
  double lambda = 0.0;    // Perron root of P_q
  Vector d;               // right Perron probability vector of P_q
  double alpha = 0.0;     // 1 / sum_i p_i^q over p_i > 0

  /// max d / min d over the live states: the constant in m_q(I) ~ |I|^tau m(I)^q.
  double comparability() const;
};

GibbsChain gibbs_chain(const MarkovChainSpec& chain, double q);

/// The q = 0 rescaling, whose measure has maximal dimension on the support.
GibbsChain maximal_chain(const MarkovChainSpec& chain);

/// Largest |ln m_q(I_w) - ln(alpha lambda^{1-k} m(I_w)^q d_last / d_first)|
/// over positive-mass words of length k <= n. Throws Errc::depth_cap.
double gibbs_identity_deviation(const GibbsChain& g, std::size_t n);

}  // namespace mcmeasure
