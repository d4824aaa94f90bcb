#include "mcmeasure/gibbs.hpp"

#include "mcmeasure/error.hpp"
#include "mcmeasure/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mcmeasure {

namespace {

// Right eigenvector of the full P_q for the live Perron root. On the live
// block it is the Perron vector; on the remaining states it solves
// (lambda I - N) d_N = X d_L. Returns false when that extension is not a
// positive vector (then those unreachable states are handled separately).
bool extend_right_vector(const Matrix& pq, const std::vector<bool>& live, double lambda,
                         Vector& d) {
  std::vector<Eigen::Index> dead;
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (!live[i]) dead.push_back(static_cast<Eigen::Index>(i));
  }
  if (dead.empty()) return true;
  const auto k = static_cast<Eigen::Index>(dead.size());
  Matrix system(k, k);
  Vector rhs = Vector::Zero(k);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      system(a, b) = (a == b ? lambda : 0.0) - pq(dead[static_cast<std::size_t>(a)],
                                                  dead[static_cast<std::size_t>(b)]);
    }
    for (std::size_t j = 0; j < live.size(); ++j) {
      if (live[j]) rhs(a) += pq(dead[static_cast<std::size_t>(a)], static_cast<Eigen::Index>(j)) *
                             d(static_cast<Eigen::Index>(j));
    }
  }
  const auto lu = system.fullPivLu();
  if (!lu.isInvertible()) return false;
  const Vector dn = lu.solve(rhs);
  for (Eigen::Index a = 0; a < k; ++a) {
    if (!std::isfinite(dn(a)) || dn(a) <= 0.0) return false;
  }
  for (Eigen::Index a = 0; a < k; ++a) d(dead[static_cast<std::size_t>(a)]) = dn(a);
  return true;
}

}  // namespace

double GibbsChain::comparability() const {
  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < base.ell(); ++i) {
    if (!base.live()[i]) continue;
    const double v = d(static_cast<Eigen::Index>(i));
    lo = first ? v : std::min(lo, v);
    hi = first ? v : std::max(hi, v);
    first = false;
  }
  return hi / lo;
}

GibbsChain gibbs_chain(const MarkovChainSpec& chain, double q) {
  chain.require_irreducible();
  const std::size_t ell = chain.ell();
  const auto n = static_cast<Eigen::Index>(ell);

  if (q == 1.0) {
    // lambda_1 = 1 with a constant right vector: the rescaling is the identity.
    return GibbsChain{q,
                      chain,
                      chain,
                      1.0,
                      Vector::Constant(n, 1.0 / static_cast<double>(ell)),
                      1.0};
  }

  const Matrix pq = elementwise_power(chain.transition(), q).entries();
  const LiveBlock& block = chain.live_block();
  const SpectralTriple t = perron_root(elementwise_power(block.transition, q));
  const double lambda = t.lambda;

  Vector d = Vector::Zero(n);
  for (std::size_t a = 0; a < block.states.size(); ++a) {
    d(static_cast<Eigen::Index>(block.states[a])) = t.right(static_cast<Eigen::Index>(a));
  }
  const bool extended = extend_right_vector(pq, chain.live(), lambda, d);
  if (!extended) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!chain.live()[static_cast<std::size_t>(i)]) d(i) = 1.0 / static_cast<double>(ell);
    }
  }
  d /= d.sum();

  Matrix qq = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!extended && !chain.live()[static_cast<std::size_t>(i)]) {
      // Never visited by either measure; keep P's row.
      qq.row(i) = chain.transition().entries().row(i);
      continue;
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (pq(i, j) > 0.0) qq(i, j) = pq(i, j) * d(j) / (lambda * d(i));
    }
    // Every row of P has two positive entries, so each q_ij is strictly below
    // 1; at extreme q the nearest double can still be 1.
    for (Eigen::Index j = 0; j < n; ++j) {
      if (qq(i, j) >= 1.0) qq(i, j) = std::nextafter(1.0, 0.0);
    }
  }

  Vector init = Vector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = chain.initial()[static_cast<std::size_t>(i)];
    if (p > 0.0) init(i) = std::pow(p, q);
  }
  const double alpha = 1.0 / init.sum();
  init *= alpha;

  return GibbsChain{q, chain, validate_chain(ell, std::move(init), std::move(qq)), lambda,
                    std::move(d), alpha};
}

GibbsChain maximal_chain(const MarkovChainSpec& chain) { return gibbs_chain(chain, 0.0); }

double gibbs_identity_deviation(const GibbsChain& g, std::size_t n) {
  const double ln_alpha = std::log(g.alpha);
  const double ln_lambda = std::log(g.lambda);
  double worst = 0.0;
  for_each_support_word(g.base, n, [&](const Word& w, const LogMass& m) {
    const LogMass mq = cylinder_mass(g.chain, w);
    if (mq.is_zero()) {
      worst = std::numeric_limits<double>::infinity();
      return;
    }
    const auto k = static_cast<double>(w.size());
    const double predicted = ln_alpha - (k - 1.0) * ln_lambda -
                             std::log(g.d(static_cast<Eigen::Index>(w[0]))) + g.q * m.log() +
                             std::log(g.d(static_cast<Eigen::Index>(w[w.size() - 1])));
    worst = std::max(worst, std::abs(mq.log() - predicted));
  });
  return worst;
}

}  // namespace mcmeasure
