#include "mcmeasure/empirical.hpp"

#include "mcmeasure/analysis.hpp"
#include "mcmeasure/error.hpp"
#include "mcmeasure/tolerances.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace mcmeasure {

namespace {

double ln_ell(const MarkovChainSpec& chain) { return std::log(static_cast<double>(chain.ell())); }

void require_stationary_start(const MarkovChainSpec& chain) {
  if (!has_stationary_start(chain)) {
    throw Error(Errc::not_stationary_start, "initial distribution is not stationary for P");
  }
}

}  // namespace

PartitionState::PartitionState(const MarkovChainSpec& chain, double q)
    : pq_(elementwise_power(chain.transition(), q).entries()) {
  const auto n = static_cast<Eigen::Index>(chain.ell());
  Vector s1 = Vector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = chain.initial()[static_cast<std::size_t>(i)];
    if (p > 0.0) s1(i) = std::pow(p, q);
  }
  const double total = s1.sum();
  log_scale_ = std::log(total);
  unit_ = s1 / total;
}

void PartitionState::advance() {
  Vector next = pq_.transpose() * unit_;
  const double total = next.sum();
  log_scale_ += std::log(total);
  unit_ = next / total;
  ++depth_;
}

double partition_sum(const MarkovChainSpec& chain, double q, std::size_t n) {
  if (n == 0) throw Error(Errc::domain, "partition sums start at generation 1");
  // Masses of one generation always add up to 1.
  if (q == 1.0) return 0.0;
  PartitionState s(chain, q);
  while (s.depth() < n) s.advance();
  return s.log_total() / ln_ell(chain);
}

double empirical_tau(const MarkovChainSpec& chain, double q, std::size_t n) {
  return partition_sum(chain, q, n) / static_cast<double>(n);
}

RateEstimate empirical_tau_rate(const MarkovChainSpec& chain, double q, std::size_t n) {
  RateEstimate r;
  r.n = n;
  r.tau_n = empirical_tau(chain, q, n);
  r.tau_2n = empirical_tau(chain, q, 2 * n);
  r.constant = 2.0 * static_cast<double>(n) * std::abs(r.tau_2n - r.tau_n);
  return r;
}

std::vector<double> entropy_sequence(const MarkovChainSpec& chain, std::size_t n_max) {
  if (n_max == 0) throw Error(Errc::domain, "entropy sequence needs n_max >= 1");
  const std::size_t ell = chain.ell();
  const Matrix& p = chain.transition().entries();
  // Natural-log row entropies.
  Vector row_h(static_cast<Eigen::Index>(ell));
  for (Eigen::Index k = 0; k < row_h.size(); ++k) {
    row_h(k) = row_entropy(p.row(k).transpose(), ell) * ln_ell(chain);
  }
  Vector s = chain.initial().weights();  // s_{1,k}
  double t = 0.0;                        // T_1 = sum p_i ln p_i
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > 0.0) t += s(i) * std::log(s(i));
  }
  std::vector<double> h;
  h.reserve(n_max);
  h.push_back(-t / ln_ell(chain));
  for (std::size_t n = 2; n <= n_max; ++n) {
    t -= row_h.dot(s);  // T_n = T_{n-1} - sum_k h(L_k) s_{n-1,k}
    s = p.transpose() * s;
    h.push_back(-t / (static_cast<double>(n) * ln_ell(chain)));
  }
  return h;
}

double log_count(const BigCount& n) {
  if (n <= 0) return -std::numeric_limits<double>::infinity();
  // cpp_bin_float keeps a wide exponent, so counts beyond 1e308 still work.
  const boost::multiprecision::cpp_bin_float_50 wide(n);
  return static_cast<double>(boost::multiprecision::log(wide));
}

double box_count_dim(const MarkovChainSpec& chain, std::size_t n) {
  if (n == 0) throw Error(Errc::domain, "box counting starts at generation 1");
  return log_count(support_count(chain, n)) / (static_cast<double>(n) * ln_ell(chain));
}

bool has_stationary_start(const MarkovChainSpec& chain) {
  const Vector& nu = chain.initial().weights();
  const Vector moved = chain.transition().entries().transpose() * nu;
  return (moved - nu).cwiseAbs().maxCoeff() <= tolerance::kStationaryStart;
}

double shift_invariance_deviation(const MarkovChainSpec& chain, std::size_t n) {
  require_stationary_start(chain);
  double worst = 0.0;
  for_each_support_word(chain, n, [&](const Word& w, const LogMass& m) {
    worst = std::max(worst, std::abs(shift_preimage_mass(chain, w).mass() - m.mass()));
  });
  return worst;
}

QuasiBernoulliTable quasi_bernoulli_table(const MarkovChainSpec& chain) {
  chain.require_irreducible();
  require_stationary_start(chain);
  const std::size_t ell = chain.ell();
  const LiveBlock& block = chain.live_block();
  const Matrix& pl = block.transition.entries();
  const auto k = pl.rows();

  QuasiBernoulliTable out;
  Matrix power = pl;
  Matrix sum = pl;
  std::size_t horizon = 1;
  while ((sum.array() <= 0.0).any()) {
    if (horizon >= ell * ell) {
      throw Error(Errc::not_irreducible, "no power sum of P is positive within ell^2 terms");
    }
    power = power * pl;
    sum += power;
    ++horizon;
  }
  out.horizon = horizon;
  const auto n = static_cast<Eigen::Index>(ell);
  out.sum_of_powers = Matrix::Zero(n, n);
  out.ratio = Matrix::Zero(n, n);
  out.min_ratio = std::numeric_limits<double>::infinity();
  out.max_ratio = 0.0;
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      const auto i = static_cast<Eigen::Index>(block.states[static_cast<std::size_t>(a)]);
      const auto j = static_cast<Eigen::Index>(block.states[static_cast<std::size_t>(b)]);
      const double r = sum(a, b) / chain.initial()[static_cast<std::size_t>(j)];
      out.sum_of_powers(i, j) = sum(a, b);
      out.ratio(i, j) = r;
      out.min_ratio = std::min(out.min_ratio, r);
      out.max_ratio = std::max(out.max_ratio, r);
    }
  }
  return out;
}

RatioRange quasi_bernoulli_ratio(const MarkovChainSpec& chain, std::size_t n_max) {
  const QuasiBernoulliTable table = quasi_bernoulli_table(chain);
  struct Entry {
    std::size_t first;
    std::size_t last;
    double log_mass;
  };
  std::vector<Entry> words;
  for_each_support_word(chain, n_max, [&](const Word& w, const LogMass& m) {
    words.push_back({w[0], w[w.size() - 1], m.log()});
  });
  if (static_cast<double>(words.size()) * static_cast<double>(words.size()) >
      static_cast<double>(tolerance::kEnumerationCap) * 100.0) {
    throw Error(Errc::depth_cap, "too many word pairs for generation " + std::to_string(n_max));
  }

  RatioRange out{std::numeric_limits<double>::infinity(), 0.0};
  for (const Entry& i : words) {
    for (const Entry& j : words) {
      // m(I) * pi~_{last(I), first(J)} * m(J) / nu_{first(J)}, over m(I) m(J).
      const double numerator =
          i.log_mass +
          std::log(table.sum_of_powers(static_cast<Eigen::Index>(i.last),
                                       static_cast<Eigen::Index>(j.first))) +
          j.log_mass - std::log(chain.initial()[j.first]);
      const double r = std::exp(numerator - (i.log_mass + j.log_mass));
      out.min_ratio = std::min(out.min_ratio, r);
      out.max_ratio = std::max(out.max_ratio, r);
    }
  }
  return out;
}

std::optional<Word> distinguish(const MarkovChainSpec& a, const MarkovChainSpec& b) {
  if (a.ell() != b.ell()) throw Error(Errc::dimension_mismatch, "chains use different alphabets");
  const std::size_t ell = a.ell();
  auto differs = [&](const Word& w) {
    return std::abs(cylinder_mass(a, w).mass() - cylinder_mass(b, w).mass()) > 1e-12;
  };
  for (std::size_t i = 0; i < ell; ++i) {
    Word w(ell, {i});
    if (differs(w)) return w;
  }
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      Word w(ell, {i, j});
      if (differs(w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace mcmeasure
