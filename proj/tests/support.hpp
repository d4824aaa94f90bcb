#pragma once

// Shared generators and brute-force oracles for the test binaries. Nothing
// here calls the recurrences under test.

#include "mcmeasure/catalog.hpp"
#include "mcmeasure/chain.hpp"
#include "mcmeasure/measure.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <random>
#include <vector>

namespace testing_support {

using mcmeasure::Matrix;
using mcmeasure::MarkovChainSpec;
using mcmeasure::Vector;

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Random row-stochastic matrix with a positive cycle 0 -> 1 -> ... -> 0, so
/// its pattern is irreducible; other entries positive with probability density.
inline Matrix random_stochastic(std::size_t ell, std::mt19937_64& rng, double density) {
  const auto n = static_cast<Eigen::Index>(ell);
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, (i + 1) % n) = 0.1 + uniform01(rng);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (uniform01(rng) < density) m(i, j) = 0.1 + uniform01(rng);
    }
    if ((m.row(i).array() > 0.0).count() < 2) m(i, i) = 0.1 + uniform01(rng);
    m.row(i) /= m.row(i).sum();
  }
  return m;
}

inline MarkovChainSpec random_chain(std::size_t ell, std::mt19937_64& rng, double density = 0.5) {
  Matrix p = random_stochastic(ell, rng, density);
  Vector init(static_cast<Eigen::Index>(ell));
  for (Eigen::Index i = 0; i < init.size(); ++i) init(i) = 0.1 + uniform01(rng);
  return mcmeasure::validate_chain(ell, init / init.sum(), p);
}

/// Chains for property tests: the catalog corpus plus random ones.
inline std::vector<MarkovChainSpec> property_corpus(std::uint64_t seed, int randoms = 12) {
  std::vector<MarkovChainSpec> out;
  for (auto& named : mcmeasure::catalog::corpus()) out.push_back(named.chain);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < randoms; ++k) {
    const std::size_t ell = 2 + static_cast<std::size_t>(rng() % 3);
    out.push_back(random_chain(ell, rng, 0.3 + 0.5 * uniform01(rng)));
  }
  return out;
}

/// Plain product of path probabilities (no logs).
inline double direct_mass(const MarkovChainSpec& c, const std::vector<std::size_t>& w) {
  if (w.empty()) return 1.0;
  double m = c.initial()[w[0]];
  for (std::size_t k = 1; k < w.size(); ++k) {
    m *= c.transition()(w[k - 1], w[k]);
  }
  return m;
}

/// Calls visit(word, mass) for every positive-mass word of length exactly n.
inline void enumerate_generation(const MarkovChainSpec& c, std::size_t n,
                                 const std::function<void(const std::vector<std::size_t>&, double)>& visit) {
  std::vector<std::size_t> w;
  std::function<void(double)> rec = [&](double mass) {
    if (w.size() == n) {
      visit(w, mass);
      return;
    }
    for (std::size_t j = 0; j < c.ell(); ++j) {
      const double f = w.empty() ? c.initial()[j] : c.transition()(w.back(), j);
      if (f <= 0.0) continue;
      w.push_back(j);
      rec(mass * f);
      w.pop_back();
    }
  };
  rec(1.0);
}

/// log_ell sum over generation-n words of m(I)^q, summed in extended precision.
inline double brute_partition_sum(const MarkovChainSpec& c, double q, std::size_t n) {
  long double total = 0.0L;
  enumerate_generation(c, n, [&](const std::vector<std::size_t>&, double m) {
    total += std::pow(static_cast<long double>(m), static_cast<long double>(q));
  });
  return static_cast<double>(std::log(total) / std::log(static_cast<long double>(c.ell())));
}

/// min/max over positive-mass I, J of generation <= depth of
/// sum_{g < horizon} sum_K m(I K J) / (m(I) m(J)), K ranging over gap words of
/// length g. Masses are plain products along the concatenated word.
inline std::pair<double, double> enumerated_qb_ratio(const MarkovChainSpec& c, std::size_t horizon,
                                                     std::size_t depth) {
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t k = 1; k <= depth; ++k) {
    enumerate_generation(c, k, [&](const std::vector<std::size_t>& w, double) { words.push_back(w); });
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& i : words) {
    for (const auto& j : words) {
      double joint = 0.0;
      std::vector<std::size_t> w = i;
      std::function<void(std::size_t)> gaps = [&](std::size_t left) {
        w.insert(w.end(), j.begin(), j.end());
        joint += direct_mass(c, w);
        w.resize(w.size() - j.size());
        if (left == 0) return;
        for (std::size_t s = 0; s < c.ell(); ++s) {
          if (c.transition()(w.back(), s) <= 0.0) continue;
          w.push_back(s);
          gaps(left - 1);
          w.pop_back();
        }
      };
      gaps(horizon - 1);
      const double r = joint / (direct_mass(c, i) * direct_mass(c, j));
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  return {lo, hi};
}

/// Spectral radius from a general eigen-decomposition.
inline double eigen_spectral_radius(const Matrix& a) {
  Eigen::EigenSolver<Matrix> es(a, false);
  double r = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) r = std::max(r, std::abs(es.eigenvalues()(i)));
  return r;
}

inline double log_base(double x, double base) { return std::log(x) / std::log(base); }

inline double binary_entropy(double p) { return -(p * std::log2(p) + (1 - p) * std::log2(1 - p)); }

}  // namespace testing_support
