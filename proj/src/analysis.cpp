#include "mcmeasure/analysis.hpp"

#include "mcmeasure/error.hpp"
#include "mcmeasure/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mcmeasure {

namespace {

double log_ell(std::size_t ell) { return std::log(static_cast<double>(ell)); }

const TransitionMatrix& live_transition(const MarkovChainSpec& chain) {
  chain.require_irreducible();
  return chain.live_block().transition;
}

}  // namespace

TauCurve::TauCurve(std::vector<TauPoint> points) : points_(std::move(points)) {}

double TauCurve::min_second_difference() const {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
    const auto& a = points_[i - 1];
    const auto& b = points_[i];
    const auto& c = points_[i + 1];
    const double left = (b.tau - a.tau) / (b.q - a.q);
    const double right = (c.tau - b.tau) / (c.q - b.q);
    worst = std::min(worst, (right - left) / (0.5 * (c.q - a.q)));
  }
  return worst;
}

double tau(const MarkovChainSpec& chain, double q) {
  const auto& p = live_transition(chain);
  return std::log(perron_root(elementwise_power(p, q)).lambda) / log_ell(chain.ell());
}

double tau_prime(const MarkovChainSpec& chain, double q) {
  const auto& p = live_transition(chain);
  const double lambda = perron_root(elementwise_power(p, q)).lambda;
  return perron_derivative(p, q) / (lambda * log_ell(chain.ell()));
}

double dimension_tau(const MarkovChainSpec& chain) { return -tau_prime(chain, 1.0); }

double row_entropy(const Vector& row, std::size_t ell) {
  double h = 0.0;
  for (Eigen::Index j = 0; j < row.size(); ++j) {
    if (row(j) > 0.0) h -= row(j) * std::log(row(j));
  }
  return h / log_ell(ell);
}

double dimension_entropy(const MarkovChainSpec& chain) {
  const auto& p = live_transition(chain);
  const Distribution pi = stationary_distribution(p);
  double dim = 0.0;
  for (std::size_t k = 0; k < p.order(); ++k) {
    dim += pi[k] * row_entropy(p.entries().row(static_cast<Eigen::Index>(k)).transpose(), chain.ell());
  }
  return dim;
}

double support_box_dim(const MarkovChainSpec& chain) { return tau(chain, 0.0); }

TauCurve tau_curve(const MarkovChainSpec& chain, std::span<const double> grid) {
  const auto& p = live_transition(chain);
  const double ln_ell = log_ell(chain.ell());
  std::vector<TauPoint> points;
  points.reserve(grid.size());
  for (double q : grid) {
    const double lambda = perron_root(elementwise_power(p, q)).lambda;
    points.push_back({q, std::log(lambda) / ln_ell, perron_derivative(p, q) / (lambda * ln_ell)});
  }
  return TauCurve(std::move(points));
}

std::vector<SpectrumPoint> legendre_spectrum(const MarkovChainSpec& chain,
                                             std::span<const double> grid) {
  const TauCurve curve = tau_curve(chain, grid);
  std::vector<SpectrumPoint> out;
  out.reserve(grid.size());
  for (const auto& pt : curve.points()) {
    const double alpha = -pt.tau_prime;
    out.push_back({pt.q, alpha, pt.q * alpha + pt.tau});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SpectrumPoint& a, const SpectrumPoint& b) { return a.alpha < b.alpha; });
  return out;
}

AlphaRange alpha_range(std::span<const SpectrumPoint> spectrum) {
  if (spectrum.empty()) throw Error(Errc::domain, "empty spectrum");
  return {spectrum.front().alpha, spectrum.back().alpha};
}

bool is_monofractal(const MarkovChainSpec& chain) {
  const double t0 = tau(chain, 0.0);
  for (double q : {-2.0, 2.0}) {
    if (std::abs(tau(chain, q) - t0 * (1.0 - q)) >= tolerance::kMonofractal) return false;
  }
  return true;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps) {
  if (steps == 0) throw Error(Errc::domain, "grid needs at least one point");
  if (!(lo <= hi)) throw Error(Errc::domain, "grid bounds out of order");
  if (steps == 1) return {lo};
  std::vector<double> g(steps);
  const double n = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / n;
  g.back() = hi;
  return g;
}

std::vector<double> default_q_grid() { return uniform_grid(-20.0, 20.0, 401); }

}  // namespace mcmeasure
