#pragma once

// Structure function tau, dimensions and the Legendre spectrum.
//
// All quantities are computed on the live block of the chain (states
// reachable from the initial support); logarithms are taken in base ell,
// the full alphabet size.

#include "mcmeasure/chain.hpp"

#include <span>
#include <vector>

namespace mcmeasure {

struct TauPoint {
  double q = 0.0;
  double tau = 0.0;
  double tau_prime = 0.0;
};

class TauCurve {
 public:
  explicit TauCurve(std::vector<TauPoint> points);

  const std::vector<TauPoint>& points() const noexcept { return points_; }

  /// Smallest discrete second difference (divided) along the grid; convexity
  /// means this is >= -1e-8. Returns +inf for fewer than three points.
  double min_second_difference() const;

 private:
  std::vector<TauPoint> points_;
};

struct SpectrumPoint {
  double q = 0.0;      // the grid point that produced it
  double alpha = 0.0;  // -tau'(q)
  double f = 0.0;      // q * alpha + tau(q)
};

/// Open interval of admissible Hoelder exponents, estimated from the grid ends.
struct AlphaRange {
  double lower = 0.0;
  double upper = 0.0;
};

/// tau(q) = log_ell(lambda_q), lambda_q the Perron root of P_q.
double tau(const MarkovChainSpec& chain, double q);
double tau_prime(const MarkovChainSpec& chain, double q);

/// dim m = -tau'(1).
double dimension_tau(const MarkovChainSpec& chain);

/// dim m = <pi | H>, H_k the base-ell entropy of row k.
double dimension_entropy(const MarkovChainSpec& chain);

/// tau(0) = box (and Hausdorff) dimension of the support.
double support_box_dim(const MarkovChainSpec& chain);

TauCurve tau_curve(const MarkovChainSpec& chain, std::span<const double> grid);

/// Parametric Legendre transform over the grid, sorted by alpha.
std::vector<SpectrumPoint> legendre_spectrum(const MarkovChainSpec& chain,
                                             std::span<const double> grid);

AlphaRange alpha_range(std::span<const SpectrumPoint> spectrum);

/// |tau(q) - tau(0)(1-q)| < 1e-9 at q = -2 and q = 2.
bool is_monofractal(const MarkovChainSpec& chain);

/// `steps` equally spaced points from lo to hi inclusive (steps >= 1).
std::vector<double> uniform_grid(double lo, double hi, std::size_t steps);

/// 401 points on [-20, 20].
std::vector<double> default_q_grid();

/// Base-ell entropy of a probability row; zero entries contribute nothing.
double row_entropy(const Vector& row, std::size_t ell);

}  // namespace mcmeasure
