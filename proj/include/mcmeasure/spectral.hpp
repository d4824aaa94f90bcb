#pragma once

// Nonnegative-matrix machinery: entrywise powers, Perron roots, stationary
// distributions and the derivative of the Perron root along q.

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mcmeasure {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Pattern = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Square matrix with finite, nonnegative entries.
class NonnegMatrix {
 public:
  explicit NonnegMatrix(Matrix entries);

  static NonnegMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t order() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Matrix& entries() const noexcept { return entries_; }

  /// Positions of the strictly positive entries.
  Pattern pattern() const { return entries_.array() > 0.0; }

 private:
  Matrix entries_;
};

/// Row-stochastic nonnegative matrix. The chain-level rule that no entry
/// equals 1 is checked by validate_chain, not here.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(NonnegMatrix base);

  static TransitionMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t order() const noexcept { return base_.order(); }
  double operator()(std::size_t i, std::size_t j) const { return base_(i, j); }
  const NonnegMatrix& base() const noexcept { return base_; }
  const Matrix& entries() const noexcept { return base_.entries(); }
  Pattern pattern() const { return base_.pattern(); }
  bool irreducible() const noexcept { return irreducible_; }

 private:
  NonnegMatrix base_;
  bool irreducible_;
};

/// Probability vector: nonnegative weights summing to 1.
class Distribution {
 public:
  explicit Distribution(Vector weights);

  std::size_t size() const noexcept { return static_cast<std::size_t>(weights_.size()); }
  double operator[](std::size_t i) const { return weights_(static_cast<Eigen::Index>(i)); }
  const Vector& weights() const noexcept { return weights_; }

 private:
  Vector weights_;
};

/// Perron root with its left and right eigenvectors, each scaled to sum 1.
struct SpectralTriple {
  double lambda = 0.0;
  Vector left;
  Vector right;
};

/// Entry (i,j) is p_ij^q, with 0^q = 0 for every q (including q = 0).
NonnegMatrix elementwise_power(const TransitionMatrix& p, double q);

/// Strong connectivity of the digraph i -> j for pattern(i,j).
bool is_irreducible(const Pattern& pattern);

/// Shifted power iteration on the irreducible nonnegative matrix `a`.
/// Throws Errc::not_irreducible or Errc::no_convergence.
SpectralTriple perron_root(const NonnegMatrix& a);

/// Unique nu with nu P = nu, by a direct linear solve (works for periodic P).
Distribution stationary_distribution(const TransitionMatrix& p);

/// d lambda_q / dq, where lambda_q is the Perron root of P_q.
double perron_derivative(const TransitionMatrix& p, double q);

}  // namespace mcmeasure
