#include "mcmeasure/spectral.hpp"

#include "mcmeasure/error.hpp"
#include "mcmeasure/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace mcmeasure {

namespace {

Matrix matrix_from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(Errc::dimension_mismatch, "matrix rows must all have length " + std::to_string(n));
    }
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// reach[i][j] is true when j can be reached from i in one or more steps.
std::vector<std::vector<bool>> reachability(const Pattern& pattern) {
  const auto n = static_cast<std::size_t>(pattern.rows());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (pattern(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) && !reach[s][j]) {
          reach[s][j] = true;
          stack.push_back(j);
        }
      }
    }
  }
  return reach;
}

// Iterates v <- M v / |M v|_1 from the all-ones vector until successive
// iterates agree componentwise to tolerance::kPowerIteration (relative).
constexpr std::size_t kWarmupSteps = 500;

double relative_change(const Vector& next, const Vector& prev) {
  return ((next - prev).array().abs() / next.array()).maxCoeff();
}

// Power iteration on m + rho_k I with rho_k = max diagonal + L_k, where L_k =
// min_i (m v)_i / v_i is the lower Collatz-Wielandt bound of the current
// iterate. L_k never exceeds the Perron root and never decreases, so the
// shift stays positive (periodic patterns converge) and on the scale of the
// root (tiny roots do not stall behind a unit shift).
//
// When two eigenvalues nearly tie the ratio is close to 1, so after a warmup
// each step is preceded by one inverse-iteration jump on sigma I - m, sigma
// just above the upper bound U_k = max_i (m v)_i / v_i. For sigma > lambda
// that inverse is a positive matrix whose dominant eigenvector is the Perron
// vector. Convergence is judged on the plain shifted step: componentwise
// relative change below 1e-13, or, once jumps are in play (they leave
// rounding noise in tiny components), absolute change below 1e-13 with
// relative change below 1e-10.
Vector power_iterate(const Matrix& m) {
  const auto n = m.rows();
  const double diag = m.diagonal().maxCoeff();
  Vector v = Vector::Constant(n, 1.0 / static_cast<double>(n));
  for (std::size_t it = 0; it < tolerance::kMaxPowerIterations; ++it) {
    if (it >= kWarmupSteps) {
      const Eigen::ArrayXd ratio = (m * v).array() / v.array();
      const double upper = ratio.maxCoeff();
      const double sigma = upper + std::max(upper - ratio.minCoeff(), 1e-13 * upper);
      Vector jump = (sigma * Matrix::Identity(n, n) - m).partialPivLu().solve(v);
      if (jump.allFinite() && (jump.array() > 0.0).all()) v = jump / jump.sum();
    }
    const Vector mv = m * v;
    Vector w = mv + (diag + (mv.array() / v.array()).minCoeff()) * v;
    w /= w.sum();
    const double change = relative_change(w, v);
    const double absolute = (w - v).cwiseAbs().maxCoeff();
    v = std::move(w);
    if (change < tolerance::kPowerIteration) return v;
    if (it >= kWarmupSteps && absolute < tolerance::kPowerIteration && change < 1e-10) return v;
  }
  throw Error(Errc::no_convergence,
              "power iteration did not converge in " +
                  std::to_string(tolerance::kMaxPowerIterations) + " iterations");
}

}  // namespace

NonnegMatrix::NonnegMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw Error(Errc::dimension_mismatch, "matrix must be square and nonempty");
  }
  if (static_cast<std::size_t>(entries_.rows()) > tolerance::kMaxAlphabet) {
    throw Error(Errc::dimension_mismatch, "matrix order exceeds " +
                                              std::to_string(tolerance::kMaxAlphabet));
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      const double v = entries_(i, j);
      if (!std::isfinite(v)) {
        throw Error(Errc::non_finite, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") is not finite");
      }
      if (v < 0.0) {
        throw Error(Errc::negative_entry, "entry (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") is negative");
      }
    }
  }
}

NonnegMatrix NonnegMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  return NonnegMatrix(matrix_from_rows(rows));
}

TransitionMatrix::TransitionMatrix(NonnegMatrix base) : base_(std::move(base)) {
  const Matrix& m = base_.entries();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double s = m.row(i).sum();
    if (std::abs(s - 1.0) > tolerance::kRowSum) {
      std::ostringstream os;
      os.precision(17);
      os << "row " << i << " sums to " << s;
      throw Error(Errc::row_sum, os.str());
    }
  }
  irreducible_ = is_irreducible(base_.pattern());
}

TransitionMatrix TransitionMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  return TransitionMatrix(NonnegMatrix::from_rows(rows));
}

Distribution::Distribution(Vector weights) : weights_(std::move(weights)) {
  if (weights_.size() == 0) throw Error(Errc::dimension_mismatch, "empty distribution");
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_(i))) throw Error(Errc::non_finite, "distribution weight not finite");
    if (weights_(i) < 0.0) throw Error(Errc::negative_entry, "distribution weight is negative");
  }
  if (std::abs(weights_.sum() - 1.0) > tolerance::kDistribution) {
    throw Error(Errc::row_sum, "distribution weights do not sum to 1");
  }
}

NonnegMatrix elementwise_power(const TransitionMatrix& p, double q) {
  const Matrix& m = p.entries();
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) > 0.0) out(i, j) = std::pow(m(i, j), q);
    }
  }
  return NonnegMatrix(std::move(out));
}

bool is_irreducible(const Pattern& pattern) {
  const auto n = pattern.rows();
  if (n != pattern.cols() || n == 0) return false;
  // Strongly connected iff state 0 reaches everything in the graph and in
  // its transpose.
  auto reaches_all = [n](const Pattern& g) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Eigen::Index> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < n; ++j) {
        if (g(i, j) && !seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = true;
          stack.push_back(j);
        }
      }
    }
    for (bool s : seen) {
      if (!s) return false;
    }
    return true;
  };
  const Pattern transposed = pattern.transpose();
  return reaches_all(pattern) && reaches_all(transposed);
}

SpectralTriple perron_root(const NonnegMatrix& a) {
  if (!is_irreducible(a.pattern())) {
    throw Error(Errc::not_irreducible, "Perron root requires an irreducible matrix");
  }
  const Matrix& m = a.entries();
  const auto n = m.rows();
  if (n == 1) return SpectralTriple{m(0, 0), Vector::Ones(1), Vector::Ones(1)};

  // Unit max entry keeps extreme q away from overflow.
  const double scale = m.maxCoeff();
  const Matrix b = m / scale;

  SpectralTriple out;
  out.right = power_iterate(b);
  out.left = power_iterate(b.transpose());
  out.lambda = scale * out.left.dot(b * out.right) / out.left.dot(out.right);
  return out;
}

Distribution stationary_distribution(const TransitionMatrix& p) {
  const auto reach = reachability(p.pattern());
  const std::size_t n = p.order();
  // A state reachable from every state lies in the unique closed class.
  std::size_t anchor = n;
  for (std::size_t j = 0; j < n && anchor == n; ++j) {
    bool from_all = true;
    for (std::size_t i = 0; i < n; ++i) from_all = from_all && reach[i][j];
    if (from_all) anchor = j;
  }
  if (anchor == n) {
    throw Error(Errc::not_irreducible,
                "stationary distribution is not unique (more than one closed class)");
  }

  const auto ni = static_cast<Eigen::Index>(n);
  Matrix system(ni + 1, ni);
  system.topRows(ni) = p.entries().transpose() - Matrix::Identity(ni, ni);
  system.row(ni).setOnes();
  Vector rhs = Vector::Zero(ni + 1);
  rhs(ni) = 1.0;
  Vector nu = system.colPivHouseholderQr().solve(rhs);
  // Transient states carry exactly zero mass; clear rounding.
  for (std::size_t i = 0; i < n; ++i) {
    if (!reach[anchor][i]) nu(static_cast<Eigen::Index>(i)) = 0.0;
  }
  nu /= nu.sum();
  return Distribution(std::move(nu));
}

double perron_derivative(const TransitionMatrix& p, double q) {
  const NonnegMatrix pq = elementwise_power(p, q);
  const SpectralTriple t = perron_root(pq);
  const Matrix& e = p.entries();
  Matrix d = Matrix::Zero(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
      if (e(i, j) > 0.0) d(i, j) = pq.entries()(i, j) * std::log(e(i, j));
    }
  }
  return t.left.dot(d * t.right) / t.left.dot(t.right);
}

}  // namespace mcmeasure
