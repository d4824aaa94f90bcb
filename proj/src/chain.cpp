#include "mcmeasure/chain.hpp"

#include "mcmeasure/error.hpp"
#include "mcmeasure/tolerances.hpp"

#include <cmath>
#include <string>

namespace mcmeasure {

namespace {

std::vector<bool> reachable_from_initial(const Vector& initial, const Matrix& p) {
  const auto n = initial.size();
  std::vector<bool> live(static_cast<std::size_t>(n), false);
  std::vector<Eigen::Index> stack;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (initial(i) > 0.0) {
      live[static_cast<std::size_t>(i)] = true;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (p(i, j) > 0.0 && !live[static_cast<std::size_t>(j)]) {
        live[static_cast<std::size_t>(j)] = true;
        stack.push_back(j);
      }
    }
  }
  return live;
}

LiveBlock restrict_to(const std::vector<bool>& live, const Matrix& p) {
  std::vector<std::size_t> states;
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (live[i]) states.push_back(i);
  }
  const auto k = static_cast<Eigen::Index>(states.size());
  Matrix sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      sub(a, b) = p(static_cast<Eigen::Index>(states[static_cast<std::size_t>(a)]),
                    static_cast<Eigen::Index>(states[static_cast<std::size_t>(b)]));
    }
  }
  // Live states form a closed set, so the restricted rows still sum to 1.
  return LiveBlock{std::move(states), TransitionMatrix(NonnegMatrix(std::move(sub)))};
}

}  // namespace

MarkovChainSpec::MarkovChainSpec(Distribution initial, TransitionMatrix transition)
    : initial_(std::move(initial)),
      transition_(std::move(transition)),
      live_(reachable_from_initial(initial_.weights(), transition_.entries())),
      block_(restrict_to(live_, transition_.entries())),
      live_irreducible_(block_.transition.irreducible()) {}

void MarkovChainSpec::require_irreducible() const {
  if (!live_irreducible_) {
    throw Error(Errc::not_irreducible,
                "transition matrix is reducible on the states reachable from the initial support");
  }
}

MarkovChainSpec validate_chain(std::size_t ell, Vector initial, Matrix transition) {
  if (ell < 2) throw Error(Errc::dimension_mismatch, "alphabet size must be at least 2");
  if (ell > tolerance::kMaxAlphabet) {
    throw Error(Errc::dimension_mismatch,
                "alphabet size exceeds " + std::to_string(tolerance::kMaxAlphabet));
  }
  const auto n = static_cast<Eigen::Index>(ell);
  if (initial.size() != n) {
    throw Error(Errc::dimension_mismatch, "initial distribution has length " +
                                              std::to_string(initial.size()) + ", expected " +
                                              std::to_string(ell));
  }
  if (transition.rows() != n || transition.cols() != n) {
    throw Error(Errc::dimension_mismatch, "transition matrix is " +
                                              std::to_string(transition.rows()) + "x" +
                                              std::to_string(transition.cols()) + ", expected " +
                                              std::to_string(ell) + "x" + std::to_string(ell));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(initial(i))) throw Error(Errc::non_finite, "initial weight not finite");
    if (initial(i) < 0.0) {
      throw Error(Errc::negative_entry, "initial weight " + std::to_string(i) + " is negative");
    }
  }
  const double total = initial.sum();
  if (!(total > 0.0)) throw Error(Errc::zero_initial, "initial distribution sums to 0");

  TransitionMatrix p{NonnegMatrix(std::move(transition))};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (p.entries()(i, j) == 1.0) {
        throw Error(Errc::degenerate_entry, "entry (" + std::to_string(i) + "," +
                                                std::to_string(j) + ") equals 1");
      }
    }
  }
  initial /= total;
  return MarkovChainSpec(Distribution(std::move(initial)), std::move(p));
}

MarkovChainSpec validate_chain(std::size_t ell, const std::vector<double>& initial,
                               const std::vector<std::vector<double>>& transition) {
  Vector init = Eigen::Map<const Vector>(initial.data(), static_cast<Eigen::Index>(initial.size()));
  if (transition.size() != ell) {
    throw Error(Errc::dimension_mismatch, "transition matrix has " +
                                              std::to_string(transition.size()) +
                                              " rows, expected " + std::to_string(ell));
  }
  const auto n = static_cast<Eigen::Index>(ell);
  Matrix p(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = transition[static_cast<std::size_t>(i)];
    if (row.size() != ell) {
      throw Error(Errc::dimension_mismatch, "row " + std::to_string(i) + " has length " +
                                                std::to_string(row.size()) + ", expected " +
                                                std::to_string(ell));
    }
    for (Eigen::Index j = 0; j < n; ++j) p(i, j) = row[static_cast<std::size_t>(j)];
  }
  return validate_chain(ell, std::move(init), std::move(p));
}

}  // namespace mcmeasure
