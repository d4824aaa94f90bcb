#include "mcmeasure/catalog.hpp"

#include "mcmeasure/error.hpp"

#include <algorithm>
#include <random>

namespace mcmeasure::catalog {

namespace {

Vector uniform(std::size_t ell) {
  return Vector::Constant(static_cast<Eigen::Index>(ell), 1.0 / static_cast<double>(ell));
}

Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

MarkovChainSpec cantor() {
  Matrix p(3, 3);
  p << 0.5, 0.0, 0.5, 0.5, 0.0, 0.5, 0.5, 0.0, 0.5;
  Vector init(3);
  init << 0.5, 0.0, 0.5;
  return validate_chain(3, init, p);
}

MarkovChainSpec bernoulli(const std::vector<double>& p) {
  const Vector row = to_vector(p);
  const auto n = row.size();
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m.row(i) = row.transpose();
  return validate_chain(p.size(), row, m);
}

MarkovChainSpec tukia(double p) {
  Matrix m(2, 2);
  m << p, 1.0 - p, 1.0 - p, p;
  return validate_chain(2, uniform(2), m);
}

Matrix z_walk_matrix(std::size_t ell) {
  if (ell < 2) throw Error(Errc::domain, "walk needs at least two states");
  const auto n = static_cast<Eigen::Index>(ell);
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, (i + 1) % n) += 0.5;
    m(i, (i + n - 1) % n) += 0.5;
  }
  return m;
}

MarkovChainSpec z_walk(std::size_t ell) { return validate_chain(ell, uniform(ell), z_walk_matrix(ell)); }

MarkovChainSpec two_state(double a, double b) {
  return two_state(a, b, {b / (a + b), a / (a + b)});
}

MarkovChainSpec two_state(double a, double b, const std::vector<double>& initial) {
  Matrix m(2, 2);
  m << 1.0 - a, a, b, 1.0 - b;
  return validate_chain(2, to_vector(initial), m);
}

MarkovChainSpec permuted_rows(const std::vector<double>& a, std::uint64_t seed) {
  const std::size_t ell = a.size();
  const auto n = static_cast<Eigen::Index>(ell);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      std::vector<double> row = a;
      // Fisher-Yates with our own index draw so results do not depend on
      // the standard library's shuffle.
      for (std::size_t k = ell - 1; k > 0; --k) {
        std::swap(row[k], row[static_cast<std::size_t>(rng() % (k + 1))]);
      }
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
    }
    MarkovChainSpec c = validate_chain(ell, uniform(ell), m);
    if (c.irreducible()) return c;
  }
  throw Error(Errc::not_irreducible, "no irreducible row permutation found");
}

MarkovChainSpec four_state_nonuniform() {
  Matrix m(4, 4);
  m << 1.0 / 3, 0.0, 1.0 / 3, 1.0 / 3,  //
      0.0, 0.5, 0.0, 0.5,               //
      0.5, 0.5, 0.0, 0.0,               //
      0.5, 0.5, 0.0, 0.0;
  return validate_chain(4, uniform(4), m);
}

MarkovChainSpec three_state_nonmaximal() {
  Matrix m(3, 3);
  m << 1.0 / 3, 1.0 / 3, 1.0 / 3,  //
      0.5, 0.0, 0.5,               //
      0.5, 0.0, 0.5;
  return validate_chain(3, uniform(3), m);
}

MarkovChainSpec random_chain(std::size_t ell, std::uint64_t seed, double density) {
  const auto n = static_cast<Eigen::Index>(ell);
  std::mt19937_64 rng(seed);
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, (i + 1) % n) = 0.05 + unit_uniform(rng);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != (i + 1) % n && unit_uniform(rng) < density) m(i, j) = 0.05 + unit_uniform(rng);
    }
    if ((m.row(i).array() > 0.0).count() < 2) {
      Eigen::Index j = static_cast<Eigen::Index>(rng() % ell);
      if (j == (i + 1) % n) j = (j + 1) % n;
      m(i, j) = 0.05 + unit_uniform(rng);
    }
    m.row(i) /= m.row(i).sum();
  }
  Vector init(n);
  for (Eigen::Index i = 0; i < n; ++i) init(i) = 0.05 + unit_uniform(rng);
  init /= init.sum();
  return validate_chain(ell, init, m);
}

MarkovChainSpec with_stationary_start(const MarkovChainSpec& chain) {
  return validate_chain(chain.ell(), stationary_distribution(chain.transition()).weights(),
                        chain.transition().entries());
}

std::vector<Named> corpus() {
  std::vector<Named> out;
  out.push_back({"cantor", cantor()});
  out.push_back({"bernoulli_0.2_0.3_0.5", bernoulli({0.2, 0.3, 0.5})});
  out.push_back({"tukia_0.3", tukia(0.3)});
  out.push_back({"z_walk_3", z_walk(3)});
  out.push_back({"z_walk_5", z_walk(5)});
  out.push_back({"two_state_0.2_0.4", two_state(0.2, 0.4)});
  out.push_back({"four_state_nonuniform", four_state_nonuniform()});
  out.push_back({"three_state_nonmaximal", three_state_nonmaximal()});
  out.push_back({"permuted_rows_0.1_0.3_0.6", permuted_rows({0.1, 0.3, 0.6}, 7)});
  out.push_back({"random_3_a", random_chain(3, 11)});
  out.push_back({"random_4_b", random_chain(4, 23, 0.4)});
  return out;
}

}  // namespace mcmeasure::catalog
