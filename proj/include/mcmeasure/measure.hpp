#pragma once

// The measure m on [0,1): words, cylinder masses, distribution function,
// sampling, shift preimages and support combinatorics.

#include "mcmeasure/chain.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcmeasure {

using BigCount = boost::multiprecision::cpp_int;

/// Finite word over {0, ..., ell-1}; the empty word is [0,1).
class Word {
 public:
  explicit Word(std::size_t ell) : ell_(ell) {}
  Word(std::size_t ell, std::vector<std::size_t> digits);

  /// "0220" for ell <= 10, otherwise comma-separated ("3,11,0").
  static Word parse(std::size_t ell, std::string_view text);

  std::size_t ell() const noexcept { return ell_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  std::size_t operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<std::size_t>& digits() const noexcept { return digits_; }

  void push_back(std::size_t digit);
  void pop_back() { digits_.pop_back(); }

  /// Left endpoint sum_i digit_i ell^-i of the interval.
  double left_endpoint() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::size_t ell_;
  std::vector<std::size_t> digits_;
};

/// ln(mass) with an explicit zero.
class LogMass {
 public:
  static LogMass zero() noexcept { return LogMass(); }
  static LogMass one() noexcept { return from_log(0.0); }
  static LogMass from_log(double log_value) noexcept { return LogMass(log_value); }
  static LogMass from_mass(double mass);

  bool is_zero() const noexcept { return !log_.has_value(); }
  /// ln(mass); -infinity for zero.
  double log() const noexcept;
  double mass() const noexcept;

  friend LogMass operator*(const LogMass& a, const LogMass& b) noexcept;

 private:
  LogMass() = default;
  explicit LogMass(double v) : log_(v) {}
  std::optional<double> log_;
};

LogMass cylinder_mass(const MarkovChainSpec& chain, const Word& w);

/// Masses of the ell children of w, given parent = cylinder_mass(chain, w).
std::vector<LogMass> children_masses(const MarkovChainSpec& chain, const Word& w,
                                     const LogMass& parent);

/// F(x) = m([0,x]) from the first `depth` base-ell digits of x.
/// Error is at most the mass of the depth-level cylinder containing x.
double cdf(const MarkovChainSpec& chain, double x, std::size_t depth);

/// Trajectory X_1..X_depth drawn with std::mt19937_64(seed); each step takes
/// the top 53 bits of one engine output as a uniform in [0,1) and inverts the
/// cumulative row (initial distribution for X_1).
Word sample(const MarkovChainSpec& chain, std::size_t depth, std::uint64_t seed);

/// `count` consecutive trajectories from one engine seeded with `seed`.
std::vector<Word> sample_many(const MarkovChainSpec& chain, std::size_t count, std::size_t depth,
                              std::uint64_t seed);

/// Mass of sigma^{-1}(I_w) = union over j of I_{j w}.
LogMass shift_preimage_mass(const MarkovChainSpec& chain, const Word& w);

/// N_n, the number of generation-n intervals with positive mass (exact).
BigCount support_count(const MarkovChainSpec& chain, std::size_t n);

bool support_contains(const MarkovChainSpec& chain, const Word& w);

/// Visits every positive-mass word of length 1..max_depth in depth-first,
/// lexicographic order. Throws Errc::depth_cap when the number of such words
/// exceeds tolerance::kEnumerationCap.
void for_each_support_word(const MarkovChainSpec& chain, std::size_t max_depth,
                           const std::function<void(const Word&, const LogMass&)>& visit);

/// Number of positive-mass words of length 1..max_depth (exact).
BigCount support_words_up_to(const MarkovChainSpec& chain, std::size_t max_depth);

}  // namespace mcmeasure
