#include "mcmeasure/measure.hpp"

#include "mcmeasure/error.hpp"
#include "mcmeasure/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace mcmeasure {

namespace {

void require_same_alphabet(const MarkovChainSpec& chain, const Word& w) {
  if (w.ell() != chain.ell()) {
    throw Error(Errc::dimension_mismatch, "word alphabet " + std::to_string(w.ell()) +
                                              " does not match chain alphabet " +
                                              std::to_string(chain.ell()));
  }
}

double entry(const MarkovChainSpec& chain, std::size_t i, std::size_t j) {
  return chain.transition()(i, j);
}

std::size_t draw(std::mt19937_64& engine, const Vector& weights) {
  const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (Eigen::Index j = 0; j < weights.size(); ++j) {
    if (weights(j) <= 0.0) continue;
    last_positive = static_cast<std::size_t>(j);
    cumulative += weights(j);
    if (u < cumulative) return last_positive;
  }
  // Rounding left u above the accumulated total.
  return last_positive;
}

Word sample_with(const MarkovChainSpec& chain, std::size_t depth, std::mt19937_64& engine) {
  Word w(chain.ell());
  if (depth == 0) return w;
  std::size_t state = draw(engine, chain.initial().weights());
  w.push_back(state);
  for (std::size_t k = 1; k < depth; ++k) {
    state = draw(engine, chain.transition().entries().row(static_cast<Eigen::Index>(state)).transpose());
    w.push_back(state);
  }
  return w;
}

}  // namespace

Word::Word(std::size_t ell, std::vector<std::size_t> digits) : ell_(ell), digits_(std::move(digits)) {
  for (std::size_t d : digits_) {
    if (d >= ell_) throw Error(Errc::domain, "digit " + std::to_string(d) + " out of range");
  }
}

Word Word::parse(std::size_t ell, std::string_view text) {
  std::vector<std::size_t> digits;
  if (text.find(',') != std::string_view::npos || ell > 10) {
    std::size_t pos = 0;
    while (!text.empty()) {
      const std::size_t next = std::min(text.find(',', pos), text.size());
      const std::string token(text.substr(pos, next - pos));
      if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(Errc::domain, "bad word token '" + token + "'");
      }
      digits.push_back(static_cast<std::size_t>(std::stoul(token)));
      if (next == text.size()) break;
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(Errc::domain, std::string("bad digit '") + c + "'");
      digits.push_back(static_cast<std::size_t>(c - '0'));
    }
  }
  return Word(ell, std::move(digits));
}

void Word::push_back(std::size_t digit) {
  if (digit >= ell_) throw Error(Errc::domain, "digit " + std::to_string(digit) + " out of range");
  digits_.push_back(digit);
}

double Word::left_endpoint() const {
  double x = 0.0;
  double scale = 1.0;
  for (std::size_t d : digits_) {
    scale /= static_cast<double>(ell_);
    x += static_cast<double>(d) * scale;
  }
  return x;
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (ell_ > 10 && i > 0) os << ',';
    os << digits_[i];
  }
  return os.str();
}

LogMass LogMass::from_mass(double mass) {
  if (!(mass >= 0.0) || mass > 1.0 + 1e-12) {
    throw Error(Errc::domain, "mass must lie in [0,1]");
  }
  return mass == 0.0 ? zero() : from_log(std::log(mass));
}

double LogMass::log() const noexcept {
  return log_ ? *log_ : -std::numeric_limits<double>::infinity();
}

double LogMass::mass() const noexcept { return log_ ? std::exp(*log_) : 0.0; }

LogMass operator*(const LogMass& a, const LogMass& b) noexcept {
  if (a.is_zero() || b.is_zero()) return LogMass::zero();
  return LogMass::from_log(*a.log_ + *b.log_);
}

LogMass cylinder_mass(const MarkovChainSpec& chain, const Word& w) {
  require_same_alphabet(chain, w);
  if (w.empty()) return LogMass::one();
  const double first = chain.initial()[w[0]];
  if (first <= 0.0) return LogMass::zero();
  double acc = std::log(first);
  for (std::size_t k = 1; k < w.size(); ++k) {
    const double p = entry(chain, w[k - 1], w[k]);
    if (p <= 0.0) return LogMass::zero();
    acc += std::log(p);
  }
  return LogMass::from_log(acc);
}

std::vector<LogMass> children_masses(const MarkovChainSpec& chain, const Word& w,
                                     const LogMass& parent) {
  require_same_alphabet(chain, w);
  const std::size_t ell = chain.ell();
  std::vector<LogMass> out;
  out.reserve(ell);
  for (std::size_t j = 0; j < ell; ++j) {
    const double factor = w.empty() ? chain.initial()[j] : entry(chain, w[w.size() - 1], j);
    out.push_back(factor > 0.0 ? parent * LogMass::from_log(std::log(factor)) : LogMass::zero());
  }
  return out;
}

double cdf(const MarkovChainSpec& chain, double x, std::size_t depth) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(Errc::domain, "cdf argument must lie in [0,1]");
  if (depth == 0) throw Error(Errc::domain, "cdf depth must be at least 1");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const std::size_t ell = chain.ell();
  Word prefix(ell);
  LogMass prefix_mass = LogMass::one();
  double total = 0.0;
  double y = x;
  for (std::size_t k = 0; k < depth; ++k) {
    y *= static_cast<double>(ell);
    const double fl = std::floor(y);
    const auto digit = std::min(static_cast<std::size_t>(fl), ell - 1);
    y -= static_cast<double>(digit);
    const auto children = children_masses(chain, prefix, prefix_mass);
    for (std::size_t j = 0; j < digit; ++j) total += children[j].mass();
    prefix_mass = children[digit];
    if (prefix_mass.is_zero()) break;
    prefix.push_back(digit);
  }
  return std::min(total, 1.0);
}

Word sample(const MarkovChainSpec& chain, std::size_t depth, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  return sample_with(chain, depth, engine);
}

std::vector<Word> sample_many(const MarkovChainSpec& chain, std::size_t count, std::size_t depth,
                              std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_with(chain, depth, engine));
  return out;
}

LogMass shift_preimage_mass(const MarkovChainSpec& chain, const Word& w) {
  require_same_alphabet(chain, w);
  if (w.empty()) return LogMass::one();
  std::vector<double> logs;
  for (std::size_t j = 0; j < chain.ell(); ++j) {
    std::vector<std::size_t> digits{j};
    digits.insert(digits.end(), w.digits().begin(), w.digits().end());
    const LogMass m = cylinder_mass(chain, Word(chain.ell(), std::move(digits)));
    if (!m.is_zero()) logs.push_back(m.log());
  }
  if (logs.empty()) return LogMass::zero();
  const double top = *std::max_element(logs.begin(), logs.end());
  double s = 0.0;
  for (double l : logs) s += std::exp(l - top);
  return LogMass::from_log(top + std::log(s));
}

BigCount support_count(const MarkovChainSpec& chain, std::size_t n) {
  const std::size_t ell = chain.ell();
  if (n == 0) return BigCount(1);
  std::vector<BigCount> c(ell);
  for (std::size_t j = 0; j < ell; ++j) c[j] = chain.initial()[j] > 0.0 ? 1 : 0;
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<BigCount> next(ell);
    for (std::size_t k = 0; k < ell; ++k) {
      if (c[k] == 0) continue;
      for (std::size_t j = 0; j < ell; ++j) {
        if (entry(chain, k, j) > 0.0) next[j] += c[k];
      }
    }
    c = std::move(next);
  }
  BigCount total = 0;
  for (const auto& v : c) total += v;
  return total;
}

BigCount support_words_up_to(const MarkovChainSpec& chain, std::size_t max_depth) {
  BigCount total = 0;
  for (std::size_t n = 1; n <= max_depth; ++n) total += support_count(chain, n);
  return total;
}

bool support_contains(const MarkovChainSpec& chain, const Word& w) {
  return !cylinder_mass(chain, w).is_zero();
}

void for_each_support_word(const MarkovChainSpec& chain, std::size_t max_depth,
                           const std::function<void(const Word&, const LogMass&)>& visit) {
  if (support_words_up_to(chain, max_depth) > BigCount(tolerance::kEnumerationCap)) {
    throw Error(Errc::depth_cap, "enumeration to depth " + std::to_string(max_depth) +
                                     " exceeds " + std::to_string(tolerance::kEnumerationCap) +
                                     " cylinders");
  }
  Word w(chain.ell());
  std::function<void(const LogMass&)> descend = [&](const LogMass& mass) {
    if (w.size() == max_depth) return;
    const auto children = children_masses(chain, w, mass);
    for (std::size_t j = 0; j < children.size(); ++j) {
      if (children[j].is_zero()) continue;
      w.push_back(j);
      visit(w, children[j]);
      descend(children[j]);
      w.pop_back();
    }
  };
  descend(LogMass::one());
}

}  // namespace mcmeasure
