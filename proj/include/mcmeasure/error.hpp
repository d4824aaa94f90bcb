#pragma once

#include <stdexcept>
#include <string>

namespace mcmeasure {

enum class Errc {
  row_sum,
  degenerate_entry,
  negative_entry,
  non_finite,
  zero_initial,
  dimension_mismatch,
  not_irreducible,
  no_convergence,
  domain,
  depth_cap,
  not_stationary_start,
  config,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mcmeasure
