#include "mcmeasure/error.hpp"

namespace mcmeasure {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::row_sum: return "RowSumError";
    case Errc::degenerate_entry: return "DegenerateEntry";
    case Errc::negative_entry: return "NegativeEntry";
    case Errc::non_finite: return "NonFiniteEntry";
    case Errc::zero_initial: return "ZeroInitial";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_irreducible: return "NotIrreducible";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::domain: return "DomainError";
    case Errc::depth_cap: return "DepthCap";
    case Errc::not_stationary_start: return "NotStationaryStart";
    case Errc::config: return "ConfigError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace mcmeasure
