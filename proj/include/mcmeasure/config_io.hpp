#pragma once

// Chain configuration files: one JSON object with keys ell, initial,
// transition and an optional label. Unknown keys are rejected.

#include "mcmeasure/chain.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mcmeasure {

struct ChainConfig {
  std::size_t ell = 0;
  std::vector<double> initial;
  std::vector<std::vector<double>> transition;
  std::string label;
};

struct LoadedChain {
  ChainConfig config;
  MarkovChainSpec chain;
};

/// Parses and validates; errors are Errc::config with "origin:line: " context.
LoadedChain parse_chain_config(std::string_view text, const std::string& origin);

LoadedChain load_chain_config(const std::string& path);

/// Serialized form accepted by parse_chain_config.
std::string dump_chain_config(const ChainConfig& config);

}  // namespace mcmeasure
