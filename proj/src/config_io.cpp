#include "mcmeasure/config_io.hpp"

#include "mcmeasure/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mcmeasure {

namespace {

using nlohmann::json;

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

std::size_t line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 1 : line_at(text, pos);
}

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& what) {
  throw Error(Errc::config, origin + ":" + std::to_string(line) + ": " + what);
}

double number_at(const json& v, const std::string& origin, std::size_t line, const std::string& where) {
  if (!v.is_number()) fail(origin, line, where + " must be a number");
  return v.get<double>();
}

}  // namespace

LoadedChain parse_chain_config(std::string_view text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(origin, line_at(text, e.byte == 0 ? 0 : e.byte - 1), std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(origin, 1, "top level must be an object");

  for (const auto& item : doc.items()) {
    const std::string& k = item.key();
    if (k != "ell" && k != "initial" && k != "transition" && k != "label") {
      fail(origin, line_of_key(text, k), "unknown key \"" + k + "\"");
    }
  }
  for (const char* k : {"ell", "initial", "transition"}) {
    if (!doc.contains(k)) fail(origin, 1, std::string("missing key \"") + k + "\"");
  }

  ChainConfig cfg;
  const std::size_t ell_line = line_of_key(text, "ell");
  const json& ell = doc["ell"];
  if (!ell.is_number_integer() || ell.get<long long>() < 2) {
    fail(origin, ell_line, "\"ell\" must be an integer >= 2");
  }
  cfg.ell = static_cast<std::size_t>(ell.get<long long>());

  const std::size_t init_line = line_of_key(text, "initial");
  const json& init = doc["initial"];
  if (!init.is_array()) fail(origin, init_line, "\"initial\" must be an array");
  for (std::size_t i = 0; i < init.size(); ++i) {
    cfg.initial.push_back(number_at(init[i], origin, init_line, "initial[" + std::to_string(i) + "]"));
  }

  const std::size_t tr_line = line_of_key(text, "transition");
  const json& tr = doc["transition"];
  if (!tr.is_array()) fail(origin, tr_line, "\"transition\" must be an array of rows");
  for (std::size_t i = 0; i < tr.size(); ++i) {
    if (!tr[i].is_array()) fail(origin, tr_line, "transition row " + std::to_string(i) + " must be an array");
    std::vector<double> row;
    for (std::size_t j = 0; j < tr[i].size(); ++j) {
      row.push_back(number_at(tr[i][j], origin, tr_line,
                              "transition[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    cfg.transition.push_back(std::move(row));
  }

  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail(origin, line_of_key(text, "label"), "\"label\" must be a string");
    cfg.label = doc["label"].get<std::string>();
  }

  try {
    MarkovChainSpec chain = validate_chain(cfg.ell, cfg.initial, cfg.transition);
    return LoadedChain{std::move(cfg), std::move(chain)};
  } catch (const Error& e) {
    const std::size_t line = (e.code() == Errc::zero_initial ||
                              std::string(e.what()).find("initial") != std::string::npos)
                                 ? init_line
                                 : tr_line;
    fail(origin, line, e.what());
  }
}

LoadedChain load_chain_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::config, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_chain_config(buf.str(), path);
}

std::string dump_chain_config(const ChainConfig& config) {
  json doc;
  doc["ell"] = config.ell;
  doc["initial"] = config.initial;
  doc["transition"] = config.transition;
  if (!config.label.empty()) doc["label"] = config.label;
  return doc.dump(2) + "\n";
}

}  // namespace mcmeasure
