#include "mcmeasure/cli.hpp"

#include "mcmeasure/analysis.hpp"
#include "mcmeasure/config_io.hpp"
#include "mcmeasure/empirical.hpp"
#include "mcmeasure/error.hpp"
#include "mcmeasure/gibbs.hpp"
#include "mcmeasure/measure.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace mcmeasure::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string config;
  std::string out;
  int digits = 17;
  std::optional<double> q;
  double q_min = -20.0;
  double q_max = 20.0;
  std::size_t steps = 401;
  std::size_t depth = 10;
  std::uint64_t seed = 0;
  std::size_t count = 10;
  std::size_t points = 1025;
};

class Csv {
 public:
  Csv(std::ostream& os, int digits) : os_(os) { os_ << std::setprecision(digits); }

  template <typename... Ts>
  void row(const Ts&... cells) {
    bool first = true;
    ((os_ << (first ? "" : ",") << cells, first = false), ...);
    os_ << '\n';
  }

 private:
  std::ostream& os_;
};

std::vector<double> grid_of(const Options& o) {
  if (o.q) return {*o.q};
  if (o.steps == 0) throw Error(Errc::domain, "--steps must be at least 1");
  if (o.q_min > o.q_max) throw Error(Errc::domain, "--q-min exceeds --q-max");
  return uniform_grid(o.q_min, o.q_max, o.steps);
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i).transpose()));
  return a;
}

void write_json(std::ostream& os, const json& doc) { os << doc.dump(2) << '\n'; }

int cmd_tau(const LoadedChain& in, const Options& o, std::ostream& os) {
  Csv csv(os, o.digits);
  csv.row("q", "tau", "tau_prime", "empirical_tau", "depth");
  for (double q : grid_of(o)) {
    csv.row(q, tau(in.chain, q), tau_prime(in.chain, q), empirical_tau(in.chain, q, o.depth), o.depth);
  }
  return 0;
}

int cmd_spectrum(const LoadedChain& in, const Options& o, std::ostream& os) {
  Csv csv(os, o.digits);
  csv.row("q", "alpha", "f");
  const std::vector<double> grid = grid_of(o);
  for (const SpectrumPoint& p : legendre_spectrum(in.chain, grid)) csv.row(p.q, p.alpha, p.f);
  return 0;
}

int cmd_dimension(const LoadedChain& in, const Options&, std::ostream& os) {
  json doc;
  doc["label"] = in.config.label;
  doc["dim_tau"] = dimension_tau(in.chain);
  doc["dim_entropy"] = dimension_entropy(in.chain);
  doc["support_dim"] = support_box_dim(in.chain);
  doc["monofractal"] = is_monofractal(in.chain);
  write_json(os, doc);
  return 0;
}

json gibbs_json(const GibbsChain& g, std::size_t depth) {
  json doc;
  doc["q"] = g.q;
  doc["lambda"] = g.lambda;
  doc["alpha"] = g.alpha;
  doc["d"] = vector_json(g.d);
  doc["comparability"] = g.comparability();
  doc["initial"] = vector_json(g.chain.initial().weights());
  doc["transition"] = matrix_json(g.chain.transition().entries());
  doc["identity_deviation"] = gibbs_identity_deviation(g, depth);
  doc["depth"] = depth;
  return doc;
}

int cmd_gibbs(const LoadedChain& in, const Options& o, std::ostream& os) {
  write_json(os, gibbs_json(gibbs_chain(in.chain, o.q.value_or(0.0)), o.depth));
  return 0;
}

int cmd_maximal(const LoadedChain& in, const Options& o, std::ostream& os) {
  const GibbsChain g = maximal_chain(in.chain);
  json doc = gibbs_json(g, o.depth);
  doc["support_dim"] = support_box_dim(in.chain);
  doc["dim_maximal"] = dimension_tau(g.chain);
  doc["dim_base"] = dimension_tau(in.chain);
  doc["monofractal"] = is_monofractal(g.chain);
  write_json(os, doc);
  return 0;
}

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string note;
};

std::vector<Check> run_checks(const MarkovChainSpec& c, std::size_t depth) {
  std::vector<Check> out;
  auto add = [&](std::string name, double value, double tol, std::string note = {}) {
    out.push_back({std::move(name), value <= tol, value, tol, std::move(note)});
  };

  double additivity = 0.0;
  double generation_total = 0.0;
  for_each_support_word(c, depth, [&](const Word& w, const LogMass& m) {
    if (w.size() == depth) {
      generation_total += m.mass();
      return;
    }
    double children = 0.0;
    for (const LogMass& child : children_masses(c, w, m)) children += child.mass();
    additivity = std::max(additivity, std::abs(children - m.mass()) / m.mass());
  });
  add("additivity", additivity, 1e-12);
  add("generation_mass", std::abs(generation_total - 1.0), 1e-10);

  add("tau_at_one", std::abs(tau(c, 1.0)), 1e-10);
  add("dimension_equality", std::abs(dimension_tau(c) - dimension_entropy(c)), 1e-8);

  const TauCurve curve = tau_curve(c, default_q_grid());
  add("tau_convexity", std::max(0.0, -curve.min_second_difference()), 1e-8);

  const double dim = dimension_tau(c);
  const double supp = support_box_dim(c);
  const double bound_violation =
      std::max({0.0, -dim, dim - supp, supp - 1.0});
  add("dimension_bounds", bound_violation, 1e-10);

  double gibbs_worst = 0.0;
  double support_mismatch = 0.0;
  for (double q : {-1.0, 0.0, 0.7, 2.0}) {
    const GibbsChain g = gibbs_chain(c, q);
    gibbs_worst = std::max(gibbs_worst, gibbs_identity_deviation(g, depth));
    for (std::size_t n = 1; n <= std::min<std::size_t>(depth, 8); ++n) {
      if (support_count(g.chain, n) != support_count(c, n)) support_mismatch = 1.0;
    }
  }
  add("gibbs_identity", gibbs_worst, 1e-10, "q in {-1, 0, 0.7, 2}");
  add("support_preservation", support_mismatch, 0.0);

  const double n = static_cast<double>(std::max<std::size_t>(depth, 1));
  double tau_gap = 0.0;
  for (double q : {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0}) {
    tau_gap = std::max(tau_gap, std::abs(empirical_tau(c, q, depth) - tau(c, q)));
  }
  add("empirical_tau", tau_gap, 2.0 / n, "bound 2/depth");

  if (has_stationary_start(c)) {
    add("shift_invariance", shift_invariance_deviation(c, depth), 1e-12);
  } else {
    out.push_back({"shift_invariance", true, 0.0, 1e-12, "skipped: start is not stationary"});
  }
  return out;
}

int cmd_check(const LoadedChain& in, const Options& o, std::ostream& os) {
  if (o.depth == 0) throw Error(Errc::domain, "--depth must be at least 1");
  const std::vector<Check> checks = run_checks(in.chain, o.depth);
  json doc;
  doc["label"] = in.config.label;
  doc["depth"] = o.depth;
  json list = json::array();
  bool all = true;
  for (const Check& c : checks) {
    json item{{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"tolerance", c.tolerance}};
    if (!c.note.empty()) item["note"] = c.note;
    list.push_back(item);
    all = all && c.pass;
  }
  doc["checks"] = list;
  doc["all_pass"] = all;
  write_json(os, doc);
  return all ? 0 : 1;
}

int cmd_sample(const LoadedChain& in, const Options& o, std::ostream& os) {
  Csv csv(os, o.digits);
  csv.row("index", "word", "x");
  const std::vector<Word> words = sample_many(in.chain, o.count, o.depth, o.seed);
  for (std::size_t i = 0; i < words.size(); ++i) csv.row(i, words[i].to_string(), words[i].left_endpoint());
  return 0;
}

int cmd_cdf(const LoadedChain& in, const Options& o, std::ostream& os) {
  if (o.points < 2) throw Error(Errc::domain, "--points must be at least 2");
  Csv csv(os, o.digits);
  csv.row("x", "F");
  for (double x : uniform_grid(0.0, 1.0, o.points)) csv.row(x, cdf(in.chain, x, o.depth));
  return 0;
}

int cmd_empirical_tau(const LoadedChain& in, const Options& o, std::ostream& os) {
  Csv csv(os, o.digits);
  csv.row("q", "n", "tau_n", "tau_2n", "rate_constant", "tau");
  for (double q : grid_of(o)) {
    const RateEstimate r = empirical_tau_rate(in.chain, q, o.depth);
    csv.row(q, r.n, r.tau_n, r.tau_2n, r.constant, tau(in.chain, q));
  }
  return 0;
}

int cmd_entropy(const LoadedChain& in, const Options& o, std::ostream& os) {
  Csv csv(os, o.digits);
  csv.row("n", "H_n");
  const std::vector<double> h = entropy_sequence(in.chain, o.depth);
  for (std::size_t n = 0; n < h.size(); ++n) csv.row(n + 1, h[n]);
  return 0;
}

int cmd_support(const LoadedChain& in, const Options& o, std::ostream& os) {
  Csv csv(os, o.digits);
  csv.row("n", "N_n", "box_dim");
  for (std::size_t n = 1; n <= o.depth; ++n) {
    const BigCount count = support_count(in.chain, n);
    csv.row(n, count.str(), log_count(count) / (static_cast<double>(n) * std::log(static_cast<double>(in.chain.ell()))));
  }
  return 0;
}

using Handler = int (*)(const LoadedChain&, const Options&, std::ostream&);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multifractal analysis of Markov-chain measures on [0,1]", "mcmeasure"};
  app.require_subcommand(1);
  Options o;

  struct Entry {
    const char* name;
    const char* help;
    Handler handler;
  };
  const Entry entries[] = {
      {"tau", "tau(q), tau'(q) and the depth-n estimate on a q grid", cmd_tau},
      {"spectrum", "Legendre spectrum (alpha, f) sorted by alpha", cmd_spectrum},
      {"dimension", "dimension of the measure (two formulas) and of its support", cmd_dimension},
      {"gibbs", "Gibbs rescaled chain Q_q", cmd_gibbs},
      {"maximal", "maximal-dimension chain Q_0", cmd_maximal},
      {"check", "run the invariant suite; exit 1 if any check fails", cmd_check},
      {"sample", "sample trajectories and their points", cmd_sample},
      {"cdf", "distribution function on a uniform grid", cmd_cdf},
      {"empirical-tau", "partition-sum estimate of tau with its rate constant", cmd_empirical_tau},
      {"entropy", "entropy sequence H_1..H_depth", cmd_entropy},
      {"support", "support counts N_n and box-counting estimates", cmd_support},
  };

  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("--config", o.config, "chain config (JSON)")->required();
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--digits", o.digits, "significant digits in CSV output")
        ->check(CLI::Range(1, 17));
    sub->add_option("--depth", o.depth, "generation depth")->check(CLI::NonNegativeNumber);
    sub->add_option("--q", o.q, "single q value");
    sub->add_option("--q-min", o.q_min, "grid start");
    sub->add_option("--q-max", o.q_max, "grid end");
    sub->add_option("--steps", o.steps, "grid points");
    sub->add_option("--seed", o.seed, "sampling seed");
    sub->add_option("--count", o.count, "number of samples");
    sub->add_option("--points", o.points, "cdf grid points");
    subs.emplace_back(sub, e.handler);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    const LoadedChain in = load_chain_config(o.config);
    Handler handler = nullptr;
    for (const auto& [sub, h] : subs) {
      if (sub->parsed()) handler = h;
    }
    std::ostringstream buffer;
    const int code = handler(in, o, buffer);
    if (o.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.out);
      if (!file) throw Error(Errc::config, o.out + ": cannot open for writing");
      file << buffer.str();
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace mcmeasure::cli
