// rembed: command-line front end for exact enumeration, sampling, bounds and verification.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "rembed/analytics.hpp"
#include "rembed/enumeration.hpp"
#include "rembed/generators.hpp"
#include "rembed/process.hpp"
#include "rembed/report.hpp"
#include "rembed/rng.hpp"

using namespace rembed;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitViolation = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;
  std::string spec;
};

struct Common {
  GraphSource source;
  std::string seed_text = "0x5EEDF0CE";
  std::string format = "json";
  std::string out;
  int jobs = 0;
};

struct Loaded {
  std::string id;
  MultiGraph graph;
};

Loaded load_graph(const GraphSource& src) {
  if (!src.spec.empty()) return {src.spec, generate(src.spec)};
  std::ifstream in(src.path);
  if (!in) throw UsageError("cannot open graph file '" + src.path + "'");
  return {src.path, read_graph(in)};
}

std::uint64_t parse_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("seed must be an unsigned 64-bit integer or 'random'");
  return value;
}

/*
  Cycle data for the lower bound: "count,len,degree", optionally in
  parentheses, or a file holding those three numbers.
*/
CycleData parse_cycles(const std::string& arg) {
  std::string text = arg;
  if (std::ifstream file(arg); file) {
    std::ostringstream buf;
    std::string line;
    while (std::getline(file, line)) buf << line.substr(0, line.find('#')) << ' ';
    text = buf.str();
  }
  static const std::regex pattern(R"(^\s*\(?\s*(\d+)\s*[,\s]\s*(\d+)\s*[,\s]\s*(\d+)\s*\)?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw UsageError("--cycles expects 'count,length,degree' or a file containing them");
  }
  return {std::stoll(m[1]), std::stoi(m[2]), std::stoi(m[3])};
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw UsageError("cannot write '" + c.out + "'");
  file << text;
}

template <class Doc>
std::string render(const std::string& format, const Doc& doc, const nlohmann::json& json) {
  if (format == "csv") return to_csv(doc);
  if (format == "table") return to_table(doc);
  return json.dump(2) + "\n";
}

void add_common(CLI::App* cmd, Common& c, bool seeded) {
  auto* graph = cmd->add_option("--graph", c.source.path, "graph file (\"n m\" header, then \"u v mult\" lines)");
  auto* gen = cmd->add_option("--gen", c.source.spec, "generator spec, e.g. dipole:mu=3 or triangle-chain:k=2");
  graph->excludes(gen);
  gen->excludes(graph);
  if (seeded) {
    cmd->add_option("--seed", c.seed_text, "master seed (U64, decimal or 0x hex) or 'random'")
        ->capture_default_str();
  }
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "write output here instead of stdout");
  cmd->add_option("--jobs", c.jobs, "worker threads (0 = all hardware threads)")->capture_default_str();
}

void require_graph(const Common& c) {
  if (c.source.path.empty() && c.source.spec.empty()) throw UsageError("one of --graph or --gen is required");
}

int cmd_gen(const std::string& family, int mu, int k, int n, int loops, const std::string& out) {
  std::string spec;
  if (family == "dipole") {
    spec = "dipole:mu=" + std::to_string(mu);
  } else if (family == "dipole-chain") {
    spec = "dipole-chain:k=" + std::to_string(k) + ",mu=" + std::to_string(mu);
  } else if (family == "triangle-chain") {
    spec = "triangle-chain:k=" + std::to_string(k);
  } else if (family == "bouquet") {
    spec = "bouquet:loops=" + std::to_string(loops);
  } else {
    spec = family + ":n=" + std::to_string(n);
  }
  Common c;
  c.out = out;
  emit(c, format_graph(generate(spec)));
  return kExitOk;
}

int cmd_exact(const Common& c, std::uint64_t budget) {
  require_graph(c);
  const auto g = load_graph(c.source);
  const auto stats = exact_face_stats(g.graph, budget, c.jobs, g.id);
  emit(c, render(c.format, stats, to_json(stats)));
  return kExitOk;
}

int cmd_estimate(const Common& c, std::uint64_t trials, Strategy strategy, bool trace) {
  require_graph(c);
  const auto g = load_graph(c.source);
  const std::uint64_t seed = parse_seed(c.seed_text);
  const auto est = monte_carlo_expected_faces(g.graph, trials, seed, strategy, c.jobs);
  if (trace) {
    // Replays each run from its own stream, so the dump matches the estimate.
    for (std::uint64_t i = 0; i < trials; ++i) {
      Rng rng = run_stream(seed, i);
      std::cerr << to_json(sample_embedding(g.graph, strategy, rng, run_seed(seed, i))).dump() << '\n';
    }
  }
  std::string text;
  if (c.format == "csv") {
    text = to_csv(est, g.id);
  } else if (c.format == "table") {
    text = to_table(est, g.id);
  } else {
    text = to_json(est, g.id).dump(2) + "\n";
  }
  emit(c, text);
  return kExitOk;
}

int cmd_bounds(const Common& c, std::optional<std::uint64_t> trials, Strategy strategy, std::uint64_t budget,
               const std::string& cycles_arg) {
  require_graph(c);
  const auto g = load_graph(c.source);
  std::optional<CycleData> cycles;
  if (!cycles_arg.empty()) cycles = parse_cycles(cycles_arg);
  BoundsReport report;
  if (trials) {
    const auto est = monte_carlo_expected_faces(g.graph, *trials, parse_seed(c.seed_text), strategy, c.jobs);
    report = bounds_report(g.graph, est, cycles, g.id);
  } else {
    const auto stats = exact_face_stats(g.graph, budget, c.jobs, g.id);
    report = bounds_report(g.graph, stats.expected_faces, cycles, g.id);
  }
  emit(c, render(c.format, report, to_json(report)));
  return report.hard_violation() ? kExitViolation : kExitOk;
}

int cmd_verify(const Common& c, std::uint64_t trials, const std::string& strategy_name) {
  require_graph(c);
  const auto g = load_graph(c.source);
  const std::uint64_t seed = parse_seed(c.seed_text);
  std::vector<Strategy> strategies;
  if (strategy_name == "all") {
    strategies.assign(kAllStrategies.begin(), kAllStrategies.end());
  } else {
    strategies.push_back(parse_strategy(strategy_name));
  }
  const auto summary = audit_many(g.graph, strategies, trials, seed, c.jobs);
  std::string text;
  if (c.format == "csv") {
    text = to_csv(summary, g.id);
  } else if (c.format == "table") {
    text = to_table(summary, g.id);
  } else {
    text = to_json(summary, g.id, trials, seed).dump(2) + "\n";
  }
  emit(c, text);
  if (!summary.ok()) {
    // The witness always goes to stderr so it survives csv and table output.
    std::cerr << to_json(summary.witness->trace).dump() << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rembed: random orientable 2-cell embeddings of multigraphs.\n"
      "Seeds default to 0x5EEDF0CE, so every command is reproducible; pass --seed random for fresh entropy.\n"
      "Exit codes: 0 success, 1 usage error, 2 enumeration budget refused, 3 bound or property violation."};
  app.require_subcommand(1);

  std::string family;
  int mu = 1, k = 1, n = 3, loops = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a generated graph in the text format");
  gen->add_option("family", family, "graph family")
      ->required()
      ->check(CLI::IsMember({"dipole", "dipole-chain", "triangle-chain", "bouquet", "complete", "cycle", "path"}));
  gen->add_option("--mu", mu, "edge multiplicity (dipole, dipole-chain)")->capture_default_str();
  gen->add_option("--k", k, "number of blocks (dipole-chain, triangle-chain)")->capture_default_str();
  gen->add_option("--n", n, "vertex count (complete, cycle, path)")->capture_default_str();
  gen->add_option("--loops", loops, "loop count (bouquet)")->capture_default_str();
  gen->add_option("--out", gen_out, "write here instead of stdout");

  Common exact_c;
  std::uint64_t exact_budget = kDefaultBudget;
  auto* exact = app.add_subcommand("exact", "enumerate every rotation system and report E[F] exactly");
  add_common(exact, exact_c, false);
  exact->add_option("--budget", exact_budget, "refuse enumerations larger than this")->capture_default_str();

  Common est_c;
  std::uint64_t est_trials = 100'000;
  std::string est_strategy = "fixed";
  bool est_trace = false;
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of E[F] with Process A");
  add_common(estimate, est_c, true);
  estimate->add_option("--trials", est_trials, "number of runs")->capture_default_str()->check(CLI::PositiveNumber);
  estimate->add_option("--strategy", est_strategy, "edge order")
      ->check(CLI::IsMember({"fixed", "random", "greedy"}))
      ->capture_default_str();
  estimate->add_flag("--trace", est_trace, "dump every run as a JSON line on stderr");

  Common bounds_c;
  std::uint64_t bounds_trials = 0;
  std::uint64_t bounds_budget = kDefaultBudget;
  std::string bounds_strategy = "fixed";
  std::string bounds_cycles;
  bool bounds_exact = false;
  auto* bounds = app.add_subcommand("bounds", "compare E[F] with every applicable bound");
  add_common(bounds, bounds_c, true);
  auto* exact_flag = bounds->add_flag("--exact", bounds_exact, "use the exact value (default)");
  auto* trials_opt = bounds->add_option("--trials", bounds_trials, "use a Monte Carlo estimate with N runs")
                         ->check(CLI::PositiveNumber);
  exact_flag->excludes(trials_opt);
  bounds->add_option("--strategy", bounds_strategy, "edge order for --trials")
      ->check(CLI::IsMember({"fixed", "random", "greedy"}))
      ->capture_default_str();
  bounds->add_option("--budget", bounds_budget, "refuse enumerations larger than this")->capture_default_str();
  bounds->add_option("--cycles", bounds_cycles, "cycle data 'count,length,max-degree' or a file holding it");

  Common verify_c;
  std::uint64_t verify_trials = 10'000;
  std::string verify_strategy = "all";
  auto* verify = app.add_subcommand("verify", "instrumented Process A runs checking the walk invariants");
  add_common(verify, verify_c, true);
  verify->add_option("--trials", verify_trials, "runs per strategy")->capture_default_str();
  verify->add_option("--strategy", verify_strategy, "one strategy or all")
      ->check(CLI::IsMember({"fixed", "random", "greedy", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(family, mu, k, n, loops, gen_out);
    if (*exact) return cmd_exact(exact_c, exact_budget);
    if (*estimate) return cmd_estimate(est_c, est_trials, parse_strategy(est_strategy), est_trace);
    if (*bounds) {
      std::optional<std::uint64_t> trials;
      if (trials_opt->count() > 0) trials = bounds_trials;
      return cmd_bounds(bounds_c, trials, parse_strategy(bounds_strategy), bounds_budget, bounds_cycles);
    }
    if (*verify) return cmd_verify(verify_c, verify_trials, verify_strategy);
  } catch (const BudgetExceeded& e) {
    std::cerr << "rembed: " << e.what() << '\n';
    return kExitBudget;
  } catch (const UsageError& e) {
    std::cerr << "rembed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rembed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "rembed: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
