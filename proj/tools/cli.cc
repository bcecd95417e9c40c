// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbc/coverage.h"
#include "mbc/errors.h"
#include "mbc/exact.h"
#include "mbc/gbc.h"
#include "mbc/graph.h"
#include "mbc/greedy.h"
#include "mbc/instance_gen.h"
#include "mbc/path_counts.h"
#include "mbc/random.h"
#include "mbc/tree_solver.h"

namespace mbc::cli {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string costs;
  std::optional<double> budget;
  std::string algo = "modified";
  std::string set;
  std::string candidates;
  std::string root;
  std::string output;
  std::string suite;
  int threads = 1;
  uint64_t seed = 0;
  bool no_time = false;
  // gen
  int k = 3;
  int ls = 0;
  int lt = 0;
  int l = 0;
  double eps = 0.0;
  int n = 10;
  double p = 0.3;
  bool tree = false;
  std::vector<double> cost_range;
  bool integral = false;
  int samples = 200;
};

double Elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

double AuditTolerance(int n) { return 1e-9 * static_cast<double>(n) * n; }

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    items.push_back(item.substr(first, last - first + 1));
  }
  return items;
}

std::vector<NodeId> ResolveLabels(const Graph& g, const std::string& text) {
  std::vector<NodeId> ids;
  for (const std::string& label : SplitList(text)) {
    auto id = g.FindLabel(label);
    if (!id) throw LoadError(LoadErrorKind::kUnknownLabel, "unknown node " + label);
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

ParsedInstance LoadInstance(const Options& opt) {
  if (opt.graph.empty()) throw UsageError("--graph is required");
  ParsedInstance parsed = LoadInstanceFile(opt.graph);
  if (!opt.costs.empty()) {
    parsed.instance.cost = ParseCostFile(ReadFile(opt.costs), parsed.instance.graph);
  }
  if (opt.budget) {
    parsed.instance.budget = *opt.budget;
    parsed.has_budget = true;
  }
  parsed.instance.Validate();
  return parsed;
}

CostedInstance LoadWithBudget(const Options& opt) {
  ParsedInstance parsed = LoadInstance(opt);
  if (!parsed.has_budget) throw UsageError("--budget is required");
  return std::move(parsed.instance);
}

std::string Quote(const std::string& s) { return json(s).dump(); }

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write " + path.string());
  file << text;
}

Solution RunAlgorithm(const std::string& algo, const CostedInstance& inst, const PathCounts& pc,
                      const Options& opt) {
  GreedyOptions greedy;
  greedy.threads = opt.threads;
  if (algo == "unit") {
    const double k = inst.budget;
    if (k != std::floor(k)) throw InvalidInstanceError("unit algorithm needs an integer budget");
    return GreedyUnit(inst, pc, static_cast<int>(k), greedy);
  }
  if (algo == "ratio") return GreedyRatio(inst, pc, greedy);
  if (algo == "modified") return GreedyModified(inst, pc, greedy);
  if (algo == "tree") {
    NodeId root = 0;
    if (!opt.root.empty()) {
      auto id = inst.graph.FindLabel(opt.root);
      if (!id) throw LoadError(LoadErrorKind::kUnknownLabel, "unknown root " + opt.root);
      root = *id;
    }
    return TreeSolve(inst, root);
  }
  if (algo == "exact") {
    ExactOptions exact;
    if (!opt.candidates.empty()) exact.candidates = ResolveLabels(inst.graph, opt.candidates);
    return SolveExact(inst, pc, exact);
  }
  throw UsageError("unknown algorithm " + algo);
}

// Recomputes the value from scratch and refuses to report a mismatch.
void Audit(const CostedInstance& inst, const PathCounts& pc, const Solution& sol) {
  const double direct = GbcDirect(inst.graph, pc, sol.nodes);
  if (std::abs(direct - sol.gbc) > AuditTolerance(inst.graph.num_nodes())) {
    throw ConsistencyError("self-audit: solver reported " + FormatNumber(sol.gbc) +
                           " but direct evaluation gives " + FormatNumber(direct));
  }
  if (sol.cost > inst.budget) throw ConsistencyError("self-audit: solution exceeds the budget");
}

int CmdGbc(const Options& opt, std::ostream& out) {
  ParsedInstance parsed = LoadInstance(opt);
  const Graph& g = parsed.instance.graph;
  const std::vector<NodeId> group = ResolveLabels(g, opt.set);
  PathCounts pc(g);
  json nodes = json::array();
  for (NodeId v : group) nodes.push_back(g.label(v));
  out << "{\"nodes\":" << nodes.dump() << ",\"gbc\":" << FormatNumber(GbcDirect(g, pc, group))
      << "}\n";
  return kExitOk;
}

int CmdSolve(const Options& opt, std::ostream& out) {
  const CostedInstance inst = LoadWithBudget(opt);
  const auto start = std::chrono::steady_clock::now();
  PathCounts pc(inst.graph);
  const Solution sol = RunAlgorithm(opt.algo, inst, pc, opt);
  const double ms = Elapsed(start);
  Audit(inst, pc, sol);
  RunReport report;
  report.n = inst.graph.num_nodes();
  report.m = inst.graph.num_edges();
  report.budget = inst.budget;
  report.algo = std::string(AlgorithmName(sol.algorithm));
  for (NodeId v : sol.nodes) report.nodes.push_back(inst.graph.label(v));
  report.cost = sol.cost;
  report.gbc = sol.gbc;
  report.time_ms = opt.no_time ? 0.0 : ms;
  report.seed = opt.seed;
  out << ReportToJson(report);
  return kExitOk;
}

void WriteInstance(const std::string& prefix, const CostedInstance& inst, const std::string& meta,
                   std::ostream& out) {
  if (prefix.empty()) throw UsageError("-o PREFIX is required");
  const std::string inst_path = prefix + ".json";
  const std::string meta_path = prefix + ".meta.json";
  WriteText(inst_path, ToJsonInstance(inst));
  WriteText(meta_path, meta);
  out << "{\"instance\":" << Quote(inst_path) << ",\"meta\":" << Quote(meta_path)
      << ",\"n\":" << inst.graph.num_nodes() << ",\"m\":" << inst.graph.num_edges() << "}\n";
}

int CmdGenTight(const Options& opt, std::ostream& out) {
  TightInstance ti = GenTight(opt.k, opt.ls, opt.lt);
  WriteInstance(opt.output, ti.instance, TightMetaToJson(ti), out);
  return kExitOk;
}

int CmdGenApx(const Options& opt, std::ostream& out) {
  ParsedInstance parsed = LoadInstance(opt);
  if ((opt.l > 0) == (opt.eps > 0.0)) throw UsageError("give exactly one of --l and --eps");
  ApxInstance apx = opt.l > 0 ? GenApx(parsed.instance.graph, opt.k, opt.l)
                              : GenApxAuto(parsed.instance.graph, opt.k, opt.eps);
  const CostedInstance inst = CostedInstance::WithUnitCosts(apx.graph, opt.k);
  WriteInstance(opt.output, inst, ApxMetaToJson(apx), out);
  return kExitOk;
}

int CmdGenRandom(const Options& opt, std::ostream& out) {
  Graph g = opt.tree ? GenRandomTree(opt.n, opt.seed) : GenRandom(opt.n, opt.p, opt.seed);
  CostedInstance inst;
  inst.cost.assign(g.num_nodes(), 1.0);
  if (!opt.cost_range.empty()) {
    if (opt.cost_range.size() != 2) throw UsageError("--costs-range takes LO,HI");
    inst.cost = GenRandomCosts(g, opt.cost_range[0], opt.cost_range[1], opt.seed + 1,
                               opt.integral);
  }
  inst.graph = std::move(g);
  inst.budget = opt.budget.value_or(std::floor(inst.TotalCost() / 2.0));
  json meta = {{"family", opt.tree ? "random_tree" : "random"},
               {"n", opt.n},
               {"p", opt.p},
               {"seed", opt.seed}};
  if (!opt.cost_range.empty()) meta["cost_range"] = opt.cost_range;
  WriteInstance(opt.output, inst, meta.dump() + "\n", out);
  return kExitOk;
}

// Prints one line per check and remembers whether any failed.
class CheckLog {
 public:
  explicit CheckLog(std::ostream& out) : out_(out) {}
  void Record(const std::string& name, bool ok, const std::string& detail) {
    out_ << name << ": " << (ok ? "PASS" : "FAIL") << " " << detail << "\n";
    failed_ = failed_ || !ok;
  }
  int ExitCode() const { return failed_ ? kExitConsistency : kExitOk; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

int CmdVerifyReduction(const Options& opt, std::ostream& out) {
  ParsedInstance parsed = LoadInstance(opt);
  CostedInstance& inst = parsed.instance;
  const Graph& g = inst.graph;
  const int n = g.num_nodes();
  PathCounts pc(g);
  const CoverageInstance ci = ReduceToCoverage(inst, pc);
  CheckLog log(out);

  double worst = 0.0;
  int checked = 0;
  auto check = [&](const std::vector<NodeId>& group) {
    worst = std::max(worst, std::abs(CoverageWeight(ci, group) - GbcDirect(g, pc, group)));
    ++checked;
  };
  if (n <= 12) {
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<NodeId> group;
      for (NodeId v = 0; v < n; ++v) {
        if (mask >> v & 1) group.push_back(v);
      }
      check(group);
    }
  } else {
    Rng rng(opt.seed);
    for (int i = 0; i < opt.samples; ++i) {
      std::vector<NodeId> group;
      for (NodeId v = 0; v < n; ++v) {
        if (rng.Bernoulli(0.5)) group.push_back(v);
      }
      check(group);
    }
  }
  log.Record("weight_identity", worst <= AuditTolerance(n),
             std::to_string(checked) + " sets, max deviation " + FormatNumber(worst));

  const int k = std::min(n, opt.k);
  const CostedInstance unit = CostedInstance::WithUnitCosts(g, k);
  const CoverageInstance unit_ci = ReduceToCoverage(unit, pc);
  const Solution node_side = GreedyUnit(unit, pc, k);
  const CoverageSolution set_side = CoverageGreedyUnit(unit_ci, k);
  log.Record("unit_greedy_sequence", node_side.selection_order == set_side.order,
             "k=" + std::to_string(k));
  if (parsed.has_budget) {
    const Solution ratio = GreedyRatio(inst, pc);
    const CoverageSolution ratio_sets = CoverageGreedyBudgeted(ci);
    log.Record("ratio_greedy_sequence", ratio.selection_order == ratio_sets.order,
               "budget=" + FormatNumber(inst.budget));
  }
  return log.ExitCode();
}

int CmdVerifyOracle(const Options& opt, std::ostream& out) {
  ParsedInstance parsed = LoadInstance(opt);
  const Graph& g = parsed.instance.graph;
  const int n = g.num_nodes();
  PathCounts pc(g);
  CheckLog log(out);
  const double tol = AuditTolerance(n);

  const std::vector<double> bc = BrandesBetweenness(g);
  double worst = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    const NodeId group[] = {v};
    worst = std::max(worst, std::abs(GbcDirect(g, pc, group) - (bc[v] + 2.0 * (n - 1))));
  }
  log.Record("single_node_identity", worst <= tol, "max deviation " + FormatNumber(worst));

  double value_dev = 0.0;
  double gain_dev = 0.0;
  GreedyOptions go;
  go.on_add = [&](const GbcOracle& oracle, NodeId v, double gain) {
    const std::vector<NodeId> members(oracle.members().begin(), oracle.members().end());
    std::vector<NodeId> before;
    for (NodeId u : members) {
      if (u != v) before.push_back(u);
    }
    const double now = GbcDirect(g, pc, members);
    const double prev = GbcDirect(g, pc, before);
    value_dev = std::max(value_dev, std::abs(oracle.value() - now));
    gain_dev = std::max(gain_dev, std::abs(gain - (now - prev)));
  };
  const int k = std::min(n, opt.k);
  GreedyUnit(CostedInstance::WithUnitCosts(g, k), pc, k, go);
  log.Record("trajectory_value", value_dev <= tol, "max deviation " + FormatNumber(value_dev));
  log.Record("trajectory_gain", gain_dev <= tol, "max deviation " + FormatNumber(gain_dev));
  return log.ExitCode();
}

int CmdVerifyTree(const Options& opt, std::ostream& out) {
  const CostedInstance inst = LoadWithBudget(opt);
  PathCounts pc(inst.graph);
  const Solution tree = TreeSolve(inst);
  const Solution exact = SolveExact(inst, pc);
  CheckLog log(out);
  log.Record("tree_equals_exact", tree.gbc == exact.gbc,
             "tree " + FormatNumber(tree.gbc) + " exact " + FormatNumber(exact.gbc));
  return log.ExitCode();
}

int CmdVerifyRatio(const Options& opt, std::ostream& out) {
  const CostedInstance inst = LoadWithBudget(opt);
  PathCounts pc(inst.graph);
  const double opt_value = SolveExact(inst, pc).gbc;
  const double greedy_bound = 1.0 - std::exp(-1.0) - 1e-9;
  const double ratio_bound = 1.0 - std::exp(-0.5) - 1e-9;
  CheckLog log(out);
  auto record = [&](const std::string& name, double value, double bound) {
    log.Record(name, value >= bound * opt_value,
               FormatNumber(value) + " vs OPT " + FormatNumber(opt_value));
  };
  record("modified", GreedyModified(inst, pc).gbc, greedy_bound);
  record("ratio", GreedyRatio(inst, pc).gbc, ratio_bound);
  if (inst.HasUnitCosts() && inst.budget == std::floor(inst.budget)) {
    record("unit", GreedyUnit(inst, pc, static_cast<int>(inst.budget)).gbc, greedy_bound);
  }
  return log.ExitCode();
}

int CmdBench(const Options& opt, std::ostream& out) {
  if (opt.suite.empty()) throw UsageError("--suite is required");
  json suite;
  try {
    suite = json::parse(ReadFile(opt.suite));
  } catch (const json::exception& e) {
    throw LoadError(LoadErrorKind::kMalformed, e.what());
  }
  if (!suite.contains("instances") || !suite["instances"].is_array()) {
    throw LoadError(LoadErrorKind::kMalformed, "suite needs an \"instances\" array");
  }
  const fs::path base = fs::path(opt.suite).parent_path();
  auto resolve = [&base](const std::string& p) {
    const fs::path path(p);
    return path.is_absolute() ? path : base / path;
  };
  std::ostringstream csv;
  csv << "instance,algo,gbc,opt,ratio,time_ms\n";
  for (const json& entry : suite["instances"]) {
    Options local = opt;
    local.graph = resolve(entry.at("graph").get<std::string>()).string();
    local.costs = entry.contains("costs") ? resolve(entry["costs"].get<std::string>()).string()
                                          : std::string();
    if (entry.contains("budget")) local.budget = entry["budget"].get<double>();
    const std::string name = entry.value("name", local.graph);
    const CostedInstance inst = LoadWithBudget(local);
    PathCounts pc(inst.graph);
    std::optional<double> best;
    if (inst.graph.num_nodes() <= kMaxExactCandidates) best = SolveExact(inst, pc).gbc;
    const std::vector<std::string> algos =
        entry.value("algos", std::vector<std::string>{"modified"});
    for (const std::string& algo : algos) {
      const auto start = std::chrono::steady_clock::now();
      const Solution sol = RunAlgorithm(algo, inst, pc, local);
      const double ms = opt.no_time ? 0.0 : Elapsed(start);
      Audit(inst, pc, sol);
      csv << name << "," << algo << "," << FormatNumber(sol.gbc) << ",";
      if (best) {
        csv << FormatNumber(*best) << ","
            << FormatNumber(*best > 0.0 ? sol.gbc / *best : 1.0);
      } else {
        csv << ",";
      }
      csv << "," << FormatNumber(ms) << "\n";
    }
  }
  if (opt.output.empty()) {
    out << csv.str();
  } else {
    WriteText(opt.output, csv.str());
  }
  return kExitOk;
}

}  // namespace

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "null";
  if (std::isinf(value)) return value > 0 ? "1e999" : "-1e999";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string ReportToJson(const RunReport& r) {
  std::ostringstream os;
  json nodes = r.nodes;
  os << "{\"n\":" << r.n << ",\"m\":" << r.m << ",\"budget\":" << FormatNumber(r.budget)
     << ",\"algo\":" << Quote(r.algo) << ",\"nodes\":" << nodes.dump()
     << ",\"cost\":" << FormatNumber(r.cost) << ",\"gbc\":" << FormatNumber(r.gbc)
     << ",\"time_ms\":" << FormatNumber(r.time_ms) << ",\"seed\":" << r.seed << "}\n";
  return os.str();
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Maximum betweenness centrality solver"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  std::function<int()> action;

  auto add_graph = [&opt](CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("-g,--graph", opt.graph, "Edge list or JSON instance");
    if (required) o->required();
    cmd->add_option("--costs", opt.costs, "Cost file: one \"label cost\" per line");
  };
  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "Random seed");
  };

  CLI::App* gbc = app.add_subcommand("gbc", "Group betweenness of a node set");
  add_graph(gbc, true);
  gbc->add_option("--set", opt.set, "Comma-separated node labels")->required();
  gbc->callback([&] { action = [&] { return CmdGbc(opt, out); }; });

  CLI::App* solve = app.add_subcommand("solve", "Solve a budgeted instance");
  add_graph(solve, true);
  add_common(solve);
  solve->add_option("--budget", opt.budget, "Budget (overrides the instance file)");
  solve->add_option("--algo", opt.algo, "Algorithm")
      ->check(CLI::IsMember({"unit", "ratio", "modified", "tree", "exact"}));
  solve->add_option("--candidates", opt.candidates, "exact: comma-separated whitelist");
  solve->add_option("--root", opt.root, "tree: root label");
  solve->add_flag("--no-time", opt.no_time, "Report time_ms as 0 for reproducible output");
  solve->callback([&] { action = [&] { return CmdSolve(opt, out); }; });

  CLI::App* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  CLI::App* tight = gen->add_subcommand("tight", "Tight family for the greedy algorithms");
  tight->add_option("--k", opt.k, "Sets to select")->required();
  tight->add_option("--ls", opt.ls, "Source-side replication (0: default)");
  tight->add_option("--lt", opt.lt, "Sink-side replication (0: default)");
  tight->add_option("-o,--output", opt.output, "Output prefix")->required();
  tight->callback([&] { action = [&] { return CmdGenTight(opt, out); }; });
  CLI::App* apx = gen->add_subcommand("apx", "Vertex-cover reduction graph");
  add_graph(apx, true);
  apx->add_option("--k", opt.k, "Cover size");
  apx->add_option("--l", opt.l, "Replication count");
  apx->add_option("--eps", opt.eps, "Pick the replication count from this accuracy");
  apx->add_option("-o,--output", opt.output, "Output prefix")->required();
  apx->callback([&] { action = [&] { return CmdGenApx(opt, out); }; });
  CLI::App* random = gen->add_subcommand("random", "Seeded random connected graph");
  random->add_option("--n", opt.n, "Node count");
  random->add_option("--p", opt.p, "Edge probability");
  random->add_option("--seed", opt.seed, "Random seed");
  random->add_flag("--tree", opt.tree, "Uniform random labelled tree");
  random->add_option("--costs-range", opt.cost_range, "LO,HI for random costs")->delimiter(',');
  random->add_flag("--integral", opt.integral, "Integer costs");
  random->add_option("--budget", opt.budget, "Budget (default: half the total cost)");
  random->add_option("-o,--output", opt.output, "Output prefix")->required();
  random->callback([&] { action = [&] { return CmdGenRandom(opt, out); }; });

  CLI::App* verify = app.add_subcommand("verify", "Cross-check suites");
  verify->require_subcommand(1);
  struct VerifyCmd {
    const char* name;
    const char* help;
    int (*run)(const Options&, std::ostream&);
  };
  for (const VerifyCmd& v : {VerifyCmd{"reduction", "Coverage reduction identity", CmdVerifyReduction},
                             VerifyCmd{"oracle", "Incremental oracle against direct evaluation",
                                       CmdVerifyOracle},
                             VerifyCmd{"tree", "Tree DP against exhaustive search", CmdVerifyTree},
                             VerifyCmd{"ratio", "Greedy guarantees against the optimum",
                                       CmdVerifyRatio}}) {
    CLI::App* cmd = verify->add_subcommand(v.name, v.help);
    add_graph(cmd, true);
    add_common(cmd);
    cmd->add_option("--budget", opt.budget, "Budget (overrides the instance file)");
    cmd->add_option("--k", opt.k, "Greedy steps for unit-cost checks");
    cmd->add_option("--samples", opt.samples, "Random sets when exhaustive is too large");
    auto run = v.run;
    cmd->callback([&, run] { action = [&, run] { return run(opt, out); }; });
  }

  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark suite, CSV output");
  bench->add_option("--suite", opt.suite, "Suite JSON")->required();
  bench->add_option("-o,--output", opt.output, "CSV file (default stdout)");
  bench->add_flag("--no-time", opt.no_time, "Report time_ms as 0");
  add_common(bench);
  bench->callback([&] { action = [&] { return CmdBench(opt, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LoadError& e) {
    err << "load error (" << ToString(e.kind()) << "): " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvalidInstanceError& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConsistencyError& e) {
    err << "consistency fault: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitConsistency;
  }
}

}  // namespace mbc::cli
