// ordolab: command-line front end. Every command prints one JSON report on
// stdout. Exit codes: 0 success, 1 verification failure, 2 usage or input
// error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordolab/gomoryhu.hpp"
#include "ordolab/io.hpp"
#include "ordolab/matroids.hpp"
#include "ordolab/mlvc.hpp"
#include "ordolab/partition.hpp"
#include "ordolab/reductions.hpp"
#include "ordolab/solve.hpp"
#include "ordolab/testing/acceptance.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace ordolab;

constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

// Bad flags or flag combinations detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool timing = false;
  std::string input;
  std::string format;
  std::uint64_t prime = 0;

  std::string exact = "dp";
  std::string oracle;
  std::string costs;

  std::string from = "mlvc";
  std::string to;
  std::string labels;
  std::string output;

  std::size_t sample = 0;
  std::size_t balance = 0;
  bool lp = false;
  std::string emit;

  std::size_t runs = 0;
  std::string suite;
};

struct Instance {
  std::string path;
  std::string kind;
  std::string digest;
  std::optional<Graph> graph;
  std::optional<matroids::IntMatrix> matrix;
  std::optional<Hypergraph> hypergraph;
};

std::string infer_kind(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "graph" || ext == "g") return "graph";
  if (ext == "matrix" || ext == "mat") return "matrix";
  if (ext == "hypergraph" || ext == "hg") return "hypergraph";
  throw UsageError("cannot infer the format of '" + path +
                   "'; pass --format graph|matrix|hypergraph");
}

Instance load(const Options& opt) {
  if (opt.input.empty()) throw UsageError("--input is required");
  Instance in;
  in.path = opt.input;
  in.kind = opt.format.empty() ? infer_kind(opt.input) : opt.format;
  const std::string text = io::read_file(opt.input);
  in.digest = io::digest(text);
  if (in.kind == "graph") {
    in.graph = io::parse_graph(text);
  } else if (in.kind == "matrix") {
    in.matrix = io::parse_matrix(text);
  } else {
    in.hypergraph = io::parse_hypergraph(text);
  }
  return in;
}

Json rational(const Rational& v) { return to_string(v); }

Json sequence(const Ordering& o) { return o.sequence(); }

Json elements(const Subset& s) { return s.elements(); }

Json certificate(const reductions::ReductionCertificate& c) {
  return Json{{"relation", c.relation},
              {"source", rational(c.source)},
              {"target", rational(c.target)},
              {"scale", rational(c.scale)},
              {"shift", rational(c.shift)},
              {"holds", c.holds()}};
}

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

// Vertex sequence in position order, 0-based; identity when empty.
Ordering labels_or_identity(const std::string& text, int n) {
  if (text.empty()) return Ordering::identity(static_cast<std::size_t>(n));
  std::vector<int> seq;
  for (std::int64_t v : parse_list(text, "--labels")) seq.push_back(static_cast<int>(v));
  if (seq.size() != static_cast<std::size_t>(n)) {
    throw UsageError("--labels must list all " + std::to_string(n) + " vertices");
  }
  return Ordering::from_sequence(std::move(seq));
}

const Graph& need_graph(const Instance& in, const char* command) {
  if (!in.graph) throw UsageError(std::string(command) + " needs a graph instance");
  return *in.graph;
}

Hypergraph as_hypergraph(const Instance& in) {
  if (in.hypergraph) return *in.hypergraph;
  if (in.graph) return Hypergraph::from_graph(*in.graph);
  throw UsageError("mlvc needs a graph or hypergraph instance");
}

std::optional<matroids::Matroid> as_matroid(const Instance& in, const Options& opt) {
  std::optional<matroids::Matroid> m;
  if (in.graph) m = matroids::graphic(*in.graph);
  if (in.matrix) m = matroids::vector(*in.matrix, opt.prime);
  if (m && opt.oracle == "corank") m = matroids::dual(*m);
  return m;
}

// The set function selected by --oracle (rank by default; cut needs a graph).
SetFunction oracle_of(const Instance& in, const Options& opt) {
  if (opt.oracle == "cut") return matroids::cut_function(need_graph(in, "--oracle cut"));
  const auto m = as_matroid(in, opt);
  if (!m) throw UsageError("rank oracles need a graph or matrix instance");
  return m->rank_function();
}

std::string oracle_name(const Options& opt) { return opt.oracle.empty() ? "rank" : opt.oracle; }

int cmd_solve(const Options& opt, const Instance& in, Json& result) {
  const SetFunction f = oracle_of(in, opt);
  result["method"] = opt.exact;
  result["oracle"] = oracle_name(opt);
  result["ground_size"] = f.size();
  solve::Solution s;
  if (!opt.costs.empty()) {
    if (opt.exact != "dp") throw UsageError("--costs is only supported with --exact dp");
    const std::vector<std::int64_t> costs = parse_list(opt.costs, "--costs");
    s = solve::exact_weighted_mlop_dp(f, costs);
    result["costs"] = costs;
  } else if (opt.exact == "dp") {
    s = solve::exact_mlop_dp(f);
  } else if (opt.exact == "fixed-basis") {
    const auto m = as_matroid(in, opt);
    if (!m || opt.oracle == "cut") throw UsageError("fixed-basis needs a matroid oracle");
    solve::BasisSearchLimits limits;
    limits.jobs = opt.jobs;
    s = solve::small_basis_exact(*m, limits);
  } else {
    if (opt.oracle == "cut" || opt.oracle == "corank") {
      throw UsageError("cactus solves the graphic rank oracle only");
    }
    s = solve::cactus_exact(need_graph(in, "cactus"));
  }
  result["value"] = rational(s.value);
  result["ordering"] = sequence(s.ordering);
  return 0;
}

int cmd_approx(const Options& opt, const Instance& in, Json& result) {
  const SetFunction f = oracle_of(in, opt);
  const solve::Approximation a = solve::approx_monotone_mlop(f);
  result["oracle"] = oracle_name(opt);
  result["ground_size"] = f.size();
  result["value"] = rational(a.value);
  result["ordering"] = sequence(a.ordering);
  result["lower"] = rational(a.certificate.lower);
  result["upper"] = rational(a.certificate.upper);
  result["guarantee"] = rational(a.certificate.guarantee);
  result["trivial"] = a.certificate.trivial;
  result["zero_set"] = elements(a.zero_set);
  bool ok = a.certificate.trivial ||
            (a.certificate.lower <= a.value && a.value <= a.certificate.upper &&
             a.value <= a.certificate.guarantee * a.certificate.lower);
  if (f.size() <= solve::kExactCap) {
    const Rational opt_value = solve::exact_mlop_dp(f).value;
    result["optimum"] = rational(opt_value);
    ok = ok && a.value <= a.certificate.guarantee * opt_value;
  }
  result["verified"] = ok;
  return ok ? 0 : kVerificationFailure;
}

int cmd_partition(const Options& opt, const Instance& in, Json& result) {
  const SetFunction f = oracle_of(in, opt);
  const partition::ZeroSetContraction z = partition::zero_set_contract(f);
  const partition::PrincipalPartition pp = partition::compute_principal_partition(z.contracted);
  result["oracle"] = oracle_name(opt);
  result["ground_size"] = f.size();
  result["zero_set"] = elements(z.zero_set);
  Json chain = Json::array();
  for (const Subset& s : pp.chain) {
    Subset lifted = z.zero_set;
    s.for_each([&](int e) { lifted.insert(z.labels[static_cast<std::size_t>(e)]); });
    chain.push_back(elements(lifted));
  }
  result["chain"] = chain;
  Json lambdas = Json::array();
  for (const Rational& l : pp.critical_values) lambdas.push_back(rational(l));
  result["critical_values"] = lambdas;
  result["trivial"] = pp.trivial;
  if (!pp.trivial) {
    const partition::LinearityStats stats = partition::linearity_stats(f);
    result["steepness"] = rational(stats.steepness);
    result["linearity"] = rational(stats.linearity);
  }
  return 0;
}

int cmd_reduce(const Options& opt, const Instance& in, Json& result) {
  if (opt.from != "mlvc") throw UsageError("only --from mlvc is supported");
  const Graph& g = need_graph(in, "reduce");
  result["from"] = opt.from;
  result["to"] = opt.to;
  bool holds = true;
  std::string target_text;
  if (opt.to == "graphic-mlop" || opt.to == "unweighted-graphic-mlop") {
    const reductions::ApexReduction r = reductions::mlvc_to_weighted_graphic(g);
    result["k"] = r.k;
    result["offset"] = r.offset.get_str();
    result["isolated_vertices"] = r.isolated_vertices;
    const matroids::Matroid h = matroids::graphic(r.apex_graph);
    if (opt.to == "graphic-mlop") {
      target_text = io::format_graph(r.apex_graph);
      result["costs"] = r.costs;
      result["target_elements"] = r.apex_graph.num_edges();
      if (r.apex_graph.num_edges() <= solve::kExactCap) {
        const solve::Solution w = solve::exact_weighted_mlop_dp(h.rank_function(), r.costs);
        const reductions::ReductionCertificate c = reductions::apex_certificate(g, r, w);
        const auto labels = reductions::recover_labeling(r, w.ordering);
        result["weighted_optimum"] = rational(w.value);
        if (labels) result["recovered_labels"] = sequence(*labels);
        result["certificate"] = certificate(c);
        holds = c.holds();
      }
    } else {
      if (g.num_edges() > 3) {
        std::cerr << "ordolab: warning: the unweighted target has "
                  << r.costs.size() - g.num_edges() << " star edges of cost " << r.k
                  << " each; expect a very large instance\n";
      }
      Graph expanded(r.apex_graph.num_vertices());
      for (std::size_t e = 0; e < r.apex_graph.num_edges(); ++e) {
        for (std::int64_t copy = 0; copy < r.costs[e]; ++copy) {
          expanded.add_edge(r.apex_graph.edge(e).u, r.apex_graph.edge(e).v);
        }
      }
      target_text = io::format_graph(expanded);
      result["target_elements"] = expanded.num_edges();
      if (expanded.num_edges() <= solve::kExactCap) {
        const solve::Solution w = solve::exact_weighted_mlop_dp(h.rank_function(), r.costs);
        const reductions::WeightedToUnweighted u =
            reductions::weighted_to_unweighted(h, r.costs, w.ordering);
        result["certificate"] = certificate(u.certificate);
        holds = u.certificate.holds();
      }
    }
  } else if (opt.to == "msvc") {
    const Ordering pi = labels_or_identity(opt.labels, g.num_vertices());
    const reductions::MlvcMsvcShift s = reductions::mlvc_msvc_shift(g, pi);
    target_text = io::format_graph(s.complement);
    result["labels"] = sequence(pi);
    result["target_labels"] = sequence(s.labels);
    result["certificate"] = certificate(s.certificate);
    holds = s.certificate.holds();
  } else if (opt.to == "mla") {
    const Ordering pi = labels_or_identity(opt.labels, g.num_vertices());
    const reductions::ReductionCertificate c = reductions::regular_shift(g, pi);
    target_text = io::format_graph(g);
    result["labels"] = sequence(pi);
    result["certificate"] = certificate(c);
    holds = c.holds();
  } else {
    throw UsageError("--to must be graphic-mlop, unweighted-graphic-mlop, msvc or mla");
  }
  if (!opt.output.empty()) {
    io::write_file(opt.output, target_text);
    result["output"] = opt.output;
  } else {
    result["target_instance"] = target_text;
  }
  return holds ? 0 : kVerificationFailure;
}

int cmd_mlvc(const Options& opt, const Instance& in, Json& result) {
  if (opt.sample == 0 && opt.balance == 0 && !opt.lp) {
    throw UsageError("mlvc needs --sample N, --balance T or --lp");
  }
  const Hypergraph h = as_hypergraph(in);
  result["vertices"] = h.num_vertices();
  result["hyperedges"] = h.num_edges();
  result["max_edge_size"] = h.max_edge_size();
  if (opt.sample > 0) {
    const mlvc::BestOfN best = mlvc::best_of_n(h, opt.sample, opt.seed);
    result["sample"] = Json{{"samples", opt.sample},
                            {"value", best.value},
                            {"labels", sequence(best.labels)}};
  }
  bool ok = true;
  if (opt.balance > 0) {
    const mlvc::BalanceReport report = mlvc::balance_check(h, opt.balance, opt.seed, opt.jobs);
    Json pairs = Json::array();
    std::size_t flagged = 0;
    for (const mlvc::PairEstimate& p : report.pairs) {
      flagged += p.flagged ? 1 : 0;
      pairs.push_back(Json{{"first", p.first_job},
                           {"second", p.second_job},
                           {"a", p.profile.a},
                           {"b", p.profile.b},
                           {"c", p.profile.c},
                           {"exact", rational(p.exact)},
                           {"estimate", p.estimate},
                           {"flagged", p.flagged}});
    }
    Json balance{{"trials", report.trials}, {"floor", rational(report.floor)}};
    if (!report.pairs.empty()) balance["worst_pair"] = pairs[report.worst_pair];
    balance["flagged"] = flagged;
    balance["pairs"] = pairs;
    result["balance"] = balance;
    ok = flagged == 0;
  }
  if (opt.lp) {
    const mlvc::LpModel model = mlvc::build_lp(h);
    Json lp{{"variables", model.program.variables.size()},
            {"constraints", model.program.constraints.size()}};
    if (!opt.emit.empty()) {
      io::write_file(opt.emit, mlvc::emit_lp(model));
      lp["emitted"] = opt.emit;
    }
    if (model.program.variables.size() <= 200) {
      lp["value"] = rational(mlvc::solve_lp(model));
    } else if (opt.emit.empty()) {
      throw CapacityError("LP has " + std::to_string(model.program.variables.size()) +
                          " variables, above the exact solver's 200; use --emit FILE");
    }
    result["lp"] = lp;
  }
  return ok ? 0 : kVerificationFailure;
}

int cmd_ghtree(const Options& opt, const Instance& in, Json& result) {
  const SetFunction f = matroids::cut_function(need_graph(in, "ghtree"));
  gomoryhu::BuildStats stats;
  const gomoryhu::GomoryHuTree tree = gomoryhu::build_gh_tree(f, opt.seed, {}, &stats);
  Json edges = Json::array();
  for (const gomoryhu::TreeEdge& e : tree.edges) {
    edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"weight", rational(e.weight)}});
  }
  const bool verified = gomoryhu::verify_cut_property(f, tree);
  const gomoryhu::UpperBound upper = gomoryhu::gh_upper_bound(f, tree);
  result["edges"] = edges;
  result["used_fallback"] = stats.used_fallback;
  result["verified"] = verified;
  result["lower"] = rational(gomoryhu::gh_lower_bound(tree));
  result["upper"] = Json{
      {"value", rational(upper.value)}, {"ordering", sequence(upper.ordering)}, {"exact", upper.exact}};
  bool ok = verified;
  if (opt.runs > 0) {
    const gomoryhu::Invariance inv = gomoryhu::gh_weight_invariance(f, opt.runs, opt.seed);
    Json totals = Json::array();
    for (const Rational& t : inv.totals) totals.push_back(rational(t));
    result["invariance"] = Json{{"runs", opt.runs}, {"equal", inv.equal}, {"totals", totals}};
    ok = ok && inv.equal;
  }
  return ok ? 0 : kVerificationFailure;
}

int cmd_verify(const Options& opt, Json& result) {
  if (opt.suite != "acceptance") throw UsageError("--suite must be acceptance");
  const auto results = testing::run_acceptance(opt.jobs, &std::cerr);
  Json criteria = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    Json c{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (opt.timing) c["seconds"] = r.seconds;
    criteria.push_back(c);
  }
  result["suite"] = opt.suite;
  result["criteria"] = criteria;
  result["passed"] = ok;
  return ok ? 0 : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum linear ordering problems over submodular functions"};
  app.name("ordolab");
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Threads for Monte Carlo and basis enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--timing", opt.timing, "Report wall time");
  app.add_option("--input", opt.input, "Instance file");
  app.add_option("--format", opt.format, "Instance format (default: from the extension)")
      ->check(CLI::IsMember({"graph", "matrix", "hypergraph"}));
  app.add_option("--prime", opt.prime, "Vector matroid rank over GF(prime)");

  const auto oracle_check = CLI::IsMember({"rank", "corank", "cut"});

  CLI::App* solve_cmd = app.add_subcommand("solve", "Exact MLOP optimum");
  solve_cmd->add_option("--exact", opt.exact, "Solver")
      ->check(CLI::IsMember({"dp", "fixed-basis", "cactus"}))
      ->capture_default_str();
  solve_cmd->add_option("--oracle", opt.oracle, "Set function")->check(oracle_check);
  solve_cmd->add_option("--costs", opt.costs, "Comma-separated positive element costs");

  CLI::App* approx_cmd = app.add_subcommand("approx", "Principal-partition approximation");
  approx_cmd->add_option("--oracle", opt.oracle, "Set function")->check(oracle_check);

  CLI::App* partition_cmd = app.add_subcommand("partition", "Principal partition");
  partition_cmd->add_option("--oracle", opt.oracle, "Set function")->check(oracle_check);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Instance reductions with certificates");
  reduce_cmd->add_option("--from", opt.from, "Source problem")->check(CLI::IsMember({"mlvc"}));
  reduce_cmd->add_option("--to", opt.to, "Target problem")
      ->required()
      ->check(CLI::IsMember({"graphic-mlop", "unweighted-graphic-mlop", "msvc", "mla"}));
  reduce_cmd->add_option("--labels", opt.labels, "Vertex sequence, 0-based, comma-separated");
  reduce_cmd->add_option("--output", opt.output, "Write the target instance here");

  CLI::App* mlvc_cmd = app.add_subcommand("mlvc", "Vertex-cover orderings");
  mlvc_cmd->add_option("--sample", opt.sample, "Best of N sampled orderings");
  mlvc_cmd->add_option("--balance", opt.balance, "Monte Carlo trials for the pair balance");
  mlvc_cmd->add_flag("--lp", opt.lp, "LP relaxation");
  mlvc_cmd->add_option("--emit", opt.emit, "Write the LP in CPLEX LP format");

  CLI::App* gh_cmd = app.add_subcommand("ghtree", "Gomory-Hu tree of the cut function");
  gh_cmd->add_option("--runs", opt.runs, "Rebuild with shuffled pivots and compare totals");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a built-in suite");
  verify_cmd->add_option("--suite", opt.suite, "Suite name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  Json report;
  report["schema"] = 1;
  std::vector<std::string> command(argv + 1, argv + argc);
  report["command"] = command;
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    Json result = Json::object();
    if (verify_cmd->parsed()) {
      code = cmd_verify(opt, result);
    } else {
      const Instance in = load(opt);
      report["instance"] = Json{{"path", in.path}, {"kind", in.kind}, {"digest", in.digest}};
      if (solve_cmd->parsed()) code = cmd_solve(opt, in, result);
      if (approx_cmd->parsed()) code = cmd_approx(opt, in, result);
      if (partition_cmd->parsed()) code = cmd_partition(opt, in, result);
      if (reduce_cmd->parsed()) code = cmd_reduce(opt, in, result);
      if (mlvc_cmd->parsed()) code = cmd_mlvc(opt, in, result);
      if (gh_cmd->parsed()) code = cmd_ghtree(opt, in, result);
    }
    report["seed"] = opt.seed;
    report["result"] = result;
  } catch (const io::ParseError& e) {
    std::cerr << "ordolab: " << opt.input << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const CapacityError& e) {
    std::cerr << "ordolab: instance too large: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    std::cerr << "ordolab: invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    std::cerr << "ordolab: " << e.what() << '\n';
    return kUsageError;
  }
  if (opt.timing) {
    report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << report.dump(2) << '\n';
  return code;
}
