#include "ordolab/mlvc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ordolab::mlvc {

SchedulingPoset build_poset(const Hypergraph& hypergraph) {
  SchedulingPoset poset;
  poset.num_vertices = hypergraph.num_vertices();
  poset.num_edges = hypergraph.num_edges();
  poset.processing.assign(static_cast<std::size_t>(poset.num_vertices), 1);
  poset.weight.assign(static_cast<std::size_t>(poset.num_vertices), 0);
  for (std::size_t i = 0; i < hypergraph.num_edges(); ++i) {
    const std::vector<int>& e = hypergraph.edge(i);
    if (e.empty()) throw std::invalid_argument("hyperedges must be nonempty");
    const int job = poset.num_vertices + static_cast<int>(i);
    poset.processing.push_back(0);
    poset.weight.push_back(1);
    for (int v : e) poset.precedences.emplace_back(v, job);
  }
  return poset;
}

std::int64_t mlsc_objective(const Hypergraph& hypergraph, const Ordering& labels) {
  if (labels.size() != static_cast<std::size_t>(hypergraph.num_vertices())) {
    throw std::invalid_argument("labeling does not cover the vertices");
  }
  std::int64_t total = 0;
  for (const auto& e : hypergraph.edges()) {
    int top = 0;
    for (int v : e) top = std::max(top, labels.position(v));
    total += top;
  }
  return total;
}

std::vector<int> sample_extension(const Hypergraph& hypergraph, Rng& rng) {
  const int n = hypergraph.num_vertices();
  std::vector<int> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  rng.shuffle(vertices);
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  std::vector<int> remaining(hypergraph.num_edges());
  for (std::size_t i = 0; i < hypergraph.num_edges(); ++i) {
    remaining[i] = static_cast<int>(hypergraph.edge(i).size());
    for (int v : hypergraph.edge(i)) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  }
  std::vector<int> jobs;
  jobs.reserve(static_cast<std::size_t>(n) + hypergraph.num_edges());
  std::vector<int> done;
  for (int v : vertices) {
    jobs.push_back(v);
    done.clear();
    for (int e : incident[static_cast<std::size_t>(v)]) {
      if (--remaining[static_cast<std::size_t>(e)] == 0) done.push_back(n + e);
    }
    rng.shuffle(done);
    jobs.insert(jobs.end(), done.begin(), done.end());
  }
  return jobs;
}

std::vector<int> sample_extension(const Hypergraph& hypergraph, std::uint64_t seed) {
  Rng rng(seed);
  return sample_extension(hypergraph, rng);
}

bool is_linear_extension(const SchedulingPoset& poset, const std::vector<int>& jobs) {
  const std::size_t total = poset.num_jobs();
  if (jobs.size() != total) return false;
  std::vector<int> position(total, -1);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const int j = jobs[i];
    if (j < 0 || static_cast<std::size_t>(j) >= total || position[static_cast<std::size_t>(j)] != -1) {
      return false;
    }
    position[static_cast<std::size_t>(j)] = static_cast<int>(i);
  }
  return std::all_of(poset.precedences.begin(), poset.precedences.end(), [&](const auto& p) {
    return position[static_cast<std::size_t>(p.first)] < position[static_cast<std::size_t>(p.second)];
  });
}

Ordering induced_vertex_order(const SchedulingPoset& poset, const std::vector<int>& jobs) {
  std::vector<int> seq;
  for (int j : jobs) {
    if (poset.is_vertex(j)) seq.push_back(j);
  }
  return Ordering::from_sequence(std::move(seq));
}

namespace {

std::vector<int> job_vertices(const Hypergraph& hypergraph, int job) {
  if (job < hypergraph.num_vertices()) return {job};
  std::vector<int> vs = hypergraph.edge(static_cast<std::size_t>(job - hypergraph.num_vertices()));
  std::sort(vs.begin(), vs.end());
  return vs;
}

bool comparable(const Hypergraph& hypergraph, int x, int y) {
  const int n = hypergraph.num_vertices();
  if ((x < n) == (y < n)) return false;
  const int v = std::min(x, y);
  const auto& e = hypergraph.edge(static_cast<std::size_t>(std::max(x, y) - n));
  return std::find(e.begin(), e.end(), v) != e.end();
}

}  // namespace

OverlapProfile overlap(const Hypergraph& hypergraph, int first_job, int second_job) {
  const std::vector<int> a = job_vertices(hypergraph, first_job);
  const std::vector<int> b = job_vertices(hypergraph, second_job);
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  const auto c = static_cast<int>(common.size());
  return OverlapProfile{static_cast<int>(a.size()) - c, static_cast<int>(b.size()) - c, c};
}

Rational pair_probability(const OverlapProfile& p) {
  return (Rational(p.b) + Rational(p.c) / 2) / Rational(p.a + p.b + p.c);
}

BalanceReport balance_check(const Hypergraph& hypergraph, std::size_t trials,
                            std::uint64_t seed, std::size_t jobs) {
  if (trials == 0) throw std::invalid_argument("balance check needs at least one trial");
  const auto total_jobs = static_cast<int>(static_cast<std::size_t>(hypergraph.num_vertices()) +
                                           hypergraph.num_edges());
  BalanceReport report;
  report.trials = trials;
  report.seed = seed;
  report.floor = Rational(1) / Rational(1 + static_cast<long>(hypergraph.max_edge_size()));
  for (int x = 0; x < total_jobs; ++x) {
    for (int y = x + 1; y < total_jobs; ++y) {
      if (comparable(hypergraph, x, y)) continue;
      PairEstimate p;
      p.first_job = x;
      p.second_job = y;
      p.profile = overlap(hypergraph, x, y);
      p.exact = pair_probability(p.profile);
      report.pairs.push_back(p);
    }
  }
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> counts(chunks,
                                                 std::vector<std::uint64_t>(report.pairs.size()));
  auto run_chunk = [&](std::size_t chunk) {
    Rng rng(seed, chunk + 1);
    const std::size_t begin = chunk * kChunk;
    const std::size_t end = std::min(trials, begin + kChunk);
    std::vector<int> position(static_cast<std::size_t>(total_jobs));
    for (std::size_t t = begin; t < end; ++t) {
      const std::vector<int> order = sample_extension(hypergraph, rng);
      for (std::size_t i = 0; i < order.size(); ++i) {
        position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
      }
      for (std::size_t k = 0; k < report.pairs.size(); ++k) {
        const PairEstimate& p = report.pairs[k];
        if (position[static_cast<std::size_t>(p.first_job)] <
            position[static_cast<std::size_t>(p.second_job)]) {
          ++counts[chunk][k];
        }
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, chunks));
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (std::size_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
    for (std::thread& t : pool) t.join();
  }
  const double floor = static_cast<double>(to_long_double(report.floor));
  double worst = 2;
  for (std::size_t k = 0; k < report.pairs.size(); ++k) {
    std::uint64_t hits = 0;
    for (std::size_t c = 0; c < chunks; ++c) hits += counts[c][k];
    PairEstimate& p = report.pairs[k];
    p.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    p.stddev = std::sqrt(p.estimate * (1 - p.estimate) / static_cast<double>(trials));
    const double low = std::min(p.estimate, 1 - p.estimate);
    p.flagged = low + 3 * p.stddev < floor;
    if (low < worst) {
      worst = low;
      report.worst_pair = k;
    }
  }
  return report;
}

BestOfN best_of_n(const Hypergraph& hypergraph, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("best-of-N needs N >= 1");
  const SchedulingPoset poset = build_poset(hypergraph);
  Rng rng(seed);
  BestOfN best;
  for (std::size_t i = 0; i < samples; ++i) {
    const Ordering labels = induced_vertex_order(poset, sample_extension(hypergraph, rng));
    const std::int64_t value = mlsc_objective(hypergraph, labels);
    if (i == 0 || value < best.value) {
      best.value = value;
      best.labels = labels;
    }
  }
  return best;
}

BestOfN brute_force_mlsc(const Hypergraph& hypergraph) {
  const int n = hypergraph.num_vertices();
  if (n > 10) throw CapacityError("brute-force MLVC handles at most 10 vertices");
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  BestOfN best;
  bool first = true;
  do {
    const Ordering labels = Ordering::from_sequence(seq);
    const std::int64_t value = mlsc_objective(hypergraph, labels);
    if (first || value < best.value) {
      best.value = value;
      best.labels = labels;
      first = false;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

LpModel build_lp(const Hypergraph& hypergraph) {
  LpModel model;
  model.n = hypergraph.num_vertices();
  model.num_edges = hypergraph.num_edges();
  const auto n = static_cast<std::size_t>(model.n);
  lp::LinearProgram& prog = model.program;
  model.u_index.assign(model.num_edges, std::vector<int>(n));
  model.x_index.assign(n, std::vector<int>(n));
  for (std::size_t e = 0; e < model.num_edges; ++e) {
    for (std::size_t t = 0; t < n; ++t) {
      model.u_index[e][t] = prog.add_variable(
          "u_" + std::to_string(e + 1) + "_" + std::to_string(t + 1), Rational(1));
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t t = 0; t < n; ++t) {
      model.x_index[v][t] =
          prog.add_variable("x_" + std::to_string(v + 1) + "_" + std::to_string(t + 1));
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    lp::Constraint c;
    c.name = "slot_" + std::to_string(t + 1);
    for (std::size_t v = 0; v < n; ++v) c.terms.emplace_back(model.x_index[v][t], Rational(1));
    c.sense = lp::Sense::kLessEqual;
    c.rhs = 1;
    prog.constraints.push_back(std::move(c));
  }
  for (std::size_t e = 0; e < model.num_edges; ++e) {
    for (int v : hypergraph.edge(e)) {
      for (std::size_t t = 0; t < n; ++t) {
        lp::Constraint c;
        c.name = "cover_" + std::to_string(e + 1) + "_" + std::to_string(v + 1) + "_" +
                 std::to_string(t + 1);
        c.terms.emplace_back(model.u_index[e][t], Rational(1));
        for (std::size_t s = 0; s < t; ++s) {
          c.terms.emplace_back(model.x_index[static_cast<std::size_t>(v)][s], Rational(1));
        }
        c.sense = lp::Sense::kGreaterEqual;
        c.rhs = 1;
        prog.constraints.push_back(std::move(c));
      }
    }
  }
  return model;
}

Rational solve_lp(const LpModel& model, std::size_t max_variables) {
  const lp::Solution sol = lp::solve(model.program, max_variables);
  if (sol.status != lp::Status::kOptimal) {
    throw std::logic_error("MLVC relaxation should be feasible and bounded");
  }
  return sol.value;
}

std::string emit_lp(const LpModel& model) { return lp::to_lp_format(model.program); }

CliqueGap clique_gap(int n) {
  if (n < 2) throw std::invalid_argument("clique gap needs n >= 2");
  CliqueGap out;
  out.integer_optimum = 0;
  for (int i = 2; i <= n; ++i) out.integer_optimum += Integer(i) * Integer(i - 1);
  Rational per_edge = 0;
  for (int t = 1; t <= n; ++t) per_edge += Rational(1) - make_rational(t - 1, n);
  out.fractional_value = per_edge * Rational(static_cast<long>(n) * (n - 1) / 2);
  out.ratio = Rational(out.integer_optimum) / out.fractional_value;
  return out;
}

}  // namespace ordolab::mlvc
