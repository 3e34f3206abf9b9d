#include "ordolab/sfm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace ordolab::sfm {

namespace {

// A submodular function on a relabeled ground 0..k-1.
struct Restricted {
  std::size_t size = 0;
  std::function<Rational(const Subset&)> eval;
};

struct Best {
  Rational value;
  Subset set;
  bool certified = true;
  Rational lower_bound;
};

Best exhaustive_value(const Restricted& g, Subset* minimal, Subset* maximal) {
  const std::uint64_t limit = std::uint64_t{1} << g.size;
  Best best{g.eval(Subset()), Subset(), true, Rational(0)};
  Subset lo;
  Subset hi;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const Subset s = Subset::from_mask(mask);
    Rational v = g.eval(s);
    if (v < best.value) {
      best.value = std::move(v);
      best.set = s;
      lo = s;
      hi = s;
    } else if (v == best.value) {
      lo &= s;
      hi |= s;
    }
  }
  if (best.set.empty()) lo = Subset();
  best.lower_bound = best.value;
  if (minimal != nullptr) *minimal = lo;
  if (maximal != nullptr) *maximal = hi;
  return best;
}

std::vector<long double> to_floats(const std::vector<Rational>& v) {
  std::vector<long double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_long_double(v[i]);
  return out;
}

long double dot(const std::vector<long double>& a, const std::vector<long double>& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Solves min ||sum a_i p_i||^2 subject to sum a_i = 1. Returns false when the
// bordered Gram system is numerically singular.
bool affine_minimizer(const std::vector<std::vector<long double>>& points,
                      std::vector<long double>& alpha) {
  const std::size_t r = points.size();
  const std::size_t n = r + 1;
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n + 1, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = dot(points[i], points[j]);
    a[i][r] = 1;
    a[r][i] = 1;
  }
  a[r][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (std::fabs(a[i][c]) > std::fabs(a[pivot][c])) pivot = i;
    }
    if (std::fabs(a[pivot][c]) < 1e-30L) return false;
    std::swap(a[pivot], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const long double factor = a[i][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[i][k] -= factor * a[c][k];
    }
  }
  alpha.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) alpha[i] = a[i][n] / a[i][i];
  return true;
}

std::vector<int> ascending_order(const std::vector<long double>& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return x[static_cast<std::size_t>(a)] < x[static_cast<std::size_t>(b)];
  });
  return order;
}

// Exact minimizer of ||sum a_i y_i|| over the affine hull of the atoms.
// Empty when the system is singular or some weight is negative.
std::vector<Rational> exact_affine_weights(const std::vector<std::vector<Rational>>& atoms) {
  const std::size_t r = atoms.size();
  if (r == 0) return {};
  const std::size_t n = r + 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t e = 0; e < atoms[i].size(); ++e) a[i][j] += atoms[i][e] * atoms[j][e];
    }
    a[i][r] = 1;
    a[r][i] = 1;
  }
  a[r][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(a[pivot], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational factor = a[i][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[i][k] -= factor * a[c][k];
    }
  }
  std::vector<Rational> alpha(r);
  for (std::size_t i = 0; i < r; ++i) {
    alpha[i] = a[i][n] / a[i][i];
    if (alpha[i] < 0) return {};
  }
  return alpha;
}

Best min_norm_value(const Restricted& g, const SfmOptions& options) {
  const Rational base = g.eval(Subset());
  const SetFunction h(g.size, [&](const Subset& s) -> Rational { return g.eval(s) - base; });
  const MinNormPoint mnp = min_norm_point(h, options.tolerance, options.max_iterations);

  // Level sets of the numerical point, evaluated exactly.
  const std::vector<int> order = ascending_order(mnp.point);
  Best best{Rational(0), Subset(), false, Rational(0)};
  Subset prefix;
  for (int e : order) {
    prefix.insert(e);
    Rational v = h(prefix);
    if (v < best.value) {
      best.value = std::move(v);
      best.set = prefix;
    }
  }
  // Exact single-element descent from the rounded set.
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t e = 0; e < g.size; ++e) {
      Subset next = best.set;
      if (next.contains(static_cast<int>(e))) {
        next.erase(static_cast<int>(e));
      } else {
        next.insert(static_cast<int>(e));
      }
      Rational v = h(next);
      if (v < best.value) {
        best.value = std::move(v);
        best.set = next;
        improved = true;
      }
    }
  }
  // Exact dual bound: any convex combination of extreme bases lies in B(h),
  // and its negative part lower-bounds every h(X). The affine minimizer over
  // the final atoms is recomputed exactly; rounded weights are the fallback.
  std::vector<std::vector<Rational>> atoms;
  for (const std::vector<int>& order : mnp.atoms) atoms.push_back(greedy_base(h, order));
  std::vector<Rational> weights = exact_affine_weights(atoms);
  if (weights.empty()) {
    for (long double w : mnp.weights) {
      weights.push_back(w > 0 ? from_double(static_cast<double>(w)) : Rational(0));
    }
  }
  Rational total = 0;
  for (const Rational& w : weights) total += w;
  Rational lower = 0;
  if (total > 0) {
    std::vector<Rational> combo(g.size, Rational(0));
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (weights[i] == 0) continue;
      for (std::size_t e = 0; e < g.size; ++e) combo[e] += weights[i] * atoms[i][e];
    }
    for (Rational& c : combo) {
      c /= total;
      if (c < 0) lower += c;
    }
  }
  best.certified = lower == best.value;
  best.lower_bound = lower + base;
  best.value += base;
  return best;
}

Best minimize_value(const Restricted& g, const SfmOptions& options) {
  if (g.size <= options.exhaustive_cap && g.size < 63 && !options.force_min_norm_point) {
    return exhaustive_value(g, nullptr, nullptr);
  }
  return min_norm_value(g, options);
}

Restricted restrict(const Restricted& g, const Subset& include, const Subset& exclude) {
  std::vector<int> free;
  for (std::size_t e = 0; e < g.size; ++e) {
    const int el = static_cast<int>(e);
    if (!include.contains(el) && !exclude.contains(el)) free.push_back(el);
  }
  Restricted out;
  out.size = free.size();
  out.eval = [eval = g.eval, include, free = std::move(free)](const Subset& s) {
    Subset full = include;
    s.for_each([&](int e) { full.insert(free[static_cast<std::size_t>(e)]); });
    return eval(full);
  };
  return out;
}

std::vector<int> free_labels(std::size_t size, const Subset& include, const Subset& exclude) {
  std::vector<int> free;
  for (std::size_t e = 0; e < size; ++e) {
    const int el = static_cast<int>(e);
    if (!include.contains(el) && !exclude.contains(el)) free.push_back(el);
  }
  return free;
}

SfmResult minimize(const Restricted& g, const SfmOptions& options) {
  SfmResult result;
  if (g.size <= options.exhaustive_cap && g.size < 63 && !options.force_min_norm_point) {
    const Best best = exhaustive_value(g, &result.minimal_minimizer, &result.maximal_minimizer);
    result.min_value = best.value;
    result.lower_bound = best.value;
    result.certified = true;
    return result;
  }
  Best best = min_norm_value(g, options);
  // Element-wise probes: e joins the maximal minimizer iff some minimizer
  // contains it, and the minimal one iff every minimizer does.
  for (bool restart = true; restart;) {
    restart = false;
    Subset maximal = best.set;
    Subset minimal = best.set;
    for (std::size_t i = 0; i < g.size && !restart; ++i) {
      const int e = static_cast<int>(i);
      const bool inside = best.set.contains(e);
      Subset include;
      Subset exclude;
      (inside ? exclude : include).insert(e);
      const Best probe = minimize_value(restrict(g, include, exclude), options);
      if (probe.value < best.value) {
        // The probe found a strictly better set; adopt it and start over.
        Subset lifted = include;
        const std::vector<int> free = free_labels(g.size, include, exclude);
        probe.set.for_each([&](int f) { lifted.insert(free[static_cast<std::size_t>(f)]); });
        best.value = probe.value;
        best.set = lifted;
        best.certified = false;
        restart = true;
        break;
      }
      if (probe.value == best.value) {
        if (!inside) maximal.insert(e);
        if (inside) minimal.erase(e);
      }
      best.certified = best.certified && probe.certified;
    }
    if (!restart) {
      result.minimal_minimizer = minimal;
      result.maximal_minimizer = maximal;
    }
  }
  result.min_value = best.value;
  result.lower_bound = best.lower_bound;
  result.certified = best.certified;
  return result;
}

void check_subset(const Subset& s, std::size_t size, const char* what) {
  if (s.extent() > size) {
    throw std::out_of_range(std::string(what) + " set leaves the ground set");
  }
}

}  // namespace

std::vector<Rational> greedy_base(const SetFunction& g, const std::vector<int>& order) {
  std::vector<Rational> y(g.size(), Rational(0));
  Subset prefix;
  Rational prev = g(prefix);
  for (int e : order) {
    prefix.insert(e);
    Rational cur = g(prefix);
    y[static_cast<std::size_t>(e)] = cur - prev;
    prev = std::move(cur);
  }
  return y;
}

MinNormPoint min_norm_point(const SetFunction& g, double tolerance,
                            std::size_t max_iterations) {
  const std::size_t n = g.size();
  MinNormPoint out;
  if (n == 0) return out;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<long double>> points{to_floats(greedy_base(g, order))};
  std::vector<std::vector<int>> atoms{order};
  std::vector<long double> weights{1.0L};
  std::vector<long double> x = points[0];

  auto recompute_x = [&]() {
    std::fill(x.begin(), x.end(), 0.0L);
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t e = 0; e < n; ++e) x[e] += weights[i] * points[i][e];
    }
  };

  long double max_norm = dot(points[0], points[0]);
  std::size_t iter = 0;
  for (; iter < max_iterations; ++iter) {
    std::vector<int> q_order = ascending_order(x);
    std::vector<long double> q = to_floats(greedy_base(g, q_order));
    max_norm = std::max(max_norm, dot(q, q));
    const long double gap = dot(x, x) - dot(x, q);
    if (gap <= static_cast<long double>(tolerance) * std::max(max_norm, 1.0L)) break;
    if (std::find(points.begin(), points.end(), q) != points.end()) break;
    points.push_back(std::move(q));
    atoms.push_back(std::move(q_order));
    weights.push_back(0.0L);

    bool stalled = false;
    for (std::size_t minor = 0; minor <= n + 1; ++minor) {
      std::vector<long double> alpha;
      if (!affine_minimizer(points, alpha)) {
        points.pop_back();
        atoms.pop_back();
        weights.pop_back();
        stalled = true;
        break;
      }
      const bool interior = std::all_of(alpha.begin(), alpha.end(),
                                        [](long double a) { return a > 1e-15L; });
      if (interior) {
        weights = alpha;
        break;
      }
      long double theta = 1.0L;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= 1e-15L) {
          const long double denom = weights[i] - alpha[i];
          if (denom > 0) theta = std::min(theta, weights[i] / denom);
        }
      }
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        weights[i] = theta * alpha[i] + (1 - theta) * weights[i];
      }
      // Drop the points whose weight vanished (at least the argmin).
      std::size_t drop = 0;
      for (std::size_t i = 1; i < weights.size(); ++i) {
        if (weights[i] < weights[drop]) drop = i;
      }
      std::vector<std::vector<long double>> kept_points;
      std::vector<std::vector<int>> kept_atoms;
      std::vector<long double> kept_weights;
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i == drop || weights[i] <= 1e-15L) continue;
        kept_points.push_back(std::move(points[i]));
        kept_atoms.push_back(std::move(atoms[i]));
        kept_weights.push_back(weights[i]);
      }
      points = std::move(kept_points);
      atoms = std::move(kept_atoms);
      weights = std::move(kept_weights);
      const long double sum = std::accumulate(weights.begin(), weights.end(), 0.0L);
      for (long double& w : weights) w /= sum;
    }
    recompute_x();
    if (stalled) break;
  }
  out.point = x;
  out.atoms = std::move(atoms);
  out.weights = std::move(weights);
  out.iterations = iter;
  return out;
}

SfmResult constrained_min(const SetFunction& f, const Rational& lambda, const Subset& include,
                          const Subset& exclude, const SfmOptions& options) {
  check_subset(include, f.size(), "include");
  check_subset(exclude, f.size(), "exclude");
  if (include.intersects(exclude)) {
    throw std::invalid_argument("include and exclude sets overlap");
  }
  Restricted whole;
  whole.size = f.size();
  whole.eval = [&f, lambda](const Subset& s) -> Rational {
    return f(s) - lambda * Rational(static_cast<long>(s.count()));
  };
  const Restricted g = restrict(whole, include, exclude);
  const std::vector<int> free = free_labels(f.size(), include, exclude);
  SfmResult local = minimize(g, options);
  auto lift = [&](const Subset& s) {
    Subset out = include;
    s.for_each([&](int e) { out.insert(free[static_cast<std::size_t>(e)]); });
    return out;
  };
  local.minimal_minimizer = lift(local.minimal_minimizer);
  local.maximal_minimizer = lift(local.maximal_minimizer);
  return local;
}

SfmResult minimize_offset(const SetFunction& f, const Rational& lambda,
                          const SfmOptions& options) {
  return constrained_min(f, lambda, Subset(), Subset(), options);
}

StCut st_min_cut(const SetFunction& f, int s, int t, const SfmOptions& options) {
  const auto n = static_cast<int>(f.size());
  if (s < 0 || t < 0 || s >= n || t >= n) throw std::out_of_range("cut terminal out of range");
  if (s == t) throw std::invalid_argument("s and t must differ");
  if (f(Subset()) != 0 || f(f.full()) != 0) {
    throw std::invalid_argument("st_min_cut needs f(empty) = f(ground) = 0");
  }
  const SfmResult r = constrained_min(f, Rational(0), Subset{s}, Subset{t}, options);
  return StCut{r.minimal_minimizer, r.min_value};
}

}  // namespace ordolab::sfm
