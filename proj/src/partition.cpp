#include "ordolab/partition.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ordolab::partition {

ZeroSetContraction zero_set_contract(const SetFunction& f) {
  Subset zero;
  std::vector<int> labels;
  for (std::size_t e = 0; e < f.size(); ++e) {
    const int el = static_cast<int>(e);
    if (f(Subset{el}) == 0) {
      zero.insert(el);
    } else {
      labels.push_back(el);
    }
  }
  const Rational base = f(zero);
  if (base != 0) {
    throw std::invalid_argument("zero singletons span a set of value " + to_string(base) +
                                "; f is not monotone submodular");
  }
  SetFunction contracted(labels.size(), [f, zero, labels](const Subset& s) {
    Subset full = zero;
    s.for_each([&](int e) { full.insert(labels[static_cast<std::size_t>(e)]); });
    return f(full);
  });
  return ZeroSetContraction{zero, std::move(contracted), std::move(labels)};
}

namespace {

struct Newton {
  const SetFunction& f;
  const sfm::SfmOptions& options;
  PrincipalPartition& out;

  // Fills the chain strictly between lo and hi (both maximal minimizers).
  void split(const Subset& lo, const Rational& f_lo, const Subset& hi, const Rational& f_hi) {
    const auto size_lo = static_cast<long>(lo.count());
    const auto size_hi = static_cast<long>(hi.count());
    const Rational lambda = (f_hi - f_lo) / Rational(size_hi - size_lo);
    const sfm::SfmResult r = sfm::minimize_offset(f, lambda, options);
    const Rational line = f_lo - lambda * Rational(size_lo);
    if (r.min_value == line) {
      out.critical_values.push_back(lambda);
      out.chain.push_back(hi);
      return;
    }
    const Subset mid = r.maximal_minimizer;
    if (!lo.is_subset_of(mid) || !mid.is_subset_of(hi) || mid == lo || mid == hi) {
      throw std::logic_error("principal partition search left its bracket; f is not submodular");
    }
    const Rational f_mid = f(mid);
    split(lo, f_lo, mid, f_mid);
    split(mid, f_mid, hi, f_hi);
  }
};

}  // namespace

PrincipalPartition compute_principal_partition(const SetFunction& f,
                                               const sfm::SfmOptions& options) {
  if (f(Subset()) != 0) throw std::invalid_argument("f(empty) must be 0");
  PrincipalPartition out;
  out.chain.push_back(Subset());
  const Subset ground = f.full();
  const Rational total = f(ground);
  if (total == 0) {
    out.chain.push_back(ground);
    out.trivial = true;
    return out;
  }
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (f(Subset{static_cast<int>(e)}) == 0) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " has zero value; contract the zero set first");
    }
  }
  Newton newton{f, options, out};
  newton.split(Subset(), Rational(0), ground, total);
  return out;
}

LinearityStats linearity_stats(const SetFunction& f) {
  const Rational total = f(f.full());
  if (total == 0) throw std::invalid_argument("linearity undefined for f(E) = 0");
  Rational kappa = 0;
  for (std::size_t e = 0; e < f.size(); ++e) {
    Rational v = f(Subset{static_cast<int>(e)});
    if (v > kappa) kappa = std::move(v);
  }
  return LinearityStats{kappa, total / kappa, f.size()};
}

}  // namespace ordolab::partition
