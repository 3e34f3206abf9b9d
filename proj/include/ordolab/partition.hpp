#pragma once

#include <cstddef>
#include <vector>

#include "ordolab/core.hpp"
#include "ordolab/sfm.hpp"

namespace ordolab::partition {

struct ZeroSetContraction {
  // Maximal set with f(U) = 0.
  Subset zero_set;
  // f'(S) = f(U + S) - f(U) over E - U, relabeled densely.
  SetFunction contracted;
  // labels[i] is the original element behind contracted element i.
  std::vector<int> labels;
};

// Expects f normalized, monotone and submodular. Throws std::invalid_argument
// when the zero singletons do not span a zero set.
ZeroSetContraction zero_set_contract(const SetFunction& f);

// Nested maximal minimizers of f(X) - lambda |X|: chain[0] is empty,
// chain.back() the ground, critical_values[i] lies between chain[i] and
// chain[i+1].
struct PrincipalPartition {
  std::vector<Subset> chain;
  std::vector<Rational> critical_values;
  // f is identically zero; chain is (empty, E) and no critical values exist.
  bool trivial = false;
};

// Requires f(S) = 0 exactly when S is empty (contract zero sets first),
// except for the all-zero function, which is reported as trivial.
PrincipalPartition compute_principal_partition(const SetFunction& f,
                                               const sfm::SfmOptions& options = {});

struct LinearityStats {
  // kappa = max singleton value, ell = f(E) / kappa.
  Rational steepness;
  Rational linearity;
  std::size_t m = 0;
};

// Throws std::invalid_argument when f(E) = 0.
LinearityStats linearity_stats(const SetFunction& f);

}  // namespace ordolab::partition
