#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ordolab/rational.hpp"

namespace ordolab::lp {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Constraint {
  std::string name;
  std::vector<std::pair<int, Rational>> terms;
  Sense sense = Sense::kLessEqual;
  Rational rhs;
};

// Minimize (or maximize) objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  std::vector<std::string> variables;
  std::vector<Rational> objective;
  bool minimize = true;
  std::vector<Constraint> constraints;

  int add_variable(std::string name, Rational cost = Rational(0));
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kOptimal;
  Rational value;
  std::vector<Rational> x;
};

// Dense two-phase primal simplex over the rationals with Bland's rule.
// Throws CapacityError beyond max_variables structural variables.
Solution solve(const LinearProgram& program, std::size_t max_variables = 200);

// CPLEX LP text: Minimize/Maximize, Subject To, Bounds, End.
std::string to_lp_format(const LinearProgram& program);

}  // namespace ordolab::lp
