#include "ordolab/simplex.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "ordolab/core.hpp"

namespace ordolab::lp {

int LinearProgram::add_variable(std::string name, Rational cost) {
  variables.push_back(std::move(name));
  objective.push_back(std::move(cost));
  return static_cast<int>(variables.size()) - 1;
}

namespace {

class Tableau {
 public:
  // rows x (cols + 1); the last column holds the right-hand side.
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), a_(rows, std::vector<Rational>(cols + 1)), basis_(rows, -1) {}

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][cols_]; }
  int& basis(std::size_t r) { return basis_[r]; }

  void pivot(std::size_t r, std::size_t c, std::vector<Rational>& cost_row, Rational& cost_rhs) {
    const Rational p = a_[r][c];
    for (Rational& v : a_[r]) v /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational factor = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (a_[r][j] != 0) a_[i][j] -= factor * a_[r][j];
      }
    }
    if (cost_row[c] != 0) {
      const Rational factor = cost_row[c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (a_[r][j] != 0) cost_row[j] -= factor * a_[r][j];
      }
      cost_rhs -= factor * a_[r][cols_];
    }
    basis_[r] = static_cast<int>(c);
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Reduced costs for `costs`: cost_row = c - c_B B^-1 A, cost_rhs = -c_B x_B.
  void price(const std::vector<Rational>& costs, std::vector<Rational>& cost_row,
             Rational& cost_rhs) const {
    cost_row = costs;
    cost_rhs = 0;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      const Rational& cb = costs[static_cast<std::size_t>(basis_[r])];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (a_[r][j] != 0) cost_row[j] -= cb * a_[r][j];
      }
      cost_rhs -= cb * a_[r][cols_];
    }
  }

  // Bland's rule; returns false when unbounded.
  bool optimize(std::vector<Rational>& cost_row, Rational& cost_rhs,
                const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && cost_row[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = a_.size();
      Rational best_ratio;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        if (a_[r][enter] <= 0) continue;
        Rational ratio = a_[r][cols_] / a_[r][enter];
        if (leave == a_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          best_ratio = std::move(ratio);
          leave = r;
        }
      }
      if (leave == a_.size()) return false;
      pivot(leave, enter, cost_row, cost_rhs);
    }
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> a_;
  std::vector<int> basis_;
};

}  // namespace

Solution solve(const LinearProgram& program, std::size_t max_variables) {
  const std::size_t n = program.variables.size();
  if (program.objective.size() != n) throw std::invalid_argument("objective size mismatch");
  if (n > max_variables) {
    throw CapacityError("LP has " + std::to_string(n) +
                        " variables; the exact solver handles at most " +
                        std::to_string(max_variables) + " (emit it instead)");
  }
  const std::size_t m = program.constraints.size();
  // Column layout: structural, one slack/surplus per inequality, artificials.
  std::size_t slack_count = 0;
  for (const Constraint& c : program.constraints) {
    if (c.sense != Sense::kEqual) ++slack_count;
  }
  const std::size_t art_begin = n + slack_count;
  const std::size_t cols = art_begin + m;
  Tableau t(m, cols);
  std::size_t slack = n;
  for (std::size_t r = 0; r < m; ++r) {
    const Constraint& c = program.constraints[r];
    for (const auto& [var, coef] : c.terms) {
      if (var < 0 || static_cast<std::size_t>(var) >= n) {
        throw std::out_of_range("constraint " + c.name + " references an unknown variable");
      }
      t.at(r, static_cast<std::size_t>(var)) += coef;
    }
    t.rhs(r) = c.rhs;
    if (c.sense == Sense::kLessEqual) t.at(r, slack++) = 1;
    if (c.sense == Sense::kGreaterEqual) t.at(r, slack++) = -1;
    if (t.rhs(r) < 0) {
      for (std::size_t j = 0; j <= cols; ++j) t.at(r, j) = -t.at(r, j);
    }
    t.at(r, art_begin + r) = 1;
    t.basis(r) = static_cast<int>(art_begin + r);
  }

  std::vector<bool> allowed(cols, true);
  std::vector<Rational> phase1(cols, Rational(0));
  for (std::size_t j = art_begin; j < cols; ++j) phase1[j] = 1;
  std::vector<Rational> cost_row;
  Rational cost_rhs;
  t.price(phase1, cost_row, cost_rhs);
  t.optimize(cost_row, cost_rhs, allowed);
  Solution out;
  if (cost_rhs != 0) {
    out.status = Status::kInfeasible;
    return out;
  }
  // Drive remaining artificials out of the basis; rows that cannot pivot are
  // redundant.
  for (std::size_t r = t.rows(); r-- > 0;) {
    if (static_cast<std::size_t>(t.basis(r)) < art_begin) continue;
    std::size_t col = art_begin;
    for (std::size_t j = 0; j < art_begin; ++j) {
      if (t.at(r, j) != 0) {
        col = j;
        break;
      }
    }
    if (col == art_begin) {
      t.drop_row(r);
    } else {
      t.pivot(r, col, cost_row, cost_rhs);
    }
  }
  for (std::size_t j = art_begin; j < cols; ++j) allowed[j] = false;

  std::vector<Rational> phase2(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = program.minimize ? program.objective[j] : -program.objective[j];
  }
  t.price(phase2, cost_row, cost_rhs);
  if (!t.optimize(cost_row, cost_rhs, allowed)) {
    out.status = Status::kUnbounded;
    return out;
  }
  out.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const auto b = static_cast<std::size_t>(t.basis(r));
    if (b < n) out.x[b] = t.rhs(r);
  }
  out.value = 0;
  for (std::size_t j = 0; j < n; ++j) out.value += program.objective[j] * out.x[j];
  return out;
}

namespace {

std::string coefficient(const Rational& v) {
  if (is_integer(v)) return v.get_num().get_str();
  std::ostringstream os;
  os << std::setprecision(17) << static_cast<double>(to_long_double(v));
  return os.str();
}

void write_terms(std::ostringstream& os, const std::vector<std::pair<int, Rational>>& terms,
                 const std::vector<std::string>& names) {
  bool first = true;
  for (const auto& [var, coef] : terms) {
    if (coef == 0) continue;
    const bool negative = coef < 0;
    const Rational mag = negative ? Rational(-coef) : coef;
    if (first) {
      os << (negative ? "- " : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != 1) os << coefficient(mag) << ' ';
    os << names[static_cast<std::size_t>(var)];
    first = false;
  }
  if (first) os << "0 " << (names.empty() ? "x" : names.front());
}

}  // namespace

std::string to_lp_format(const LinearProgram& program) {
  std::ostringstream os;
  os << "\\ " << program.variables.size() << " variables, " << program.constraints.size()
     << " constraints\n";
  os << (program.minimize ? "Minimize\n" : "Maximize\n") << " obj: ";
  std::vector<std::pair<int, Rational>> obj;
  for (std::size_t j = 0; j < program.objective.size(); ++j) {
    obj.emplace_back(static_cast<int>(j), program.objective[j]);
  }
  write_terms(os, obj, program.variables);
  os << "\nSubject To\n";
  for (const Constraint& c : program.constraints) {
    os << ' ' << c.name << ": ";
    write_terms(os, c.terms, program.variables);
    switch (c.sense) {
      case Sense::kLessEqual: os << " <= "; break;
      case Sense::kGreaterEqual: os << " >= "; break;
      case Sense::kEqual: os << " = "; break;
    }
    os << coefficient(c.rhs) << '\n';
  }
  os << "Bounds\n";
  for (const std::string& v : program.variables) os << ' ' << v << " >= 0\n";
  os << "End\n";
  return os.str();
}

}  // namespace ordolab::lp
