#include "ordolab/simplex.hpp"

#include "gtest/gtest.h"
#include "ordolab/core.hpp"

namespace ordolab::lp {
namespace {

TEST(SimplexTest, SmallMaximization) {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3.
  LinearProgram p;
  p.minimize = false;
  const int x = p.add_variable("x", 3);
  const int y = p.add_variable("y", 2);
  p.constraints.push_back({"a", {{x, 1}, {y, 1}}, Sense::kLessEqual, 4});
  p.constraints.push_back({"b", {{x, 1}, {y, 3}}, Sense::kLessEqual, 6});
  p.constraints.push_back({"c", {{x, 1}}, Sense::kLessEqual, 3});
  const Solution s = solve(p);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.value, 11);
  EXPECT_EQ(s.x[0], 3);
  EXPECT_EQ(s.x[1], 1);
}

TEST(SimplexTest, EqualityAndFractions) {
  // min x + y s.t. 2x + 3y = 1, x - y >= 0.
  LinearProgram p;
  const int x = p.add_variable("x", 1);
  const int y = p.add_variable("y", 1);
  p.constraints.push_back({"eq", {{x, 2}, {y, 3}}, Sense::kEqual, 1});
  p.constraints.push_back({"ge", {{x, 1}, {y, -1}}, Sense::kGreaterEqual, 0});
  const Solution s = solve(p);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.value, make_rational(2, 5));
}

TEST(SimplexTest, InfeasibleAndUnbounded) {
  LinearProgram infeasible;
  const int x = infeasible.add_variable("x", 1);
  infeasible.constraints.push_back({"lo", {{x, 1}}, Sense::kGreaterEqual, 2});
  infeasible.constraints.push_back({"hi", {{x, 1}}, Sense::kLessEqual, 1});
  EXPECT_EQ(solve(infeasible).status, Status::kInfeasible);

  LinearProgram unbounded;
  unbounded.minimize = false;
  const int z = unbounded.add_variable("z", 1);
  unbounded.constraints.push_back({"lo", {{z, 1}}, Sense::kGreaterEqual, 1});
  EXPECT_EQ(solve(unbounded).status, Status::kUnbounded);
}

TEST(SimplexTest, DegenerateCycleProneInstance) {
  // Beale's example cycles under the largest-coefficient rule.
  LinearProgram p;
  const int x1 = p.add_variable("x1", make_rational(-3, 4));
  const int x2 = p.add_variable("x2", 150);
  const int x3 = p.add_variable("x3", make_rational(-1, 50));
  const int x4 = p.add_variable("x4", 6);
  p.constraints.push_back({"r1",
                           {{x1, make_rational(1, 4)}, {x2, -60}, {x3, make_rational(-1, 25)}, {x4, 9}},
                           Sense::kLessEqual,
                           0});
  p.constraints.push_back({"r2",
                           {{x1, make_rational(1, 2)}, {x2, -90}, {x3, make_rational(-1, 50)}, {x4, 3}},
                           Sense::kLessEqual,
                           0});
  p.constraints.push_back({"r3", {{x3, 1}}, Sense::kLessEqual, 1});
  const Solution s = solve(p);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.value, make_rational(-1, 20));
}

TEST(SimplexTest, CapacityAndFormat) {
  LinearProgram p;
  for (int i = 0; i < 5; ++i) p.add_variable("v" + std::to_string(i), 1);
  EXPECT_THROW(solve(p, 4), CapacityError);
  p.constraints.push_back({"c", {{0, 1}, {1, -1}}, Sense::kGreaterEqual, 1});
  const std::string text = to_lp_format(p);
  EXPECT_NE(text.find("Minimize"), std::string::npos);
  EXPECT_NE(text.find("c: v0 - v1 >= 1"), std::string::npos);
  EXPECT_NE(text.find("Bounds"), std::string::npos);
}

}  // namespace
}  // namespace ordolab::lp
