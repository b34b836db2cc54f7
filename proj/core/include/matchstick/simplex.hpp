#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace matchstick {

using Rational = boost::multiprecision::cpp_rational;

enum class Rel { le, eq, ge };

// One linear constraint: sum(coeff_j * x_j) rel rhs.
struct Constraint {
  std::vector<std::pair<int, Rational>> terms;
  Rel rel = Rel::le;
  Rational rhs = 0;
};

// maximize objective . x over free variables x, subject to constraints.
// All data exact rationals; bounds on variables are ordinary constraints.
struct RationalLP {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<std::string> var_names;  // optional, used by dump_lp

  int add_var(const std::string& name = {});
  void add_constraint(std::vector<std::pair<int, Rational>> terms, Rel rel, Rational rhs);
};

enum class LPStatus { optimal, infeasible, unbounded };

// Result plus certificate. For `optimal`, dual holds one multiplier per
// constraint with sum_i dual_i*a_ij = c_j, sign-feasible, and
// dual.b = objective value. For `infeasible`, dual is a Farkas vector:
// sign-feasible, sum_i dual_i*a_ij = 0 for all j, dual.b < 0.
// Certificates are re-verified exactly before simplex_solve returns.
struct LPOutcome {
  LPStatus status = LPStatus::optimal;
  Rational optimal_value = 0;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};

// Two-phase exact simplex with Bland's rule.
LPOutcome simplex_solve(const RationalLP& lp);

bool verify_optimal(const RationalLP& lp, const LPOutcome& out);
bool verify_farkas(const RationalLP& lp, const std::vector<Rational>& farkas);

// One constraint per line, rationals printed as p/q.
std::string dump_lp(const RationalLP& lp);

}  // namespace matchstick
