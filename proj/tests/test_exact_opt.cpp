#include <doctest.h>

#include <cstdint>
#include <random>

#include "matchstick/mis.hpp"
#include "matchstick/simplex.hpp"
#include "test_util.hpp"

using namespace matchstick;

namespace {

// Independent certificate checker, written directly from the duality
// definitions rather than reusing the library's verify_* helpers.
bool recheck_outcome(const RationalLP& lp, const LPOutcome& out) {
  const auto& cons = lp.constraints;
  if (out.status == LPStatus::unbounded) return true;  // no certificate defined
  if (static_cast<int>(out.dual.size()) != static_cast<int>(cons.size()))
    return false;
  // dual sign feasibility: <= rows need y >= 0, >= rows y <= 0, = rows free
  for (size_t i = 0; i < cons.size(); ++i) {
    if (cons[i].rel == Rel::le && out.dual[i] < 0) return false;
    if (cons[i].rel == Rel::ge && out.dual[i] > 0) return false;
  }
  // column sums: sum_i y_i * a_ij must equal c_j (optimal) or 0 (Farkas)
  std::vector<Rational> col(lp.num_vars, 0);
  Rational yb = 0;
  for (size_t i = 0; i < cons.size(); ++i) {
    for (const auto& [j, a] : cons[i].terms) col[j] += out.dual[i] * a;
    yb += out.dual[i] * cons[i].rhs;
  }
  if (out.status == LPStatus::infeasible)
    return col == std::vector<Rational>(lp.num_vars, 0) && yb < 0;

  // optimal: primal feasibility + objective match + strong duality
  if (static_cast<int>(out.primal.size()) != lp.num_vars) return false;
  for (const auto& c : cons) {
    Rational lhs = 0;
    for (const auto& [j, a] : c.terms) lhs += a * out.primal[j];
    if (c.rel == Rel::le && lhs > c.rhs) return false;
    if (c.rel == Rel::ge && lhs < c.rhs) return false;
    if (c.rel == Rel::eq && lhs != c.rhs) return false;
  }
  Rational cx = 0;
  for (int j = 0; j < lp.num_vars; ++j) cx += lp.objective[j] * out.primal[j];
  return col == lp.objective && cx == out.optimal_value && yb == out.optimal_value;
}

RationalLP random_lp(std::mt19937_64& rng) {
  RationalLP lp;
  std::uniform_int_distribution<int> nv(1, 5), nc(1, 8), coeff(-3, 3),
      den(1, 3), relpick(0, 2);
  int vars = nv(rng);
  for (int j = 0; j < vars; ++j) lp.add_var();
  for (int j = 0; j < vars; ++j)
    lp.objective[j] = Rational(coeff(rng), den(rng));
  int cons = nc(rng);
  for (int i = 0; i < cons; ++i) {
    std::vector<std::pair<int, Rational>> terms;
    for (int j = 0; j < vars; ++j) {
      int a = coeff(rng);
      if (a != 0) terms.push_back({j, Rational(a, den(rng))});
    }
    Rel rel = relpick(rng) == 0 ? Rel::le : relpick(rng) == 0 ? Rel::ge : Rel::eq;
    lp.add_constraint(std::move(terms), rel, Rational(coeff(rng), den(rng)));
  }
  return lp;
}

ConflictBLP random_blp(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(0, max_vertices);
  int m = nv(rng);
  ConflictBLP blp;
  for (int v = 0; v < m; ++v) blp.eligible_vertices.push_back(v);
  std::uniform_int_distribution<int> pct(0, 99);
  int density = 10 + pct(rng) / 2;  // 10..59 percent
  for (int v = 0; v < m; ++v)
    for (int u = v + 1; u < m; ++u)
      if (pct(rng) < density) blp.conflicts.push_back({v, u});
  return blp;
}

}  // namespace

TEST_CASE("simplex: max y with x = 1/3 and x - y >= 0 gives y = 1/3") {
  RationalLP lp;
  int x = lp.add_var("x");
  int y = lp.add_var("y");
  lp.objective[y] = 1;
  lp.add_constraint({{x, 1}}, Rel::eq, Rational(1, 3));
  lp.add_constraint({{x, 1}, {y, -1}}, Rel::ge, 0);
  LPOutcome out = simplex_solve(lp);
  REQUIRE(out.status == LPStatus::optimal);
  CHECK(out.optimal_value == Rational(1, 3));
  CHECK(out.primal[x] == Rational(1, 3));
  CHECK(recheck_outcome(lp, out));
}

TEST_CASE("simplex: contradictory equalities x = 1/3, x = 1/2 are infeasible") {
  RationalLP lp;
  int x = lp.add_var("x");
  lp.add_var("y");
  lp.objective[1] = 1;
  lp.add_constraint({{x, 1}}, Rel::eq, Rational(1, 3));
  lp.add_constraint({{x, 1}}, Rel::eq, Rational(1, 2));
  LPOutcome out = simplex_solve(lp);
  REQUIRE(out.status == LPStatus::infeasible);
  CHECK(verify_farkas(lp, out.dual));
  CHECK(recheck_outcome(lp, out));
}

TEST_CASE("simplex: unconstrained objective is unbounded") {
  RationalLP lp;
  int y = lp.add_var("y");
  lp.objective[y] = 1;
  lp.add_constraint({{y, 1}}, Rel::ge, 0);
  CHECK(simplex_solve(lp).status == LPStatus::unbounded);
}

TEST_CASE("simplex: free variables may go negative") {
  RationalLP lp;
  int y = lp.add_var("y");
  lp.objective[y] = 1;
  lp.add_constraint({{y, 1}}, Rel::le, -2);
  LPOutcome out = simplex_solve(lp);
  REQUIRE(out.status == LPStatus::optimal);
  CHECK(out.optimal_value == -2);
  CHECK(recheck_outcome(lp, out));
}

TEST_CASE("simplex: degenerate / redundant systems") {
  RationalLP lp;
  int x = lp.add_var("x");
  int y = lp.add_var("y");
  lp.objective[y] = 1;
  // duplicate equalities (redundant rows) plus a binding inequality
  lp.add_constraint({{x, 1}}, Rel::eq, 1);
  lp.add_constraint({{x, 1}}, Rel::eq, 1);
  lp.add_constraint({{x, 2}}, Rel::eq, 2);
  lp.add_constraint({{y, 1}, {x, -1}}, Rel::le, 0);
  LPOutcome out = simplex_solve(lp);
  REQUIRE(out.status == LPStatus::optimal);
  CHECK(out.optimal_value == 1);
  CHECK(recheck_outcome(lp, out));
}

TEST_CASE("simplex: 1000 random LPs certify exactly and deterministically") {
  std::mt19937_64 rng(12345);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    CAPTURE(trial);
    RationalLP lp = random_lp(rng);
    LPOutcome out = simplex_solve(lp);
    REQUIRE(recheck_outcome(lp, out));
    switch (out.status) {
      case LPStatus::optimal: ++optimal; break;
      case LPStatus::infeasible: ++infeasible; break;
      case LPStatus::unbounded: ++unbounded; break;
    }
    // determinism: identical model, identical certificate
    LPOutcome again = simplex_solve(lp);
    CHECK(again.status == out.status);
    CHECK(again.optimal_value == out.optimal_value);
    CHECK(again.primal == out.primal);
    CHECK(again.dual == out.dual);
  }
  // the generator must exercise all three statuses
  CHECK(optimal > 100);
  CHECK(infeasible > 50);
  CHECK(unbounded > 50);
}

TEST_CASE("dump_lp prints rationals as p/q, one constraint per line") {
  RationalLP lp;
  int x = lp.add_var("x");
  int y = lp.add_var("y");
  lp.objective[y] = 1;
  lp.add_constraint({{x, 1}}, Rel::eq, Rational(1, 3));
  lp.add_constraint({{x, 1}, {y, -1}}, Rel::ge, 0);
  std::string dump = dump_lp(lp);
  CHECK(dump.find("1/3") != std::string::npos);
  CHECK(std::count(dump.begin(), dump.end(), '\n') >= 2);
}

TEST_CASE("max_disjoint_configurations: small explicit instances") {
  ConflictBLP empty;
  CHECK(max_disjoint_configurations(empty).optimum == 0);

  ConflictBLP pair;
  pair.eligible_vertices = {4, 9};
  pair.conflicts = {{4, 9}};
  BLPOutcome out = max_disjoint_configurations(pair);
  CHECK(out.optimum == 1);
  CHECK(out.chosen_set == std::vector<int>{4});  // lowest id preferred

  // 4-cycle of conflicts: optimum 2, lexicographically smallest set
  ConflictBLP cyc;
  cyc.eligible_vertices = {0, 1, 2, 3};
  cyc.conflicts = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  BLPOutcome c = max_disjoint_configurations(cyc);
  CHECK(c.optimum == 2);
  CHECK(c.chosen_set == std::vector<int>{0, 2});
}

TEST_CASE("max_disjoint_configurations equals brute force on 500 random graphs") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 500; ++trial) {
    CAPTURE(trial);
    ConflictBLP blp = random_blp(rng, 18);
    int m = static_cast<int>(blp.eligible_vertices.size());
    std::vector<std::uint32_t> adj(m, 0);
    for (const auto& [u, v] : blp.conflicts) {
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
    BLPOutcome out = max_disjoint_configurations(blp);
    CHECK(out.optimum == testutil::brute_force_mis(m, adj));
    // chosen set validity
    CHECK(static_cast<int>(out.chosen_set.size()) == out.optimum);
    CHECK(std::is_sorted(out.chosen_set.begin(), out.chosen_set.end()));
    for (size_t i = 0; i < out.chosen_set.size(); ++i)
      for (size_t j = i + 1; j < out.chosen_set.size(); ++j) {
        bool conflict = adj[out.chosen_set[i]] >> out.chosen_set[j] & 1;
        CHECK_FALSE(conflict);
      }
    // determinism
    BLPOutcome again = max_disjoint_configurations(blp);
    CHECK(again.optimum == out.optimum);
    CHECK(again.chosen_set == out.chosen_set);
  }
}
