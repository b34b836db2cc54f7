#include "matchstick/simplex.hpp"

#include <sstream>
#include <stdexcept>

namespace matchstick {

int RationalLP::add_var(const std::string& name) {
  objective.push_back(0);
  var_names.push_back(name.empty() ? "x" + std::to_string(num_vars) : name);
  return num_vars++;
}

void RationalLP::add_constraint(std::vector<std::pair<int, Rational>> terms, Rel rel,
                                Rational rhs) {
  constraints.push_back({std::move(terms), rel, std::move(rhs)});
}

namespace {

const char* rel_str(Rel r) { return r == Rel::le ? "<=" : r == Rel::eq ? "=" : ">="; }

// Dense tableau for the equality-form problem
//   maximize c.z   s.t.  M z = b, z >= 0
// where z = [p_0,q_0,...,p_{n-1},q_{n-1}, slacks..., artificials...].
struct Tableau {
  int rows = 0;
  int cols = 0;            // structural + artificial columns
  int structural = 0;      // columns allowed in phase 2
  std::vector<std::vector<Rational>> t;  // rows x (cols + 1), last = rhs
  std::vector<Rational> z;               // reduced cost row, updated per pivot
  std::vector<Rational> cost;            // original costs of the current phase
  std::vector<int> basis;

  Rational& at(int i, int j) { return t[i][j]; }
  Rational& rhs(int i) { return t[i][cols]; }

  void pivot(int pr, int pc) {
    Rational inv = 1 / t[pr][pc];
    nz_.clear();
    for (int j = 0; j <= cols; ++j) {
      if (t[pr][j] != 0) {
        t[pr][j] *= inv;
        nz_.push_back(j);
      }
    }
    for (int i = 0; i < rows; ++i) {
      if (i == pr) continue;
      Rational factor = t[i][pc];
      if (factor == 0) continue;
      for (int j : nz_) t[i][j] -= factor * t[pr][j];
    }
    if (!z.empty() && z[pc] != 0) {
      Rational factor = z[pc];
      for (int j : nz_) z[j] -= factor * t[pr][j];
    }
    basis[pr] = pc;
  }

  // Recomputes the reduced cost row rc_j = c_j - c_B . T_j for new costs.
  void set_costs(std::vector<Rational> c) {
    cost = std::move(c);
    z.assign(cols + 1, 0);
    for (int j = 0; j < cols; ++j) z[j] = cost[j];
    for (int i = 0; i < rows; ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= cols; ++j) {
        if (t[i][j] != 0) z[j] -= cb * t[i][j];
      }
    }
  }

  // Dantzig pricing (largest reduced cost, ties to the lowest index) with a
  // permanent switch to Bland's rule after a long degenerate streak, which
  // rules out cycling. `limit` = columns eligible to enter. Returns false
  // when unbounded.
  bool optimize(int limit) {
    int degenerate_streak = 0;
    bool bland = false;
    for (;;) {
      int enter = -1;
      if (bland) {
        for (int j = 0; j < limit; ++j) {
          if (z[j] > 0) {
            enter = j;
            break;
          }
        }
      } else {
        for (int j = 0; j < limit; ++j) {
          if (z[j] > 0 && (enter < 0 || z[j] > z[enter])) enter = j;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Rational best_ratio = 0;
      for (int i = 0; i < rows; ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = rhs(i) / t[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      if (best_ratio == 0) {
        if (++degenerate_streak > 64) bland = true;
      } else {
        degenerate_streak = 0;
      }
      pivot(leave, enter);
    }
  }

  // Multiplier vector y = c_B B^{-1}. Row r is priced off its artificial
  // column when it has one (rc = c_art - y_r), otherwise off its +1 slack
  // column (rc = -y_r).
  std::vector<Rational> multipliers(const std::vector<int>& art_col,
                                    const std::vector<int>& basic_slack_col) const {
    std::vector<Rational> y(rows, 0);
    for (int r = 0; r < rows; ++r) {
      if (art_col[r] >= 0)
        y[r] = cost[art_col[r]] - z[art_col[r]];
      else
        y[r] = -z[basic_slack_col[r]];
    }
    return y;
  }

  std::vector<int> nz_;  // pivot-row nonzero scratch
};

struct SolveAttempt {
  LPOutcome outcome;
  std::vector<int> redundant_rows;  // nonempty => caller should retry without them
};

SolveAttempt solve_rows(const RationalLP& lp, const std::vector<int>& active_rows) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(active_rows.size());

  int num_slacks = 0;
  for (int r : active_rows)
    if (lp.constraints[r].rel != Rel::eq) ++num_slacks;

  // A row starts with its slack basic when the signs work out (inequality
  // whose slack can carry a +1 coefficient with nonnegative rhs); only the
  // remaining rows get artificial columns.
  std::vector<Rational> sigma(m, 1);
  std::vector<char> needs_art(m, 0);
  int num_art = 0;
  for (int i = 0; i < m; ++i) {
    const Constraint& con = lp.constraints[active_rows[i]];
    if (con.rel == Rel::le) {
      sigma[i] = con.rhs < 0 ? -1 : 1;
      needs_art[i] = con.rhs < 0;
    } else if (con.rel == Rel::ge) {
      sigma[i] = con.rhs <= 0 ? -1 : 1;
      needs_art[i] = con.rhs > 0;
    } else {
      sigma[i] = con.rhs < 0 ? -1 : 1;
      needs_art[i] = 1;
    }
    if (needs_art[i]) ++num_art;
  }

  // Free variables are handled with a single shared shift column:
  // x_j = x'_j - x0 with x'_j, x0 >= 0.
  Tableau tab;
  tab.rows = m;
  tab.structural = n + 1 + num_slacks;
  tab.cols = tab.structural + num_art;
  tab.t.assign(m, std::vector<Rational>(tab.cols + 1, 0));
  tab.basis.resize(m);

  const int shift = n;
  int slack = n + 1;
  int art = tab.structural;
  std::vector<int> slack_col(m, -1);
  std::vector<int> art_col(m, -1);
  for (int i = 0; i < m; ++i) {
    const Constraint& con = lp.constraints[active_rows[i]];
    for (const auto& [j, a] : con.terms) {
      tab.at(i, j) += sigma[i] * a;
      tab.at(i, shift) -= sigma[i] * a;
    }
    if (con.rel != Rel::eq) {
      slack_col[i] = slack;
      tab.at(i, slack) = (con.rel == Rel::le ? sigma[i] : -sigma[i]);
      ++slack;
    }
    tab.rhs(i) = sigma[i] * con.rhs;
    if (needs_art[i]) {
      art_col[i] = art;
      tab.at(i, art) = 1;
      tab.basis[i] = art;
      ++art;
    } else {
      tab.basis[i] = slack_col[i];
    }
  }

  if (num_art > 0) {
    // phase 1: maximize -(sum of artificials)
    std::vector<Rational> phase1(tab.cols, 0);
    for (int i = 0; i < m; ++i)
      if (art_col[i] >= 0) phase1[art_col[i]] = -1;
    tab.set_costs(std::move(phase1));
    tab.optimize(tab.structural);

    Rational p1_value = 0;
    for (int i = 0; i < m; ++i)
      if (tab.basis[i] >= tab.structural) p1_value -= tab.rhs(i);
    if (p1_value < 0) {
      std::vector<Rational> u = tab.multipliers(art_col, slack_col);
      SolveAttempt res;
      res.outcome.status = LPStatus::infeasible;
      res.outcome.dual.assign(lp.constraints.size(), 0);
      for (int i = 0; i < m; ++i) res.outcome.dual[active_rows[i]] = sigma[i] * u[i];
      return res;
    }
  }

  // drive artificials out of the basis; rows that resist are redundant
  SolveAttempt res;
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < tab.structural) continue;
    int pc = -1;
    for (int j = 0; j < tab.structural; ++j) {
      if (tab.at(i, j) != 0) {
        pc = j;
        break;
      }
    }
    if (pc >= 0)
      tab.pivot(i, pc);
    else
      res.redundant_rows.push_back(active_rows[i]);
  }
  if (!res.redundant_rows.empty()) return res;

  // phase 2
  std::vector<Rational> cost(tab.cols, 0);
  Rational obj_sum = 0;
  for (int j = 0; j < n; ++j) {
    cost[j] = lp.objective[j];
    obj_sum += lp.objective[j];
  }
  cost[shift] = -obj_sum;
  tab.set_costs(std::move(cost));
  if (!tab.optimize(tab.structural)) {
    res.outcome.status = LPStatus::unbounded;
    return res;
  }

  res.outcome.status = LPStatus::optimal;
  res.outcome.primal.assign(n, 0);
  Rational shift_value = 0;
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] == shift) shift_value = tab.rhs(i);
  }
  for (int i = 0; i < m; ++i) {
    int b = tab.basis[i];
    if (b < n) res.outcome.primal[b] += tab.rhs(i);
  }
  if (shift_value != 0)
    for (int j = 0; j < n; ++j) res.outcome.primal[j] -= shift_value;
  res.outcome.optimal_value = 0;
  for (int j = 0; j < n; ++j)
    res.outcome.optimal_value += lp.objective[j] * res.outcome.primal[j];

  std::vector<Rational> y = tab.multipliers(art_col, slack_col);
  res.outcome.dual.assign(lp.constraints.size(), 0);
  for (int i = 0; i < m; ++i) res.outcome.dual[active_rows[i]] = sigma[i] * y[i];
  return res;
}

Rational eval_row(const Constraint& con, const std::vector<Rational>& x) {
  Rational v = 0;
  for (const auto& [j, a] : con.terms) v += a * x[j];
  return v;
}

}  // namespace

LPOutcome simplex_solve(const RationalLP& lp) {
  for (const auto& con : lp.constraints) {
    for (const auto& [j, a] : con.terms) {
      if (j < 0 || j >= lp.num_vars) throw std::invalid_argument("constraint term out of range");
      (void)a;
    }
  }
  if (static_cast<int>(lp.objective.size()) != lp.num_vars)
    throw std::invalid_argument("objective size mismatch");

  std::vector<int> active;
  for (int i = 0; i < static_cast<int>(lp.constraints.size()); ++i) active.push_back(i);

  for (;;) {
    SolveAttempt attempt = solve_rows(lp, active);
    if (!attempt.redundant_rows.empty()) {
      // dependent equality rows implied by the rest; drop and re-solve
      std::vector<int> next;
      std::size_t skip = 0;
      for (int r : active) {
        if (skip < attempt.redundant_rows.size() && attempt.redundant_rows[skip] == r)
          ++skip;
        else
          next.push_back(r);
      }
      active = std::move(next);
      continue;
    }
    LPOutcome out = attempt.outcome;
    if (out.status == LPStatus::optimal && !verify_optimal(lp, out))
      throw std::logic_error("simplex produced an unverifiable optimality certificate");
    if (out.status == LPStatus::infeasible && !verify_farkas(lp, out.dual))
      throw std::logic_error("simplex produced an unverifiable Farkas certificate");
    return out;
  }
}

bool verify_optimal(const RationalLP& lp, const LPOutcome& out) {
  if (out.status != LPStatus::optimal) return false;
  if (static_cast<int>(out.primal.size()) != lp.num_vars) return false;
  if (out.dual.size() != lp.constraints.size()) return false;

  // primal feasibility
  for (const auto& con : lp.constraints) {
    Rational v = eval_row(con, out.primal);
    if (con.rel == Rel::le && v > con.rhs) return false;
    if (con.rel == Rel::ge && v < con.rhs) return false;
    if (con.rel == Rel::eq && v != con.rhs) return false;
  }
  // objective value
  Rational obj = 0;
  for (int j = 0; j < lp.num_vars; ++j) obj += lp.objective[j] * out.primal[j];
  if (obj != out.optimal_value) return false;

  // dual feasibility: signs and A^T dual = c (variables are free)
  std::vector<Rational> at_dual(lp.num_vars, 0);
  Rational dual_obj = 0;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& con = lp.constraints[i];
    const Rational& d = out.dual[i];
    if (con.rel == Rel::le && d < 0) return false;
    if (con.rel == Rel::ge && d > 0) return false;
    for (const auto& [j, a] : con.terms) at_dual[j] += d * a;
    dual_obj += d * con.rhs;
  }
  for (int j = 0; j < lp.num_vars; ++j)
    if (at_dual[j] != lp.objective[j]) return false;
  return dual_obj == out.optimal_value;
}

bool verify_farkas(const RationalLP& lp, const std::vector<Rational>& farkas) {
  if (farkas.size() != lp.constraints.size()) return false;
  std::vector<Rational> at_dual(lp.num_vars, 0);
  Rational rhs_dot = 0;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& con = lp.constraints[i];
    const Rational& d = farkas[i];
    if (con.rel == Rel::le && d < 0) return false;
    if (con.rel == Rel::ge && d > 0) return false;
    for (const auto& [j, a] : con.terms) at_dual[j] += d * a;
    rhs_dot += d * con.rhs;
  }
  for (int j = 0; j < lp.num_vars; ++j)
    if (at_dual[j] != 0) return false;
  return rhs_dot < 0;
}

std::string dump_lp(const RationalLP& lp) {
  std::ostringstream out;
  out << "max";
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.objective[j] != 0)
      out << " + " << lp.objective[j] << "*" << lp.var_names[j];
  }
  out << "\n";
  for (const auto& con : lp.constraints) {
    bool first = true;
    for (const auto& [j, a] : con.terms) {
      out << (first ? "" : " + ") << a << "*" << lp.var_names[j];
      first = false;
    }
    if (first) out << "0";
    out << " " << rel_str(con.rel) << " " << con.rhs << "\n";
  }
  return out.str();
}

}  // namespace matchstick
