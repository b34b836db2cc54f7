#include "matchstick/criteria.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace matchstick {

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::area: return "area";
    case Criterion::triangle_chain: return "triangle_chain";
    case Criterion::local_angle: return "local_angle";
    case Criterion::angle_lp: return "angle_lp";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::reject: return "reject";
    case Outcome::pass: return "pass";
    case Outcome::inapplicable: return "inapplicable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// area argument

AreaEvaluation area_criterion(const FaceCensus& census, const OuterFaceChoice& outer,
                              const BLPOutcome& blp) {
  AreaEvaluation ev;
  double lower = 0.0;
  for (const auto& [s, count] : census.inner_A)
    lower += count * min_area_units(s, /*is_inner=*/true).value;
  lower += 2.0 * blp.optimum;
  ev.lower_bound_units = lower;
  ev.capacity_units = max_area_units(census.k).value;

  ev.verdict.criterion = Criterion::area;
  bool reject = lower > ev.capacity_units * (1.0 + kAreaRejectMargin);
  ev.verdict.outcome = reject ? Outcome::reject : Outcome::pass;
  std::ostringstream w;
  w << "inner area >= " << census.inner_count(3) << " triangles + odd s-gons + 2*"
    << blp.optimum << " configurations = " << lower << " units vs capacity "
    << ev.capacity_units << " for k=" << census.k;
  ev.verdict.witness = w.str();
  return ev;
}

ConflictBLP build_conflict_blp(const std::vector<ConfigurationCenter>& centers,
                               const std::vector<VertexFaceProfile>& profiles) {
  ConflictBLP blp;
  std::set<int> eligible;
  for (const auto& c : centers) eligible.insert(c.vertex);
  blp.eligible_vertices.assign(eligible.begin(), eligible.end());
  for (int v : blp.eligible_vertices) {
    for (int u : profiles[v].fn) {
      if (u > v && eligible.count(u)) blp.conflicts.emplace_back(v, u);
    }
  }
  return blp;
}

// ---------------------------------------------------------------------------
// triangle chains

namespace {

using Edge = std::pair<int, int>;  // undirected, normalized

Edge norm_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct ChainContext {
  const FaceSet& fs;
  std::vector<char> inner_triangle;          // per face
  std::map<Edge, std::pair<int, int>> edge_faces;

  explicit ChainContext(const FaceSet& faceset, const OuterFaceChoice& outer)
      : fs(faceset) {
    inner_triangle.assign(fs.face_count(), 0);
    for (int f = 0; f < fs.face_count(); ++f) {
      if (f == outer.outer_face || fs.face_size(f) != 3) continue;
      const auto& vs = fs.faces[f];
      if (vs[0] != vs[1] && vs[1] != vs[2] && vs[0] != vs[2]) inner_triangle[f] = 1;
    }
    for (int f = 0; f < fs.face_count(); ++f) {
      int sz = fs.face_size(f);
      for (int p = 0; p < sz; ++p) {
        Edge e = norm_edge(fs.faces[f][p], fs.faces[f][(p + 1) % sz]);
        auto it = edge_faces.find(e);
        if (it == edge_faces.end())
          edge_faces[e] = {f, -1};
        else
          it->second.second = f;
      }
    }
  }

  std::vector<Edge> triangle_edges(int f) const {
    const auto& vs = fs.faces[f];
    return {norm_edge(vs[0], vs[1]), norm_edge(vs[1], vs[2]), norm_edge(vs[2], vs[0])};
  }

  // inner triangle on the other side of e, or -1
  int neighbor(int f, const Edge& e) const {
    auto it = edge_faces.find(e);
    if (it == edge_faces.end()) return -1;
    int other = it->second.first == f ? it->second.second : it->second.first;
    return (other >= 0 && inner_triangle[other]) ? other : -1;
  }

  static int apex(const Edge& a, const Edge& b) {
    if (a.first == b.first || a.first == b.second) return a.first;
    return a.second;
  }
};

struct ChainBuild {
  std::vector<int> faces;
  std::vector<Edge> glue;  // glue[i] joins faces[i], faces[i+1]
};

// Straightness makes both extensions forced: the next apex must be the other
// endpoint of the last gluing edge.
void extend_right(const ChainContext& ctx, ChainBuild& c) {
  for (;;) {
    int t = static_cast<int>(c.faces.size());
    const Edge& last = c.glue[t - 2];
    int a_last = ChainContext::apex(c.glue[t - 3], last);  // apex of faces[t-2]
    int a_next = last.first == a_last ? last.second : last.first;
    // unique edge of faces[t-1] at a_next other than `last`
    Edge next_edge{-1, -1};
    for (const Edge& e : ctx.triangle_edges(c.faces[t - 1])) {
      if (e == last) continue;
      if (e.first == a_next || e.second == a_next) {
        next_edge = e;
        break;
      }
    }
    int nf = ctx.neighbor(c.faces[t - 1], next_edge);
    if (nf < 0 || std::find(c.faces.begin(), c.faces.end(), nf) != c.faces.end()) return;
    c.faces.push_back(nf);
    c.glue.push_back(next_edge);
  }
}

void extend_left(const ChainContext& ctx, ChainBuild& c) {
  for (;;) {
    const Edge& first = c.glue[0];
    int a_2 = ChainContext::apex(c.glue[0], c.glue[1]);  // apex of faces[1]
    int a_1 = first.first == a_2 ? first.second : first.first;
    Edge prev_edge{-1, -1};
    for (const Edge& e : ctx.triangle_edges(c.faces[0])) {
      if (e == first) continue;
      if (e.first == a_1 || e.second == a_1) {
        prev_edge = e;
        break;
      }
    }
    int pf = ctx.neighbor(c.faces[0], prev_edge);
    if (pf < 0 || std::find(c.faces.begin(), c.faces.end(), pf) != c.faces.end()) return;
    c.faces.insert(c.faces.begin(), pf);
    c.glue.insert(c.glue.begin(), prev_edge);
  }
}

std::vector<int> canonical_key(const std::vector<int>& seq) {
  std::vector<int> rev(seq.rbegin(), seq.rend());
  return std::min(seq, rev);
}

}  // namespace

std::vector<TriangleChain> find_triangle_chains(const FaceSet& fs,
                                                const OuterFaceChoice& outer) {
  ChainContext ctx(fs, outer);
  std::map<std::vector<int>, ChainBuild> found;

  for (int f = 0; f < fs.face_count(); ++f) {
    if (!ctx.inner_triangle[f]) continue;
    std::vector<Edge> edges = ctx.triangle_edges(f);
    bool isolated = true;
    for (const Edge& e1 : edges) {
      int t2 = ctx.neighbor(f, e1);
      if (t2 < 0) continue;
      isolated = false;
      bool extended3 = false;
      for (const Edge& e2 : ctx.triangle_edges(t2)) {
        if (e2 == e1) continue;
        int t3 = ctx.neighbor(t2, e2);
        if (t3 < 0 || t3 == f) continue;
        ChainBuild c;
        c.faces = {f, t2, t3};
        c.glue = {e1, e2};
        extend_right(ctx, c);
        extend_left(ctx, c);
        found.emplace(canonical_key(c.faces), c);
        extended3 = true;
      }
      if (!extended3) {
        // pair chain; maximal only if f cannot extend on its far side either
        bool left_ext = false;
        for (const Edge& e0 : edges) {
          if (e0 == e1) continue;
          if (ctx.neighbor(f, e0) >= 0) left_ext = true;
        }
        if (!left_ext) {
          ChainBuild c;
          c.faces = {f, t2};
          c.glue = {e1};
          found.emplace(canonical_key(c.faces), c);
        }
      }
    }
    if (isolated) {
      ChainBuild c;
      c.faces = {f};
      found.emplace(canonical_key(c.faces), c);
    }
  }

  // a shorter chain generated from a deficient seed may be a sub-strip of a
  // longer one; keep only inclusion-maximal face sets
  std::vector<TriangleChain> out;
  for (const auto& [key, c] : found) {
    std::set<int> mine(c.faces.begin(), c.faces.end());
    bool contained = false;
    for (const auto& [key2, c2] : found) {
      if (key2 == key || c2.faces.size() <= c.faces.size()) continue;
      std::set<int> theirs(c2.faces.begin(), c2.faces.end());
      if (std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) {
        contained = true;
        break;
      }
    }
    if (contained) continue;
    TriangleChain chain;
    chain.triangles = c.faces;
    int t = static_cast<int>(c.faces.size());
    chain.s = (t + 1) / 2;
    for (int i = 1; i + 1 < t; ++i)
      chain.apexes.push_back(ChainContext::apex(c.glue[i - 1], c.glue[i]));
    out.push_back(std::move(chain));
  }
  std::sort(out.begin(), out.end(), [](const TriangleChain& a, const TriangleChain& b) {
    return a.triangles < b.triangles;
  });
  return out;
}

CriterionVerdict triangle_chain_criterion(const std::vector<TriangleChain>& chains,
                                          const FaceCensus& census,
                                          const OuterFaceChoice& outer) {
  CriterionVerdict v;
  v.criterion = Criterion::triangle_chain;

  bool inner_triangulated = true;
  for (const auto& [s, count] : census.inner_A) {
    if (s != 3 && count > 0) inner_triangulated = false;
  }
  if (inner_triangulated) {
    // the bare-strip shape shows a straight chain alone cannot force
    // k >= 2s+2 when every inner face is a triangle; the area argument
    // covers triangulations instead
    v.outcome = Outcome::pass;
    v.witness = census.k == 3 ? "triangulation (outer face included)"
                              : "all inner faces are triangles";
    return v;
  }
  for (const auto& chain : chains) {
    if (outer.k < 2 * chain.s + 2) {
      v.outcome = Outcome::reject;
      std::ostringstream w;
      w << "chain of " << chain.triangles.size() << " triangles (faces";
      for (int f : chain.triangles) w << " " << f;
      w << ") has s=" << chain.s << " but k=" << outer.k << " < " << 2 * chain.s + 2;
      v.witness = w.str();
      return v;
    }
  }
  v.outcome = Outcome::pass;
  v.witness = "no chain forces k beyond " + std::to_string(outer.k);
  return v;
}

// ---------------------------------------------------------------------------
// angle arguments

std::optional<AngleSystem> build_angle_system(const PlanarEmbedding& g,
                                              const FaceSet& fs,
                                              const OuterFaceChoice& outer) {
  if (!connectivity(g, 2)) return std::nullopt;

  AngleSystem as;
  as.outer_face = outer.outer_face;
  as.face_corners.resize(fs.face_count());

  // 2-connected: every face is a simple cycle, one corner per (vertex, face)
  std::vector<std::map<int, int>> corner_of(g.vertex_count);  // face -> corner id
  for (int f = 0; f < fs.face_count(); ++f) {
    for (int p = 0; p < fs.face_size(f); ++p) {
      int v = fs.faces[f][p];
      int id = static_cast<int>(as.corners.size());
      as.corners.push_back({v, f, p});
      as.face_corners[f].push_back(id);
      corner_of[v][f] = id;
    }
  }

  as.outer_corners.resize(fs.face_count());
  for (int f = 0; f < fs.face_count(); ++f) {
    for (int v : fs.faces[f]) {
      for (const auto& [f2, corner] : corner_of[v]) {
        if (f2 != f) as.outer_corners[f].push_back(corner);
      }
    }
  }
  return as;
}

namespace {

struct FaceSumEvaluation {
  Rational determined_sum = 0;
  int undetermined = 0;
};

// Evaluates sum over o(f) using only the equality facts: inner-triangle
// corners are 1/3; the corners of an inner quadrangle alternate a, 1-a, so a
// group drawn from one quadrangle has a determined sum exactly when it picks
// both parities equally.
FaceSumEvaluation evaluate_outer_sum(const AngleSystem& as, const FaceSet& fs, int f) {
  FaceSumEvaluation ev;
  std::map<int, std::pair<int, int>> quad_parity;  // quad face -> (even, odd)
  for (int c : as.outer_corners[f]) {
    int cf = as.corners[c].face;
    int size = fs.face_size(cf);
    if (!as.is_inner_face(cf)) {
      ++ev.undetermined;
    } else if (size == 3) {
      ev.determined_sum += Rational(1, 3);
    } else if (size == 4) {
      auto& [even, odd] = quad_parity[cf];
      (as.corners[c].pos % 2 == 0 ? even : odd) += 1;
    } else {
      ++ev.undetermined;
    }
  }
  for (const auto& [quad, parity] : quad_parity) {
    if (parity.first == parity.second)
      ev.determined_sum += parity.first;  // each adjacent pair sums to 1
    else
      ev.undetermined += parity.first + parity.second;
  }
  return ev;
}

Rational outer_sum_target(const AngleSystem& as, const FaceSet& fs, int f) {
  return as.is_inner_face(f) ? fs.face_size(f) + 2 : fs.face_size(f) - 2;
}

}  // namespace

CriterionVerdict local_angle_criterion(const AngleSystem& as, const FaceSet& fs) {
  CriterionVerdict v;
  v.criterion = Criterion::local_angle;
  for (int f = 0; f < fs.face_count(); ++f) {
    FaceSumEvaluation ev = evaluate_outer_sum(as, fs, f);
    Rational target = outer_sum_target(as, fs, f);
    // Fully determined sums must hit the target exactly. With exactly one
    // corner left open, the face equality forces its value, and a forced
    // value <= 0 is no angle at all. Two or more open corners leave the
    // face locally indeterminate.
    bool contradiction = false;
    std::ostringstream w;
    if (ev.undetermined == 0 && ev.determined_sum != target) {
      contradiction = true;
      w << "determined corner sum " << ev.determined_sum << " != required " << target;
    } else if (ev.undetermined == 1 && target - ev.determined_sum <= 0) {
      contradiction = true;
      w << "single open corner forced to " << target - ev.determined_sum
        << " <= 0 by determined sum " << ev.determined_sum << " vs required " << target;
    }
    if (contradiction) {
      v.outcome = Outcome::reject;
      std::ostringstream full;
      full << "face " << f << " (size " << fs.face_size(f)
           << (as.is_inner_face(f) ? ", inner" : ", outer") << "): " << w.str()
           << " (pi-units)";
      v.witness = full.str();
      return v;
    }
  }
  v.outcome = Outcome::pass;
  v.witness = "no face has a determined, contradictory outer-angle sum";
  return v;
}

// The face facts fix many corner values outright, so the model is built in
// presolved form: inner-triangle corners are the constant 1/3, and the
// corners of an inner quadrangle alternate q, 1-q around the face, leaving a
// single variable per quadrangle. Every remaining corner keeps its own
// variable. The feasible set in (y, free corners) is unchanged.
RationalLP build_angle_lp(const AngleSystem& as, const FaceSet& fs, LPBoundMode mode) {
  RationalLP lp;
  int y = lp.add_var("y");
  lp.objective[y] = 1;

  // corner value = coeff * var + constant   (var < 0 means none)
  std::vector<int> var_of(as.corners.size(), -1);
  std::vector<Rational> coeff(as.corners.size(), 1);
  std::vector<Rational> constant(as.corners.size(), 0);
  std::map<int, int> quad_var;
  std::vector<int> own_var_corners;
  bool any_triangle = false;

  for (std::size_t c = 0; c < as.corners.size(); ++c) {
    int f = as.corners[c].face;
    int size = fs.face_size(f);
    if (as.is_inner_face(f) && size == 3) {
      coeff[c] = 0;
      constant[c] = Rational(1, 3);
      any_triangle = true;
    } else if (as.is_inner_face(f) && size == 4) {
      auto it = quad_var.find(f);
      if (it == quad_var.end())
        it = quad_var.emplace(f, lp.add_var("q_f" + std::to_string(f))).first;
      var_of[c] = it->second;
      if (as.corners[c].pos % 2 == 0) {
        coeff[c] = 1;
      } else {
        coeff[c] = -1;
        constant[c] = 1;
      }
    } else {
      var_of[c] = lp.add_var("a" + std::to_string(as.corners[c].vertex) + "_f" +
                             std::to_string(f));
      own_var_corners.push_back(static_cast<int>(c));
    }
  }

  // x >= y for every corner, through its representation
  if (any_triangle) lp.add_constraint({{y, 1}}, Rel::le, Rational(1, 3));
  for (const auto& [f, q] : quad_var) {
    lp.add_constraint({{q, 1}, {y, -1}}, Rel::ge, 0);
    lp.add_constraint({{q, -1}, {y, -1}}, Rel::ge, -1);
  }
  for (int c : own_var_corners)
    lp.add_constraint({{var_of[c], 1}, {y, -1}}, Rel::ge, 0);

  Rational pair_bound = mode == LPBoundMode::paper ? Rational(1) : Rational(1, 2);
  for (int f = 0; f < fs.face_count(); ++f) {
    int size = fs.face_size(f);
    if (as.is_inner_face(f) && size >= 5) {
      for (int p = 0; p < size; ++p) {
        int u = as.face_corners[f][p], w = as.face_corners[f][(p + 1) % size];
        lp.add_constraint({{var_of[u], 1}, {var_of[w], 1}, {y, -1}}, Rel::ge, pair_bound);
      }
    }
    std::map<int, Rational> acc;
    Rational fixed = 0;
    for (int c : as.outer_corners[f]) {
      if (var_of[c] >= 0) acc[var_of[c]] += coeff[c];
      fixed += constant[c];
    }
    std::vector<std::pair<int, Rational>> sum;
    for (const auto& [var, a] : acc)
      if (a != 0) sum.emplace_back(var, a);
    lp.add_constraint(std::move(sum), Rel::eq, outer_sum_target(as, fs, f) - fixed);
  }
  return lp;
}

AngleLPEvaluation angle_lp_criterion(const AngleSystem& as, const FaceSet& fs,
                                     LPBoundMode mode) {
  AngleLPEvaluation ev;
  ev.model = build_angle_lp(as, fs, mode);
  ev.lp = simplex_solve(ev.model);
  ev.verdict.criterion = Criterion::angle_lp;

  std::ostringstream w;
  if (ev.lp.status == LPStatus::infeasible) {
    ev.verdict.outcome = Outcome::reject;
    w << "angle LP infeasible (Farkas certificate over " << ev.model.constraints.size()
      << " constraints, " << (mode == LPBoundMode::paper ? "paper" : "lemma") << " bound)";
  } else if (ev.lp.status == LPStatus::optimal && ev.lp.optimal_value <= 0) {
    ev.verdict.outcome = Outcome::reject;
    w << "angle LP optimum y = " << ev.lp.optimal_value << " <= 0 ("
      << (mode == LPBoundMode::paper ? "paper" : "lemma") << " bound)";
  } else {
    ev.verdict.outcome = Outcome::pass;
    if (ev.lp.status == LPStatus::optimal)
      w << "angle LP feasible with y = " << ev.lp.optimal_value;
    else
      w << "angle LP unbounded in y";
  }
  ev.verdict.witness = w.str();
  return ev;
}

namespace {

// Solve-free LP verdict: the LP's equalities force the determined part of
// every o(f) sum, and each open corner is >= y. A face whose determined sum
// already meets or exceeds its target therefore bounds the optimum by
// y <= (target - determined)/open <= 0, and with no open corner at all a
// mismatched sum makes the LP infeasible outright. Used by evaluate_graph to
// skip the simplex when the verdict is already decided; callers wanting a
// certificate use angle_lp_criterion directly.
std::optional<CriterionVerdict> angle_lp_bound_shortcut(const AngleSystem& as,
                                                        const FaceSet& fs) {
  for (int f = 0; f < fs.face_count(); ++f) {
    FaceSumEvaluation ev = evaluate_outer_sum(as, fs, f);
    Rational target = outer_sum_target(as, fs, f);
    bool decided = (ev.undetermined == 0 && ev.determined_sum != target) ||
                   (ev.undetermined > 0 && ev.determined_sum >= target);
    if (decided) {
      CriterionVerdict v;
      v.criterion = Criterion::angle_lp;
      v.outcome = Outcome::reject;
      std::ostringstream w;
      w << "angle LP bounded without solving: face " << f << " (size "
        << fs.face_size(f) << (as.is_inner_face(f) ? ", inner" : ", outer")
        << ") has determined corner sum " << ev.determined_sum << " vs required "
        << target << " with " << ev.undetermined << " open corners, forcing y <= 0";
      v.witness = w.str();
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// whole-graph evaluation

bool OuterFaceReport::rejected() const {
  for (const auto& v : verdicts)
    if (v.outcome == Outcome::reject) return true;
  return false;
}

EvalReport evaluate_graph(const PlanarEmbedding& g, const EvalOptions& options) {
  EvalReport report;
  report.name = g.name;
  report.n = g.vertex_count;
  report.edge_count = g.edge_count();
  report.connectivity = connectivity_level(g);
  report.r = regularity(g);

  FaceSet fs = trace_faces(g);
  std::vector<VertexFaceProfile> profiles = vertex_face_profiles(fs, g.vertex_count);
  bool two_connected = report.connectivity >= 2;

  report.excluded = true;
  for (int f = 0; f < fs.face_count(); ++f) {
    OuterFaceChoice outer = choose_outer_face(fs, f, g.vertex_count);
    FaceCensus census = face_census(fs, outer, report.r);

    if (report.r) {
      for (const IdentityResult& id : lemma1_check(census)) {
        if (id.applicable && !id.holds)
          throw DataIntegrityError("Euler identity violated for regular graph '" +
                                   report.name + "': " + id.name);
      }
      if (*report.r == 4 && census.k >= 5 &&
          census.A.count(3) && census.A.at(3) < triangle_lower_bound_4regular(census))
        throw DataIntegrityError("4-regular triangle count below structural minimum");
    }

    OuterFaceReport ofr;
    ofr.face = f;
    ofr.k = outer.k;

    std::optional<AngleSystem> angles;
    bool angles_built = false;
    auto get_angles = [&]() -> const std::optional<AngleSystem>& {
      if (!angles_built) {
        angles = two_connected ? build_angle_system(g, fs, outer) : std::nullopt;
        angles_built = true;
      }
      return angles;
    };

    for (Criterion crit : {Criterion::area, Criterion::triangle_chain,
                           Criterion::local_angle, Criterion::angle_lp}) {
      if (!options.enabled.count(crit)) continue;
      CriterionVerdict v;
      switch (crit) {
        case Criterion::area: {
          auto centers = find_configuration_centers(fs, profiles, outer);
          BLPOutcome blp = max_disjoint_configurations(build_conflict_blp(centers, profiles));
          v = area_criterion(census, outer, blp).verdict;
          break;
        }
        case Criterion::triangle_chain: {
          auto chains = find_triangle_chains(fs, outer);
          v = triangle_chain_criterion(chains, census, outer);
          break;
        }
        case Criterion::local_angle: {
          if (!get_angles()) {
            v = {crit, Outcome::inapplicable, "graph is not 2-connected"};
          } else {
            v = local_angle_criterion(*angles, fs);
          }
          break;
        }
        case Criterion::angle_lp: {
          if (!get_angles()) {
            v = {crit, Outcome::inapplicable, "graph is not 2-connected"};
          } else if (auto bound = angle_lp_bound_shortcut(*angles, fs)) {
            v = *bound;
          } else {
            v = angle_lp_criterion(*angles, fs, options.bound_mode).verdict;
          }
          break;
        }
      }
      ofr.verdicts.push_back(v);
      if (v.outcome == Outcome::reject) {
        report.rejecting_criteria.insert(crit);
        if (options.short_circuit) break;
      }
    }

    if (!ofr.rejected()) report.excluded = false;
    report.per_outer_face.push_back(std::move(ofr));
  }
  return report;
}

}  // namespace matchstick
