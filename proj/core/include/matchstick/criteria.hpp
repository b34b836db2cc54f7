#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matchstick/census.hpp"
#include "matchstick/geometry.hpp"
#include "matchstick/mis.hpp"
#include "matchstick/planar.hpp"
#include "matchstick/simplex.hpp"

namespace matchstick {

enum class Criterion { area, triangle_chain, local_angle, angle_lp };
enum class Outcome { reject, pass, inapplicable };

const char* to_string(Criterion c);
const char* to_string(Outcome o);

struct CriterionVerdict {
  Criterion criterion = Criterion::area;
  Outcome outcome = Outcome::pass;
  std::string witness;  // enough detail to recheck a rejection by hand
};

// Straight strip of inner triangles glued edge to edge as in a ladder of
// alternating up/down triangles; bottom path x_0..x_s.
struct TriangleChain {
  std::vector<int> triangles;  // face ids, in strip order
  std::vector<int> apexes;     // apex vertex of each internal triangle
  int s = 0;                   // bottom path length, ceil(t/2)
};

// Corner bookkeeping for the angle arguments. A corner is an incidence of
// a vertex with a face; corner ids index `corners`.
struct AngleSystem {
  struct Corner {
    int vertex;
    int face;
    int pos;  // position of vertex along the face cycle
  };
  std::vector<Corner> corners;
  std::vector<std::vector<int>> face_corners;  // per face, corner ids in cycle order
  std::vector<std::vector<int>> outer_corners; // o(f): corners at f's vertices not in f
  int outer_face = -1;

  int face_of(int corner) const { return corners[corner].face; }
  bool is_inner_face(int f) const { return f != outer_face; }
};

enum class LPBoundMode { lemma, paper };  // adjacent s>=5-gon pair bound: 1/2 vs 1

struct AreaEvaluation {
  CriterionVerdict verdict;
  double lower_bound_units = 0.0;
  double capacity_units = 0.0;
};

AreaEvaluation area_criterion(const FaceCensus& census, const OuterFaceChoice& outer,
                              const BLPOutcome& blp);

std::vector<TriangleChain> find_triangle_chains(const FaceSet& fs,
                                                const OuterFaceChoice& outer);

CriterionVerdict triangle_chain_criterion(const std::vector<TriangleChain>& chains,
                                          const FaceCensus& census,
                                          const OuterFaceChoice& outer);

// Empty when the embedding is not 2-connected (angle arguments inapplicable).
std::optional<AngleSystem> build_angle_system(const PlanarEmbedding& g,
                                              const FaceSet& fs,
                                              const OuterFaceChoice& outer);

CriterionVerdict local_angle_criterion(const AngleSystem& angles, const FaceSet& fs);

struct AngleLPEvaluation {
  CriterionVerdict verdict;
  LPOutcome lp;
  RationalLP model;
};

RationalLP build_angle_lp(const AngleSystem& angles, const FaceSet& fs,
                          LPBoundMode mode);
AngleLPEvaluation angle_lp_criterion(const AngleSystem& angles, const FaceSet& fs,
                                     LPBoundMode mode);

// Conflict instance for the center-configuration count, per the fn relation.
ConflictBLP build_conflict_blp(const std::vector<ConfigurationCenter>& centers,
                               const std::vector<VertexFaceProfile>& profiles);

struct EvalOptions {
  std::set<Criterion> enabled = {Criterion::area, Criterion::triangle_chain,
                                 Criterion::local_angle, Criterion::angle_lp};
  LPBoundMode bound_mode = LPBoundMode::lemma;
  bool short_circuit = false;  // stop at first rejection per outer candidate
};

struct OuterFaceReport {
  int face = -1;
  int k = 0;
  std::vector<CriterionVerdict> verdicts;
  bool rejected() const;
};

struct EvalReport {
  std::string name;
  int n = 0;
  int edge_count = 0;
  int connectivity = 0;
  std::optional<int> r;
  bool excluded = false;  // every outer-face candidate received a rejection
  std::vector<OuterFaceReport> per_outer_face;
  std::set<Criterion> rejecting_criteria;  // first-rejecting per candidate
};

// Runs the enabled criteria against every face of the embedding as the
// candidate outer face. Lemma-1 identity failures for regular graphs throw
// DataIntegrityError. The graph is excluded only if all candidates fall.
EvalReport evaluate_graph(const PlanarEmbedding& g, const EvalOptions& options = {});

}  // namespace matchstick
