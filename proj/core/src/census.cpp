#include "matchstick/census.hpp"

#include <stdexcept>

namespace matchstick {

FaceCensus face_census(const FaceSet& fs, const OuterFaceChoice& outer,
                       std::optional<int> r) {
  FaceCensus c;
  c.n = static_cast<int>(fs.face_at.size());
  c.face_count = fs.face_count();
  c.k = outer.k;
  c.r = r;
  long size_sum = 0;
  for (int f = 0; f < fs.face_count(); ++f) {
    ++c.A[fs.face_size(f)];
    size_sum += fs.face_size(f);
  }
  c.edge_count = static_cast<int>(size_sum / 2);
  c.inner_A = c.A;
  if (--c.inner_A[c.k] == 0) c.inner_A.erase(c.k);
  c.interior_vertex_count = c.n - outer.boundary_vertex_count;
  return c;
}

std::vector<IdentityResult> lemma1_check(const FaceCensus& census) {
  if (!census.r) throw std::invalid_argument("lemma1_check requires a regular census");
  const long r = *census.r;
  long sum_A = 0, sum_iA = 0, sum_weighted = 0;  // sum (2i - r(i-2)) A_i
  for (const auto& [i, count] : census.A) {
    sum_A += count;
    sum_iA += static_cast<long>(i) * count;
    sum_weighted += (2L * i - r * (i - 2)) * count;
  }
  std::vector<IdentityResult> out;
  out.push_back({"2|E| = sum i*A_i", true, 2L * census.edge_count == sum_iA});
  out.push_back({"r|V| = sum i*A_i", true, r * census.n == sum_iA});
  out.push_back({"|F| = sum A_i", true, census.face_count == sum_A});
  out.push_back({"4r = sum (2i - r(i-2))*A_i", true, 4L * r == sum_weighted});
  // n = |F| - 2 holds exactly for r = 4 (it combines the identities above
  // with Euler's formula, which cancels only at r = 4)
  bool applicable = r == 4;
  out.push_back({"n = |F| - 2", applicable,
                 !applicable || census.n == census.face_count - 2});
  return out;
}

int triangle_lower_bound_4regular(const FaceCensus& census) {
  if (!census.r || *census.r != 4)
    throw std::invalid_argument("triangle lower bound requires a 4-regular census");
  return 4 + census.k;
}

}  // namespace matchstick
