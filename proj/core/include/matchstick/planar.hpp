#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchstick {

// Error while decoding an input stream. Carries the byte offset into the
// stream and the index of the graph being read when the problem was found.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::int64_t byte_offset, std::int64_t graph_index)
      : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) +
                           ", graph " + std::to_string(graph_index) + ")"),
        byte_offset(byte_offset),
        graph_index(graph_index) {}

  std::int64_t byte_offset;
  std::int64_t graph_index;
};

// A structurally valid embedding whose data nevertheless violates an
// invariant that should hold for every correct input (e.g. a Lemma-1
// identity). Distinct from ParseError so callers can tell corrupt data
// from corrupt encoding.
class DataIntegrityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Combinatorially embedded planar graph: a rotation system listing the
// neighbors of each vertex in clockwise order. Vertices are 0-based
// internally; the text and planar_code formats are 1-based.
struct PlanarEmbedding {
  int vertex_count = 0;
  std::vector<std::vector<int>> rotation;
  std::string name;  // optional, preserved from rotation-text input

  int edge_count() const;
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }

  // Checks simplicity, adjacency symmetry, connectivity and the genus
  // condition V - E + F = 2. Throws ParseError on failure, using the given
  // stream coordinates in the message.
  void validate(std::int64_t byte_offset = 0, std::int64_t graph_index = 0) const;
};

// Faces traced from a rotation system. faces[f] is the cyclic vertex
// sequence v0,v1,... standing for the directed edges (v0,v1),(v1,v2),...
// face_at[v][i] is the face containing directed edge (v, rotation[v][i]);
// read along i it is the cyclic list of faces around v.
struct FaceSet {
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<int>> face_at;

  int face_count() const { return static_cast<int>(faces.size()); }
  int face_size(int f) const { return static_cast<int>(faces[f].size()); }

  // Positions of vertex v along face f (one for 2-connected embeddings).
  std::vector<int> corner_positions(int v, int f) const;
  // Faces incident to v, in rotation order (may repeat a face).
  const std::vector<int>& incident_faces(int v) const { return face_at[v]; }
};

// Designates one face of a FaceSet as the unbounded face.
struct OuterFaceChoice {
  int outer_face = -1;
  int k = 0;                       // number of directed edges of the outer face
  std::vector<char> on_boundary;   // per vertex
  int boundary_vertex_count = 0;

  bool is_interior(int v) const { return !on_boundary[v]; }
};

// fs(v): multiset of sizes of the faces incident to v (sorted).
// fn(v): vertices sharing at least one face with v, v itself excluded.
struct VertexFaceProfile {
  int vertex = 0;
  std::vector<int> fs;
  std::vector<int> fn;
};

std::vector<PlanarEmbedding> parse_planar_code(std::istream& in);
std::vector<PlanarEmbedding> parse_planar_code(const std::string& bytes);
std::string serialize_planar_code(const std::vector<PlanarEmbedding>& graphs);

std::vector<PlanarEmbedding> parse_rotation_text(std::istream& in);
std::vector<PlanarEmbedding> parse_rotation_text(const std::string& text);
std::string serialize_rotation_text(const PlanarEmbedding& g);

FaceSet trace_faces(const PlanarEmbedding& g);
OuterFaceChoice choose_outer_face(const FaceSet& fs, int face, int vertex_count);

std::vector<VertexFaceProfile> vertex_face_profiles(const FaceSet& fs, int vertex_count);

// True iff the graph stays connected after deleting any fewer than `level`
// vertices. Complete graphs K_m count as (m-1)-connected.
bool connectivity(const PlanarEmbedding& g, int level);
// Largest level in 1..3 for which connectivity() holds (0 for a single vertex).
int connectivity_level(const PlanarEmbedding& g);

std::optional<int> regularity(const PlanarEmbedding& g);

inline const char* kPlanarCodeHeader = ">>planar_code<<";

}  // namespace matchstick
