#include "matchstick/planar.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace matchstick {

int PlanarEmbedding::edge_count() const {
  std::size_t deg_sum = 0;
  for (const auto& nbrs : rotation) deg_sum += nbrs.size();
  return static_cast<int>(deg_sum / 2);
}

namespace {

bool connected_after_removal(const PlanarEmbedding& g, const std::vector<char>& removed) {
  int start = -1;
  int remaining = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (!removed[v]) {
      if (start < 0) start = v;
      ++remaining;
    }
  }
  if (remaining == 0) return false;
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.rotation[v]) {
      if (!removed[u] && !seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == remaining;
}

bool is_complete(const PlanarEmbedding& g) {
  for (int v = 0; v < g.vertex_count; ++v) {
    if (g.degree(v) != g.vertex_count - 1) return false;
  }
  return true;
}

}  // namespace

void PlanarEmbedding::validate(std::int64_t byte_offset, std::int64_t graph_index) const {
  auto fail = [&](const std::string& msg) { throw ParseError(msg, byte_offset, graph_index); };

  if (vertex_count <= 0 || static_cast<int>(rotation.size()) != vertex_count)
    fail("vertex count does not match rotation table");
  for (int v = 0; v < vertex_count; ++v) {
    std::set<int> seen;
    for (int u : rotation[v]) {
      if (u < 0 || u >= vertex_count)
        fail("neighbor id out of range at vertex " + std::to_string(v + 1));
      if (u == v) fail("loop at vertex " + std::to_string(v + 1));
      if (!seen.insert(u).second)
        fail("parallel edge " + std::to_string(v + 1) + "-" + std::to_string(u + 1));
    }
  }
  for (int v = 0; v < vertex_count; ++v) {
    for (int u : rotation[v]) {
      if (std::count(rotation[u].begin(), rotation[u].end(), v) != 1)
        fail("asymmetric adjacency " + std::to_string(v + 1) + "-" + std::to_string(u + 1));
    }
  }
  std::vector<char> removed(vertex_count, 0);
  if (!connected_after_removal(*this, removed)) fail("disconnected graph");

  FaceSet fs = trace_faces(*this);
  if (vertex_count - edge_count() + fs.face_count() != 2)
    fail("rotation system is not planar (Euler check failed)");
}

// ---------------------------------------------------------------------------
// planar_code

namespace {

class ByteCursor {
 public:
  explicit ByteCursor(std::istream& in) : in_(in) {}

  std::int64_t offset() const { return offset_; }

  bool at_eof() {
    return in_.peek() == std::char_traits<char>::eof();
  }

  int next(std::int64_t graph_index) {
    int c = in_.get();
    if (c == std::char_traits<char>::eof())
      throw ParseError("truncated graph record", offset_, graph_index);
    ++offset_;
    return c & 0xff;
  }

 private:
  std::istream& in_;
  std::int64_t offset_ = 0;
};

}  // namespace

std::vector<PlanarEmbedding> parse_planar_code(std::istream& in) {
  ByteCursor cur(in);
  const std::string header = kPlanarCodeHeader;
  for (char expect : header) {
    if (cur.at_eof() || cur.next(0) != (expect & 0xff))
      throw ParseError("malformed planar_code header", cur.offset(), 0);
  }

  std::vector<PlanarEmbedding> out;
  std::int64_t index = 0;
  while (!cur.at_eof()) {
    std::int64_t record_start = cur.offset();
    int wide = 0;
    int n = cur.next(index);
    if (n == 0) {
      // 0-byte escape: 16-bit little-endian words for this record
      wide = 1;
      int lo = cur.next(index);
      int hi = cur.next(index);
      n = lo | (hi << 8);
    }
    if (n == 0) throw ParseError("zero vertex count", record_start, index);

    PlanarEmbedding g;
    g.vertex_count = n;
    g.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
      for (;;) {
        int u;
        if (wide) {
          int lo = cur.next(index);
          int hi = cur.next(index);
          u = lo | (hi << 8);
        } else {
          u = cur.next(index);
        }
        if (u == 0) break;
        g.rotation[v].push_back(u - 1);
      }
    }
    g.validate(record_start, index);
    out.push_back(std::move(g));
    ++index;
  }
  return out;
}

std::vector<PlanarEmbedding> parse_planar_code(const std::string& bytes) {
  std::istringstream in(bytes);
  return parse_planar_code(in);
}

std::string serialize_planar_code(const std::vector<PlanarEmbedding>& graphs) {
  std::string out = kPlanarCodeHeader;
  for (const auto& g : graphs) {
    if (g.vertex_count > 0xffff)
      throw std::invalid_argument("graph too large for planar_code (n > 65535)");
    bool wide = g.vertex_count > 255;
    auto put = [&](int value) {
      if (wide) {
        out.push_back(static_cast<char>(value & 0xff));
        out.push_back(static_cast<char>((value >> 8) & 0xff));
      } else {
        out.push_back(static_cast<char>(value));
      }
    };
    if (wide) out.push_back('\0');
    put(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) {
      for (int u : g.rotation[v]) put(u + 1);
      put(0);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// rotation-text fixtures

std::vector<PlanarEmbedding> parse_rotation_text(std::istream& in) {
  std::vector<PlanarEmbedding> out;
  std::string line;
  std::int64_t lineno = 0;

  std::optional<PlanarEmbedding> current;
  std::vector<char> have_line;
  std::int64_t index = 0;

  auto finish = [&]() {
    if (!current) return;
    for (int v = 0; v < current->vertex_count; ++v) {
      if (!have_line[v])
        throw ParseError("missing vertex line " + std::to_string(v + 1) + " in graph " +
                             current->name,
                         lineno, index);
    }
    current->validate(lineno, index);
    out.push_back(std::move(*current));
    current.reset();
    ++index;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) {  // blank line separates blocks
      finish();
      continue;
    }
    if (first == "graph") {
      finish();
      PlanarEmbedding g;
      int n;
      if (!(ls >> g.name >> n) || n <= 0)
        throw ParseError("malformed graph header line", lineno, index);
      g.vertex_count = n;
      g.rotation.resize(n);
      have_line.assign(n, 0);
      current = std::move(g);
      continue;
    }
    if (!current) throw ParseError("vertex line outside a graph block", lineno, index);
    if (first.empty() || first.back() != ':')
      throw ParseError("expected 'v:' vertex line", lineno, index);
    int v;
    try {
      v = std::stoi(first.substr(0, first.size() - 1));
    } catch (const std::exception&) {
      throw ParseError("bad vertex id '" + first + "'", lineno, index);
    }
    if (v < 1 || v > current->vertex_count)
      throw ParseError("vertex id out of range: " + std::to_string(v), lineno, index);
    if (have_line[v - 1])
      throw ParseError("duplicate vertex line " + std::to_string(v), lineno, index);
    have_line[v - 1] = 1;
    int u;
    while (ls >> u) {
      if (u < 1 || u > current->vertex_count)
        throw ParseError("neighbor id out of range: " + std::to_string(u), lineno, index);
      current->rotation[v - 1].push_back(u - 1);
    }
    if (!ls.eof())
      throw ParseError("non-numeric neighbor token", lineno, index);
  }
  finish();
  return out;
}

std::vector<PlanarEmbedding> parse_rotation_text(const std::string& text) {
  std::istringstream in(text);
  return parse_rotation_text(in);
}

std::string serialize_rotation_text(const PlanarEmbedding& g) {
  std::ostringstream out;
  out << "graph " << (g.name.empty() ? "unnamed" : g.name) << " " << g.vertex_count << "\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    out << (v + 1) << ":";
    for (int u : g.rotation[v]) out << " " << (u + 1);
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// faces

FaceSet trace_faces(const PlanarEmbedding& g) {
  const int n = g.vertex_count;
  // position of u within rotation[v]
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < g.degree(v); ++i) pos[v][g.rotation[v][i]] = i;

  FaceSet fs;
  fs.face_at.resize(n);
  for (int v = 0; v < n; ++v) fs.face_at[v].assign(g.degree(v), -1);

  for (int v0 = 0; v0 < n; ++v0) {
    for (int i0 = 0; i0 < g.degree(v0); ++i0) {
      if (fs.face_at[v0][i0] != -1) continue;
      int face = fs.face_count();
      fs.faces.emplace_back();
      int v = v0, i = i0;
      do {
        fs.face_at[v][i] = face;
        fs.faces[face].push_back(v);
        int u = g.rotation[v][i];
        // successor of (v,u): (u,w), w immediately after v in rotation[u]
        int j = (pos[u].at(v) + 1) % g.degree(u);
        v = u;
        i = j;
      } while (!(v == v0 && i == i0));
    }
  }
  return fs;
}

std::vector<int> FaceSet::corner_positions(int v, int f) const {
  std::vector<int> out;
  for (int p = 0; p < face_size(f); ++p)
    if (faces[f][p] == v) out.push_back(p);
  return out;
}

OuterFaceChoice choose_outer_face(const FaceSet& fs, int face, int vertex_count) {
  OuterFaceChoice out;
  out.outer_face = face;
  out.k = fs.face_size(face);
  out.on_boundary.assign(vertex_count, 0);
  for (int v : fs.faces[face]) {
    if (!out.on_boundary[v]) {
      out.on_boundary[v] = 1;
      ++out.boundary_vertex_count;
    }
  }
  return out;
}

std::vector<VertexFaceProfile> vertex_face_profiles(const FaceSet& fs, int vertex_count) {
  std::vector<VertexFaceProfile> out(vertex_count);
  std::vector<std::set<int>> fn(vertex_count);
  for (int f = 0; f < fs.face_count(); ++f) {
    for (int v : fs.faces[f])
      for (int u : fs.faces[f]) fn[v].insert(u);
  }
  for (int v = 0; v < vertex_count; ++v) {
    out[v].vertex = v;
    for (int f : fs.face_at[v]) out[v].fs.push_back(fs.face_size(f));
    std::sort(out[v].fs.begin(), out[v].fs.end());
    fn[v].erase(v);
    out[v].fn.assign(fn[v].begin(), fn[v].end());
  }
  return out;
}

bool connectivity(const PlanarEmbedding& g, int level) {
  if (level < 1 || level > 3) throw std::invalid_argument("connectivity level must be 1..3");
  if (is_complete(g)) return level <= g.vertex_count - 1;
  if (g.vertex_count <= level) return false;

  std::vector<char> removed(g.vertex_count, 0);
  if (!connected_after_removal(g, removed)) return false;
  if (level >= 2) {
    for (int a = 0; a < g.vertex_count; ++a) {
      removed[a] = 1;
      if (!connected_after_removal(g, removed)) return false;
      removed[a] = 0;
    }
  }
  if (level >= 3) {
    for (int a = 0; a < g.vertex_count; ++a) {
      removed[a] = 1;
      for (int b = a + 1; b < g.vertex_count; ++b) {
        removed[b] = 1;
        if (!connected_after_removal(g, removed)) return false;
        removed[b] = 0;
      }
      removed[a] = 0;
    }
  }
  return true;
}

int connectivity_level(const PlanarEmbedding& g) {
  int level = 0;
  for (int l = 1; l <= 3; ++l) {
    if (connectivity(g, l))
      level = l;
    else
      break;
  }
  return level;
}

std::optional<int> regularity(const PlanarEmbedding& g) {
  int r = g.degree(0);
  for (int v = 1; v < g.vertex_count; ++v)
    if (g.degree(v) != r) return std::nullopt;
  return r;
}

}  // namespace matchstick
