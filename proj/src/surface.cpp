#include "pindex/surface.hpp"

#include "pindex/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

namespace pindex {

namespace {

using Edge = std::pair<int, int>;

Edge edge_key(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string face_text(const Face& f) {
  return "(" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]) + ")";
}

std::map<Edge, std::vector<int>> edge_faces(const Triangulation& t) {
  std::map<Edge, std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(t.faces.size()); ++i) {
    const Face& f = t.faces[i];
    for (int k = 0; k < 3; ++k) out[edge_key(f[k], f[(k + 1) % 3])].push_back(i);
  }
  return out;
}

// +1 if the face traverses a -> b, -1 if b -> a.
int traversal(const Face& f, int a, int b) {
  for (int k = 0; k < 3; ++k) {
    if (f[k] == a && f[(k + 1) % 3] == b) return 1;
    if (f[k] == b && f[(k + 1) % 3] == a) return -1;
  }
  return 0;
}

struct Orientation {
  std::vector<int> sign;  // +1 keep, -1 flip
  bool orientable = true;
  int components = 0;
};

Orientation propagate_orientation(const Triangulation& t, const std::map<Edge, std::vector<int>>& edges) {
  const int nf = static_cast<int>(t.faces.size());
  Orientation o;
  o.sign.assign(nf, 0);
  for (int seed = 0; seed < nf; ++seed) {
    if (o.sign[seed] != 0) continue;
    ++o.components;
    o.sign[seed] = 1;
    std::queue<int> todo;
    todo.push(seed);
    while (!todo.empty()) {
      const int fi = todo.front();
      todo.pop();
      const Face& f = t.faces[fi];
      for (int k = 0; k < 3; ++k) {
        const int a = f[k];
        const int b = f[(k + 1) % 3];
        for (int gi : edges.at(edge_key(a, b))) {
          if (gi == fi) continue;
          // Coherent neighbours traverse the shared edge in opposite directions.
          const int wanted = -o.sign[fi] * traversal(t.faces[gi], a, b);
          if (o.sign[gi] == 0) {
            o.sign[gi] = wanted;
            todo.push(gi);
          } else if (o.sign[gi] != wanted) {
            o.orientable = false;
          }
        }
      }
    }
  }
  return o;
}

}  // namespace

SurfaceReport validate_triangulation(const Triangulation& t) {
  if (t.vertex_count <= 0 || t.faces.empty()) throw Error(ErrorCode::NotManifold, "empty triangulation");

  std::set<Face> seen;
  for (const Face& f : t.faces) {
    for (int v : f)
      if (v < 0 || v >= t.vertex_count)
        throw Error(ErrorCode::FormatError, "face " + face_text(f) + " references a vertex outside [0, " +
                                                std::to_string(t.vertex_count) + ")");
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
      throw Error(ErrorCode::DegenerateFace, "face " + face_text(f) + " repeats a vertex");
    Face sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second) throw Error(ErrorCode::NotManifold, "face " + face_text(f) + " appears twice");
  }

  const auto edges = edge_faces(t);
  for (const auto& [e, fs] : edges) {
    const std::string name = "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
    if (fs.size() == 1) throw Error(ErrorCode::NotClosed, name + " lies on a single face");
    if (fs.size() > 2)
      throw Error(ErrorCode::NotManifold, name + " lies on " + std::to_string(fs.size()) + " faces");
  }

  // Vertex links: with every edge on two faces each link vertex has degree
  // two, so the link is a union of cycles; require exactly one.
  std::vector<std::vector<Edge>> link(t.vertex_count);
  for (const Face& f : t.faces)
    for (int k = 0; k < 3; ++k) link[f[k]].push_back({f[(k + 1) % 3], f[(k + 2) % 3]});
  for (int v = 0; v < t.vertex_count; ++v) {
    const auto& le = link[v];
    if (le.empty()) throw Error(ErrorCode::NotManifold, "vertex " + std::to_string(v) + " lies on no face");
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : le) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::set<int> reached{le.front().first};
    std::vector<int> stack{le.front().first};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (reached.insert(w).second) stack.push_back(w);
    }
    if (reached.size() != adj.size())
      throw Error(ErrorCode::NotManifold, "link of vertex " + std::to_string(v) + " is not a single cycle");
  }

  const Orientation o = propagate_orientation(t, edges);
  SurfaceReport r;
  r.vertices = t.vertex_count;
  r.edges = static_cast<std::int64_t>(edges.size());
  r.faces = static_cast<std::int64_t>(t.faces.size());
  r.chi = r.vertices - r.edges + r.faces;
  r.orientable = o.orientable;
  r.components = o.components;
  return r;
}

Triangulation coherently_oriented(const Triangulation& t) {
  const Orientation o = propagate_orientation(t, edge_faces(t));
  Triangulation out = t;
  for (std::size_t i = 0; i < out.faces.size(); ++i)
    if (o.sign[i] < 0) std::swap(out.faces[i][1], out.faces[i][2]);
  return out;
}

namespace {

Triangulation tetrahedron() { return {4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}}; }

Triangulation seven_vertex_torus() {
  Triangulation t{7, {}};
  for (int i = 0; i < 7; ++i) {
    t.faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.faces.push_back({i, (i + 3) % 7, (i + 2) % 7});
  }
  return t;
}

Triangulation six_vertex_projective_plane() {
  return {6,
          {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}}};
}

// Connected sum through a triangular tube between the last face of `a` and
// the first face of `b`. Both inputs must be coherently oriented where
// orientable for the result to be.
Triangulation connected_sum(const Triangulation& a, const Triangulation& b) {
  Triangulation out{a.vertex_count + b.vertex_count, {}};
  const Face hole_a = a.faces.back();
  Face hole_b = b.faces.front();
  for (int& v : hole_b) v += a.vertex_count;

  out.faces.assign(a.faces.begin(), a.faces.end() - 1);
  for (std::size_t i = 1; i < b.faces.size(); ++i) {
    Face f = b.faces[i];
    for (int& v : f) v += a.vertex_count;
    out.faces.push_back(f);
  }

  const auto [p, q, r] = hole_a;
  const auto [d, e, f] = hole_b;
  out.faces.push_back({p, q, e});
  out.faces.push_back({p, e, d});
  out.faces.push_back({q, r, f});
  out.faces.push_back({q, f, e});
  out.faces.push_back({r, p, d});
  out.faces.push_back({r, d, f});
  return out;
}

}  // namespace

Triangulation generate_surface(SurfaceSpec spec) {
  const bool orientable = spec.kind == SurfaceSpec::Kind::Orientable;
  const int lo = orientable ? 0 : 1;
  if (spec.count < lo || spec.count > 8)
    throw Error(ErrorCode::RangeError, std::string(orientable ? "genus" : "crosscap count") + " " +
                                           std::to_string(spec.count) + " outside [" + std::to_string(lo) + ", 8]");
  if (orientable && spec.count == 0) return tetrahedron();

  const Triangulation summand = coherently_oriented(orientable ? seven_vertex_torus() : six_vertex_projective_plane());
  Triangulation out = summand;
  for (int i = 1; i < spec.count; ++i) out = connected_sum(out, summand);
  return out;
}

Poincare1885Report poincare_1885_check(const Triangulation& t) {
  Poincare1885Report r;
  r.surface = validate_triangulation(t);

  std::vector<std::int64_t> nu(t.vertex_count, 0);
  for (const Face& f : t.faces)
    for (int v : f) ++nu[v];
  for (std::int64_t n : nu) r.vertex_excess += 2 - n;

  const auto& s = r.surface;
  r.excess_formula = 2 * s.vertices - 3 * s.faces;
  r.three_sigma2 = 3 * s.faces;
  r.two_sigma1 = 2 * s.edges;
  r.doubled_total = 2 * s.faces + r.vertex_excess;
  r.excess_identity = r.vertex_excess == r.excess_formula;
  r.edge_face_identity = r.three_sigma2 == r.two_sigma1;
  r.total_identity = r.doubled_total == 2 * s.chi;
  return r;
}

DiscretePhReport discrete_ph_sum(const Triangulation& t) {
  DiscretePhReport r;
  r.surface = validate_triangulation(t);
  r.vertex_singularities = r.surface.vertices;
  r.edge_singularities = r.surface.edges;
  r.face_singularities = r.surface.faces;
  r.index_sum = r.vertex_singularities - r.edge_singularities + r.face_singularities;
  return r;
}

namespace {

[[noreturn]] void format_error(int line, const std::string& message) {
  throw Error(ErrorCode::FormatError, "triangulation line " + std::to_string(line) + ": " + message);
}

bool parse_nonneg(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() && out >= 0;
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
  Triangulation t;
  bool have_header = false;
  bool have_nv = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok.size() != 1 || tok[0] != "tri") format_error(line_no, "expected header 'tri'");
      have_header = true;
    } else if (!have_nv) {
      if (tok.size() != 2 || tok[0] != "nv" || !parse_nonneg(tok[1], t.vertex_count))
        format_error(line_no, "expected 'nv <count>'");
      have_nv = true;
    } else {
      Face f{};
      if (tok.size() != 4 || tok[0] != "f") format_error(line_no, "expected 'f <a> <b> <c>'");
      for (int k = 0; k < 3; ++k) {
        if (!parse_nonneg(tok[k + 1], f[k])) format_error(line_no, "bad vertex index '" + tok[k + 1] + "'");
        if (f[k] >= t.vertex_count)
          format_error(line_no, "vertex " + tok[k + 1] + " out of range [0, " + std::to_string(t.vertex_count) + ")");
      }
      t.faces.push_back(f);
    }
  }
  if (!have_header) format_error(line_no, "missing header 'tri'");
  if (!have_nv) format_error(line_no, "missing 'nv' line");
  return t;
}

Triangulation load_triangulation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FormatError, "cannot open triangulation file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_triangulation(ss.str());
}

std::string format_triangulation(const Triangulation& t) {
  std::ostringstream os;
  os << "tri\nnv " << t.vertex_count << '\n';
  for (const Face& f : t.faces) os << "f " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  return os.str();
}

Triangulation relabel(const Triangulation& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.vertex_count)
    throw Error(ErrorCode::InvalidArgument, "permutation size does not match vertex count");
  Triangulation out{t.vertex_count, t.faces};
  for (Face& f : out.faces)
    for (int& v : f) v = perm.at(v);
  return out;
}

}  // namespace pindex
