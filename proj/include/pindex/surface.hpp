#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pindex {

using Face = std::array<int, 3>;

/// Abstract triangulated surface: vertex count plus faces over 0-based
/// vertex indices.
struct Triangulation {
  int vertex_count = 0;
  std::vector<Face> faces;
};

struct SurfaceReport {
  std::int64_t vertices = 0;  // sigma_0
  std::int64_t edges = 0;     // sigma_1
  std::int64_t faces = 0;     // sigma_2
  std::int64_t chi = 0;
  bool orientable = false;
  int components = 0;
};

/// Checks that t is a closed combinatorial surface: faces in range and
/// non-degenerate, no repeated faces, every edge in exactly two faces, every
/// vertex link a single cycle. Throws DegenerateFace, NotClosed, NotManifold,
/// FormatError (index out of range).
SurfaceReport validate_triangulation(const Triangulation& t);

/// Faces reoriented coherently by propagation from face 0 of each component.
/// Non-orientable components keep the propagated (inconsistent) orientation.
Triangulation coherently_oriented(const Triangulation& t);

struct SurfaceSpec {
  enum class Kind { Orientable, NonOrientable };
  Kind kind = Kind::Orientable;
  int count = 0;  // genus g, or number of crosscaps k

  static SurfaceSpec genus(int g) { return {Kind::Orientable, g}; }
  static SurfaceSpec crosscaps(int k) { return {Kind::NonOrientable, k}; }
};

/// Tetrahedron (g = 0), 7-vertex torus summands, 6-vertex projective plane
/// summands, joined by triangular tubes. Supports g in [0, 8], k in [1, 8];
/// throws RangeError otherwise.
Triangulation generate_surface(SurfaceSpec spec);

struct Poincare1885Report {
  SurfaceReport surface;
  std::int64_t vertex_excess = 0;      // sum over vertices of (2 - nu)
  std::int64_t excess_formula = 0;     // 2 sigma_0 - 3 sigma_2
  std::int64_t three_sigma2 = 0;
  std::int64_t two_sigma1 = 0;
  std::int64_t doubled_total = 0;      // 2 sigma_2 + (2 sigma_0 - 3 sigma_2)
  bool excess_identity = false;        // vertex_excess == excess_formula
  bool edge_face_identity = false;     // 3 sigma_2 == 2 sigma_1
  bool total_identity = false;         // total == chi
  bool passed() const { return excess_identity && edge_face_identity && total_identity; }
};

/// Tangency counting over the triangles: each vertex of degree nu
/// contributes 2 - nu, edge contacts cancel, so the index sum is
/// sigma_2 + (2 sigma_0 - 3 sigma_2) / 2 which must equal chi.
Poincare1885Report poincare_1885_check(const Triangulation& t);

struct DiscretePhReport {
  SurfaceReport surface;
  std::int64_t vertex_singularities = 0;  // index +1 each
  std::int64_t edge_singularities = 0;    // index -1 each
  std::int64_t face_singularities = 0;    // index +1 each
  std::int64_t index_sum = 0;
  bool passed() const { return index_sum == surface.chi; }
};

/// Index sum of the barycentric gradient-like field: sources at vertices,
/// saddles at edge midpoints, sinks at face barycentres.
DiscretePhReport discrete_ph_sum(const Triangulation& t);

/// Text format: "tri", "nv <n>", then "f <a> <b> <c>" per face. Blank lines
/// and '#' comments are ignored. Throws FormatError.
Triangulation parse_triangulation(std::string_view text);
Triangulation load_triangulation(const std::filesystem::path& path);
std::string format_triangulation(const Triangulation& t);

/// Relabels vertex v as perm[v].
Triangulation relabel(const Triangulation& t, const std::vector<int>& perm);

}  // namespace pindex
