#include "pindex/error.hpp"
#include "pindex/surface.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace pindex;

namespace {

template <class F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

Triangulation tetrahedron() { return {4, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}}}; }

std::int64_t count_edges(const Triangulation& t) {
  std::set<std::pair<int, int>> edges;
  for (const Face& f : t.faces)
    for (int i = 0; i < 3; ++i) edges.insert(std::minmax(f[i], f[(i + 1) % 3]));
  return static_cast<std::int64_t>(edges.size());
}

// Union-find over (face, orientation) nodes: two faces sharing an edge must
// carry opposite directions of it. Orientable iff no face ends up joined
// with its own reversal.
bool orientable_oracle(const Triangulation& t) {
  const int n = static_cast<int>(t.faces.size());
  std::vector<int> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  std::map<std::pair<int, int>, std::vector<std::pair<int, bool>>> edges;  // undirected edge -> (face, forward)
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 3; ++k) {
      const int a = t.faces[i][k], b = t.faces[i][(k + 1) % 3];
      edges[std::minmax(a, b)].push_back({i, a < b});
    }
  for (const auto& [e, uses] : edges) {
    const auto [f, fwd_f] = uses[0];
    const auto [g, fwd_g] = uses[1];
    // Same direction in both faces: one of them must flip.
    if (fwd_f == fwd_g) {
      join(2 * f, 2 * g + 1);
      join(2 * f + 1, 2 * g);
    } else {
      join(2 * f, 2 * g);
      join(2 * f + 1, 2 * g + 1);
    }
  }
  for (int i = 0; i < n; ++i)
    if (find(2 * i) == find(2 * i + 1)) return false;
  return true;
}

bool coherent(const Triangulation& t) {
  std::set<std::pair<int, int>> directed;
  for (const Face& f : t.faces)
    for (int i = 0; i < 3; ++i)
      if (!directed.insert({f[i], f[(i + 1) % 3]}).second) return false;
  return true;
}

}  // namespace

TEST_CASE("tetrahedron") {
  const auto r = validate_triangulation(tetrahedron());
  CHECK(r.vertices == 4);
  CHECK(r.edges == 6);
  CHECK(r.faces == 4);
  CHECK(r.chi == 2);
  CHECK(r.orientable);
  CHECK(r.components == 1);
}

TEST_CASE("generated surfaces have the right invariants") {
  for (int g = 0; g <= 8; ++g) {
    CAPTURE(g);
    const Triangulation t = generate_surface(SurfaceSpec::genus(g));
    const auto r = validate_triangulation(t);
    CHECK(r.chi == 2 - 2 * g);
    CHECK(r.vertices - count_edges(t) + static_cast<std::int64_t>(t.faces.size()) == 2 - 2 * g);
    CHECK(r.orientable);
    CHECK(orientable_oracle(t));
    CHECK(r.components == 1);
    CHECK(coherent(coherently_oriented(t)));
  }
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    const Triangulation t = generate_surface(SurfaceSpec::crosscaps(k));
    const auto r = validate_triangulation(t);
    CHECK(r.chi == 2 - k);
    CHECK(r.vertices - count_edges(t) + static_cast<std::int64_t>(t.faces.size()) == 2 - k);
    CHECK_FALSE(r.orientable);
    CHECK_FALSE(orientable_oracle(t));
    CHECK(r.components == 1);
  }
  CHECK(code_of([] { generate_surface(SurfaceSpec::genus(9)); }) == ErrorCode::RangeError);
  CHECK(code_of([] { generate_surface(SurfaceSpec::genus(-1)); }) == ErrorCode::RangeError);
  CHECK(code_of([] { generate_surface(SurfaceSpec::crosscaps(0)); }) == ErrorCode::RangeError);
  CHECK(code_of([] { generate_surface(SurfaceSpec::crosscaps(9)); }) == ErrorCode::RangeError);
}

TEST_CASE("minimal torus and projective plane") {
  const auto torus = validate_triangulation(generate_surface(SurfaceSpec::genus(1)));
  CHECK(torus.vertices == 7);
  CHECK(torus.edges == 21);
  CHECK(torus.faces == 14);
  const auto rp2 = validate_triangulation(generate_surface(SurfaceSpec::crosscaps(1)));
  CHECK(rp2.vertices == 6);
  CHECK(rp2.edges == 15);
  CHECK(rp2.faces == 10);
}

TEST_CASE("invalid triangulations") {
  CHECK(code_of([] { validate_triangulation({6, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2},
                                                {0, 1, 4}, {0, 5, 1}, {0, 4, 5}, {1, 5, 4}}}); }) ==
        ErrorCode::NotManifold);
  // Two tetrahedra glued at a single vertex.
  CHECK(code_of([] { validate_triangulation({7, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2},
                                                {0, 4, 5}, {0, 6, 4}, {0, 5, 6}, {4, 6, 5}}}); }) ==
        ErrorCode::NotManifold);
  CHECK(code_of([] {
          auto t = tetrahedron();
          t.faces.push_back({2, 1, 0});
          validate_triangulation(t);
        }) == ErrorCode::NotManifold);
  CHECK(code_of([] {
          auto t = tetrahedron();
          t.faces.pop_back();
          validate_triangulation(t);
        }) == ErrorCode::NotClosed);
  CHECK(code_of([] { validate_triangulation({3, {{0, 0, 1}}}); }) == ErrorCode::DegenerateFace);
  CHECK(code_of([] { validate_triangulation({4, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 4}}}); }) ==
        ErrorCode::FormatError);
  CHECK(code_of([] { validate_triangulation({0, {}}); }) == ErrorCode::NotManifold);
  CHECK(code_of([] {
          auto t = tetrahedron();
          t.vertex_count = 5;  // isolated vertex
          validate_triangulation(t);
        }) == ErrorCode::NotManifold);
}

TEST_CASE("disconnected surfaces") {
  Triangulation t = tetrahedron();
  t.vertex_count = 8;
  for (Face f : tetrahedron().faces) t.faces.push_back({f[0] + 4, f[1] + 4, f[2] + 4});
  const auto r = validate_triangulation(t);
  CHECK(r.components == 2);
  CHECK(r.chi == 4);
}

TEST_CASE("tangency counting over triangles") {
  const auto tet = poincare_1885_check(tetrahedron());
  CHECK(tet.vertex_excess == -4);
  CHECK(tet.excess_formula == -4);
  CHECK(tet.three_sigma2 == 12);
  CHECK(tet.two_sigma1 == 12);
  CHECK(tet.doubled_total == 4);
  CHECK(tet.passed());
  for (int g = 0; g <= 8; ++g) {
    const auto r = poincare_1885_check(generate_surface(SurfaceSpec::genus(g)));
    CHECK(r.passed());
    CHECK(r.doubled_total == 2 * r.surface.chi);
  }
  for (int k = 1; k <= 8; ++k) CHECK(poincare_1885_check(generate_surface(SurfaceSpec::crosscaps(k))).passed());
}

TEST_CASE("discrete index sum") {
  const auto tet = discrete_ph_sum(tetrahedron());
  CHECK(tet.vertex_singularities == 4);
  CHECK(tet.edge_singularities == 6);
  CHECK(tet.face_singularities == 4);
  CHECK(tet.index_sum == 2);
  CHECK(tet.passed());
  for (int g = 0; g <= 8; ++g) {
    const auto r = discrete_ph_sum(generate_surface(SurfaceSpec::genus(g)));
    CHECK(r.index_sum == 2 - 2 * g);
  }
  for (int k = 1; k <= 8; ++k) CHECK(discrete_ph_sum(generate_surface(SurfaceSpec::crosscaps(k))).index_sum == 2 - k);
}

TEST_CASE("relabelling preserves every invariant") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const bool orientable = trial % 2 == 0;
    const int count = 1 + trial % 8;
    const Triangulation t =
        generate_surface(orientable ? SurfaceSpec::genus(count) : SurfaceSpec::crosscaps(count));
    std::vector<int> perm(t.vertex_count);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Triangulation u = relabel(t, perm);
    std::shuffle(u.faces.begin(), u.faces.end(), rng);
    const auto a = validate_triangulation(t);
    const auto b = validate_triangulation(u);
    CHECK(a.chi == b.chi);
    CHECK(a.edges == b.edges);
    CHECK(a.orientable == b.orientable);
    CHECK(poincare_1885_check(u).passed());
    CHECK(discrete_ph_sum(u).index_sum == a.chi);
  }
}

TEST_CASE("triangulation text format") {
  const Triangulation t = generate_surface(SurfaceSpec::crosscaps(2));
  const std::string text = format_triangulation(t);
  const Triangulation u = parse_triangulation(text);
  CHECK(u.vertex_count == t.vertex_count);
  CHECK(u.faces == t.faces);
  CHECK(format_triangulation(u) == text);

  const Triangulation c = parse_triangulation("# tetrahedron\ntri\nnv 4\n\nf 0 1 2\nf 0 3 1  # side\nf 0 2 3\nf 1 3 2\n");
  CHECK(validate_triangulation(c).chi == 2);

  for (const char* bad : {"", "nv 4\nf 0 1 2\n", "tri\nf 0 1 2\n", "tri\nnv x\n", "tri\nnv 4\nf 0 1\n",
                          "tri\nnv 4\nf 0 1 2 3\n", "tri\nnv 4\ng 0 1 2\n", "tri\nnv -1\n"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { parse_triangulation(bad); }) == ErrorCode::FormatError);
  }

  const auto path = std::filesystem::temp_directory_path() / "pindex_test_surface.tri";
  std::ofstream(path) << text;
  CHECK(load_triangulation(path).faces == t.faces);
  std::filesystem::remove(path);
  CHECK(code_of([] { load_triangulation("/nonexistent/mesh.tri"); }) == ErrorCode::FormatError);
}
