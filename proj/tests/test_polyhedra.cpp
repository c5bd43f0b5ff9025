#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <vector>

#include "bellforge/polyhedra.hpp"
#include "test_util.hpp"

using namespace bellforge;

namespace {

const double kPhi = 0.5 * (1.0 + std::sqrt(5.0));

void check_isotropy(const VertexSet& s) {
  const auto m = s.second_moment();
  const double expected = static_cast<double>(s.size()) / 3.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(m[3 * i + j] - (i == j ? expected : 0.0)) < 1e-9);
    }
  }
}

std::vector<std::vector<int>> edge_adjacency(const VertexSet& s) {
  const std::size_t n = s.size();
  double min_d2 = 1e300;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      min_d2 = std::min(min_d2, (s[i].vec() - s[j].vec()).norm_sq());
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((s[i].vec() - s[j].vec()).norm_sq() < min_d2 + 1e-9) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
  return adj;
}

}  // namespace

TEST_CASE("platonic vertex counts and names") {
  CHECK(platonic_vertices(Solid::Tetrahedron).size() == 4);
  CHECK(platonic_vertices(Solid::Octahedron).size() == 6);
  CHECK(platonic_vertices(Solid::Cube).size() == 8);
  CHECK(platonic_vertices(Solid::Icosahedron).size() == 12);
  CHECK(platonic_vertices(Solid::Dodecahedron).size() == 20);
  CHECK(platonic_vertices("cube").name() == "cube");
  CHECK_THROWS_AS(platonic_vertices("pyramid"), InvalidInput);
}

TEST_CASE("octahedron is the signed axes") {
  const VertexSet octa = platonic_vertices(Solid::Octahedron);
  CHECK(octa[0].x() == 1.0);
  CHECK(octa[1].x() == -1.0);
  CHECK(octa[2].y() == 1.0);
  CHECK(octa[4].z() == 1.0);
}

TEST_CASE("unit norm and distinctness invariants") {
  std::vector<VertexSet> sets;
  for (Solid s : kAllSolids) sets.push_back(platonic_vertices(s));
  sets.push_back(truncated_icosahedron());
  for (const VertexSet& s : sets) {
    CAPTURE(s.name());
    for (const UnitVec3& v : s.vertices()) {
      CHECK(std::abs(v.vec().norm_sq() - 1.0) <= kUnitNormTol);
    }
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        CHECK((s[i].vec() - s[j].vec()).norm_sq() > 0.01);
  }
}

TEST_CASE("isotropy: sum v v^T = (N/3) I for all six solids") {
  for (Solid s : kAllSolids) check_isotropy(platonic_vertices(s));
  check_isotropy(truncated_icosahedron());
}

TEST_CASE("tetrahedron pairwise dot products are -1/3") {
  const VertexSet t = platonic_vertices(Solid::Tetrahedron);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      CHECK(std::abs(t[i].dot(t[j]) - (-1.0 / 3.0)) < 1e-12);
}

TEST_CASE("icosahedron carries three perpendicular golden rectangles") {
  const VertexSet ico = platonic_vertices(Solid::Icosahedron);
  // Four vertices vanish along each coordinate axis; each quadruple spans a
  // rectangle whose side ratio is the golden ratio.
  for (int axis = 0; axis < 3; ++axis) {
    std::vector<UnitVec3> plane;
    for (const UnitVec3& v : ico.vertices()) {
      const double c[3] = {v.x(), v.y(), v.z()};
      if (std::abs(c[axis]) < 1e-12) plane.push_back(v);
    }
    REQUIRE(plane.size() == 4);
    std::set<double> magnitudes;
    for (const UnitVec3& v : plane) {
      const double c[3] = {v.x(), v.y(), v.z()};
      for (int k = 0; k < 3; ++k)
        if (k != axis) magnitudes.insert(std::abs(c[k]));
    }
    REQUIRE(magnitudes.size() == 2);
    const double lo = *magnitudes.begin();
    const double hi = *magnitudes.rbegin();
    CHECK(std::abs(hi / lo - kPhi) < 1e-12);
  }
}

TEST_CASE("duality is the documented involution") {
  CHECK(dual_solid(Solid::Tetrahedron) == Solid::Tetrahedron);
  CHECK(dual_name("cube") == "octahedron");
  CHECK(dual_name("octahedron") == "cube");
  CHECK(dual_name("icosahedron") == "dodecahedron");
  for (Solid s : kAllSolids) CHECK(dual_solid(dual_solid(s)) == s);
  CHECK_THROWS_AS(dual_name("prism"), InvalidInput);
}

TEST_CASE("star reflection") {
  const UnitVec3 ey(0, 1, 0);
  CHECK(star(ey).y() == -1.0);
  const UnitVec3 ex(1, 0, 0);
  CHECK(star(ex).x() == 1.0);
  CHECK(star(ex).y() == 0.0);

  testing::Rng rng(20240811);
  for (int i = 0; i < 100; ++i) {
    const UnitVec3 v = rng.unit_vec3();
    const UnitVec3 w = star(star(v));
    CHECK(w.x() == v.x());
    CHECK(w.y() == v.y());
    CHECK(w.z() == v.z());
    CHECK(std::abs(star(v).vec().norm_sq() - 1.0) <= kUnitNormTol);
  }
}

TEST_CASE("truncated icosahedron: 60 vertices, 90 edges, antipodal closure") {
  const VertexSet b = truncated_icosahedron();
  REQUIRE(b.size() == 60);

  for (const UnitVec3& v : b.vertices()) {
    bool found = false;
    for (const UnitVec3& w : b.vertices()) {
      if ((w.vec() + v.vec()).norm_sq() < 1e-18) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }

  const auto adj = edge_adjacency(b);
  std::size_t edge_count = 0;
  for (const auto& nb : adj) {
    CHECK(nb.size() == 3);  // every vertex has degree 3
    edge_count += nb.size();
  }
  CHECK(edge_count / 2 == 90);
}

TEST_CASE("truncated icosahedron: every vertex lies on exactly one pentagon") {
  const VertexSet b = truncated_icosahedron();
  const auto adj = edge_adjacency(b);
  // Enumerate 5-cycles in the edge graph; in this graph they are exactly the
  // twelve pentagonal faces.
  std::set<std::vector<int>> pentagons;
  const int n = static_cast<int>(b.size());
  for (int v0 = 0; v0 < n; ++v0) {
    for (int v1 : adj[v0]) {
      for (int v2 : adj[v1]) {
        if (v2 == v0) continue;
        for (int v3 : adj[v2]) {
          if (v3 == v1 || v3 == v0) continue;
          for (int v4 : adj[v3]) {
            if (v4 == v2 || v4 == v1 || v4 == v0) continue;
            if (std::find(adj[v4].begin(), adj[v4].end(), v0) == adj[v4].end()) continue;
            std::vector<int> cyc = {v0, v1, v2, v3, v4};
            std::sort(cyc.begin(), cyc.end());
            pentagons.insert(cyc);
          }
        }
      }
    }
  }
  CHECK(pentagons.size() == 12);
  std::map<int, int> membership;
  for (const auto& p : pentagons)
    for (int v : p) membership[v]++;
  CHECK(membership.size() == 60);
  for (const auto& [v, count] : membership) CHECK(count == 1);
}

TEST_CASE("antipodal reduction") {
  const VertexSet ico6 = antipodal_reduce(platonic_vertices(Solid::Icosahedron));
  CHECK(ico6.size() == 6);
  CHECK(ico6.antipodal_reduced());

  const VertexSet dod10 = antipodal_reduce(platonic_vertices(Solid::Dodecahedron));
  CHECK(dod10.size() == 10);

  const VertexSet b30 = antipodal_reduce(truncated_icosahedron());
  CHECK(b30.size() == 30);
  CHECK(b30.name() == "buckyball30");

  // Kept representative is the lexicographically larger of each pair.
  for (const UnitVec3& v : b30.vertices()) CHECK_FALSE(lex_less(v, -v));

  // Reduced sets of isotropic sets stay isotropic at (N/2)/3.
  check_isotropy(b30);
  check_isotropy(ico6);

  CHECK_THROWS_AS(antipodal_reduce(platonic_vertices(Solid::Tetrahedron)), InvalidInput);
}

TEST_CASE("vertex set file round-trip") {
  const auto tmp = std::filesystem::temp_directory_path() / "bellforge_test_vs.json";
  const VertexSet b30 = antipodal_reduce(truncated_icosahedron());
  save_vertex_set(b30, tmp);
  const VertexSet back = load_vertex_set(tmp);
  CHECK(back.name() == b30.name());
  CHECK(back.antipodal_reduced() == b30.antipodal_reduced());
  REQUIRE(back.size() == b30.size());
  for (std::size_t i = 0; i < b30.size(); ++i) {
    CHECK(back[i].x() == b30[i].x());
    CHECK(back[i].y() == b30[i].y());
    CHECK(back[i].z() == b30[i].z());
  }
  std::filesystem::remove(tmp);
}

TEST_CASE("vertex set file errors carry diagnostics") {
  namespace fs = std::filesystem;
  const auto tmp = fs::temp_directory_path() / "bellforge_test_bad_vs.json";
  auto write = [&](const char* text) {
    std::ofstream out(tmp);
    out << text;
  };

  write(R"({"name":"x","vertices":[[1,0]]})");
  CHECK_THROWS_AS(load_vertex_set(tmp), FormatError);
  write(R"({"name":"x","vertices":[[2,0,0]]})");
  CHECK_THROWS_AS(load_vertex_set(tmp), FormatError);
  write(R"({"vertices":[]})");
  CHECK_THROWS_AS(load_vertex_set(tmp), FormatError);
  write("not json");
  CHECK_THROWS_AS(load_vertex_set(tmp), FormatError);
  CHECK_THROWS_AS(load_vertex_set(fs::path("/nonexistent/vs.json")), IoError);
  fs::remove(tmp);
}
