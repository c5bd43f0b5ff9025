#include <doctest.h>

#include <cmath>

#include "bellforge/quantum.hpp"
#include "test_util.hpp"

using namespace bellforge;

namespace {

const double kPhi = 0.5 * (1.0 + std::sqrt(5.0));

double bilinear_at(const BellFunctional& f, const SeeSawResult& r) {
  double total = 0.0;
  for (std::size_t x = 0; x < f.n_a(); ++x) {
    for (std::size_t y = 0; y < f.n_b(); ++y) {
      double dot = 0.0;
      for (std::size_t k = 0; k < r.alice_vectors[x].size(); ++k)
        dot += r.alice_vectors[x][k] * r.bob_vectors[y][k];
      total += f.coeffs(x, y) * dot;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("maximally entangled correlator") {
  CHECK(correlator_maxent(UnitVec3(0, 0, 1), UnitVec3(0, 0, 1)) == 1.0);
  CHECK(correlator_maxent(UnitVec3(1, 0, 0), UnitVec3(0, 0, 1)) == 0.0);
  CHECK(correlator_maxent(UnitVec3(0, 1, 0), UnitVec3(0, 1, 0)) == -1.0);
}

TEST_CASE("correlation point of two octahedra") {
  const VertexSet octa = platonic_vertices(Solid::Octahedron);
  const CorrelationPoint p = correlation_point_maxent(octa, octa);
  for (std::size_t x = 0; x < 6; ++x) {
    int plus = 0;
    for (std::size_t y = 0; y < 6; ++y) {
      const double e = p.entries(x, y);
      CHECK((e == 0.0 || e == 1.0 || e == -1.0));
      if (e == 1.0) {
        ++plus;
        // +1 exactly where Bob's vertex is the star image of Alice's
        CHECK(star(octa[y]).dot(octa[x]) == 1.0);
      }
    }
    CHECK(plus == 1);
  }
}

TEST_CASE("correlation point of the CHSH vectors") {
  const auto [alice, bob] = chsh_designed_measurements();
  const CorrelationPoint p =
      correlation_point_maxent(VertexSet("a", alice), VertexSet("b", bob));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(p.entries(0, 0) - r) < 1e-15);
  CHECK(std::abs(p.entries(0, 1) - r) < 1e-15);
  CHECK(std::abs(p.entries(1, 0) - r) < 1e-15);
  CHECK(std::abs(p.entries(1, 1) + r) < 1e-15);
}

TEST_CASE("designed quantum values of solid pairs") {
  const VertexSet tet = platonic_vertices(Solid::Tetrahedron);
  CHECK(std::abs(quantum_value_designed(tet, tet) - 16.0 / 3.0) < 1e-12);

  const VertexSet cube = platonic_vertices(Solid::Cube);
  const VertexSet dod = platonic_vertices(Solid::Dodecahedron);
  CHECK(std::abs(quantum_value_designed(cube, dod) - 160.0 / 3.0) < 1e-12);

  const VertexSet b30 = antipodal_reduce(truncated_icosahedron());
  CHECK(std::abs(quantum_value_designed(b30, b30) - 300.0) < 1e-9);

  // All 15 unordered pairs give N_A*N_B/3 by isotropy.
  const double expected[15] = {16.0 / 3.0, 8.0,  32.0 / 3.0, 16.0, 80.0 / 3.0,
                               12.0,       16.0, 24.0,       40.0, 64.0 / 3.0,
                               32.0,       160.0 / 3.0,      48.0, 80.0, 400.0 / 3.0};
  int k = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i; j < 5; ++j, ++k) {
      VertexSet a = platonic_vertices(kAllSolids[i]);
      VertexSet b = platonic_vertices(kAllSolids[j]);
      const double q = quantum_value_designed(a, b);
      CHECK(std::abs(q - double(a.size() * b.size()) / 3.0) < 1e-9);
      CHECK(std::abs(q - expected[k]) < 1e-9);
    }
  }
}

TEST_CASE("quantum_value_at on the designed measurements") {
  const auto [cube, octa] = cuboct_designed_measurements();
  CHECK(std::abs(quantum_value_at(builtin_cuboct(), cube, octa) - 16.0 * std::sqrt(3.0)) < 1e-12);

  const auto [a, b] = chsh_designed_measurements();
  CHECK(std::abs(quantum_value_at(builtin_chsh(), a, b) - 2.0 * std::sqrt(2.0)) < 1e-12);

  CHECK_THROWS_AS(quantum_value_at(builtin_chsh(), a, {}), InvalidInput);
}

TEST_CASE("designed value equals quantum_value_at through the dot functional, exactly") {
  const VertexSet ico = platonic_vertices(Solid::Icosahedron);
  const VertexSet cube = platonic_vertices(Solid::Cube);
  const VertexSet b30 = antipodal_reduce(truncated_icosahedron());
  for (const auto& [a, b] : {std::pair{ico, cube}, std::pair{b30, b30}}) {
    const BellFunctional f = dot_functional(a, b);
    CHECK(quantum_value_at(f, a.vertices(), b.vertices()) == quantum_value_designed(a, b));
  }
}

TEST_CASE("quantum value is bounded by the coefficient mass") {
  testing::Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n_a = 1 + rng.integer(6), n_b = 1 + rng.integer(6);
    BellFunctional f{rng.matrix(n_a, n_b), "rand"};
    std::vector<UnitVec3> a, b;
    for (std::size_t i = 0; i < n_a; ++i) a.push_back(rng.unit_vec3());
    for (std::size_t i = 0; i < n_b; ++i) b.push_back(rng.unit_vec3());
    double mass = 0.0;
    for (double c : f.coeffs.data()) mass += std::abs(c);
    CHECK(std::abs(quantum_value_at(f, a, b)) <= mass + 1e-12);
  }
}

TEST_CASE("see-saw reaches the CHSH Tsirelson value at d=2") {
  SeeSawOptions opts;
  opts.dim = 2;
  opts.restarts = 10;
  const SeeSawResult r = seesaw_max(builtin_chsh(), opts);
  CHECK(std::abs(r.value - 2.0 * std::sqrt(2.0)) < 1e-9);
  CHECK(r.converged);
  CHECK(std::abs(bilinear_at(builtin_chsh(), r) - r.value) < 1e-9 * r.value);
}

TEST_CASE("see-saw reaches 16*sqrt(3) on cuboct at d=3") {
  SeeSawOptions opts;
  opts.dim = 3;
  opts.restarts = 30;
  const SeeSawResult r = seesaw_max(builtin_cuboct(), opts);
  CHECK(std::abs(r.value - 16.0 * std::sqrt(3.0)) < 1e-8);

  // With the designed start it can only do better or equal.
  SeeSawOptions with_start = opts;
  with_start.restarts = 2;
  with_start.designed_start = cuboct_designed_measurements();
  const SeeSawResult r2 = seesaw_max(builtin_cuboct(), with_start);
  CHECK(r2.value >= quantum_value_at(builtin_cuboct(), with_start.designed_start->first,
                                     with_start.designed_start->second) -
                        1e-9);
}

TEST_CASE("see-saw value on cuboct does not grow with dimension") {
  for (int d : {4, 6, 8}) {
    SeeSawOptions opts;
    opts.dim = d;
    opts.restarts = 15;
    CHECK(seesaw_max(builtin_cuboct(), opts).value <= 16.0 * std::sqrt(3.0) + 1e-6);
  }
}

TEST_CASE("see-saw reaches 2*sqrt(45+60*phi) on icodod at d=3") {
  SeeSawOptions opts;
  opts.dim = 3;
  opts.restarts = 60;
  const SeeSawResult r = seesaw_max(builtin_icodod(), opts);
  CHECK(std::abs(r.value - 2.0 * std::sqrt(45.0 + 60.0 * kPhi)) < 1e-6);
}

TEST_CASE("see-saw trace is nondecreasing and dominates the local bound") {
  testing::Rng rng(23);
  for (int t = 0; t < 8; ++t) {
    BellFunctional f{rng.matrix(2 + rng.integer(5), 2 + rng.integer(5)), "rand"};
    SeeSawOptions opts;
    opts.dim = 3;
    opts.restarts = 8;
    opts.seed = 1000 + t;
    const SeeSawResult r = seesaw_max(f, opts);
    for (std::size_t i = 1; i < r.iteration_trace.size(); ++i) {
      CHECK(r.iteration_trace[i] >= r.iteration_trace[i - 1] - 1e-9);
    }
    const LocalBoundResult lb = local_bound(f);
    CHECK(r.value >= lb.value - opts.tol - 1e-9);
    CHECK(std::abs(bilinear_at(f, r) - r.value) < 1e-9 * std::max(1.0, r.value));
  }
}

TEST_CASE("see-saw handles degenerate functionals") {
  BellFunctional zero{Matrix(3, 4), "zero"};
  SeeSawOptions opts;
  opts.restarts = 3;
  const SeeSawResult r = seesaw_max(zero, opts);
  CHECK(r.value == 0.0);
  CHECK(r.converged);
  CHECK(r.reseeds > 0);

  CHECK_THROWS_AS(seesaw_max(zero, SeeSawOptions{.restarts = 0}), InvalidInput);
  CHECK_THROWS_AS(seesaw_max(zero, SeeSawOptions{.dim = -1}), InvalidInput);
}

TEST_CASE("see-saw defaults to d = min(n_a, n_b) when dim = 0") {
  SeeSawOptions opts;
  opts.dim = 0;
  opts.restarts = 5;
  const SeeSawResult r = seesaw_max(builtin_chsh(), opts);
  CHECK(r.alice_vectors[0].size() == 2);
  CHECK(std::abs(r.value - 2.0 * std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("see-saw is deterministic given the seed") {
  SeeSawOptions opts;
  opts.dim = 3;
  opts.restarts = 7;
  opts.seed = 321;
  const SeeSawResult a = seesaw_max(builtin_icodod(), opts);
  const SeeSawResult b = seesaw_max(builtin_icodod(), opts);
  CHECK(a.value == b.value);
  CHECK(a.best_restart == b.best_restart);
  CHECK(a.alice_vectors == b.alice_vectors);
}
