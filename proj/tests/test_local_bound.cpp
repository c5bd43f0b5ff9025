#include <doctest.h>

#include <cmath>
#include <numeric>

#include "bellforge/local_bound.hpp"
#include "test_util.hpp"

using namespace bellforge;

namespace {

StrategyAssignment all_plus(std::size_t n_a, std::size_t n_b) {
  return {std::vector<std::int8_t>(n_a, 1), std::vector<std::int8_t>(n_b, 1)};
}

}  // namespace

TEST_CASE("evaluate") {
  const BellFunctional chsh = builtin_chsh();
  CHECK(evaluate(chsh, all_plus(2, 2)) == 2.0);

  testing::Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    BellFunctional f{rng.matrix(1 + rng.integer(6), 1 + rng.integer(6)), "rand"};
    const auto s = all_plus(f.n_a(), f.n_b());
    const auto d = f.coeffs.data();
    const double sum = std::accumulate(d.begin(), d.end(), 0.0);
    CHECK(std::abs(evaluate(f, s) - sum) < 1e-12);

    StrategyAssignment r;
    for (std::size_t i = 0; i < f.n_a(); ++i) r.a_signs.push_back(rng.integer(2) ? 1 : -1);
    for (std::size_t i = 0; i < f.n_b(); ++i) r.b_signs.push_back(rng.integer(2) ? 1 : -1);
    StrategyAssignment neg = r;
    for (auto& v : neg.a_signs) v = -v;
    for (auto& v : neg.b_signs) v = -v;
    CHECK(evaluate(f, r) == evaluate(f, neg));
  }

  CHECK_THROWS_AS(evaluate(chsh, all_plus(2, 3)), InvalidInput);
}

TEST_CASE("local bound of the built-ins") {
  const LocalBoundResult cub = local_bound(builtin_cuboct());
  CHECK(cub.value == 24.0);
  CHECK(cub.enumerated_count == 32);  // 2^(6-1); the 6-setting side is enumerated
  CHECK(evaluate(builtin_cuboct(), cub.witness) == 24.0);
  CHECK(cub.witness.b_signs[0] == 1);  // first enumerated sign pinned to +1

  const LocalBoundResult ico = local_bound(builtin_icodod());
  CHECK(ico.value == 20.0);
  CHECK(evaluate(builtin_icodod(), ico.witness) == 20.0);

  const LocalBoundResult chsh = local_bound(builtin_chsh());
  CHECK(chsh.value == 2.0);
  CHECK(chsh.witness.a_signs[0] == 1);
  CHECK(chsh.enumerated_count == 2);
}

TEST_CASE("graycode path matches on the built-ins and degenerate shapes") {
  CHECK(local_bound_graycode(builtin_cuboct()).value == 24.0);
  CHECK(local_bound_graycode(builtin_icodod()).value == 20.0);
  CHECK(local_bound_graycode(builtin_chsh()).value == 2.0);

  Matrix one(1, 1);
  one(0, 0) = -0.7;
  const LocalBoundResult r = local_bound_graycode({one, "single"});
  CHECK(r.value == 0.7);
  CHECK(r.enumerated_count == 1);
  CHECK(r.witness.a_signs[0] == 1);
  CHECK(r.witness.b_signs[0] == -1);
}

TEST_CASE("oracle equivalence: graycode == reference, exact") {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n_a = 1 + rng.integer(12);
    const std::size_t n_b = 1 + rng.integer(12);
    BellFunctional f{rng.matrix(n_a, n_b), "rand"};
    const LocalBoundResult a = local_bound(f);
    const LocalBoundResult b = local_bound_graycode(f);
    CHECK(a.value == b.value);
    CHECK(a.enumerated_count == b.enumerated_count);
    CHECK(a.witness.a_signs == b.witness.a_signs);
    CHECK(a.witness.b_signs == b.witness.b_signs);
    CHECK(std::abs(evaluate(f, b.witness) - b.value) <= 1e-9 * std::max(1.0, std::abs(b.value)));
  }
}

TEST_CASE("parallel == serial, witness included") {
  testing::Rng rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n_a = 8 + rng.integer(6);
    const std::size_t n_b = 8 + rng.integer(6);
    BellFunctional f{rng.matrix(n_a, n_b), "rand"};
    BoundOptions serial{.max_exponent = 34, .threads = 1};
    const LocalBoundResult base = local_bound_graycode(f, serial);
    for (unsigned threads : {2u, 3u, 8u}) {
      BoundOptions par{.max_exponent = 34, .threads = threads};
      const LocalBoundResult r = local_bound_graycode(f, par);
      CHECK(r.value == base.value);
      CHECK(r.witness.a_signs == base.witness.a_signs);
      CHECK(r.witness.b_signs == base.witness.b_signs);
    }
  }
}

TEST_CASE("cuboct: every no-zero-sum strategy on the 6-side attains 24") {
  const BellFunctional f = builtin_cuboct();
  int attained = 0;
  for (int mask = 0; mask < 64; ++mask) {
    std::int8_t b[6];
    for (int y = 0; y < 6; ++y) b[y] = (mask >> y) & 1 ? -1 : 1;
    double total = 0.0;
    bool all_nonzero = true;
    for (int x = 0; x < 8; ++x) {
      double t = 0.0;
      for (int y = 0; y < 6; ++y) t += f.coeffs(x, y) * b[y];
      if (t == 0.0) all_nonzero = false;
      total += std::abs(t);
    }
    if (all_nonzero) {
      CHECK(total == 24.0);
      ++attained;
    }
  }
  CHECK(attained == 8);  // the B_{y1,0} != B_{y1,1} choices
}

TEST_CASE("linear oracle") {
  const CorrelationPoint chsh_dir{builtin_chsh().coeffs};
  const auto [w, value] = linear_oracle(chsh_dir);
  CHECK(value == 2.0);

  CorrelationPoint zeros{Matrix(2, 3)};
  CHECK(linear_oracle(zeros).second == 0.0);

  testing::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n_a = 2 + rng.integer(6);
    const std::size_t n_b = 2 + rng.integer(6);
    std::vector<std::int8_t> a(n_a), b(n_b);
    a[0] = 1;
    for (std::size_t i = 1; i < n_a; ++i) a[i] = rng.integer(2) ? 1 : -1;
    for (std::size_t i = 0; i < n_b; ++i) b[i] = rng.integer(2) ? 1 : -1;
    Matrix outer(n_a, n_b);
    for (std::size_t x = 0; x < n_a; ++x)
      for (std::size_t y = 0; y < n_b; ++y) outer(x, y) = double(a[x]) * b[y];
    const auto [witness, value2] = linear_oracle({outer});
    CHECK(value2 == double(n_a * n_b));
    CHECK(witness.a_signs == a);
    CHECK(witness.b_signs == b);
  }
}

TEST_CASE("capacity guard") {
  BellFunctional wide{Matrix(20, 20, 0.5), "big"};
  BoundOptions tight{.max_exponent = 10, .threads = 1};
  CHECK_THROWS_WITH_AS(local_bound(wide, tight), doctest::Contains("guard"), CapacityError);
  CHECK_THROWS_AS(local_bound_graycode(wide, tight), CapacityError);
  CHECK_THROWS_AS(local_bound(wide, BoundOptions{.max_exponent = 0}), InvalidInput);
  CHECK_THROWS_AS(local_bound(BellFunctional{Matrix(), "empty"}), InvalidInput);

  // At the boundary the enumeration still runs.
  BellFunctional ok{Matrix(10, 3, 1.0), "edge"};
  CHECK_NOTHROW(local_bound_graycode(ok, BoundOptions{.max_exponent = 3}));
}
