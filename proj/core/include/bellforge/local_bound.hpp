#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bellforge/correlation.hpp"
#include "bellforge/functional.hpp"

namespace bellforge {

/// A deterministic local model: one sign per setting on each side.
struct StrategyAssignment {
  std::vector<std::int8_t> a_signs;  // entries exactly +1 / -1, length n_a
  std::vector<std::int8_t> b_signs;  // entries exactly +1 / -1, length n_b
};

struct LocalBoundResult {
  double value = 0.0;
  StrategyAssignment witness;
  std::uint64_t enumerated_count = 0;  // sign vectors examined on the enumerated side
};

struct BoundOptions {
  /// Enumeration is refused when min(n_a, n_b) exceeds this exponent.
  int max_exponent = 34;
  /// Worker threads for the Gray-code walk; 0 means default_thread_count().
  unsigned threads = 0;
};

/// BELLFORGE_THREADS if set and positive, else hardware concurrency.
unsigned default_thread_count();

/// sum_{x,y} c[x][y] * a_x * b_y. Throws InvalidInput on shape mismatch.
double evaluate(const BellFunctional& f, const StrategyAssignment& s);

/// Exact local bound max over deterministic strategies, enumerating the
/// smaller side directly: for each sign vector A (first sign fixed to +1 by
/// global-flip symmetry, remaining in lexicographic order) the optimal other
/// side is the sign vector of the inner sums, giving sum_y |sum_x c[x][y] A_x|.
/// Reference path: every candidate is evaluated from scratch.
LocalBoundResult local_bound(const BellFunctional& f, const BoundOptions& opts = {});

/// Same maximum as local_bound, computed by walking the enumerated side in
/// Gray-code order with incremental inner-sum updates. The walk is split into
/// fixed blocks so results are identical for every thread count.
LocalBoundResult local_bound_graycode(const BellFunctional& f, const BoundOptions& opts = {});

/// The local polytope's linear maximization oracle: the deterministic strategy
/// maximizing sum_{x,y} d[x][y] a_x b_y and its value. Identical computation to
/// local_bound_graycode with d as coefficients.
std::pair<StrategyAssignment, double> linear_oracle(const CorrelationPoint& direction,
                                                    const BoundOptions& opts = {});

}  // namespace bellforge
