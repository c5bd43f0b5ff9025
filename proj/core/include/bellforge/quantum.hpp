#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bellforge/correlation.hpp"
#include "bellforge/functional.hpp"
#include "bellforge/local_bound.hpp"

namespace bellforge {

/// Correlator of measurements along a (Alice) and b (Bob) on the maximally
/// entangled two-qubit state: a . star(b).
double correlator_maxent(const UnitVec3& a, const UnitVec3& b);

/// E[x][y] = correlator_maxent(v_x, u_y) over two vertex sets.
CorrelationPoint correlation_point_maxent(const VertexSet& alice, const VertexSet& bob);

/// Value of dot_functional(alice, bob) on the maximally entangled state with
/// the construction vectors as measurements: sum_{x,y} (v_x . star(u_y))^2.
/// Equals N_A*N_B/3 whenever both sets are isotropic.
double quantum_value_designed(const VertexSet& alice, const VertexSet& bob);

/// sum_{x,y} c[x][y] * correlator_maxent(a_x, b_y) for explicit measurement
/// directions. Throws InvalidInput on shape mismatch.
double quantum_value_at(const BellFunctional& f, const std::vector<UnitVec3>& alice,
                        const std::vector<UnitVec3>& bob);

struct SeeSawOptions {
  int dim = 3;          // unit-vector dimension d; 0 means min(n_a, n_b)
  int restarts = 100;   // total restarts, including the deterministic ones
  double tol = 1e-12;   // stop a restart when the objective improves less than this
  std::uint64_t seed = 0;
  int max_sweeps = 100000;

  /// Start one restart from the local-bound witness (all vectors on one axis,
  /// signs from the witness); guarantees value >= local bound - tol.
  bool deterministic_start = true;
  /// Reuse a precomputed witness instead of running the bound internally.
  std::optional<StrategyAssignment> witness_start;
  /// Optional extra restart from known-good measurement directions (d = 3).
  std::optional<std::pair<std::vector<UnitVec3>, std::vector<UnitVec3>>> designed_start;
  /// Guard/threads for the internally computed witness.
  BoundOptions oracle;
};

struct SeeSawResult {
  double value = 0.0;
  std::vector<std::vector<double>> alice_vectors;  // n_a unit vectors of dimension d
  std::vector<std::vector<double>> bob_vectors;    // n_b unit vectors of dimension d
  int restarts_used = 0;
  bool converged = false;              // best restart stopped on tolerance, not sweep cap
  std::vector<double> iteration_trace;  // objective per sweep of the best restart
  int best_restart = 0;
  int reseeds = 0;  // zero-sum vectors reinitialized across all restarts
};

/// Alternating maximization of sum c[x][y] a_x.b_y over unit vectors in R^d:
/// each sweep sets b_y = normalize(sum_x c[x][y] a_x) then
/// a_x = normalize(sum_y c[x][y] b_y). Restarts are merged by maximum value
/// with lowest-restart-index tie-break, so results do not depend on scheduling.
SeeSawResult seesaw_max(const BellFunctional& f, const SeeSawOptions& opts = {});
SeeSawResult seesaw_max(const BellFunctional& f, int dim, int restarts, double tol,
                        std::uint64_t seed);

}  // namespace bellforge
