#pragma once

#include <functional>
#include <vector>

#include "bellforge/correlation.hpp"
#include "bellforge/local_bound.hpp"
#include "bellforge/quantum.hpp"

namespace bellforge {

struct CriticalVisibility {
  double value = 1.0;     // local/quantum, clamped to 1 when nothing is violated
  bool violation = false;  // quantum strictly exceeds local
};

/// White-noise threshold: the functional stops being violated once the
/// correlators are scaled below local/quantum. Requires quantum > 0.
CriticalVisibility critical_visibility(double local, double quantum);

/// Mixing with white noise scales every correlator by v in [0, 1].
CorrelationPoint mix_white_noise(const CorrelationPoint& p, double v);

struct GilbertOptions {
  int max_iter = 200;   // major cycles; one linear-oracle call each
  double tol = 1e-12;
  BoundOptions oracle{30, 0};  // desk-scale default: cap the oracle at 2^30
};

struct GilbertResult {
  CorrelationPoint closest_point;  // convex combination of deterministic strategies
  BellFunctional hyperplane;       // direction target - closest_point, max |coeff| scaled to 1
  double distance = 0.0;           // Euclidean norm of (target - closest_point)
  int iterations = 0;
  bool separated = false;          // certified: hyperplane value at target > exact local bound
  std::vector<double> distance_trace;  // nonincreasing
};

/// Distance from a correlation point to the local polytope via the linear
/// oracle, yielding a separating hyperplane when the point is outside.
/// Each major cycle takes the support vertex in the direction
/// (target - current) and reprojects onto the affine hull of the collected
/// vertices (Wolfe-style corral), which avoids the zigzag stall of plain
/// segment steps. separated is decided by a final certified oracle call.
GilbertResult gilbert_separate(const CorrelationPoint& target, const GilbertOptions& opts = {});
GilbertResult gilbert_separate(const CorrelationPoint& target, int max_iter, double tol);

struct RobustnessRound {
  BellFunctional functional;
  double local = 0.0;      // exact oracle value
  double quantum = 0.0;    // see-saw estimate
  double visibility = 1.0;
};

struct RobustnessTrace {
  std::vector<RobustnessRound> rounds;
  double best_visibility = 1.0;  // min over rounds
};

struct SearchOptions {
  double noise_step = 0.005;
  int max_rounds = 50;
  int patience = 5;  // stop after this many rounds without improvement
  GilbertOptions gilbert;
  SeeSawOptions seesaw;
  /// Called after every completed round (for streaming traces to disk).
  std::function<void(std::size_t, const RobustnessRound&, const RobustnessTrace&)> on_round;
};

/// Iterative hyperplane search: separate the current quantum point, certify
/// the hyperplane's exact local bound, see-saw its best quantum value, record
/// the visibility, then continue from the freshly optimized point mixed with
/// (1 - noise_step) of white noise. Stops at max_rounds, on patience, or when
/// a target is no longer separable.
RobustnessTrace robustness_search(const VertexSet& start_alice, const VertexSet& start_bob,
                                  const SearchOptions& opts = {});

}  // namespace bellforge
