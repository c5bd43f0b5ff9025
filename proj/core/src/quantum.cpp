#include "bellforge/quantum.hpp"

#include <cmath>
#include <random>
#include <string>

namespace bellforge {
namespace {

// Deterministic sphere sampling on top of the fully specified mt19937_64.
// (The standard library's distributions are implementation-defined.)
class SphereSampler {
 public:
  explicit SphereSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  void unit_vector(double* out, int dim) {
    double norm_sq = 0.0;
    do {
      norm_sq = 0.0;
      for (int i = 0; i < dim; ++i) {
        out[i] = gaussian();
        norm_sq += out[i] * out[i];
      }
    } while (norm_sq < 1e-24);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (int i = 0; i < dim; ++i) out[i] *= inv;
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

struct RestartOutcome {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> alice;  // n_a x d row-major
  std::vector<double> bob;    // n_b x d row-major
  bool converged = false;
  std::vector<double> trace;
  int reseeds = 0;
};

// One see-saw run from the given initial vectors (row-major n x d).
RestartOutcome run_restart(const Matrix& c, int d, std::vector<double> A, std::vector<double> B,
                           double tol, int max_sweeps, SphereSampler& reseed_rng) {
  const std::size_t n_a = c.rows();
  const std::size_t n_b = c.cols();
  RestartOutcome out;
  double prev = -std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    // b_y <- normalize(sum_x c[x][y] a_x)
    for (std::size_t y = 0; y < n_b; ++y) {
      double* by = B.data() + y * d;
      for (int k = 0; k < d; ++k) by[k] = 0.0;
      for (std::size_t x = 0; x < n_a; ++x) {
        const double w = c(x, y);
        const double* ax = A.data() + x * d;
        for (int k = 0; k < d; ++k) by[k] += w * ax[k];
      }
      double nsq = 0.0;
      for (int k = 0; k < d; ++k) nsq += by[k] * by[k];
      if (nsq == 0.0) {
        // The column contributes zero for any b_y; keep going with a random
        // direction rather than aborting.
        reseed_rng.unit_vector(by, d);
        ++out.reseeds;
      } else {
        const double inv = 1.0 / std::sqrt(nsq);
        for (int k = 0; k < d; ++k) by[k] *= inv;
      }
    }
    // a_x <- normalize(sum_y c[x][y] b_y); the objective after this half-sweep
    // is sum_x |sum_y c[x][y] b_y|.
    double value = 0.0;
    for (std::size_t x = 0; x < n_a; ++x) {
      double* ax = A.data() + x * d;
      for (int k = 0; k < d; ++k) ax[k] = 0.0;
      const auto row = c.row(x);
      for (std::size_t y = 0; y < n_b; ++y) {
        const double w = row[y];
        const double* by = B.data() + y * d;
        for (int k = 0; k < d; ++k) ax[k] += w * by[k];
      }
      double nsq = 0.0;
      for (int k = 0; k < d; ++k) nsq += ax[k] * ax[k];
      if (nsq == 0.0) {
        reseed_rng.unit_vector(ax, d);
        ++out.reseeds;
      } else {
        const double norm = std::sqrt(nsq);
        value += norm;
        const double inv = 1.0 / norm;
        for (int k = 0; k < d; ++k) ax[k] *= inv;
      }
    }
    out.trace.push_back(value);
    const bool done = value - prev < tol;
    prev = value;  // the reported value is the objective at the returned vectors
    if (done) {
      out.converged = true;
      break;
    }
  }
  out.value = prev;
  out.alice = std::move(A);
  out.bob = std::move(B);
  return out;
}

std::vector<double> axis_start(const std::vector<std::int8_t>& signs, std::size_t n, int d) {
  std::vector<double> v(n * d, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * d] = static_cast<double>(signs[i]);
  return v;
}

std::vector<double> flatten(const std::vector<UnitVec3>& vs, int d) {
  std::vector<double> v(vs.size() * d, 0.0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    v[i * d + 0] = vs[i].x();
    v[i * d + 1] = vs[i].y();
    v[i * d + 2] = vs[i].z();
  }
  return v;
}

}  // namespace

double correlator_maxent(const UnitVec3& a, const UnitVec3& b) { return a.dot(star(b)); }

CorrelationPoint correlation_point_maxent(const VertexSet& alice, const VertexSet& bob) {
  if (alice.size() == 0 || bob.size() == 0) {
    throw InvalidInput("correlation_point_maxent: empty vertex set");
  }
  Matrix e(alice.size(), bob.size());
  for (std::size_t x = 0; x < alice.size(); ++x)
    for (std::size_t y = 0; y < bob.size(); ++y) e(x, y) = correlator_maxent(alice[x], bob[y]);
  return {std::move(e)};
}

double quantum_value_designed(const VertexSet& alice, const VertexSet& bob) {
  if (alice.size() == 0 || bob.size() == 0) {
    throw InvalidInput("quantum_value_designed: empty vertex set");
  }
  double total = 0.0;
  for (std::size_t x = 0; x < alice.size(); ++x) {
    for (std::size_t y = 0; y < bob.size(); ++y) {
      const double dot = alice[x].dot(star(bob[y]));
      total += dot * dot;
    }
  }
  return total;
}

double quantum_value_at(const BellFunctional& f, const std::vector<UnitVec3>& alice,
                        const std::vector<UnitVec3>& bob) {
  if (alice.size() != f.n_a() || bob.size() != f.n_b()) {
    throw InvalidInput("quantum_value_at: got " + std::to_string(alice.size()) + "x" +
                       std::to_string(bob.size()) + " directions for a " + std::to_string(f.n_a()) +
                       "x" + std::to_string(f.n_b()) + " functional");
  }
  double total = 0.0;
  for (std::size_t x = 0; x < f.n_a(); ++x) {
    for (std::size_t y = 0; y < f.n_b(); ++y) {
      total += f.coeffs(x, y) * correlator_maxent(alice[x], bob[y]);
    }
  }
  return total;
}

SeeSawResult seesaw_max(const BellFunctional& f, const SeeSawOptions& opts) {
  const std::size_t n_a = f.n_a();
  const std::size_t n_b = f.n_b();
  if (n_a == 0 || n_b == 0) throw InvalidInput("seesaw_max: empty functional");
  if (opts.restarts < 1) throw InvalidInput("seesaw_max: restarts must be >= 1");
  const int d = opts.dim == 0 ? static_cast<int>(std::min(n_a, n_b)) : opts.dim;
  if (d < 1) throw InvalidInput("seesaw_max: dimension must be >= 1");

  // Deterministic starts first; they do not consume random state.
  std::vector<std::pair<std::vector<double>, std::vector<double>>> fixed_starts;
  if (opts.deterministic_start) {
    std::optional<StrategyAssignment> witness = opts.witness_start;
    if (!witness && std::min(n_a, n_b) <= static_cast<std::size_t>(opts.oracle.max_exponent)) {
      witness = local_bound_graycode(f, opts.oracle).witness;
    }
    if (witness) {
      fixed_starts.emplace_back(axis_start(witness->a_signs, n_a, d),
                                axis_start(witness->b_signs, n_b, d));
    }
  }
  if (opts.designed_start && d >= 3 && opts.designed_start->first.size() == n_a &&
      opts.designed_start->second.size() == n_b) {
    fixed_starts.emplace_back(flatten(opts.designed_start->first, d),
                              flatten(opts.designed_start->second, d));
  }

  SeeSawResult result;
  result.restarts_used = opts.restarts;
  double best = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < opts.restarts; ++r) {
    // Per-restart generator: restarts are independent of each other's draws.
    SphereSampler rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r + 1)));
    std::vector<double> A, B;
    if (static_cast<std::size_t>(r) < fixed_starts.size()) {
      A = fixed_starts[r].first;
      B = fixed_starts[r].second;
    } else {
      A.resize(n_a * d);
      B.resize(n_b * d);
      for (std::size_t x = 0; x < n_a; ++x) rng.unit_vector(A.data() + x * d, d);
      for (std::size_t y = 0; y < n_b; ++y) rng.unit_vector(B.data() + y * d, d);
    }
    RestartOutcome outcome = run_restart(f.coeffs, d, std::move(A), std::move(B), opts.tol,
                                         opts.max_sweeps, rng);
    result.reseeds += outcome.reseeds;
    if (outcome.value > best) {
      best = outcome.value;
      result.value = outcome.value;
      result.converged = outcome.converged;
      result.iteration_trace = std::move(outcome.trace);
      result.best_restart = r;
      result.alice_vectors.assign(n_a, std::vector<double>(d));
      result.bob_vectors.assign(n_b, std::vector<double>(d));
      for (std::size_t x = 0; x < n_a; ++x)
        for (int k = 0; k < d; ++k) result.alice_vectors[x][k] = outcome.alice[x * d + k];
      for (std::size_t y = 0; y < n_b; ++y)
        for (int k = 0; k < d; ++k) result.bob_vectors[y][k] = outcome.bob[y * d + k];
    }
  }
  return result;
}

SeeSawResult seesaw_max(const BellFunctional& f, int dim, int restarts, double tol,
                        std::uint64_t seed) {
  SeeSawOptions opts;
  opts.dim = dim;
  opts.restarts = restarts;
  opts.tol = tol;
  opts.seed = seed;
  return seesaw_max(f, opts);
}

}  // namespace bellforge
