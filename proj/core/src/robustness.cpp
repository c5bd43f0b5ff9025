#include "bellforge/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bellforge {
namespace {

constexpr double kSeparationMargin = 1e-9;

std::vector<double> flatten_strategy(const StrategyAssignment& s) {
  std::vector<double> v(s.a_signs.size() * s.b_signs.size());
  std::size_t i = 0;
  for (std::int8_t a : s.a_signs)
    for (std::int8_t b : s.b_signs) v[i++] = static_cast<double>(a) * b;
  return v;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Gaussian elimination with partial pivoting on the bordered Gram system for
// the affine minimizer of ||t - V a|| with sum(a) = 1. Returns false when the
// system is numerically singular (degenerate corral).
bool solve_affine_weights(const std::vector<std::vector<double>>& corral,
                          const std::vector<double>& target, std::vector<double>& weights) {
  const std::size_t k = corral.size();
  const std::size_t n = k + 1;
  std::vector<double> m(n * n, 0.0);
  std::vector<double> rhs(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) m[i * n + j] = m[j * n + i] = dot(corral[i], corral[j]);
    m[i * n + k] = m[k * n + i] = 1.0;
    rhs[i] = dot(corral[i], target);
  }
  rhs[k] = 1.0;

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::fabs(m[perm[col] * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double cand = std::fabs(m[perm[r] * n + col]);
      if (cand > best) {
        best = cand;
        piv = r;
      }
    }
    if (best < 1e-13 * static_cast<double>(n)) return false;
    std::swap(perm[col], perm[piv]);
    const double inv = 1.0 / m[perm[col] * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[perm[r] * n + col] * inv;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[perm[r] * n + c] -= f * m[perm[col] * n + c];
      rhs[perm[r]] -= f * rhs[perm[col]];
    }
  }
  std::vector<double> x(n);
  for (std::size_t col = n; col-- > 0;) {
    double v = rhs[perm[col]];
    for (std::size_t c = col + 1; c < n; ++c) v -= m[perm[col] * n + c] * x[c];
    x[col] = v / m[perm[col] * n + col];
  }
  weights.assign(x.begin(), x.begin() + k);
  return true;
}

}  // namespace

CriticalVisibility critical_visibility(double local, double quantum) {
  if (!(quantum > 0.0)) {
    throw InvalidInput("critical_visibility: quantum value must be positive");
  }
  if (quantum <= local) return {1.0, false};
  return {local / quantum, true};
}

CorrelationPoint mix_white_noise(const CorrelationPoint& p, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InvalidInput("mix_white_noise: visibility must be in [0, 1]");
  }
  CorrelationPoint out = p;
  for (double& e : out.entries.data()) e *= v;
  return out;
}

GilbertResult gilbert_separate(const CorrelationPoint& target, const GilbertOptions& opts) {
  const std::size_t n_a = target.n_a();
  const std::size_t n_b = target.n_b();
  if (n_a == 0 || n_b == 0) throw InvalidInput("gilbert_separate: empty target");
  std::vector<double> t(target.entries.data().begin(), target.entries.data().end());

  auto call_oracle = [&](const std::vector<double>& dir) {
    CorrelationPoint d{Matrix(n_a, n_b)};
    std::copy(dir.begin(), dir.end(), d.entries.data().begin());
    auto [witness, value] = linear_oracle(d, opts.oracle);
    return std::pair<std::vector<double>, double>(flatten_strategy(witness), value);
  };

  GilbertResult res;
  auto [w0, v0] = call_oracle(t);
  std::vector<std::vector<double>> corral{std::move(w0)};
  std::vector<double> lam{1.0};
  std::vector<double> u = corral[0];
  auto dist_to = [&](const std::vector<double>& pt) {
    double s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) s += (t[i] - pt[i]) * (t[i] - pt[i]);
    return std::sqrt(s);
  };
  res.distance_trace.push_back(dist_to(u));

  int it = 0;
  for (; it < opts.max_iter; ++it) {
    std::vector<double> g(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) g[i] = t[i] - u[i];
    const double norm_g = std::sqrt(dot(g, g));
    if (norm_g <= opts.tol) break;  // the target is (numerically) the closest point

    auto [w, support] = call_oracle(g);
    // u is the projection once no vertex improves on it in direction g.
    if (support <= dot(g, u) + opts.tol * std::max(1.0, norm_g)) break;
    if (std::find(corral.begin(), corral.end(), w) != corral.end()) break;  // fp stall

    corral.push_back(std::move(w));
    lam.push_back(0.0);

    // Wolfe minor cycles: reproject onto the affine hull, walking back into
    // the simplex and dropping atoms until the affine minimizer is feasible.
    for (;;) {
      std::vector<double> a;
      if (!solve_affine_weights(corral, t, a)) {
        corral.pop_back();
        lam.pop_back();
        break;
      }
      if (std::all_of(a.begin(), a.end(), [](double x) { return x >= -1e-12; })) {
        lam = std::move(a);
        for (double& x : lam) x = std::max(x, 0.0);
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] > a[i]) theta = std::min(theta, lam[i] / (lam[i] - a[i]));
      }
      for (std::size_t i = 0; i < lam.size(); ++i) {
        lam[i] += theta * (a[i] - lam[i]);
        if (lam[i] < 1e-14) lam[i] = 0.0;
      }
      for (std::size_t i = lam.size(); i-- > 0;) {
        if (lam[i] == 0.0) {
          corral.erase(corral.begin() + static_cast<std::ptrdiff_t>(i));
          lam.erase(lam.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
    }
    double wsum = 0.0;
    for (double x : lam) wsum += x;
    for (double& x : lam) x /= wsum;
    u.assign(t.size(), 0.0);
    for (std::size_t i = 0; i < corral.size(); ++i) {
      for (std::size_t j = 0; j < u.size(); ++j) u[j] += lam[i] * corral[i][j];
    }

    const double d_now = dist_to(u);
    const double d_prev = res.distance_trace.back();
    res.distance_trace.push_back(d_now);
    if (d_prev - d_now < opts.tol) {
      ++it;
      break;
    }
  }
  res.iterations = it;

  std::vector<double> g(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) g[i] = t[i] - u[i];
  res.distance = std::sqrt(dot(g, g));

  Matrix closest(n_a, n_b);
  std::copy(u.begin(), u.end(), closest.data().begin());
  res.closest_point = {std::move(closest)};

  // Report the hyperplane scaled so the largest |coefficient| is 1; the
  // visibility of a functional is scale-invariant.
  double max_abs = 0.0;
  for (double x : g) max_abs = std::max(max_abs, std::fabs(x));
  Matrix h(n_a, n_b);
  if (max_abs > 0.0) {
    for (std::size_t i = 0; i < g.size(); ++i) h.data()[i] = g[i] / max_abs;
  }
  res.hyperplane = {std::move(h), "gilbert-hyperplane"};

  if (max_abs > 0.0 && res.distance > opts.tol) {
    std::vector<double> hn(res.hyperplane.coeffs.data().begin(), res.hyperplane.coeffs.data().end());
    auto [wf, local_of_h] = call_oracle(hn);
    res.separated = dot(hn, t) > local_of_h + kSeparationMargin;
  }
  return res;
}

GilbertResult gilbert_separate(const CorrelationPoint& target, int max_iter, double tol) {
  GilbertOptions opts;
  opts.max_iter = max_iter;
  opts.tol = tol;
  return gilbert_separate(target, opts);
}

RobustnessTrace robustness_search(const VertexSet& start_alice, const VertexSet& start_bob,
                                  const SearchOptions& opts) {
  if (opts.max_rounds < 1) throw InvalidInput("robustness_search: max_rounds must be >= 1");
  if (!(opts.noise_step >= 0.0 && opts.noise_step <= 1.0)) {
    throw InvalidInput("robustness_search: noise_step must be in [0, 1]");
  }

  RobustnessTrace trace;
  CorrelationPoint p = correlation_point_maxent(start_alice, start_bob);
  int stale_rounds = 0;

  for (int round = 0; round < opts.max_rounds; ++round) {
    GilbertResult sep = gilbert_separate(p, opts.gilbert);
    if (!sep.separated) break;  // the target entered the polytope

    LocalBoundResult lb = local_bound_graycode(sep.hyperplane, opts.gilbert.oracle);

    SeeSawOptions sopts = opts.seesaw;
    sopts.dim = 3;
    sopts.witness_start = lb.witness;  // already certified; no second oracle run
    SeeSawResult ss = seesaw_max(sep.hyperplane, sopts);

    const CriticalVisibility cv = critical_visibility(lb.value, ss.value);
    const double previous_best = trace.rounds.empty() ? 1.0 : trace.best_visibility;
    trace.rounds.push_back({sep.hyperplane, lb.value, ss.value, cv.value});
    trace.best_visibility = std::min(previous_best, cv.value);
    if (opts.on_round) opts.on_round(trace.rounds.size() - 1, trace.rounds.back(), trace);

    if (cv.value < previous_best - 1e-12) {
      stale_rounds = 0;
    } else if (++stale_rounds >= opts.patience) {
      break;
    }

    // Next target: the correlation point realized by the optimized vectors,
    // mixed with a step of white noise.
    const int d = static_cast<int>(ss.alice_vectors.empty() ? 0 : ss.alice_vectors[0].size());
    Matrix next(ss.alice_vectors.size(), ss.bob_vectors.size());
    for (std::size_t x = 0; x < ss.alice_vectors.size(); ++x) {
      for (std::size_t y = 0; y < ss.bob_vectors.size(); ++y) {
        double e = 0.0;
        for (int k = 0; k < d; ++k) e += ss.alice_vectors[x][k] * ss.bob_vectors[y][k];
        next(x, y) = e;
      }
    }
    p = mix_white_noise({std::move(next)}, 1.0 - opts.noise_step);
  }
  return trace;
}

}  // namespace bellforge
