#include "bellforge/local_bound.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "local_bound_kernel.hpp"

namespace bellforge {
namespace {

// Lexicographic encoding of the enumerated signs: A_1 is always +1; for
// i = 2..n, bit (n - i) of the mask is set iff A_i = -1. Numeric order of
// masks is then lexicographic order of sign vectors with +1 before -1.
void decode_lex_mask(std::uint64_t mask, int n, std::vector<std::int8_t>& a) {
  a.assign(static_cast<std::size_t>(n), std::int8_t{1});
  for (int i = 2; i <= n; ++i) {
    if ((mask >> (n - i)) & 1) a[static_cast<std::size_t>(i) - 1] = -1;
  }
}

// Single source of reported values: column sums in ascending row order, then
// the absolute sum in ascending column order. Both bound paths report through
// this, so they agree bit-for-bit whenever they select the same strategy.
double eval_signs(const Matrix& E, const std::vector<std::int8_t>& a, std::vector<double>& T) {
  T.assign(E.cols(), 0.0);
  for (std::size_t x = 0; x < E.rows(); ++x) {
    const double s = a[x];
    const auto row = E.row(x);
    for (std::size_t y = 0; y < E.cols(); ++y) T[y] += s * row[y];
  }
  double S = 0.0;
  for (double t : T) S += std::fabs(t);
  return S;
}

void check_enumerable(std::size_t n_small, const BoundOptions& opts) {
  if (n_small == 0) throw InvalidInput("local bound: empty coefficient matrix");
  if (opts.max_exponent < 1 || opts.max_exponent > 62) {
    throw InvalidInput("local bound: max_exponent must be in [1, 62]");
  }
  if (n_small > static_cast<std::size_t>(opts.max_exponent)) {
    throw CapacityError("local bound: enumerating 2^" + std::to_string(n_small - 1) +
                        " strategies exceeds the 2^" + std::to_string(opts.max_exponent) +
                        " guard; raise max_exponent or use the heuristic/oracle path");
  }
}

LocalBoundResult assemble_result(const Matrix& E, bool transposed, std::uint64_t mask,
                                 std::uint64_t enumerated) {
  const int n = static_cast<int>(E.rows());
  std::vector<std::int8_t> enum_signs;
  decode_lex_mask(mask, n, enum_signs);
  std::vector<double> T;
  const double value = eval_signs(E, enum_signs, T);
  std::vector<std::int8_t> other_signs(E.cols());
  for (std::size_t y = 0; y < E.cols(); ++y) {
    other_signs[y] = T[y] >= 0.0 ? std::int8_t{1} : std::int8_t{-1};  // ties to +1
  }
  LocalBoundResult res;
  res.value = value;
  res.enumerated_count = enumerated;
  if (transposed) {
    res.witness.a_signs = std::move(other_signs);
    res.witness.b_signs = std::move(enum_signs);
  } else {
    res.witness.a_signs = std::move(enum_signs);
    res.witness.b_signs = std::move(other_signs);
  }
  return res;
}

LocalBoundResult graycode_impl(const Matrix& coeffs, const BoundOptions& opts) {
  const bool transposed = coeffs.cols() < coeffs.rows();
  const Matrix E = transposed ? coeffs.transposed() : coeffs;
  check_enumerable(E.rows(), opts);
  const unsigned threads = opts.threads == 0 ? default_thread_count() : opts.threads;
  const detail::KernelBest best = detail::graycode_walk_argmax(E, threads);
  return assemble_result(E, transposed, best.lex_mask, std::uint64_t{1} << (E.rows() - 1));
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("BELLFORGE_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

double evaluate(const BellFunctional& f, const StrategyAssignment& s) {
  if (s.a_signs.size() != f.n_a() || s.b_signs.size() != f.n_b()) {
    throw InvalidInput("evaluate: strategy has " + std::to_string(s.a_signs.size()) + "x" +
                       std::to_string(s.b_signs.size()) + " signs, functional is " +
                       std::to_string(f.n_a()) + "x" + std::to_string(f.n_b()));
  }
  double total = 0.0;
  for (std::size_t x = 0; x < f.n_a(); ++x) {
    double row_sum = 0.0;
    for (std::size_t y = 0; y < f.n_b(); ++y) row_sum += f.coeffs(x, y) * s.b_signs[y];
    total += s.a_signs[x] * row_sum;
  }
  return total;
}

LocalBoundResult local_bound(const BellFunctional& f, const BoundOptions& opts) {
  const bool transposed = f.coeffs.cols() < f.coeffs.rows();
  const Matrix E = transposed ? f.coeffs.transposed() : f.coeffs;
  check_enumerable(E.rows(), opts);

  const int n = static_cast<int>(E.rows());
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  std::vector<std::int8_t> a;
  std::vector<double> T;
  double best_value = -1.0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    decode_lex_mask(mask, n, a);
    const double S = eval_signs(E, a, T);
    if (S > best_value) {
      best_value = S;
      best_mask = mask;
    }
  }
  return assemble_result(E, transposed, best_mask, total);
}

LocalBoundResult local_bound_graycode(const BellFunctional& f, const BoundOptions& opts) {
  return graycode_impl(f.coeffs, opts);
}

std::pair<StrategyAssignment, double> linear_oracle(const CorrelationPoint& direction,
                                                    const BoundOptions& opts) {
  LocalBoundResult res = graycode_impl(direction.entries, opts);
  return {std::move(res.witness), res.value};
}

}  // namespace bellforge
