#include "local_bound_kernel.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

namespace bellforge::detail {
namespace {

std::uint64_t bit_reverse(std::uint64_t v, int width) {
  if (width <= 0) return 0;
  v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
  v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
  v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
  v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
  v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
  v = (v >> 32) | (v << 32);
  return v >> (64 - width);
}

struct Workspace {
  std::vector<double> sums;       // padded column sums T_y
  std::vector<std::int8_t> sign;  // current sign per row
};

// Walk state shared by both loop variants. The state for walk index mm is
// gray(mm) = mm ^ (mm >> 1); bit j of the state means A_{j+2} = -1.
struct BlockSeed {
  std::uint64_t state = 0;
  double value = 0.0;
};

BlockSeed seed_block(const Matrix& E, std::uint64_t m0, std::size_t mpad, Workspace& ws) {
  const int n = static_cast<int>(E.rows());
  const std::size_t m = E.cols();
  BlockSeed seed;
  seed.state = m0 ^ (m0 >> 1);
  ws.sign.assign(static_cast<std::size_t>(n), std::int8_t{1});
  for (int j = 0; j < n - 1; ++j) {
    if ((seed.state >> j) & 1) ws.sign[static_cast<std::size_t>(j) + 1] = -1;
  }
  ws.sums.assign(mpad, 0.0);
  double* T = ws.sums.data();
  for (int x = 0; x < n; ++x) {
    const double s = ws.sign[static_cast<std::size_t>(x)];
    const auto row = E.row(static_cast<std::size_t>(x));
    for (std::size_t y = 0; y < m; ++y) T[y] += s * row[y];
  }
  for (std::size_t y = 0; y < m; ++y) seed.value += std::fabs(T[y]);
  return seed;
}

// MPAD > 0: column count known at compile time; the sums live in registers.
// MPAD == 0: dynamic width fallback.
template <int MPAD>
KernelBest walk_block(const Matrix& E, const std::vector<double>& steps, std::size_t mpad,
                      std::uint64_t m0, std::uint64_t m1, Workspace& ws) {
  const int bits = static_cast<int>(E.rows()) - 1;
  const BlockSeed seed = seed_block(E, m0, mpad, ws);
  std::uint64_t state = seed.state;
  KernelBest best{seed.value, bit_reverse(state, bits)};

  constexpr std::size_t kFixed = static_cast<std::size_t>(MPAD);
  double T_local[MPAD > 0 ? kFixed : 1];
  double* __restrict T = ws.sums.data();
  if constexpr (MPAD > 0) {
    for (std::size_t y = 0; y < kFixed; ++y) T_local[y] = ws.sums[y];
    T = T_local;
  }
  const std::size_t width = MPAD > 0 ? kFixed : mpad;

  for (std::uint64_t mm = m0 + 1; mm < m1; ++mm) {
    const int j = std::countr_zero(mm);
    const std::size_t r = static_cast<std::size_t>(j) + 1;
    const std::int8_t s_new = ws.sign[r] = static_cast<std::int8_t>(-ws.sign[r]);
    const double* __restrict step = steps.data() + (2 * r + (s_new > 0 ? 0 : 1)) * mpad;
    state ^= std::uint64_t{1} << j;

    // Hot loop: T_y += +-2*E(r,y), then sum |T_y|. Eight independent
    // accumulator lanes keep it vectorizable without reassociation.
    double acc[8] = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    for (std::size_t y = 0; y < width; y += 8) {
      for (int k = 0; k < 8; ++k) {
        const double t = T[y + k] + step[y + k];
        T[y + k] = t;
        acc[k] += std::fabs(t);
      }
    }
    const double S =
        ((acc[0] + acc[1]) + (acc[2] + acc[3])) + ((acc[4] + acc[5]) + (acc[6] + acc[7]));

    if (S > best.value) {
      best.value = S;
      best.lex_mask = bit_reverse(state, bits);
    } else if (S == best.value) {
      const std::uint64_t lex = bit_reverse(state, bits);
      if (lex < best.lex_mask) best.lex_mask = lex;
    }
  }
  return best;
}

KernelBest run_block(const Matrix& E, const std::vector<double>& steps, std::size_t mpad,
                     std::uint64_t m0, std::uint64_t m1, Workspace& ws) {
  switch (mpad) {
    case 8: return walk_block<8>(E, steps, mpad, m0, m1, ws);
    case 16: return walk_block<16>(E, steps, mpad, m0, m1, ws);
    case 24: return walk_block<24>(E, steps, mpad, m0, m1, ws);
    case 32: return walk_block<32>(E, steps, mpad, m0, m1, ws);
    default: return walk_block<0>(E, steps, mpad, m0, m1, ws);
  }
}

}  // namespace

KernelBest graycode_walk_argmax(const Matrix& E, unsigned threads) {
  const int n = static_cast<int>(E.rows());
  const std::size_t m = E.cols();
  const std::size_t mpad = (m + 7) & ~std::size_t{7};
  const int bits = n - 1;

  // Step table: for each row r and new sign s, the padded row of 2*s*E(r, .).
  std::vector<double> steps(2 * static_cast<std::size_t>(n) * mpad, 0.0);
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
    const auto row = E.row(r);
    for (std::size_t y = 0; y < m; ++y) {
      steps[(2 * r + 0) * mpad + y] = 2.0 * row[y];
      steps[(2 * r + 1) * mpad + y] = -2.0 * row[y];
    }
  }

  // Fixed 64-way split of the mask space keeps results thread-count invariant.
  constexpr int kBlockBits = 6;
  const int low_bits = bits > kBlockBits ? bits - kBlockBits : 0;
  const std::uint64_t n_blocks = std::uint64_t{1} << (bits - low_bits);
  const std::uint64_t block_len = std::uint64_t{1} << low_bits;

  std::vector<KernelBest> per_block(n_blocks);
  const unsigned want = threads == 0 ? 1 : threads;
  const unsigned n_threads = static_cast<unsigned>(std::min<std::uint64_t>(want, n_blocks));

  if (n_threads <= 1) {
    Workspace ws;
    for (std::uint64_t p = 0; p < n_blocks; ++p) {
      per_block[p] = run_block(E, steps, mpad, p * block_len, (p + 1) * block_len, ws);
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
      Workspace ws;
      for (;;) {
        const std::uint64_t p = next.fetch_add(1, std::memory_order_relaxed);
        if (p >= n_blocks) break;
        per_block[p] = run_block(E, steps, mpad, p * block_len, (p + 1) * block_len, ws);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Merge in block order: deterministic regardless of scheduling.
  KernelBest best = per_block[0];
  for (std::uint64_t p = 1; p < n_blocks; ++p) {
    const KernelBest& c = per_block[p];
    if (c.value > best.value || (c.value == best.value && c.lex_mask < best.lex_mask)) {
      best = c;
    }
  }
  return best;
}

}  // namespace bellforge::detail
