#pragma once

#include <cstdint>

#include "bellforge/matrix.hpp"

namespace bellforge::detail {

struct KernelBest {
  double value = 0.0;        // objective at the selected state (walk arithmetic)
  std::uint64_t lex_mask = 0;  // big-endian encoding of (A_2..A_n); 0 = all +1
};

/// argmax over sign vectors A in {+-1}^n with A_1 = +1 of
/// sum_y |sum_x A_x E(x,y)|, where n = E.rows().
/// Walks binary-reflected Gray code over the free n-1 signs, maintaining the
/// column sums incrementally. The mask space is split into fixed blocks
/// (independent of the thread count) that are merged in index order, so the
/// result is identical for every thread count. Ties in value resolve to the
/// lexicographically smallest A.
KernelBest graycode_walk_argmax(const Matrix& E, unsigned threads);

}  // namespace bellforge::detail
