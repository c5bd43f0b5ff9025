#pragma once

#include "bellforge/matrix.hpp"

namespace bellforge {

/// A point in correlation space: E[x][y] in [-1, 1] for each setting pair.
struct CorrelationPoint {
  Matrix entries;

  std::size_t n_a() const { return entries.rows(); }
  std::size_t n_b() const { return entries.cols(); }
};

}  // namespace bellforge
