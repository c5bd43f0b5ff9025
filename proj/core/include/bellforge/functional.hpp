#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "bellforge/matrix.hpp"
#include "bellforge/polyhedra.hpp"

namespace bellforge {

/// A full-correlation Bell functional: the coefficient matrix c[x][y] of
/// sum_{x,y} c[x][y] E(x,y), with a provenance label.
struct BellFunctional {
  Matrix coeffs;
  std::string label;

  std::size_t n_a() const { return coeffs.rows(); }
  std::size_t n_b() const { return coeffs.cols(); }
};

/// Scalar-product construction: coeffs[x][y] = v_x . star(u_y) over the two
/// vertex sets. Maximally violated (among unit-vector models) by measuring
/// along the construction vectors themselves on the maximally entangled state.
BellFunctional dot_functional(const VertexSet& alice, const VertexSet& bob);

/// The 8x6 cube-octahedron inequality: rows indexed by x = x1x2x3 in binary
/// order, columns by y = (y1,y2) in the order (1,0),(1,1),(2,0),(2,1),(3,0),(3,1);
/// entry (-1)^(x_{y1} + y2). Local bound 24, quantum value 16*sqrt(3).
BellFunctional builtin_cuboct();

/// The 6x10 icosahedron-dodecahedron inequality with entries in {-1,0,1}.
/// Local bound 20, quantum value 2*sqrt(45+60*phi).
BellFunctional builtin_icodod();

/// CHSH: [[1,1],[1,-1]]. Local bound 2, quantum value 2*sqrt(2).
BellFunctional builtin_chsh();

/// The packaged 30x30 noise-robust inequality ("appendix"): local bound
/// 145.0181, quantum value 205.5873, critical visibility 0.7054.
/// Loads the bundled CSV (override the directory with BELLFORGE_DATA_DIR) and
/// verifies its content checksum.
BellFunctional load_appendix_matrix();
BellFunctional load_appendix_matrix(const std::filesystem::path& csv_path);

/// Measurement directions that attain the quantum value of builtin_cuboct():
/// Alice the canonical cube, Bob the octahedron axes ordered and signed to
/// match the builtin's column convention u_(y1,y2) = (-1)^y2 * star(e_{y1}).
std::pair<std::vector<UnitVec3>, std::vector<UnitVec3>> cuboct_designed_measurements();

/// Measurement directions that attain 2*sqrt(2) on builtin_chsh():
/// v1=(1,0,0), v2=(0,0,1); u1=(1,0,1)/sqrt(2), u2=(1,0,-1)/sqrt(2).
std::pair<std::vector<UnitVec3>, std::vector<UnitVec3>> chsh_designed_measurements();

/// Structured text (JSON) round-trip: {label, n_a, n_b, coeffs}.
void save_functional(const BellFunctional& f, const std::filesystem::path& path);
BellFunctional load_functional(const std::filesystem::path& path);

}  // namespace bellforge
