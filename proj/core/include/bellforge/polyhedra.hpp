#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bellforge/vec.hpp"

namespace bellforge {

enum class Solid { Tetrahedron, Octahedron, Cube, Icosahedron, Dodecahedron };

inline constexpr std::array<Solid, 5> kAllSolids = {
    Solid::Tetrahedron, Solid::Octahedron, Solid::Cube, Solid::Icosahedron, Solid::Dodecahedron};

std::string_view solid_name(Solid s);
Solid solid_from_name(std::string_view name);  // throws InvalidInput on unknown names

/// Duality on the five regular solids: tetrahedron <-> tetrahedron,
/// cube <-> octahedron, icosahedron <-> dodecahedron. An involution.
Solid dual_solid(Solid s);
std::string dual_name(std::string_view name);

/// A named, ordered list of unit vectors.
class VertexSet {
 public:
  VertexSet(std::string name, std::vector<UnitVec3> vertices, bool antipodal_reduced = false)
      : name_(std::move(name)), vertices_(std::move(vertices)), antipodal_reduced_(antipodal_reduced) {}

  const std::string& name() const { return name_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<UnitVec3>& vertices() const { return vertices_; }
  const UnitVec3& operator[](std::size_t i) const { return vertices_[i]; }
  bool antipodal_reduced() const { return antipodal_reduced_; }

  /// Second-moment matrix sum_k v_k v_k^T, flattened row-major 3x3.
  /// Equals (N/3) * Identity for every solid generated here.
  std::array<double, 9> second_moment() const;

 private:
  std::string name_;
  std::vector<UnitVec3> vertices_;
  bool antipodal_reduced_ = false;
};

/// Canonical coordinates, fixed for reproducibility:
///   octahedron    +-e1, +-e2, +-e3
///   cube          (+-1,+-1,+-1)/sqrt(3), rows in binary order of the sign bits
///   tetrahedron   even-parity subset of the cube vertices
///   icosahedron   cyclic shifts of (0, +-1, +-phi)/sqrt(1+phi^2)
///   dodecahedron  cube vertices plus cyclic shifts of (0, +-1/phi, +-phi), all /sqrt(3)
VertexSet platonic_vertices(Solid s);
VertexSet platonic_vertices(std::string_view name);

/// The truncated icosahedron: 60 unit vertices from cyclic shifts of the
/// (0,+-1,+-3phi), (+-1,+-(2+phi),+-2phi), (+-2,+-(1+2phi),+-phi) families.
VertexSet truncated_icosahedron();

/// One representative per antipodal pair, keeping the lexicographically larger
/// triple of each pair, in first-occurrence order. The input must be
/// antipodally closed (for every v, -v is present within matching tolerance).
VertexSet antipodal_reduce(const VertexSet& set);

/// Structured text (JSON) export/import: {name, antipodal_reduced, vertices}.
/// Coordinates round-trip losslessly.
void save_vertex_set(const VertexSet& set, const std::filesystem::path& path);
VertexSet load_vertex_set(const std::filesystem::path& path);

}  // namespace bellforge
