#include "bellforge/polyhedra.hpp"

#include <cmath>
#include <string>

namespace bellforge {
namespace {

const double kPhi = 0.5 * (1.0 + std::sqrt(5.0));

// Right cyclic shift k times: (a,b,c) -> (c,a,b) -> (b,c,a).
Vec3 cyclic(const Vec3& v, int k) {
  switch (k % 3) {
    case 1: return {v.z, v.x, v.y};
    case 2: return {v.y, v.z, v.x};
    default: return v;
  }
}

void push_cyclic_family(std::vector<UnitVec3>& out, double a, double b, double c,
                        bool sign_a, bool sign_b, bool sign_c) {
  const int na = sign_a ? 2 : 1;
  const int nb = sign_b ? 2 : 1;
  const int nc = sign_c ? 2 : 1;
  for (int k = 0; k < 3; ++k) {
    for (int sa = 0; sa < na; ++sa) {
      for (int sb = 0; sb < nb; ++sb) {
        for (int sc = 0; sc < nc; ++sc) {
          Vec3 base{sa ? -a : a, sb ? -b : b, sc ? -c : c};
          out.push_back(UnitVec3::normalize(cyclic(base, k)));
        }
      }
    }
  }
}

std::vector<UnitVec3> cube_vertices() {
  // Binary order of the sign bits x1 x2 x3: vertex ((-1)^x1, (-1)^x2, (-1)^x3)/sqrt(3).
  std::vector<UnitVec3> v;
  for (int x = 0; x < 8; ++x) {
    const double s1 = (x & 4) ? -1.0 : 1.0;
    const double s2 = (x & 2) ? -1.0 : 1.0;
    const double s3 = (x & 1) ? -1.0 : 1.0;
    v.push_back(UnitVec3::normalize(s1, s2, s3));
  }
  return v;
}

}  // namespace

std::string_view solid_name(Solid s) {
  switch (s) {
    case Solid::Tetrahedron: return "tetrahedron";
    case Solid::Octahedron: return "octahedron";
    case Solid::Cube: return "cube";
    case Solid::Icosahedron: return "icosahedron";
    case Solid::Dodecahedron: return "dodecahedron";
  }
  throw InvalidInput("solid_name: bad enum value");
}

Solid solid_from_name(std::string_view name) {
  for (Solid s : kAllSolids) {
    if (name == solid_name(s)) return s;
  }
  throw InvalidInput("unknown Platonic solid name: '" + std::string(name) +
                     "' (expected tetrahedron|octahedron|cube|icosahedron|dodecahedron)");
}

Solid dual_solid(Solid s) {
  switch (s) {
    case Solid::Tetrahedron: return Solid::Tetrahedron;
    case Solid::Octahedron: return Solid::Cube;
    case Solid::Cube: return Solid::Octahedron;
    case Solid::Icosahedron: return Solid::Dodecahedron;
    case Solid::Dodecahedron: return Solid::Icosahedron;
  }
  throw InvalidInput("dual_solid: bad enum value");
}

std::string dual_name(std::string_view name) {
  return std::string(solid_name(dual_solid(solid_from_name(name))));
}

std::array<double, 9> VertexSet::second_moment() const {
  std::array<double, 9> m{};
  for (const UnitVec3& u : vertices_) {
    const double c[3] = {u.x(), u.y(), u.z()};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[3 * i + j] += c[i] * c[j];
  }
  return m;
}

VertexSet platonic_vertices(Solid s) {
  std::vector<UnitVec3> v;
  switch (s) {
    case Solid::Tetrahedron:
      // Even-parity subset of the cube: bit patterns 000, 011, 101, 110.
      for (int x : {0, 3, 5, 6}) {
        const double s1 = (x & 4) ? -1.0 : 1.0;
        const double s2 = (x & 2) ? -1.0 : 1.0;
        const double s3 = (x & 1) ? -1.0 : 1.0;
        v.push_back(UnitVec3::normalize(s1, s2, s3));
      }
      break;
    case Solid::Octahedron:
      v = {UnitVec3(1, 0, 0), UnitVec3(-1, 0, 0), UnitVec3(0, 1, 0),
           UnitVec3(0, -1, 0), UnitVec3(0, 0, 1), UnitVec3(0, 0, -1)};
      break;
    case Solid::Cube:
      v = cube_vertices();
      break;
    case Solid::Icosahedron:
      push_cyclic_family(v, 0.0, 1.0, kPhi, false, true, true);
      break;
    case Solid::Dodecahedron:
      v = cube_vertices();
      push_cyclic_family(v, 0.0, 1.0 / kPhi, kPhi, false, true, true);
      break;
  }
  return VertexSet(std::string(solid_name(s)), std::move(v));
}

VertexSet platonic_vertices(std::string_view name) { return platonic_vertices(solid_from_name(name)); }

VertexSet truncated_icosahedron() {
  std::vector<UnitVec3> v;
  push_cyclic_family(v, 0.0, 1.0, 3.0 * kPhi, false, true, true);
  push_cyclic_family(v, 1.0, 2.0 + kPhi, 2.0 * kPhi, true, true, true);
  push_cyclic_family(v, 2.0, 1.0 + 2.0 * kPhi, kPhi, true, true, true);
  return VertexSet("buckyball", std::move(v));
}

VertexSet antipodal_reduce(const VertexSet& set) {
  constexpr double kMatchTolSq = 1e-18;  // squared distance for -v lookup
  const auto& verts = set.vertices();
  std::vector<UnitVec3> kept;
  std::vector<bool> consumed(verts.size(), false);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (consumed[i]) continue;
    const Vec3 want = -verts[i].vec();
    std::size_t partner = verts.size();
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (j == i || consumed[j]) continue;
      if ((verts[j].vec() - want).norm_sq() <= kMatchTolSq) {
        partner = j;
        break;
      }
    }
    if (partner == verts.size()) {
      throw InvalidInput("antipodal_reduce: '" + set.name() + "' is not antipodally closed (vertex " +
                         std::to_string(i) + " has no -v partner)");
    }
    consumed[i] = consumed[partner] = true;
    kept.push_back(lex_less(verts[i], verts[partner]) ? verts[partner] : verts[i]);
  }
  return VertexSet(set.name() + std::to_string(kept.size()), std::move(kept), true);
}

}  // namespace bellforge
