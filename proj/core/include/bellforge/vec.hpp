#pragma once

#include <cmath>

#include "bellforge/errors.hpp"

namespace bellforge {

/// Tolerance on |x^2+y^2+z^2 - 1| for a direction to count as unit length.
inline constexpr double kUnitNormTol = 1e-12;

/// Plain 3-vector, used for intermediate arithmetic.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }

  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  double norm_sq() const { return dot(*this); }
  double norm() const { return std::sqrt(norm_sq()); }
};

/// A direction on the unit sphere. Construction validates the norm, so any
/// UnitVec3 in circulation satisfies |v|^2 = 1 within kUnitNormTol.
class UnitVec3 {
 public:
  UnitVec3(double x, double y, double z) : v_{x, y, z} {
    if (std::abs(v_.norm_sq() - 1.0) > kUnitNormTol) {
      throw InvalidInput("UnitVec3: vector is not unit length");
    }
  }
  explicit UnitVec3(Vec3 v) : UnitVec3(v.x, v.y, v.z) {}

  /// Rescales an arbitrary nonzero vector onto the sphere.
  static UnitVec3 normalize(Vec3 v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw InvalidInput("UnitVec3::normalize: zero or non-finite vector");
    }
    return UnitVec3(Unchecked{}, {v.x / n, v.y / n, v.z / n});
  }
  static UnitVec3 normalize(double x, double y, double z) { return normalize(Vec3{x, y, z}); }

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  Vec3 vec() const { return v_; }

  double dot(const UnitVec3& o) const { return v_.dot(o.v_); }
  UnitVec3 operator-() const { return UnitVec3(Unchecked{}, -v_); }

 private:
  struct Unchecked {};
  UnitVec3(Unchecked, Vec3 v) : v_(v) {}
  Vec3 v_;

  friend UnitVec3 star(const UnitVec3& v);
};

/// Reflection in the xz-plane: (x, y, z) -> (x, -y, z). An involution.
inline UnitVec3 star(const UnitVec3& v) {
  return UnitVec3(UnitVec3::Unchecked{}, {v.x(), -v.y(), v.z()});
}

/// Lexicographic comparison of coordinate triples (x, then y, then z).
inline bool lex_less(const UnitVec3& a, const UnitVec3& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  if (a.y() != b.y()) return a.y() < b.y();
  return a.z() < b.z();
}

}  // namespace bellforge
