#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "webcoord/errors.hpp"
#include "webcoord/localweb.hpp"
#include "webcoord/surface.hpp"

namespace webcoord {

// Knutson-Tao cones: rhombus numbers, membership, tropical X-values, and
// the unique generator decomposition of a local cone point.

// An exact integer third: value = num / 3.
struct Thirds {
  long long num = 0;

  bool is_integer() const { return num % 3 == 0; }
  long long integer_value() const {
    internal_check(is_integer(), "value is not an integer");
    return num / 3;
  }

  friend bool operator==(const Thirds& a, const Thirds& b) { return a.num == b.num; }
};

// Nine rhombus numbers r_ij, stored as exact numerators over denominator 3
// in the order (r11, r12, r13, r21, r22, r23, r31, r32, r33).
struct RhombusVector {
  std::array<long long, 9> num3{}; // num3[k] = 3 * r_ij

  Thirds r(int i, int j) const { return Thirds{num3[3 * i + j]}; }

  friend bool operator==(const RhombusVector& a, const RhombusVector& b) {
    return a.num3 == b.num3;
  }
};

inline RhombusVector rhombus_vector(const LocalConePoint& c) {
  const long long a11 = c.v[0], a12 = c.v[1], a21 = c.v[2], a22 = c.v[3];
  const long long a31 = c.v[4], a32 = c.v[5], a = c.v[6];
  RhombusVector r;
  r.num3[0] = a22 + a31 - a;             // r11
  r.num3[1] = a + a32 - a11 - a31;       // r12
  r.num3[2] = a21 + a - a12 - a22;       // r13
  r.num3[3] = a32 + a11 - a;             // r21
  r.num3[4] = a + a12 - a21 - a11;       // r22
  r.num3[5] = a31 + a - a22 - a32;       // r23
  r.num3[6] = a12 + a21 - a;             // r31
  r.num3[7] = a + a22 - a31 - a21;       // r32
  r.num3[8] = a11 + a - a32 - a12;       // r33
  return r;
}

// Membership: all nine rhombus numbers non-negative integers.
inline bool in_local_cone(const LocalConePoint& c) {
  const RhombusVector r = rhombus_vector(c);
  for (long long n : r.num3)
    if (n < 0 || n % 3 != 0) return false;
  return true;
}

// Tropical X-value x = (a11 - a12 + a21 - a22 + a31 - a32) / 3, which
// equals r13 - r12 = r23 - r22 = r33 - r32.
inline Thirds tropical_x(const LocalConePoint& c) {
  Thirds x{c.v[0] - c.v[1] + c.v[2] - c.v[3] + c.v[4] - c.v[5]};
  const RhombusVector r = rhombus_vector(c);
  internal_check(x.num == r.num3[2] - r.num3[1] && x.num == r.num3[5] - r.num3[4] &&
                     x.num == r.num3[8] - r.num3[7],
                 "x-consistency with rhombus numbers violated");
  return x;
}

// Unique decomposition of a local cone point into generators.  With
// x = tropical_x(c): for x >= 0 the counts are (r11, r12, r21, r22, r31,
// r32) with honeycomb H_x^in, and for x < 0 the counts are (r11, r12+x,
// r21, r22+x, r31, r32+x) with honeycomb H_{-x}^out.
inline LocalWebContent decompose_local(const LocalConePoint& c) {
  if (!in_local_cone(c)) throw NotInCone("7-tuple is outside the local Knutson-Tao cone");
  const RhombusVector r = rhombus_vector(c);
  const long long x = tropical_x(c).integer_value();
  LocalWebContent out;
  for (int k = 0; k < 3; ++k) {
    out.r_arcs[k] = static_cast<int>(r.num3[3 * k] / 3);
    long long l = r.num3[3 * k + 1] / 3;
    if (x < 0) l += x;
    internal_check(l >= 0, "negative arc count in decomposition");
    out.l_arcs[k] = static_cast<int>(l);
  }
  if (x > 0) out.honeycomb = Honeycomb{HoneycombDir::in, static_cast<int>(x)};
  if (x < 0) out.honeycomb = Honeycomb{HoneycombDir::out, static_cast<int>(-x)};
  internal_check(local_coords(out) == c, "decomposition does not reproduce the cone point");
  return out;
}

// A point of the global cone candidate space: one integer per dot.
using GlobalConePoint = std::vector<long long>;

// The 7-tuple a global vector induces on one triangle, reading each slot's
// edge-dots in (left, right) order as seen from that triangle.
inline LocalConePoint local_point_at(const GlobalConePoint& v, const IdealTriangulation& t,
                                     const DotIndexing& idx, int tri) {
  LocalConePoint c;
  for (int slot = 0; slot < 3; ++slot) {
    const int e = t.edge_at(tri, slot);
    const int s = t.side_at(tri, slot);
    // Stored (left, right) is as viewed from side 0; the other side sees them swapped.
    const long long dl = v.at(idx.edge_dot(e, 0));
    const long long dr = v.at(idx.edge_dot(e, 1));
    c.edge(slot, 0) = (s == 0) ? dl : dr;
    c.edge(slot, 1) = (s == 0) ? dr : dl;
  }
  c.triangle() = v.at(idx.triangle_dot(tri));
  return c;
}

inline bool in_global_cone(const GlobalConePoint& v, const IdealTriangulation& t,
                           const DotIndexing& idx) {
  if (static_cast<int>(v.size()) != idx.size())
    throw SchemaError("coordinate vector has length " + std::to_string(v.size()) +
                      ", expected " + std::to_string(idx.size()));
  for (int tri = 0; tri < t.num_triangles(); ++tri)
    if (!in_local_cone(local_point_at(v, t, idx, tri))) return false;
  return true;
}

// First triangle whose induced 7-tuple fails membership, or -1.
inline int first_failing_triangle(const GlobalConePoint& v, const IdealTriangulation& t,
                                  const DotIndexing& idx) {
  for (int tri = 0; tri < t.num_triangles(); ++tri)
    if (!in_local_cone(local_point_at(v, t, idx, tri))) return tri;
  return -1;
}

} // namespace webcoord
