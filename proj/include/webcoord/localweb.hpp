#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "webcoord/errors.hpp"

namespace webcoord {

// Rung-less essential local webs in a triangle, in normal form: one
// optional honeycomb plus disjoint corner arcs.
//
// Chirality convention (fixed once, used everywhere): the corner arc R_k
// at corner k enters the triangle through slot k+2 and exits through slot
// k+1 (slots mod 3); L_k is its orientation reverse.  Corner words list
// arcs innermost-first (nearest the corner vertex first).  This is the
// unique assignment reproducing the coordinate generator table below
// under the edge conventions of surface.hpp.

enum class HoneycombDir { none, in, out };

struct Honeycomb {
  HoneycombDir dir = HoneycombDir::none;
  int n = 0; // n >= 1 iff dir != none

  friend bool operator==(const Honeycomb& a, const Honeycomb& b) {
    return a.dir == b.dir && a.n == b.n;
  }
};

struct TriangleWeb {
  Honeycomb honeycomb;
  std::array<std::string, 3> corners{}; // words over {R, L}, innermost-first

  void validate() const {
    if ((honeycomb.dir == HoneycombDir::none) != (honeycomb.n == 0))
      throw SchemaError("honeycomb multiplicity must be >= 1 exactly when a direction is set");
    if (honeycomb.n < 0) throw SchemaError("negative honeycomb multiplicity");
    for (const std::string& w : corners)
      for (char ch : w)
        if (ch != 'R' && ch != 'L') throw SchemaError("corner words use letters R and L only");
  }

  friend bool operator==(const TriangleWeb& a, const TriangleWeb& b) {
    return a.honeycomb == b.honeycomb && a.corners == b.corners;
  }
};

enum class StrandDir { in, out };

// Strand orientations along one edge, left-to-right as viewed from the triangle.
using StrandWord = std::vector<StrandDir>;

// A TriangleWeb with the corner orderings forgotten: a corner-ambiguity class.
struct LocalWebContent {
  std::array<int, 3> r_arcs{0, 0, 0};
  std::array<int, 3> l_arcs{0, 0, 0};
  Honeycomb honeycomb;

  friend bool operator==(const LocalWebContent& a, const LocalWebContent& b) {
    return a.r_arcs == b.r_arcs && a.l_arcs == b.l_arcs && a.honeycomb == b.honeycomb;
  }
};

inline LocalWebContent content_of(const TriangleWeb& w) {
  LocalWebContent c;
  c.honeycomb = w.honeycomb;
  for (int k = 0; k < 3; ++k)
    for (char ch : w.corners[k])
      ++(ch == 'R' ? c.r_arcs[k] : c.l_arcs[k]);
  return c;
}

struct StrandCounts {
  int in_count = 0;
  int out_count = 0;
};

// Strands of w on the given slot.  The honeycomb contributes n strands of
// its direction on every edge; R_k is one in-strand on slot k+2 and one
// out-strand on slot k+1, L_k the reverse.  Slot j therefore sees R/L arcs
// of its left corner j+1 and of its right corner j+2.
inline StrandCounts strand_counts(const LocalWebContent& c, int slot) {
  StrandCounts s;
  const int left = (slot + 1) % 3, right = (slot + 2) % 3;
  s.in_count = c.r_arcs[left] + c.l_arcs[right];
  s.out_count = c.l_arcs[left] + c.r_arcs[right];
  if (c.honeycomb.dir == HoneycombDir::in) s.in_count += c.honeycomb.n;
  if (c.honeycomb.dir == HoneycombDir::out) s.out_count += c.honeycomb.n;
  return s;
}

inline StrandCounts strand_counts(const TriangleWeb& w, int slot) {
  return strand_counts(content_of(w), slot);
}

// Edge-dot pair of an edge carrying n_in in-strands and n_out out-strands.
inline std::pair<long long, long long> edge_dot_pair(long long n_in, long long n_out) {
  return {2 * n_in + n_out, n_in + 2 * n_out};
}

// Inverse of edge_dot_pair; defined only on its image.
inline std::pair<long long, long long> edge_dot_pair_inverse(long long a_left, long long a_right) {
  const long long n_in3 = 2 * a_left - a_right;
  const long long n_out3 = 2 * a_right - a_left;
  if (n_in3 < 0 || n_out3 < 0 || n_in3 % 3 != 0 || n_out3 % 3 != 0)
    throw NotRepresentable("edge-dot pair is not realized by any strand counts");
  return {n_in3 / 3, n_out3 / 3};
}

// Integer coordinates of a local web, one per dot of the dotted triangle,
// in the order (a11, a12, a21, a22, a31, a32, a) where (a_j1, a_j2) are
// the (left, right) dots of slot j.
struct LocalConePoint {
  std::array<long long, 7> v{};

  long long edge(int slot, int which) const { return v[2 * slot + which]; }
  long long& edge(int slot, int which) { return v[2 * slot + which]; }
  long long triangle() const { return v[6]; }
  long long& triangle() { return v[6]; }

  friend bool operator==(const LocalConePoint& a, const LocalConePoint& b) { return a.v == b.v; }
  friend LocalConePoint operator+(const LocalConePoint& a, const LocalConePoint& b) {
    LocalConePoint out;
    for (int i = 0; i < 7; ++i) out.v[i] = a.v[i] + b.v[i];
    return out;
  }
  friend LocalConePoint operator*(long long k, const LocalConePoint& a) {
    LocalConePoint out;
    for (int i = 0; i < 7; ++i) out.v[i] = k * a.v[i];
    return out;
  }
};

// Coordinate generators of the connected local webs:
//   c(R_1) = (0,0,1,2,2,1,1)   c(L_1) = (0,0,2,1,1,2,2)
//   c(R_2) = (2,1,0,0,1,2,1)   c(L_2) = (1,2,0,0,2,1,2)
//   c(R_3) = (1,2,2,1,0,0,1)   c(L_3) = (2,1,1,2,0,0,2)
//   c(H_n^in)  = (2n,n,2n,n,2n,n,3n)
//   c(H_n^out) = (n,2n,n,2n,n,2n,3n)
// local_coords is the sum of these over components, so it depends only on
// the LocalWebContent.
inline LocalConePoint local_coords(const LocalWebContent& c) {
  LocalConePoint out;
  for (int slot = 0; slot < 3; ++slot) {
    const StrandCounts s = strand_counts(c, slot);
    const auto [left, right] = edge_dot_pair(s.in_count, s.out_count);
    out.edge(slot, 0) = left;
    out.edge(slot, 1) = right;
  }
  long long tri = 3LL * c.honeycomb.n;
  for (int k = 0; k < 3; ++k) tri += c.r_arcs[k] + 2LL * c.l_arcs[k];
  out.triangle() = tri;
  return out;
}

inline LocalConePoint local_coords(const TriangleWeb& w) {
  return local_coords(content_of(w));
}

// Strand order along a slot, left-to-right as viewed from the triangle:
// the left corner's arcs innermost-first, then the honeycomb strands,
// then the right corner's arcs innermost-last.
inline StrandWord boundary_word(const TriangleWeb& w, int slot) {
  const int left = (slot + 1) % 3, right = (slot + 2) % 3;
  StrandWord out;
  // Left corner block: R_{left} enters through this slot, L_{left} exits.
  for (char ch : w.corners[left]) out.push_back(ch == 'R' ? StrandDir::in : StrandDir::out);
  for (int i = 0; i < w.honeycomb.n; ++i)
    out.push_back(w.honeycomb.dir == HoneycombDir::in ? StrandDir::in : StrandDir::out);
  // Right corner block, reversed: R_{right} exits through this slot, L_{right} enters.
  const std::string& rw = w.corners[right];
  for (auto it = rw.rbegin(); it != rw.rend(); ++it)
    out.push_back(*it == 'R' ? StrandDir::out : StrandDir::in);
  return out;
}

// The representative of a corner-ambiguity class whose every corner word
// lists all R letters before all L letters.
inline TriangleWeb canonical_from_counts(const LocalWebContent& c) {
  TriangleWeb w;
  w.honeycomb = c.honeycomb;
  for (int k = 0; k < 3; ++k) {
    if (c.r_arcs[k] < 0 || c.l_arcs[k] < 0) throw SchemaError("negative arc count");
    w.corners[k] = std::string(c.r_arcs[k], 'R') + std::string(c.l_arcs[k], 'L');
  }
  w.validate();
  return w;
}

// Swap the oppositely-oriented arcs at word positions (position, position+1).
inline TriangleWeb corner_transpose(const TriangleWeb& w, int corner, int position) {
  if (corner < 0 || corner > 2) throw SchemaError("corner index outside 0..2");
  const std::string& word = w.corners[corner];
  if (position < 0 || position + 1 >= static_cast<int>(word.size()))
    throw SchemaError("transposition position out of range");
  if (word[position] == word[position + 1])
    throw SchemaError("transposing identically-oriented arcs is the identity");
  TriangleWeb out = w;
  std::swap(out.corners[corner][position], out.corners[corner][position + 1]);
  return out;
}

} // namespace webcoord
