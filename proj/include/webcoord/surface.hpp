#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "webcoord/errors.hpp"

namespace webcoord {

// Combinatorial model of an ideal triangulation of a punctured surface.
//
// Every triangle is oriented counterclockwise with vertices v0, v1, v2.
// Edge slot j (0-based) carries the edge running from vertex v_{j+1} to
// v_{j+2} (indices mod 3); corner k is the vertex v_k opposite slot k.
// Viewed from the triangle, the "left" end of slot j is the starting
// corner v_{j+1} and the "right" end is v_{j+2}.  Gluing two triangles
// along an edge reverses the induced direction, so every side pairing
// yields an oriented surface and no orientation data is stored.

struct EdgeSide {
  int tri = -1;  // triangle index
  int slot = -1; // 0..2

  friend bool operator==(const EdgeSide& a, const EdgeSide& b) {
    return a.tri == b.tri && a.slot == b.slot;
  }
};

struct EdgeRecord {
  std::string id;
  std::array<EdgeSide, 2> sides; // sides[0] is the canonical viewing side
};

class IdealTriangulation {
public:
  // Throws InvalidTriangulation unless the data satisfies all invariants:
  // every (triangle, slot) pair on exactly one edge side, no self-folded
  // triangles, negative Euler characteristic, connected dual graph.
  IdealTriangulation(std::vector<std::string> triangle_ids,
                     std::vector<EdgeRecord> edges)
      : triangle_ids_(std::move(triangle_ids)), edges_(std::move(edges)) {
    validate_and_index();
  }

  int num_triangles() const { return static_cast<int>(triangle_ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& triangle_ids() const { return triangle_ids_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  const std::string& triangle_id(int t) const { return triangle_ids_.at(t); }
  const EdgeRecord& edge(int e) const { return edges_.at(e); }

  int triangle_index(const std::string& id) const {
    auto it = tri_by_id_.find(id);
    if (it == tri_by_id_.end()) throw SchemaError("unknown triangle id: " + id);
    return it->second;
  }
  int edge_index(const std::string& id) const {
    auto it = edge_by_id_.find(id);
    if (it == edge_by_id_.end()) throw SchemaError("unknown edge id: " + id);
    return it->second;
  }

  // Edge index attached to (triangle, slot), and which of its two sides
  // that attachment is.
  int edge_at(int tri, int slot) const { return edge_at_[tri][slot]; }
  int side_at(int tri, int slot) const { return side_at_[tri][slot]; }

  const EdgeSide& side(int edge, int s) const { return edges_[edge].sides[s]; }

  friend bool operator==(const IdealTriangulation& a, const IdealTriangulation& b) {
    if (a.triangle_ids_ != b.triangle_ids_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i) {
      if (a.edges_[i].id != b.edges_[i].id) return false;
      if (!(a.edges_[i].sides[0] == b.edges_[i].sides[0])) return false;
      if (!(a.edges_[i].sides[1] == b.edges_[i].sides[1])) return false;
    }
    return true;
  }

private:
  void validate_and_index() {
    const int nt = num_triangles();
    const int ne = num_edges();
    for (int t = 0; t < nt; ++t) {
      if (!tri_by_id_.emplace(triangle_ids_[t], t).second)
        throw InvalidTriangulation("duplicate triangle id: " + triangle_ids_[t]);
    }
    edge_at_.assign(nt, {-1, -1, -1});
    side_at_.assign(nt, {-1, -1, -1});
    for (int e = 0; e < ne; ++e) {
      const EdgeRecord& rec = edges_[e];
      if (!edge_by_id_.emplace(rec.id, e).second)
        throw InvalidTriangulation("duplicate edge id: " + rec.id);
      if (rec.sides[0].tri == rec.sides[1].tri)
        throw InvalidTriangulation("self-folded edge: " + rec.id);
      for (int s = 0; s < 2; ++s) {
        const EdgeSide& side = rec.sides[s];
        if (side.tri < 0 || side.tri >= nt)
          throw InvalidTriangulation("edge " + rec.id + " references missing triangle");
        if (side.slot < 0 || side.slot > 2)
          throw InvalidTriangulation("edge " + rec.id + " has slot outside 1..3");
        if (edge_at_[side.tri][side.slot] != -1)
          throw InvalidTriangulation("duplicate side (" + triangle_ids_[side.tri] +
                                     ", slot " + std::to_string(side.slot + 1) + ")");
        edge_at_[side.tri][side.slot] = e;
        side_at_[side.tri][side.slot] = s;
      }
    }
    for (int t = 0; t < nt; ++t)
      for (int slot = 0; slot < 3; ++slot)
        if (edge_at_[t][slot] == -1)
          throw InvalidTriangulation("(" + triangle_ids_[t] + ", slot " +
                                     std::to_string(slot + 1) + ") lies on no edge");
    // Coverage of every (triangle, slot) forces 3*nt == 2*ne.
    internal_check(3 * nt == 2 * ne, "side count identity violated");
    if (nt - ne >= 0)
      throw InvalidTriangulation("Euler characteristic must be negative");
    // Dual adjacency graph must be connected.
    if (nt > 0) {
      std::vector<char> seen(nt, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int slot = 0; slot < 3; ++slot) {
          const EdgeRecord& rec = edges_[edge_at_[t][slot]];
          int other = rec.sides[1 - side_at_[t][slot]].tri;
          if (!seen[other]) {
            seen[other] = 1;
            ++reached;
            stack.push_back(other);
          }
        }
      }
      if (reached != nt) throw InvalidTriangulation("triangulation is disconnected");
    }
  }

  std::vector<std::string> triangle_ids_;
  std::vector<EdgeRecord> edges_;
  std::map<std::string, int> tri_by_id_;
  std::map<std::string, int> edge_by_id_;
  std::vector<std::array<int, 3>> edge_at_;
  std::vector<std::array<int, 3>> side_at_;
};

inline int euler_characteristic(const IdealTriangulation& t) {
  return t.num_triangles() - t.num_edges();
}

// Global dot order: edges in file order contribute a (left, right) pair as
// viewed from the edge's first-listed side, then one dot per triangle in
// file order.  N = 2|edges| + |triangles| = -8*chi.
struct DotIndexing {
  int num_edges = 0;
  int num_triangles = 0;

  int size() const { return 2 * num_edges + num_triangles; }
  int edge_dot(int edge, int which) const { return 2 * edge + which; } // 0 = left, 1 = right
  int triangle_dot(int tri) const { return 2 * num_edges + tri; }

  std::vector<std::string> labels(const IdealTriangulation& t) const {
    std::vector<std::string> out;
    out.reserve(size());
    for (int e = 0; e < num_edges; ++e) {
      out.push_back(t.edge(e).id + "L");
      out.push_back(t.edge(e).id + "R");
    }
    for (int k = 0; k < num_triangles; ++k) out.push_back("t" + t.triangle_id(k));
    return out;
  }
};

inline DotIndexing dot_indexing(const IdealTriangulation& t) {
  DotIndexing idx;
  idx.num_edges = t.num_edges();
  idx.num_triangles = t.num_triangles();
  internal_check(idx.size() == -8 * euler_characteristic(t), "dot count != -8*chi");
  return idx;
}

} // namespace webcoord
