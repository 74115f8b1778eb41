#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "webcoord/cone.hpp"
#include "webcoord/errors.hpp"
#include "webcoord/localweb.hpp"
#include "webcoord/surface.hpp"

namespace webcoord {

// Global webs in good position.  Only the per-triangle webs are stored;
// the content of each biangle is forced by its boundary (the unique
// ladder-web), so crossings are recomputed from boundary words instead of
// being kept as state.

struct GlobalWeb {
  std::shared_ptr<const IdealTriangulation> triangulation;
  std::vector<TriangleWeb> webs; // indexed like triangulation->triangle_ids()

  static GlobalWeb empty(std::shared_ptr<const IdealTriangulation> t) {
    GlobalWeb w;
    w.webs.resize(t->num_triangles());
    w.triangulation = std::move(t);
    return w;
  }

  void validate() const {
    if (!triangulation) throw SchemaError("web has no triangulation");
    if (static_cast<int>(webs.size()) != triangulation->num_triangles())
      throw SchemaError("web assigns local webs to a different number of triangles");
    for (const TriangleWeb& w : webs) w.validate();
  }

  friend bool operator==(const GlobalWeb& a, const GlobalWeb& b) {
    return *a.triangulation == *b.triangulation && a.webs == b.webs;
  }
};

// Strand counts match across every edge: out-strands of one side equal
// in-strands of the other, and vice versa.
inline bool check_compatible(const GlobalWeb& w) {
  w.validate();
  const IdealTriangulation& t = *w.triangulation;
  for (int e = 0; e < t.num_edges(); ++e) {
    const EdgeSide& s0 = t.side(e, 0);
    const EdgeSide& s1 = t.side(e, 1);
    const StrandCounts c0 = strand_counts(w.webs[s0.tri], s0.slot);
    const StrandCounts c1 = strand_counts(w.webs[s1.tri], s1.slot);
    if (c0.out_count != c1.in_count || c0.in_count != c1.out_count) return false;
  }
  return true;
}

inline void require_compatible(const GlobalWeb& w) {
  if (!check_compatible(w)) throw IncompatibleWeb("strand counts do not match across some edge");
}

namespace detail {

// One strand endpoint on a triangle's boundary word.
struct BoundaryEntry {
  StrandDir dir;
  bool is_honeycomb = false;
  int corner = -1; // for corner arcs
  int letter = -1; // index in the corner word
};

inline std::vector<BoundaryEntry> boundary_entries(const TriangleWeb& w, int slot) {
  const int left = (slot + 1) % 3, right = (slot + 2) % 3;
  std::vector<BoundaryEntry> out;
  for (int i = 0; i < static_cast<int>(w.corners[left].size()); ++i)
    out.push_back({w.corners[left][i] == 'R' ? StrandDir::in : StrandDir::out, false, left, i});
  for (int i = 0; i < w.honeycomb.n; ++i)
    out.push_back({w.honeycomb.dir == HoneycombDir::in ? StrandDir::in : StrandDir::out, true, -1, i});
  for (int i = static_cast<int>(w.corners[right].size()) - 1; i >= 0; --i)
    out.push_back({w.corners[right][i] == 'R' ? StrandDir::out : StrandDir::in, false, right, i});
  return out;
}

// The two boundary positions of corner arc (corner, letter): one on the
// slot where its corner is the left end, one where it is the right end.
inline std::pair<int, int> arc_endpoint(const TriangleWeb& w, int corner, int letter, bool on_left_slot) {
  if (on_left_slot) {
    return {(corner + 2) % 3, letter};
  }
  const int slot = (corner + 1) % 3;
  const int left_len = static_cast<int>(w.corners[(slot + 1) % 3].size());
  const int pos = left_len + w.honeycomb.n +
                  (static_cast<int>(w.corners[corner].size()) - 1 - letter);
  return {slot, pos};
}

} // namespace detail

struct RouteEntry {
  int edge = -1;
  int side = -1;     // 0 = the edge's first-listed side
  int position = -1; // raw position in that side's boundary word

  friend bool operator==(const RouteEntry& a, const RouteEntry& b) {
    return a.edge == b.edge && a.side == b.side && a.position == b.position;
  }
};

struct Traveler {
  int id = -1;
  bool is_loop = false;
  std::vector<RouteEntry> route; // two entries per biangle pass, in travel order
  int base_index = 0;            // loops: distinguished route entry
};

// Identifies a crossing independently of any particular analysis pass.
struct CrossingKey {
  std::string edge_id;
  int fwd_pos0 = -1; // raw side-0 position of the forward strand
  int bwd_pos0 = -1;

  friend bool operator==(const CrossingKey& a, const CrossingKey& b) {
    return a.edge_id == b.edge_id && a.fwd_pos0 == b.fwd_pos0 && a.bwd_pos0 == b.bwd_pos0;
  }
  friend bool operator<(const CrossingKey& a, const CrossingKey& b) {
    return std::tie(a.edge_id, a.fwd_pos0, a.bwd_pos0) <
           std::tie(b.edge_id, b.fwd_pos0, b.bwd_pos0);
  }
};

struct Crossing {
  CrossingKey key;
  int fwd_traveler = -1, fwd_pass_index = -1;
  int bwd_traveler = -1, bwd_pass_index = -1;
  std::array<int, 2> fwd_pos{-1, -1}; // raw positions on the side-0 / side-1 words
  std::array<int, 2> bwd_pos{-1, -1};
};

struct CornerSwap {
  int tri = -1;
  int corner = -1;
  int position = -1; // swaps word letters (position, position+1)

  friend bool operator==(const CornerSwap& a, const CornerSwap& b) {
    return a.tri == b.tri && a.corner == b.corner && a.position == b.position;
  }
};

struct SquareFace {
  CrossingKey first, second; // first < second
  std::vector<CornerSwap> swaps;

  friend bool operator==(const SquareFace& a, const SquareFace& b) {
    return a.first == b.first && a.second == b.second;
  }
};

// Fully resolved picture of a compatible web: boundary words, the forced
// biangle matchings, crossings, and travelers.
class GlobalPicture {
public:
  struct Pass {
    int edge = -1;
    bool forward = false;       // strand runs from side 0 to side 1
    std::array<int, 2> pos{};   // raw positions on the two side words
    std::array<int, 2> aligned{};
    int traveler = -1;
    int index_in_traveler = -1;
    std::vector<int> crossings; // ordered by parameter from side 0, ascending
  };

  struct Cross {
    int fwd = -1, bwd = -1; // pass ids
    int edge = -1;
    long long xnum = 0, xden = 1; // crossing parameter in (0,1) from side 0
    CrossingKey key;
  };

  explicit GlobalPicture(GlobalWeb web) : web_(std::move(web)) {
    require_compatible(web_);
    build_words();
    build_passes();
    build_crossings();
    trace();
  }

  const GlobalWeb& web() const { return web_; }
  const IdealTriangulation& tri() const { return *web_.triangulation; }

  const std::vector<Pass>& passes() const { return passes_; }
  const std::vector<Cross>& crossings() const { return crossings_; }
  const std::vector<Traveler>& travelers() const { return travelers_; }
  const std::vector<std::vector<int>>& traveler_passes() const { return traveler_passes_; }

  const detail::BoundaryEntry& entry(int tri, int slot, int pos) const {
    return words_[tri][slot].at(pos);
  }
  int word_length(int tri, int slot) const { return static_cast<int>(words_[tri][slot].size()); }
  int pass_at(int edge, int side, int pos) const { return pass_at_[edge][side].at(pos); }

  // Pass ids whose strand leaves the triangle through (edge, side), in
  // word order.  These are the out-strands of that boundary edge.
  std::vector<int> out_passes(int edge, int side) const {
    std::vector<int> out;
    const auto& slots = pass_at_[edge][side];
    for (int pos = 0; pos < static_cast<int>(slots.size()); ++pos) {
      const Pass& p = passes_[slots[pos]];
      if (p.forward == (side == 0)) out.push_back(slots[pos]);
    }
    return out;
  }

  std::optional<SquareFace> find_square_from(int cross_id, int motion) const;

  std::vector<SquareFace> square_faces() const {
    std::vector<SquareFace> out;
    std::set<std::pair<CrossingKey, CrossingKey>> seen;
    for (int cid = 0; cid < static_cast<int>(crossings_.size()); ++cid) {
      for (int motion : {1, 0}) {
        std::optional<SquareFace> sq = find_square_from(cid, motion);
        if (sq && seen.insert({sq->first, sq->second}).second) out.push_back(*sq);
      }
    }
    std::sort(out.begin(), out.end(), [](const SquareFace& a, const SquareFace& b) {
      return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    });
    return out;
  }

private:
  void build_words() {
    const GlobalWeb& w = web_;
    const int nt = tri().num_triangles();
    words_.resize(nt);
    for (int t = 0; t < nt; ++t)
      for (int slot = 0; slot < 3; ++slot)
        words_[t][slot] = detail::boundary_entries(w.webs[t], slot);
  }

  // The ladder matching: align the two side words (side 1 reversed, since
  // gluing reverses direction), then join the k-th forward strand to the
  // k-th forward slot, and likewise backward.
  void build_passes() {
    const IdealTriangulation& t = tri();
    pass_at_.resize(t.num_edges());
    for (int e = 0; e < t.num_edges(); ++e) {
      const EdgeSide s0 = t.side(e, 0);
      const EdgeSide s1 = t.side(e, 1);
      const auto& w0 = words_[s0.tri][s0.slot];
      const auto& w1 = words_[s1.tri][s1.slot];
      const int len = static_cast<int>(w0.size());
      internal_check(static_cast<int>(w1.size()) == len, "boundary words differ in length");
      pass_at_[e][0].assign(len, -1);
      pass_at_[e][1].assign(len, -1);
      // Aligned position: side 0 as-is, side 1 reversed.
      std::vector<int> fwd0, fwd1, bwd0, bwd1; // raw positions, aligned ascending
      for (int a = 0; a < len; ++a) {
        if (w0[a].dir == StrandDir::out) fwd0.push_back(a); else bwd0.push_back(a);
        const int raw1 = len - 1 - a;
        if (w1[raw1].dir == StrandDir::in) fwd1.push_back(raw1); else bwd1.push_back(raw1);
      }
      internal_check(fwd0.size() == fwd1.size() && bwd0.size() == bwd1.size(),
                     "matching counts disagree on a compatible edge");
      auto add = [&](int raw0, int raw1, bool forward) {
        Pass p;
        p.edge = e;
        p.forward = forward;
        p.pos = {raw0, raw1};
        p.aligned = {raw0, len - 1 - raw1};
        const int id = static_cast<int>(passes_.size());
        passes_.push_back(p);
        pass_at_[e][0][raw0] = id;
        pass_at_[e][1][raw1] = id;
      };
      for (size_t k = 0; k < fwd0.size(); ++k) add(fwd0[k], fwd1[k], true);
      for (size_t k = 0; k < bwd0.size(); ++k) add(bwd0[k], bwd1[k], false);
    }
  }

  // A forward and a backward pass cross exactly when their aligned
  // endpoints interleave.  The crossing parameter is the coordinate of the
  // intersection of the two straight chords, exact over the integers.
  void build_crossings() {
    const IdealTriangulation& t = tri();
    for (int e = 0; e < t.num_edges(); ++e) {
      std::vector<int> fwd, bwd;
      for (int pos = 0; pos < static_cast<int>(pass_at_[e][0].size()); ++pos) {
        const int id = pass_at_[e][0][pos];
        if (passes_[id].pos[0] != pos) continue; // visit each pass once
        (passes_[id].forward ? fwd : bwd).push_back(id);
      }
      for (int f : fwd) {
        for (int b : bwd) {
          const long long a0 = passes_[f].aligned[0], a1 = passes_[f].aligned[1];
          const long long b0 = passes_[b].aligned[0], b1 = passes_[b].aligned[1];
          const long long d0 = a0 - b0, d1 = a1 - b1;
          if ((d0 > 0) == (d1 > 0)) continue; // no interleave, no crossing
          Cross c;
          c.fwd = f;
          c.bwd = b;
          c.edge = e;
          c.xnum = d0;
          c.xden = d0 - d1;
          if (c.xden < 0) { c.xnum = -c.xnum; c.xden = -c.xden; }
          c.key = CrossingKey{t.edge(e).id, passes_[f].pos[0], passes_[b].pos[0]};
          crossings_.push_back(c);
        }
      }
    }
    std::sort(crossings_.begin(), crossings_.end(),
              [](const Cross& a, const Cross& b) { return a.key < b.key; });
    for (int cid = 0; cid < static_cast<int>(crossings_.size()); ++cid) {
      passes_[crossings_[cid].fwd].crossings.push_back(cid);
      passes_[crossings_[cid].bwd].crossings.push_back(cid);
      pair_to_cross_[{crossings_[cid].fwd, crossings_[cid].bwd}] = cid;
    }
    auto by_param = [this](int ca, int cb) {
      const Cross& a = crossings_[ca];
      const Cross& b = crossings_[cb];
      const long long lhs = a.xnum * b.xden, rhs = b.xnum * a.xden;
      if (lhs != rhs) return lhs < rhs;
      return ca < cb; // distinct crossings on one pass never tie, keep order total
    };
    for (Pass& p : passes_) std::sort(p.crossings.begin(), p.crossings.end(), by_param);
  }

  // Follow strands through triangles and biangles.  Arcs run from
  // honeycomb out-attachments to honeycomb in-attachments; everything
  // else closes into loops.
  void trace() {
    const IdealTriangulation& t = tri();
    std::vector<char> visited(passes_.size(), 0);

    auto source_side = [this](int pid) { return passes_[pid].forward ? 0 : 1; };

    // Follow from `start` until the strand ends on a honeycomb (arcs) or
    // returns to `start` (loops).
    auto follow = [&](int start, bool loop) {
      Traveler tr;
      tr.id = static_cast<int>(travelers_.size());
      tr.is_loop = loop;
      std::vector<int> pass_list;
      int pid = start;
      while (true) {
        internal_check(!visited[pid], "pass traversed twice");
        visited[pid] = 1;
        const Pass& p = passes_[pid];
        const int src = source_side(pid), dst = 1 - src;
        tr.route.push_back({p.edge, src, p.pos[src]});
        tr.route.push_back({p.edge, dst, p.pos[dst]});
        passes_[pid].traveler = tr.id;
        passes_[pid].index_in_traveler = static_cast<int>(pass_list.size());
        pass_list.push_back(pid);
        const EdgeSide arrival = t.side(p.edge, dst);
        const detail::BoundaryEntry& en = words_[arrival.tri][arrival.slot].at(p.pos[dst]);
        if (en.is_honeycomb) {
          internal_check(!loop && en.dir == StrandDir::in, "strand ends on a honeycomb mid-loop");
          break;
        }
        // Continue through the corner arc to its other endpoint.
        const TriangleWeb& local = web_.webs[arrival.tri];
        const bool arrived_on_left = ((en.corner + 2) % 3 == arrival.slot);
        const auto [slot2, pos2] = detail::arc_endpoint(local, en.corner, en.letter, !arrived_on_left);
        const int next = pass_at_[t.edge_at(arrival.tri, slot2)][t.side_at(arrival.tri, slot2)].at(pos2);
        if (loop && next == start) break;
        internal_check(!(visited[next] && !(loop && next == start)), "strand chain collision");
        pid = next;
      }
      if (loop) {
        // Distinguished entry: lexicographically least (edge id, side, position).
        int best = 0;
        for (int i = 1; i < static_cast<int>(tr.route.size()); ++i) {
          const RouteEntry& a = tr.route[i];
          const RouteEntry& b = tr.route[best];
          if (std::tie(t.edge(a.edge).id, a.side, a.position) <
              std::tie(t.edge(b.edge).id, b.side, b.position))
            best = i;
        }
        tr.base_index = best;
      }
      travelers_.push_back(tr);
      traveler_passes_.push_back(std::move(pass_list));
    };

    // Arcs first: scan honeycomb out-attachments in deterministic order.
    for (int tr = 0; tr < t.num_triangles(); ++tr) {
      for (int slot = 0; slot < 3; ++slot) {
        const auto& word = words_[tr][slot];
        for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
          if (!word[pos].is_honeycomb || word[pos].dir != StrandDir::out) continue;
          const int pid = pass_at_[t.edge_at(tr, slot)][t.side_at(tr, slot)].at(pos);
          internal_check(!visited[pid], "honeycomb attachment already traced");
          follow(pid, false);
        }
      }
    }
    for (int pid = 0; pid < static_cast<int>(passes_.size()); ++pid)
      if (!visited[pid]) follow(pid, true);
  }

  // No crossings on `pass` strictly beyond crossing `cid` toward side `motion`.
  bool clear_beyond(int pass, int cid, int motion) const {
    const Cross& c = crossings_[cid];
    for (int other : passes_[pass].crossings) {
      if (other == cid) continue;
      const Cross& o = crossings_[other];
      const long long lhs = o.xnum * c.xden, rhs = c.xnum * o.xden;
      if (motion == 1 ? lhs > rhs : lhs < rhs) return false;
    }
    return true;
  }

  // No crossings on `pass` strictly between the `entry_side` end and crossing `cid`.
  bool clear_before(int pass, int cid, int entry_side) const {
    const Cross& c = crossings_[cid];
    for (int other : passes_[pass].crossings) {
      if (other == cid) continue;
      const Cross& o = crossings_[other];
      const long long lhs = o.xnum * c.xden, rhs = c.xnum * o.xden;
      if (entry_side == 0 ? lhs < rhs : lhs > rhs) return false;
    }
    return true;
  }

  int mutual_crossing(int pa, int pb) const {
    const int f = passes_[pa].forward ? pa : pb;
    const int b = passes_[pa].forward ? pb : pa;
    if (passes_[f].forward == passes_[b].forward) return -1;
    auto it = pair_to_cross_.find({f, b});
    return it == pair_to_cross_.end() ? -1 : it->second;
  }

  GlobalWeb web_;
  std::vector<std::array<std::vector<detail::BoundaryEntry>, 3>> words_;
  std::vector<Pass> passes_;
  std::vector<std::array<std::vector<int>, 2>> pass_at_;
  std::vector<Cross> crossings_;
  std::map<std::pair<int, int>, int> pair_to_cross_;
  std::vector<Traveler> travelers_;
  std::vector<std::vector<int>> traveler_passes_;
};

// Walk the two strands leaving crossing `cross_id` toward side `motion`
// of its biangle.  They bound a square face exactly when they stay
// adjacent through every intermediate edge and triangle (as parallel
// oppositely-oriented corner arcs) and next cross each other again.
inline std::optional<SquareFace> GlobalPicture::find_square_from(int cross_id, int motion) const {
  const Cross& start = crossings_[cross_id];
  if (!clear_beyond(start.fwd, cross_id, motion)) return std::nullopt;
  if (!clear_beyond(start.bwd, cross_id, motion)) return std::nullopt;

  const IdealTriangulation& t = tri();
  int edge = start.edge;
  int side = motion;
  int pos_a = passes_[start.fwd].pos[motion];
  int pos_b = passes_[start.bwd].pos[motion];
  std::vector<CornerSwap> swaps;
  std::set<std::pair<int, int>> seen_states;

  while (true) {
    if (std::abs(pos_a - pos_b) != 1) return std::nullopt;
    const EdgeSide at = t.side(edge, side);
    const detail::BoundaryEntry& ea = words_[at.tri][at.slot].at(pos_a);
    const detail::BoundaryEntry& eb = words_[at.tri][at.slot].at(pos_b);
    if (ea.is_honeycomb || eb.is_honeycomb) return std::nullopt;
    if (ea.corner != eb.corner) return std::nullopt;
    if (std::abs(ea.letter - eb.letter) != 1) return std::nullopt;
    const TriangleWeb& local = web_.webs[at.tri];
    if (local.corners[ea.corner][ea.letter] == local.corners[eb.corner][eb.letter])
      return std::nullopt; // equally-oriented arcs never bound a square
    swaps.push_back({at.tri, ea.corner, std::min(ea.letter, eb.letter)});

    const bool a_on_left = ((ea.corner + 2) % 3 == at.slot);
    const auto [slot_a, next_pos_a] = detail::arc_endpoint(local, ea.corner, ea.letter, !a_on_left);
    const auto [slot_b, next_pos_b] = detail::arc_endpoint(local, eb.corner, eb.letter, !a_on_left);
    internal_check(slot_a == slot_b, "corner arcs exit through different slots");
    internal_check(std::abs(next_pos_a - next_pos_b) == 1, "adjacent arcs exit non-adjacently");

    edge = t.edge_at(at.tri, slot_a);
    side = t.side_at(at.tri, slot_a);
    const int pa = pass_at_[edge][side].at(next_pos_a);
    const int pb = pass_at_[edge][side].at(next_pos_b);
    if (!seen_states.insert({pa, side}).second) return std::nullopt;

    const int q = mutual_crossing(pa, pb);
    if (q >= 0) {
      if (!clear_before(pa, q, side)) return std::nullopt;
      if (!clear_before(pb, q, side)) return std::nullopt;
      if (q == cross_id) return std::nullopt; // corridor closed onto its own crossing
      SquareFace sq;
      const CrossingKey& ka = crossings_[cross_id].key;
      const CrossingKey& kb = crossings_[q].key;
      sq.first = std::min(ka, kb);
      sq.second = std::max(ka, kb);
      sq.swaps = std::move(swaps);
      return sq;
    }
    if (!passes_[pa].crossings.empty()) return std::nullopt;
    if (!passes_[pb].crossings.empty()) return std::nullopt;
    const int far = 1 - side;
    pos_a = passes_[pa].pos[far];
    pos_b = passes_[pb].pos[far];
    side = far;
  }
}

inline std::vector<Crossing> biangle_crossings(const GlobalPicture& p, int edge) {
  std::vector<Crossing> out;
  for (const GlobalPicture::Cross& c : p.crossings()) {
    if (c.edge != edge) continue;
    Crossing x;
    x.key = c.key;
    x.fwd_traveler = p.passes()[c.fwd].traveler;
    x.fwd_pass_index = p.passes()[c.fwd].index_in_traveler;
    x.bwd_traveler = p.passes()[c.bwd].traveler;
    x.bwd_pass_index = p.passes()[c.bwd].index_in_traveler;
    x.fwd_pos = p.passes()[c.fwd].pos;
    x.bwd_pos = p.passes()[c.bwd].pos;
    out.push_back(x);
  }
  return out;
}

inline std::vector<Crossing> biangle_crossings(const GlobalWeb& w, int edge) {
  return biangle_crossings(GlobalPicture(w), edge);
}

inline std::vector<Crossing> biangle_crossings(const GlobalWeb& w, const std::string& edge_id) {
  return biangle_crossings(w, w.triangulation->edge_index(edge_id));
}

inline std::vector<Traveler> trace_travelers(const GlobalWeb& w) {
  return GlobalPicture(w).travelers();
}

inline int total_crossings(const GlobalWeb& w) {
  return static_cast<int>(GlobalPicture(w).crossings().size());
}

// Assemble the global coordinate vector from the per-triangle coordinates.
// Across every edge the left value from one side must equal the right
// value from the other; a violation would mean a convention bug, not bad
// input, so it is an internal check.
inline GlobalConePoint global_coords(const GlobalWeb& w) {
  require_compatible(w);
  const IdealTriangulation& t = *w.triangulation;
  const DotIndexing idx = dot_indexing(t);
  std::vector<LocalConePoint> local(t.num_triangles());
  for (int k = 0; k < t.num_triangles(); ++k) local[k] = local_coords(w.webs[k]);
  GlobalConePoint out(idx.size(), 0);
  for (int e = 0; e < t.num_edges(); ++e) {
    const EdgeSide s0 = t.side(e, 0);
    const EdgeSide s1 = t.side(e, 1);
    const long long left0 = local[s0.tri].edge(s0.slot, 0);
    const long long right0 = local[s0.tri].edge(s0.slot, 1);
    const long long left1 = local[s1.tri].edge(s1.slot, 0);
    const long long right1 = local[s1.tri].edge(s1.slot, 1);
    internal_check(left0 == right1 && right0 == left1, "gluing identity violated");
    out[idx.edge_dot(e, 0)] = left0;
    out[idx.edge_dot(e, 1)] = right0;
  }
  for (int k = 0; k < t.num_triangles(); ++k) out[idx.triangle_dot(k)] = local[k].triangle();
  internal_check(in_global_cone(out, t, idx), "web coordinates left the global cone");
  return out;
}

inline std::vector<SquareFace> find_square_faces(const GlobalWeb& w) {
  return GlobalPicture(w).square_faces();
}

inline bool is_nonelliptic(const GlobalWeb& w) {
  return find_square_faces(w).empty();
}

// Resolve one square face: swap the two parallel arcs in every
// intermediate triangle.  Removes exactly the square's two crossings and
// leaves the coordinates unchanged.
inline GlobalWeb resolve_square(const GlobalWeb& w, const SquareFace& sq) {
  const std::vector<SquareFace> present = find_square_faces(w);
  const SquareFace* found = nullptr;
  for (const SquareFace& cand : present)
    if (cand == sq) { found = &cand; break; }
  if (!found) throw StaleSquare("square face is not present in this web");

  const int before = total_crossings(w);
  const GlobalConePoint coords_before = global_coords(w);
  GlobalWeb out = w;
  for (const CornerSwap& s : found->swaps)
    out.webs[s.tri] = corner_transpose(out.webs[s.tri], s.corner, s.position);
  internal_check(check_compatible(out), "square resolution broke compatibility");
  internal_check(total_crossings(out) == before - 2,
                 "square resolution must remove exactly two crossings");
  internal_check(global_coords(out) == coords_before, "square resolution changed coordinates");
  return out;
}

// The inverse map: decompose each triangle's 7-tuple, glue canonically,
// then remove square faces until none remain (the first square in
// deterministic order at each step).
inline GlobalWeb reconstruct(const GlobalConePoint& c,
                             std::shared_ptr<const IdealTriangulation> t) {
  const DotIndexing idx = dot_indexing(*t);
  if (!in_global_cone(c, *t, idx))
    throw NotInCone("coordinate vector is outside the global Knutson-Tao cone");
  GlobalWeb w;
  w.triangulation = t;
  for (int k = 0; k < t->num_triangles(); ++k)
    w.webs.push_back(canonical_from_counts(decompose_local(local_point_at(c, *t, idx, k))));
  internal_check(check_compatible(w), "decomposed local webs must be compatible");
  while (true) {
    const std::vector<SquareFace> squares = find_square_faces(w);
    if (squares.empty()) break;
    w = resolve_square(w, squares.front());
  }
  internal_check(global_coords(w) == c, "reconstruction does not reproduce the coordinates");
  return w;
}

} // namespace webcoord
