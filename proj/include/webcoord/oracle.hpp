#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "webcoord/cone.hpp"
#include "webcoord/errors.hpp"
#include "webcoord/glue.hpp"

namespace webcoord {

// Executable checks for the structural claims: the fellow-traveler
// correspondence, both roundtrips of the coordinate bijection, confluence
// of square removal, and bounded enumeration of the global cone.

struct TravelerCorrespondence {
  std::vector<int> to_second; // traveler id in the first web -> id in the second
};

namespace detail {

inline std::vector<std::pair<int, int>> route_edges(const Traveler& tr) {
  std::vector<std::pair<int, int>> out;
  out.reserve(tr.route.size());
  for (const RouteEntry& e : tr.route) out.emplace_back(e.edge, e.side);
  return out;
}

inline bool routes_equal_rotated(const std::vector<std::pair<int, int>>& a, int start_a,
                                 const std::vector<std::pair<int, int>>& b, int start_b) {
  if (a.size() != b.size()) return false;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    if (a[(start_a + i) % n] != b[(start_b + i) % n]) return false;
  return true;
}

} // namespace detail

// Match, on every edge, the traveler through the i-th out-strand of one
// picture to that of the other; verify the matching is well-defined and
// that matched travelers have equal kinds and equal routes.  A conflict
// would falsify the correspondence lemma, so it surfaces as an internal
// failure rather than a result.
inline TravelerCorrespondence fellow_traveler_check(const GlobalPicture& p,
                                                    const GlobalPicture& q) {
  if (!(p.tri() == q.tri())) throw ContentMismatch("webs live on different triangulations");
  for (int t = 0; t < p.tri().num_triangles(); ++t)
    if (!(content_of(p.web().webs[t]) == content_of(q.web().webs[t])))
      throw ContentMismatch("per-triangle contents differ at " + p.tri().triangle_id(t));

  const int n = static_cast<int>(p.travelers().size());
  internal_check(static_cast<int>(q.travelers().size()) == n,
                 "traveler counts differ for equal contents");
  std::vector<int> to_second(n, -1), to_first(n, -1);
  std::vector<std::pair<int, int>> anchor(n, {-1, -1}); // pass ids in (p, q)
  for (int e = 0; e < p.tri().num_edges(); ++e) {
    for (int side = 0; side < 2; ++side) {
      const std::vector<int> outs_p = p.out_passes(e, side);
      const std::vector<int> outs_q = q.out_passes(e, side);
      internal_check(outs_p.size() == outs_q.size(), "out-strand counts differ across an edge");
      for (size_t i = 0; i < outs_p.size(); ++i) {
        const int a = p.passes()[outs_p[i]].traveler;
        const int b = q.passes()[outs_q[i]].traveler;
        if (to_second[a] == -1 && to_first[b] == -1) {
          to_second[a] = b;
          to_first[b] = a;
          anchor[a] = {outs_p[i], outs_q[i]};
        } else if (to_second[a] != b || to_first[b] != a) {
          throw InternalCheckFailure("traveler correspondence conflict on edge " +
                                     p.tri().edge(e).id);
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    internal_check(to_second[a] != -1, "traveler without an out-strand anchor");
    const Traveler& ta = p.travelers()[a];
    const Traveler& tb = q.travelers()[to_second[a]];
    if (ta.is_loop != tb.is_loop)
      throw InternalCheckFailure("corresponding travelers have different kinds");
    const auto ra = detail::route_edges(ta);
    const auto rb = detail::route_edges(tb);
    // Align both routes at the anchor strand's crossing of its edge.
    const int ia = 2 * p.passes()[anchor[a].first].index_in_traveler;
    const int ib = 2 * q.passes()[anchor[a].second].index_in_traveler;
    const bool equal = ta.is_loop ? detail::routes_equal_rotated(ra, ia, rb, ib)
                                  : (ra == rb);
    if (!equal) throw InternalCheckFailure("corresponding travelers have different routes");
  }
  TravelerCorrespondence corr;
  corr.to_second = std::move(to_second);
  return corr;
}

inline TravelerCorrespondence fellow_traveler_check(const GlobalWeb& w, const GlobalWeb& v) {
  return fellow_traveler_check(GlobalPicture(w), GlobalPicture(v));
}

inline bool roundtrip_cone(const GlobalConePoint& c,
                           std::shared_ptr<const IdealTriangulation> t) {
  return global_coords(reconstruct(c, std::move(t))) == c;
}

// Reconstruct from this web's own coordinates and certify the result is
// the same parallel-equivalence class: fellow-traveling routes plus
// matching crossing counts between corresponding traveler pairs.  Counts
// are not compared per biangle: a corner arc swap carries a crossing into
// the adjacent biangle, so only the pair totals are invariants.
inline bool roundtrip_web(const GlobalWeb& w) {
  require_compatible(w);
  if (!is_nonelliptic(w)) throw EllipticInput("roundtrip_web requires a square-free web");
  const GlobalPicture p(w);
  const GlobalWeb back = reconstruct(global_coords(w), w.triangulation);
  const GlobalPicture q(back);
  TravelerCorrespondence corr;
  try {
    corr = fellow_traveler_check(p, q);
  } catch (const InternalCheckFailure&) {
    return false;
  } catch (const ContentMismatch&) {
    return false;
  }
  auto census = [](const GlobalPicture& pic, const std::vector<int>* rename) {
    std::map<std::pair<int, int>, int> m;
    for (const GlobalPicture::Cross& c : pic.crossings()) {
      int a = pic.passes()[c.fwd].traveler;
      int b = pic.passes()[c.bwd].traveler;
      if (rename) { a = (*rename)[a]; b = (*rename)[b]; }
      m[{std::min(a, b), std::max(a, b)}] += 1;
    }
    return m;
  };
  return census(p, &corr.to_second) == census(q, nullptr);
}

inline std::string state_key(const GlobalWeb& w) {
  std::string key;
  for (const TriangleWeb& t : w.webs) {
    key += std::to_string(static_cast<int>(t.honeycomb.dir));
    key += ':';
    key += std::to_string(t.honeycomb.n);
    for (const std::string& word : t.corners) {
      key += '|';
      key += word;
    }
    key += ';';
  }
  return key;
}

// Run the square-removal loop under every resolution order (exhaustively
// when at most 6 squares are present initially, otherwise 20 sampled
// orders with seed 0) and certify that all terminal webs agree: equal
// coordinates and pairwise fellow-traveling.
inline bool confluence_check(const GlobalWeb& w) {
  require_compatible(w);
  std::vector<GlobalWeb> terminals;
  std::set<std::string> terminal_keys;
  auto record_terminal = [&](const GlobalWeb& v) {
    if (terminal_keys.insert(state_key(v)).second) terminals.push_back(v);
  };

  const std::vector<SquareFace> initial = find_square_faces(w);
  if (initial.size() <= 6) {
    std::set<std::string> visited;
    std::function<void(const GlobalWeb&)> explore = [&](const GlobalWeb& v) {
      if (!visited.insert(state_key(v)).second) return;
      const std::vector<SquareFace> squares = find_square_faces(v);
      if (squares.empty()) {
        record_terminal(v);
        return;
      }
      for (const SquareFace& sq : squares) explore(resolve_square(v, sq));
    };
    explore(w);
  } else {
    std::mt19937 rng(0);
    for (int run = 0; run < 20; ++run) {
      GlobalWeb v = w;
      while (true) {
        const std::vector<SquareFace> squares = find_square_faces(v);
        if (squares.empty()) break;
        v = resolve_square(v, squares[rng() % squares.size()]);
      }
      record_terminal(v);
    }
  }

  if (terminals.size() <= 1) return true;
  const GlobalConePoint expect = global_coords(terminals.front());
  for (const GlobalWeb& v : terminals)
    if (!(global_coords(v) == expect)) return false;
  std::vector<GlobalPicture> pics;
  pics.reserve(terminals.size());
  for (const GlobalWeb& v : terminals) pics.emplace_back(v);
  for (size_t i = 0; i < pics.size(); ++i) {
    for (size_t j = i + 1; j < pics.size(); ++j) {
      try {
        fellow_traveler_check(pics[i], pics[j]);
      } catch (const InternalCheckFailure&) {
        return false;
      } catch (const ContentMismatch&) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {

// Shared core of the cone enumerators: depth-first over the dot order
// (hence lexicographic output), rejecting as soon as some triangle's
// completed 7-tuple leaves the local cone.  The first dot is restricted
// to [first_lo, first_hi] so ranges can be split across threads.
inline void enumerate_cone_range(const IdealTriangulation& t, long long bound,
                                 long long first_lo, long long first_hi,
                                 const std::function<void(const GlobalConePoint&)>& yield) {
  const DotIndexing idx = dot_indexing(t);
  const int n = idx.size();
  // Triangles become checkable once their last dot (in index order) is set.
  std::vector<std::vector<int>> complete_at(n);
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    int last = idx.triangle_dot(tri);
    for (int slot = 0; slot < 3; ++slot)
      last = std::max(last, idx.edge_dot(t.edge_at(tri, slot), 1));
    complete_at[last].push_back(tri);
  }
  GlobalConePoint v(n, 0);
  std::function<void(int)> walk = [&](int d) {
    if (d == n) {
      yield(v);
      return;
    }
    const long long lo = (d == 0) ? first_lo : 0;
    const long long hi = (d == 0) ? first_hi : bound;
    for (long long val = lo; val <= hi; ++val) {
      v[d] = val;
      bool ok = true;
      for (int tri : complete_at[d])
        if (!in_local_cone(local_point_at(v, t, idx, tri))) { ok = false; break; }
      if (ok) walk(d + 1);
    }
    v[d] = 0;
  };
  walk(0);
}

} // namespace detail

// Yield exactly the global cone points with every coordinate <= bound, in
// lexicographic order.
inline void enumerate_cone(const IdealTriangulation& t, long long bound,
                           const std::function<void(const GlobalConePoint&)>& yield) {
  if (bound < 0) throw SchemaError("enumeration bound must be non-negative");
  detail::enumerate_cone_range(t, bound, 0, bound, yield);
}

inline std::vector<GlobalConePoint> enumerate_cone(const IdealTriangulation& t, long long bound) {
  std::vector<GlobalConePoint> out;
  enumerate_cone(t, bound, [&](const GlobalConePoint& c) { out.push_back(c); });
  return out;
}

// Same output as enumerate_cone, computed on `jobs` threads by
// partitioning the first coordinate's range and concatenating in order.
inline std::vector<GlobalConePoint> enumerate_cone_parallel(const IdealTriangulation& t,
                                                            long long bound, int jobs) {
  if (jobs < 1) throw SchemaError("--jobs must be at least 1");
  if (bound < 0) throw SchemaError("enumeration bound must be non-negative");
  if (jobs == 1) return enumerate_cone(t, bound);
  const long long values = bound + 1;
  const int workers = static_cast<int>(std::min<long long>(jobs, values));
  std::vector<std::vector<GlobalConePoint>> parts(workers);
  std::vector<std::thread> threads;
  for (int k = 0; k < workers; ++k) {
    threads.emplace_back([&, k] {
      const long long lo = values * k / workers, hi = values * (k + 1) / workers - 1;
      detail::enumerate_cone_range(t, bound, lo, hi,
                                   [&](const GlobalConePoint& c) { parts[k].push_back(c); });
    });
  }
  for (std::thread& th : threads) th.join();
  std::vector<GlobalConePoint> out;
  for (std::vector<GlobalConePoint>& part : parts)
    for (GlobalConePoint& c : part) out.push_back(std::move(c));
  return out;
}

// A uniformly random representative of a content's corner-ambiguity class.
inline TriangleWeb shuffled_web(const LocalWebContent& content, std::mt19937& rng) {
  TriangleWeb w = canonical_from_counts(content);
  for (std::string& word : w.corners) {
    for (int i = static_cast<int>(word.size()) - 1; i > 0; --i)
      std::swap(word[i], word[rng() % (i + 1)]);
  }
  return w;
}

} // namespace webcoord
