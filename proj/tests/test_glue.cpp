#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace webcoord;
using webcoord::testing::honeycomb_pair_web;
using webcoord::testing::make_tweb;
using webcoord::testing::torus;
using webcoord::testing::torus_loop_web;
using webcoord::testing::two_loop_free_web;
using webcoord::testing::two_loop_square_web;

namespace {

GlobalWeb torus_web(const TriangleWeb& t0, const TriangleWeb& t1) {
  GlobalWeb w = GlobalWeb::empty(torus());
  w.webs[0] = t0;
  w.webs[1] = t1;
  return w;
}

std::vector<std::pair<int, int>> route_edges(const Traveler& tr) {
  std::vector<std::pair<int, int>> out;
  for (const RouteEntry& e : tr.route) out.emplace_back(e.edge, e.side);
  return out;
}

TEST(Glue, Compatibility) {
  EXPECT_TRUE(check_compatible(torus_loop_web()));
  EXPECT_TRUE(check_compatible(GlobalWeb::empty(torus())));
  EXPECT_FALSE(check_compatible(torus_web(make_tweb("R", "", ""), make_tweb("", "", ""))));
  EXPECT_THROW(require_compatible(torus_web(make_tweb("R", "", ""), make_tweb("", "", ""))),
               IncompatibleWeb);
}

TEST(Glue, CrossingsTorusLoop) {
  const GlobalWeb w = torus_loop_web();
  for (const char* e : {"a", "b", "c"}) EXPECT_TRUE(biangle_crossings(w, e).empty()) << e;
}

TEST(Glue, SameDirectionStrandsNeverCross) {
  const GlobalWeb w = honeycomb_pair_web();
  for (const char* e : {"a", "b", "c"}) EXPECT_TRUE(biangle_crossings(w, e).empty()) << e;
}

TEST(Glue, CrossingsTwoLoopSquare) {
  const GlobalWeb w = two_loop_square_web();
  EXPECT_TRUE(biangle_crossings(w, "a").empty());
  EXPECT_EQ(biangle_crossings(w, "b").size(), 1u);
  EXPECT_EQ(biangle_crossings(w, "c").size(), 1u);
  EXPECT_EQ(total_crossings(w), 2);
  // The square-free orderings of the same contents have no crossings.
  EXPECT_EQ(total_crossings(two_loop_free_web()), 0);
  EXPECT_EQ(total_crossings(torus_web(make_tweb("LR", "", ""), make_tweb("LR", "", ""))), 0);
}

TEST(Glue, CrossingOppositeOrientation) {
  const GlobalWeb w = two_loop_square_web();
  for (const Crossing& c : biangle_crossings(w, "b")) {
    EXPECT_NE(c.fwd_traveler, -1);
    EXPECT_NE(c.bwd_traveler, -1);
    EXPECT_NE(c.fwd_traveler, c.bwd_traveler); // two distinct loops here
  }
}

TEST(Glue, TraceTorusLoop) {
  const std::vector<Traveler> ts = trace_travelers(torus_loop_web());
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_TRUE(ts[0].is_loop);
  ASSERT_EQ(ts[0].route.size(), 4u);
  const auto t = torus();
  const int b = t->edge_index("b"), c = t->edge_index("c");
  // Leaves T0 through b, enters T1, leaves T1 through c, enters T0.
  const std::vector<std::pair<int, int>> expect = {{b, 0}, {b, 1}, {c, 1}, {c, 0}};
  EXPECT_EQ(route_edges(ts[0]), expect);
}

TEST(Glue, TraceHoneycombPair) {
  const std::vector<Traveler> ts = trace_travelers(honeycomb_pair_web());
  ASSERT_EQ(ts.size(), 3u);
  for (const Traveler& tr : ts) {
    EXPECT_FALSE(tr.is_loop);
    EXPECT_EQ(tr.route.size(), 2u);
  }
}

TEST(Glue, TraceEmpty) {
  EXPECT_TRUE(trace_travelers(GlobalWeb::empty(torus())).empty());
}

TEST(Glue, GlobalCoordsExamples) {
  EXPECT_EQ(global_coords(torus_loop_web()),
            (GlobalConePoint{0, 0, 1, 2, 2, 1, 1, 2}));
  EXPECT_EQ(global_coords(GlobalWeb::empty(torus())), GlobalConePoint(8, 0));
  EXPECT_EQ(global_coords(honeycomb_pair_web()),
            (GlobalConePoint{1, 2, 1, 2, 1, 2, 3, 3}));
}

TEST(Glue, SquareFaces) {
  EXPECT_TRUE(find_square_faces(torus_loop_web()).empty());
  EXPECT_TRUE(find_square_faces(GlobalWeb::empty(torus())).empty());
  const std::vector<SquareFace> squares = find_square_faces(two_loop_square_web());
  ASSERT_EQ(squares.size(), 1u);
  EXPECT_EQ(squares[0].swaps.size(), 1u);
}

TEST(Glue, ResolveSquare) {
  const GlobalWeb w = two_loop_square_web();
  const std::vector<SquareFace> squares = find_square_faces(w);
  ASSERT_EQ(squares.size(), 1u);
  const GlobalWeb resolved = resolve_square(w, squares[0]);
  EXPECT_EQ(total_crossings(resolved), 0);
  EXPECT_EQ(global_coords(resolved), global_coords(w));
  // Exactly one triangle's corner word was transposed.
  const int changed = (resolved.webs[0] == w.webs[0] ? 0 : 1) +
                      (resolved.webs[1] == w.webs[1] ? 0 : 1);
  EXPECT_EQ(changed, 1);
  EXPECT_EQ(content_of(resolved.webs[0]), content_of(w.webs[0]));
  EXPECT_EQ(content_of(resolved.webs[1]), content_of(w.webs[1]));
  // The square is gone afterwards: resolving again is an error.
  EXPECT_THROW(resolve_square(resolved, squares[0]), StaleSquare);
}

TEST(Glue, IsNonelliptic) {
  EXPECT_TRUE(is_nonelliptic(torus_loop_web()));
  EXPECT_FALSE(is_nonelliptic(two_loop_square_web()));
  EXPECT_TRUE(is_nonelliptic(GlobalWeb::empty(torus())));
}

TEST(Glue, ReconstructExamples) {
  const auto t = torus();
  {
    const GlobalWeb w = reconstruct({0, 0, 1, 2, 2, 1, 1, 2}, t);
    EXPECT_TRUE(is_nonelliptic(w));
    EXPECT_EQ(global_coords(w), (GlobalConePoint{0, 0, 1, 2, 2, 1, 1, 2}));
    EXPECT_NO_THROW(fellow_traveler_check(w, torus_loop_web()));
  }
  {
    const GlobalWeb w = reconstruct(GlobalConePoint(8, 0), t);
    EXPECT_EQ(w, GlobalWeb::empty(t));
  }
  {
    const GlobalWeb w = reconstruct({1, 2, 1, 2, 1, 2, 3, 3}, t);
    EXPECT_EQ(w.webs[0].honeycomb, (Honeycomb{HoneycombDir::out, 1}));
    EXPECT_EQ(w.webs[1].honeycomb, (Honeycomb{HoneycombDir::in, 1}));
    EXPECT_EQ(total_crossings(w), 0);
  }
  EXPECT_THROW(reconstruct({1, 0, 0, 0, 0, 0, 0, 0}, t), NotInCone);
}

TEST(Glue, MoveInvarianceOfCoords) {
  // Apply every available transposition at every reachable ordering depth 2.
  const auto t = torus();
  const DotIndexing idx = dot_indexing(*t);
  int tested = 0;
  enumerate_cone(*t, 4, [&](const GlobalConePoint& c) {
    GlobalWeb base;
    base.triangulation = t;
    for (int k = 0; k < t->num_triangles(); ++k)
      base.webs.push_back(canonical_from_counts(decompose_local(local_point_at(c, *t, idx, k))));
    std::vector<GlobalWeb> frontier{base};
    for (int depth = 0; depth < 2; ++depth) {
      std::vector<GlobalWeb> next;
      for (const GlobalWeb& w : frontier) {
        for (size_t k = 0; k < w.webs.size(); ++k) {
          for (int corner = 0; corner < 3; ++corner) {
            const std::string& word = w.webs[k].corners[corner];
            for (int i = 0; i + 1 < static_cast<int>(word.size()); ++i) {
              if (word[i] == word[i + 1]) continue;
              GlobalWeb moved = w;
              moved.webs[k] = corner_transpose(moved.webs[k], corner, i);
              EXPECT_EQ(global_coords(moved), c);
              ++tested;
              next.push_back(std::move(moved));
            }
          }
        }
      }
      frontier = std::move(next);
    }
  });
  EXPECT_GT(tested, 10);
}

TEST(Glue, GluingIdentityOnEnumeratedWebs) {
  const auto t = torus();
  const DotIndexing idx = dot_indexing(*t);
  enumerate_cone(*t, 3, [&](const GlobalConePoint& c) {
    const GlobalWeb w = reconstruct(c, t);
    for (int e = 0; e < t->num_edges(); ++e) {
      const EdgeSide s0 = t->side(e, 0);
      const EdgeSide s1 = t->side(e, 1);
      const LocalConePoint c0 = local_coords(w.webs[s0.tri]);
      const LocalConePoint c1 = local_coords(w.webs[s1.tri]);
      EXPECT_EQ(c0.edge(s0.slot, 0), c1.edge(s1.slot, 1));
      EXPECT_EQ(c0.edge(s0.slot, 1), c1.edge(s1.slot, 0));
    }
  });
}

TEST(Glue, ResolveAccountingOnSampledWebs) {
  // Every resolution drops the crossing count by exactly 2 and preserves
  // coordinates; this is also asserted inside resolve_square.
  std::mt19937 rng(37);
  const auto t = torus();
  const DotIndexing idx = dot_indexing(*t);
  int resolutions = 0;
  enumerate_cone(*t, 3, [&](const GlobalConePoint& c) {
    GlobalWeb w;
    w.triangulation = t;
    for (int k = 0; k < t->num_triangles(); ++k)
      w.webs.push_back(
          shuffled_web(decompose_local(local_point_at(c, *t, idx, k)), rng));
    while (true) {
      const std::vector<SquareFace> squares = find_square_faces(w);
      if (squares.empty()) break;
      const int before = total_crossings(w);
      w = resolve_square(w, squares[rng() % squares.size()]);
      EXPECT_EQ(total_crossings(w), before - 2);
      EXPECT_EQ(global_coords(w), c);
      ++resolutions;
    }
    EXPECT_TRUE(is_nonelliptic(w));
  });
  EXPECT_GT(resolutions, 0);
}

TEST(Glue, NoUturnsInRoutes) {
  std::mt19937 rng(41);
  const auto t = torus();
  const DotIndexing idx = dot_indexing(*t);
  enumerate_cone(*t, 3, [&](const GlobalConePoint& c) {
    GlobalWeb w;
    w.triangulation = t;
    for (int k = 0; k < t->num_triangles(); ++k)
      w.webs.push_back(
          shuffled_web(decompose_local(local_point_at(c, *t, idx, k)), rng));
    for (const Traveler& tr : trace_travelers(w)) {
      const size_t n = tr.route.size();
      for (size_t i = 0; i < n; ++i) {
        const RouteEntry& cur = tr.route[i];
        const RouteEntry& nxt = tr.route[(i + 1) % n];
        if (!tr.is_loop && i + 1 == n) break;
        const bool same_half_edge = cur.edge == nxt.edge && cur.side == nxt.side;
        EXPECT_FALSE(same_half_edge);
      }
    }
  });
}

} // namespace
