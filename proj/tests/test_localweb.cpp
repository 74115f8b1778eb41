#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace webcoord;
using webcoord::testing::gen_h;
using webcoord::testing::gen_l;
using webcoord::testing::gen_r;
using webcoord::testing::make_tweb;

namespace {

LocalConePoint point(std::initializer_list<long long> xs) {
  LocalConePoint c;
  int i = 0;
  for (long long x : xs) c.v[i++] = x;
  return c;
}

TriangleWeb random_web(std::mt19937& rng, int max_count = 4, int max_n = 4) {
  LocalWebContent content;
  for (int k = 0; k < 3; ++k) {
    content.r_arcs[k] = static_cast<int>(rng() % (max_count + 1));
    content.l_arcs[k] = static_cast<int>(rng() % (max_count + 1));
  }
  switch (rng() % 3) {
    case 0: break;
    case 1: content.honeycomb = {HoneycombDir::in, static_cast<int>(1 + rng() % max_n)}; break;
    default: content.honeycomb = {HoneycombDir::out, static_cast<int>(1 + rng() % max_n)}; break;
  }
  return shuffled_web(content, rng);
}

TEST(LocalWeb, GeneratorCoordinates) {
  EXPECT_EQ(gen_r(0), point({0, 0, 1, 2, 2, 1, 1}));
  EXPECT_EQ(gen_l(0), point({0, 0, 2, 1, 1, 2, 2}));
  EXPECT_EQ(gen_r(1), point({2, 1, 0, 0, 1, 2, 1}));
  EXPECT_EQ(gen_l(1), point({1, 2, 0, 0, 2, 1, 2}));
  EXPECT_EQ(gen_r(2), point({1, 2, 2, 1, 0, 0, 1}));
  EXPECT_EQ(gen_l(2), point({2, 1, 1, 2, 0, 0, 2}));
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(gen_h(HoneycombDir::in, n),
              point({2 * n, n, 2 * n, n, 2 * n, n, 3 * n}));
    EXPECT_EQ(gen_h(HoneycombDir::out, n),
              point({n, 2 * n, n, 2 * n, n, 2 * n, 3 * n}));
  }
}

TEST(LocalWeb, CoordExamples) {
  EXPECT_EQ(local_coords(make_tweb("", "", "")), point({0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(local_coords(make_tweb("", "", "", {HoneycombDir::out, 2})),
            point({2, 4, 2, 4, 2, 4, 6}));
}

TEST(LocalWeb, StrandCountExamples) {
  const TriangleWeb h1in = make_tweb("", "", "", {HoneycombDir::in, 1});
  for (int slot = 0; slot < 3; ++slot) {
    EXPECT_EQ(strand_counts(h1in, slot).in_count, 1);
    EXPECT_EQ(strand_counts(h1in, slot).out_count, 0);
  }
  const TriangleWeb r1 = make_tweb("R", "", "");
  EXPECT_EQ(strand_counts(r1, 0).in_count, 0);
  EXPECT_EQ(strand_counts(r1, 0).out_count, 0);
  const TriangleWeb r1l1 = make_tweb("RL", "", "");
  EXPECT_EQ(strand_counts(r1l1, 1).in_count, 1);
  EXPECT_EQ(strand_counts(r1l1, 1).out_count, 1);
}

TEST(LocalWeb, EdgeDotPair) {
  EXPECT_EQ(edge_dot_pair(1, 0), std::make_pair(2LL, 1LL));
  EXPECT_EQ(edge_dot_pair(0, 0), std::make_pair(0LL, 0LL));
  EXPECT_EQ(edge_dot_pair(1, 1), std::make_pair(3LL, 3LL));
}

TEST(LocalWeb, EdgeDotPairInverse) {
  for (long long n_in = 0; n_in <= 6; ++n_in) {
    for (long long n_out = 0; n_out <= 6; ++n_out) {
      const auto [l, r] = edge_dot_pair(n_in, n_out);
      EXPECT_EQ(edge_dot_pair_inverse(l, r), std::make_pair(n_in, n_out));
    }
  }
  EXPECT_THROW(edge_dot_pair_inverse(1, 1), NotRepresentable);
  EXPECT_THROW(edge_dot_pair_inverse(0, 2), NotRepresentable);
  EXPECT_THROW(edge_dot_pair_inverse(-1, -2), NotRepresentable);
}

TEST(LocalWeb, BoundaryWordExamples) {
  const TriangleWeb w1 = make_tweb("R", "", "", {HoneycombDir::out, 1});
  const StrandWord s1 = boundary_word(w1, 1);
  ASSERT_EQ(s1.size(), 2u);
  EXPECT_EQ(s1[0], StrandDir::out); // honeycomb strand
  EXPECT_EQ(s1[1], StrandDir::out); // R_1 exits at the right corner

  EXPECT_TRUE(boundary_word(make_tweb("", "", ""), 0).empty());

  const StrandWord s2 = boundary_word(make_tweb("RL", "", ""), 1);
  ASSERT_EQ(s2.size(), 2u);
  EXPECT_EQ(s2[0], StrandDir::in);  // L_1 entry, outer arc leftmost
  EXPECT_EQ(s2[1], StrandDir::out); // R_1 exit, inner arc rightmost
}

TEST(LocalWeb, CanonicalFromCounts) {
  LocalWebContent c;
  c.r_arcs[0] = 1;
  c.l_arcs[0] = 1;
  EXPECT_EQ(canonical_from_counts(c).corners[0], "RL");

  LocalWebContent pure;
  pure.honeycomb = {HoneycombDir::in, 3};
  const TriangleWeb w = canonical_from_counts(pure);
  EXPECT_EQ(w.corners[0], "");
  EXPECT_EQ(w.corners[1], "");
  EXPECT_EQ(w.corners[2], "");

  LocalWebContent rr;
  rr.r_arcs[1] = 2;
  EXPECT_EQ(canonical_from_counts(rr).corners[1], "RR");
}

TEST(LocalWeb, CornerTranspose) {
  const TriangleWeb w = make_tweb("RL", "", "");
  const TriangleWeb swapped = corner_transpose(w, 0, 0);
  EXPECT_EQ(swapped.corners[0], "LR");
  EXPECT_EQ(corner_transpose(swapped, 0, 0), w);
  EXPECT_EQ(content_of(swapped), content_of(w));
  EXPECT_THROW(corner_transpose(make_tweb("RR", "", ""), 0, 0), SchemaError);
  EXPECT_THROW(corner_transpose(w, 0, 5), SchemaError);
}

TEST(LocalWeb, CoordsInvariantUnderTransposes) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    TriangleWeb w = random_web(rng);
    const LocalConePoint base = local_coords(w);
    for (int moves = 0; moves < 8; ++moves) {
      const int corner = static_cast<int>(rng() % 3);
      const std::string& word = w.corners[corner];
      std::vector<int> spots;
      for (int i = 0; i + 1 < static_cast<int>(word.size()); ++i)
        if (word[i] != word[i + 1]) spots.push_back(i);
      if (spots.empty()) continue;
      w = corner_transpose(w, corner, spots[rng() % spots.size()]);
      EXPECT_EQ(local_coords(w), base);
    }
  }
}

TEST(LocalWeb, Additivity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const TriangleWeb a = random_web(rng);
    TriangleWeb b = random_web(rng);
    b.honeycomb = {}; // at most one honeycomb in a disjoint union
    TriangleWeb both = a;
    for (int k = 0; k < 3; ++k) both.corners[k] += b.corners[k];
    EXPECT_EQ(local_coords(both), local_coords(a) + local_coords(b));
  }
}

TEST(LocalWeb, RotationalSymmetry) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const TriangleWeb w = random_web(rng);
    TriangleWeb rotated = w;
    // Relabel corners and edges k -> k+1.
    rotated.corners = {w.corners[2], w.corners[0], w.corners[1]};
    const LocalConePoint c = local_coords(w);
    const LocalConePoint cr = local_coords(rotated);
    for (int slot = 0; slot < 3; ++slot) {
      EXPECT_EQ(cr.edge((slot + 1) % 3, 0), c.edge(slot, 0));
      EXPECT_EQ(cr.edge((slot + 1) % 3, 1), c.edge(slot, 1));
    }
    EXPECT_EQ(cr.triangle(), c.triangle());
  }
}

TEST(LocalWeb, OrientationReversalSwapsEdgeDots) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const TriangleWeb w = random_web(rng);
    TriangleWeb flipped = w;
    for (std::string& word : flipped.corners)
      for (char& ch : word) ch = (ch == 'R' ? 'L' : 'R');
    if (flipped.honeycomb.dir == HoneycombDir::in) flipped.honeycomb.dir = HoneycombDir::out;
    else if (flipped.honeycomb.dir == HoneycombDir::out) flipped.honeycomb.dir = HoneycombDir::in;
    const LocalConePoint c = local_coords(w);
    const LocalConePoint cf = local_coords(flipped);
    for (int slot = 0; slot < 3; ++slot) {
      EXPECT_EQ(cf.edge(slot, 0), c.edge(slot, 1));
      EXPECT_EQ(cf.edge(slot, 1), c.edge(slot, 0));
    }
  }
}

TEST(LocalWeb, DotPairMatchesCoords) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const TriangleWeb w = random_web(rng);
    const LocalConePoint c = local_coords(w);
    for (int slot = 0; slot < 3; ++slot) {
      const StrandCounts s = strand_counts(w, slot);
      const auto [l, r] = edge_dot_pair(s.in_count, s.out_count);
      EXPECT_EQ(c.edge(slot, 0), l);
      EXPECT_EQ(c.edge(slot, 1), r);
      EXPECT_EQ(boundary_word(w, slot).size(),
                static_cast<size_t>(s.in_count + s.out_count));
    }
  }
}

TEST(LocalWeb, ValidationRejectsBadWebs) {
  TriangleWeb w;
  w.honeycomb = {HoneycombDir::in, 0};
  EXPECT_THROW(w.validate(), SchemaError);
  w.honeycomb = {HoneycombDir::none, 2};
  EXPECT_THROW(w.validate(), SchemaError);
  w.honeycomb = {};
  w.corners[0] = "RX";
  EXPECT_THROW(w.validate(), SchemaError);
}

} // namespace
