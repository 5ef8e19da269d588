// Copyright 2026 The stabline Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>

#include <gtest/gtest.h>

#include "stabline/dual.hpp"
#include "support/families.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

namespace stabline {
namespace {

using testing::make_family;
using testing::run_property;

DualPoint dp(Rational m, Rational b) { return {std::move(m), std::move(b)}; }

std::vector<DualPoint> sorted(std::vector<DualPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Counterclockwise, starting at the lexicographic minimum, strictly convex.
void expect_canonical_order(const StabPolygon& p) {
  const auto& v = p.vertices();
  if (v.empty()) return;
  EXPECT_EQ(*std::min_element(v.begin(), v.end()), v.front());
  if (v.size() < 3) return;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& a = v[k];
    const auto& b = v[(k + 1) % v.size()];
    const auto& c = v[(k + 2) % v.size()];
    EXPECT_GT(phi({a.m, a.b}, {b.m, b.b}, {c.m, c.b}), rat(0));
  }
}

TEST(LineToDual, Examples) {
  EXPECT_EQ(line_to_dual({rat(1), rat(1)}), dp(rat(1), rat(1)));
  EXPECT_EQ(line_to_dual({rat(-1, 6), rat(43, 6)}), dp(rat(-1, 6), rat(43, 6)));
  EXPECT_EQ(line_to_dual({rat(0), rat(0)}), dp(rat(0), rat(0)));
  EXPECT_EQ(dual_to_line(line_to_dual({rat(2, 3), rat(-5)})), (Line{rat(2, 3), rat(-5)}));
}

TEST(PointSheafDual, Examples) {
  EXPECT_EQ(point_sheaf_dual({rat(1), rat(0)}), (Line{rat(-1), rat(0)}));
  EXPECT_EQ(point_sheaf_dual({rat(0), rat(5)}), (Line{rat(0), rat(5)}));
  const Line sheaf = point_sheaf_dual({rat(4), rat(6)});
  EXPECT_EQ(sheaf, (Line{rat(-4), rat(6)}));
  EXPECT_EQ(eval_line(sheaf, rat(4, 5)), rat(14, 5));
}

TEST(SegmentStrip, Examples) {
  EXPECT_EQ(segment_strip(VerticalSegment(rat(1), rat(1), rat(7))),
            (DualStrip{rat(-1), rat(1), rat(7)}));
  EXPECT_EQ(segment_strip(VerticalSegment(rat(0), rat(2), rat(3))),
            (DualStrip{rat(0), rat(2), rat(3)}));
  const DualStrip point = segment_strip(VerticalSegment(rat(2), rat(5), rat(5)));
  EXPECT_EQ(point, (DualStrip{rat(-2), rat(5), rat(5)}));
  EXPECT_TRUE(point.contains(dp(rat(1), rat(3))));
  EXPECT_FALSE(point.contains(dp(rat(1), rat(4))));
}

TEST(TwoSegmentParallelogram, UnitSquare) {
  const VerticalSegment s1(rat(0), rat(0), rat(1)), s2(rat(1), rat(0), rat(1));
  const StabPolygon p = two_segment_parallelogram(s1, s2);
  EXPECT_EQ(p.kind(), PolygonKind::FullDimensional);
  const auto formula = testing::parallelogram_by_formula(s1, s2);
  EXPECT_EQ(sorted(p.vertices()), sorted({formula.begin(), formula.end()}));
  EXPECT_EQ(sorted(p.vertices()), (std::vector<DualPoint>{dp(rat(-1), rat(1)), dp(rat(0), rat(0)),
                                                          dp(rat(0), rat(1)), dp(rat(1), rat(0))}));
  expect_canonical_order(p);
  // The diagonals cross at the dual of the line through the midpoints.
  const auto& v = p.vertices();
  EXPECT_EQ(dp((v[0].m + v[2].m) / rat(2), (v[0].b + v[2].b) / rat(2)), dp(rat(0), rat(1, 2)));
  EXPECT_EQ(line_through({rat(0), rat(1, 2)}, {rat(1), rat(1, 2)}), (Line{rat(0), rat(1, 2)}));
}

TEST(TwoSegmentParallelogram, Degenerate) {
  const StabPolygon point = two_segment_parallelogram(VerticalSegment(rat(0), rat(2), rat(2)),
                                                      VerticalSegment(rat(1), rat(5), rat(5)));
  EXPECT_EQ(point.kind(), PolygonKind::SinglePoint);
  EXPECT_EQ(point.vertices(), std::vector<DualPoint>{dp(rat(3), rat(2))});

  const StabPolygon seg = two_segment_parallelogram(VerticalSegment(rat(0), rat(2), rat(2)),
                                                    VerticalSegment(rat(1), rat(3), rat(5)));
  EXPECT_EQ(seg.kind(), PolygonKind::SegmentShaped);
  EXPECT_EQ(seg.vertices(), (std::vector<DualPoint>{dp(rat(1), rat(2)), dp(rat(3), rat(2))}));

  EXPECT_THROW(two_segment_parallelogram(VerticalSegment(rat(1), rat(0), rat(1)),
                                         VerticalSegment(rat(1), rat(2), rat(3))),
               VerticalLineError);
}

TEST(TwoSegmentParallelogram, MatchesFormulasOnRandomPairs) {
  testing::Rng rng(31);
  testing::FamilyOptions opt;
  opt.min_n = opt.max_n = 2;
  for (int k = 0; k < 200; ++k) {
    const auto f = testing::random_family(rng, opt);
    const auto formula = testing::parallelogram_by_formula(f[0], f[1]);
    const auto p = two_segment_parallelogram(f[0], f[1]);
    for (const auto& corner : formula) EXPECT_TRUE(p.contains(corner));
    for (const auto& v : p.vertices())
      EXPECT_NE(std::find(formula.begin(), formula.end(), v), formula.end());
    expect_canonical_order(p);
  }
}

TEST(StabbingPolygon, Pentagon) {
  const StabPolygon p = stabbing_polygon(testing::pentagon_family());
  EXPECT_EQ(p.kind(), PolygonKind::FullDimensional);
  EXPECT_EQ(sorted(p.vertices()),
            sorted({dp(rat(1, 2), rat(5, 2)), dp(rat(1), rat(1)), dp(rat(1, 2), rat(11, 2)),
                    dp(rat(1, 3), rat(20, 3)), dp(rat(-1, 6), rat(43, 6))}));
  expect_canonical_order(p);
}

TEST(StabbingPolygon, Quadrilateral) {
  const StabPolygon p = stabbing_polygon(testing::quadrilateral_family());
  EXPECT_EQ(sorted(p.vertices()),
            sorted({dp(rat(4, 5), rat(14, 5)), dp(rat(-1, 3), rat(22, 3)),
                    dp(rat(1, 3), rat(20, 3)), dp(rat(1, 2), rat(11, 2))}));
  expect_canonical_order(p);
}

TEST(StabbingPolygon, Octagon) {
  const StabPolygon p = stabbing_polygon(testing::octagon_family());
  EXPECT_EQ(sorted(p.vertices()),
            sorted({dp(rat(1), rat(0)), dp(rat(1, 2), rat(1)), dp(rat(0), rat(3)),
                    dp(rat(-1), rat(12)), dp(rat(0), rat(11)), dp(rat(1, 2), rat(8)),
                    dp(rat(1), rat(4)), dp(rat(3, 2), rat(-1, 2))}));
  expect_canonical_order(p);
}

TEST(StabbingPolygon, DegenerateKinds) {
  EXPECT_EQ(stabbing_polygon(testing::infeasible_family()).kind(), PolygonKind::Empty);
  const StabPolygon single = stabbing_polygon(testing::unique_family());
  EXPECT_EQ(single.kind(), PolygonKind::SinglePoint);
  EXPECT_EQ(single.vertices().front(), dp(rat(0), rat(1)));
  // Lines through the origin with slope in [1, 2].
  const StabPolygon seg = stabbing_polygon(make_family({{0, 0, 0}, {1, 1, 2}, {2, 0, 10}}));
  EXPECT_EQ(seg.kind(), PolygonKind::SegmentShaped);
  EXPECT_EQ(seg.vertices(), (std::vector<DualPoint>{dp(rat(1), rat(0)), dp(rat(2), rat(0))}));
  EXPECT_THROW(stabbing_polygon(make_family({{0, 0, 1}})), InsufficientSegmentsError);
}

TEST(StabPolygon, HullDropsCollinearAndInteriorPoints) {
  const auto p = StabPolygon::hull_of({dp(rat(2), rat(2)), dp(rat(0), rat(0)), dp(rat(1), rat(0)),
                                       dp(rat(2), rat(0)), dp(rat(2), rat(1)), dp(rat(0), rat(2)),
                                       dp(rat(1), rat(1)), dp(rat(0), rat(0)), dp(rat(1), rat(2))});
  EXPECT_EQ(p.vertices(), (std::vector<DualPoint>{dp(rat(0), rat(0)), dp(rat(2), rat(0)),
                                                  dp(rat(2), rat(2)), dp(rat(0), rat(2))}));
  EXPECT_TRUE(p.contains(dp(rat(1), rat(1))));
  EXPECT_TRUE(p.contains(dp(rat(2), rat(1))));
  EXPECT_FALSE(p.contains(dp(rat(5, 2), rat(1))));
}

TEST(OracleFeasible, Examples) {
  const auto five = oracle_feasible(testing::pentagon_family());
  ASSERT_TRUE(five);
  EXPECT_TRUE(stabs_all(dual_to_line(*five), testing::pentagon_family()));
  EXPECT_FALSE(oracle_feasible(testing::infeasible_family()));
  EXPECT_EQ(oracle_feasible(testing::unique_family()), dp(rat(0), rat(1)));
  EXPECT_THROW(oracle_feasible(make_family({{0, 0, 1}})), InsufficientSegmentsError);
}

TEST(PolygonArea, Examples) {
  EXPECT_EQ(polygon_area(stabbing_polygon(testing::pentagon_family())), rat(2));
  EXPECT_EQ(polygon_area(stabbing_polygon(testing::quadrilateral_family())), rat(71, 60));
  EXPECT_EQ(polygon_area(stabbing_polygon(testing::unique_family())), rat(0));
  EXPECT_EQ(polygon_area(StabPolygon{}), rat(0));
}

TEST(StabPolygonContains, SegmentAndPoint) {
  const auto seg = StabPolygon::hull_of({dp(rat(0), rat(0)), dp(rat(2), rat(2)), dp(rat(1), rat(1))});
  EXPECT_EQ(seg.kind(), PolygonKind::SegmentShaped);
  EXPECT_TRUE(seg.contains(dp(rat(1, 2), rat(1, 2))));
  EXPECT_FALSE(seg.contains(dp(rat(3), rat(3))));
  EXPECT_FALSE(seg.contains(dp(rat(1), rat(0))));
}

TEST(DualProperties, SheafIncidence) {
  EXPECT_EQ(run_property(testing::sheaf_incidence, 300, 41), std::nullopt);
}
TEST(DualProperties, StripMembership) {
  EXPECT_EQ(run_property(testing::strip_membership, 300, 42), std::nullopt);
}
TEST(DualProperties, PolygonIsStripIntersection) {
  EXPECT_EQ(run_property(testing::polygon_is_strip_intersection, 200, 43), std::nullopt);
}

}  // namespace
}  // namespace stabline
