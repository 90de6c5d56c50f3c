#include "doctest.h"
#include "shadowlab/geometry.hpp"

using namespace shadowlab;

namespace {
Point pt(long a, long b) { return Point{{Rational(a), Rational(b)}}; }
Point pt3(const Rational& a, const Rational& b, const Rational& c) { return Point{{a, b, c}}; }
}  // namespace

TEST_CASE("param_on_segment recovers interior, endpoint, and off-segment points") {
  Segment s{pt(0, 0), pt(4, 2)};
  CHECK(param_on_segment(s, pt(2, 1)) == Rational(1, 2));
  CHECK(param_on_segment(s, pt(0, 0)) == Rational(0));
  CHECK(param_on_segment(s, pt(4, 2)) == Rational(1));
  CHECK(!param_on_segment(s, pt(2, 2)).has_value());   // off the line
  CHECK(!param_on_segment(s, pt(8, 4)).has_value());   // on the line, past the end
  CHECK(!param_on_segment(s, pt(-4, -2)).has_value()); // before the start
}

TEST_CASE("degenerate segments match only their own point") {
  Segment s{pt(1, 1), pt(1, 1)};
  CHECK(param_on_segment(s, pt(1, 1)) == Rational(0));
  CHECK(!param_on_segment(s, pt(1, 2)).has_value());
}

TEST_CASE("transversal segments in the plane meet in one exact point") {
  auto x = intersect_segments({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)});
  REQUIRE(x.kind == SegXKind::Point);
  CHECK(x.p == pt(1, 1));
}

TEST_CASE("skew segments in space do not meet even when their plane projections cross") {
  Segment s1{pt3(0, 0, 0), pt3(2, 2, 0)};
  Segment s2{pt3(0, 2, 1), pt3(2, 0, 1)};
  CHECK(intersect_segments(s1, s2).kind == SegXKind::None);
  // same configuration flattened to a shared plane does cross
  Segment s3{pt3(0, 2, 0), pt3(2, 0, 0)};
  auto x = intersect_segments(s1, s3);
  REQUIRE(x.kind == SegXKind::Point);
  CHECK(x.p == pt3(Rational(1), Rational(1), Rational(0)));
}

TEST_CASE("collinear segments sharing a stretch report the exact overlap") {
  auto x = intersect_segments({pt(0, 0), pt(4, 0)}, {pt(2, 0), pt(6, 0)});
  REQUIRE(x.kind == SegXKind::Overlap);
  Point lo = x.p < x.q ? x.p : x.q;
  Point hi = x.p < x.q ? x.q : x.p;
  CHECK(lo == pt(2, 0));
  CHECK(hi == pt(4, 0));
}

TEST_CASE("collinear segments touching at one point report that point") {
  auto x = intersect_segments({pt(0, 0), pt(2, 0)}, {pt(2, 0), pt(5, 0)});
  REQUIRE(x.kind == SegXKind::Point);
  CHECK(x.p == pt(2, 0));
}

TEST_CASE("parallel disjoint segments do not intersect") {
  CHECK(intersect_segments({pt(0, 0), pt(2, 0)}, {pt(0, 1), pt(2, 1)}).kind == SegXKind::None);
  CHECK(intersect_segments({pt(0, 0), pt(2, 0)}, {pt(3, 0), pt(5, 0)}).kind == SegXKind::None);
}

TEST_CASE("shared endpoints count as point intersections") {
  auto x = intersect_segments({pt(0, 0), pt(1, 1)}, {pt(1, 1), pt(2, 0)});
  REQUIRE(x.kind == SegXKind::Point);
  CHECK(x.p == pt(1, 1));
}

TEST_CASE("near-miss with tiny rational gap stays a miss") {
  // The second segment ends two femto-units short of the first.
  Rational eps(1, 1000000000000000L);
  Segment s1{pt(0, 0), pt(2, 0)};
  Segment s2{Point{{Rational(1), Rational(1)}}, Point{{Rational(1), eps}}};
  CHECK(intersect_segments(s1, s2).kind == SegXKind::None);
  Segment s3{Point{{Rational(1), Rational(1)}}, Point{{Rational(1), Rational(0)}}};
  CHECK(intersect_segments(s1, s3).kind == SegXKind::Point);
}
