#pragma once

#include <optional>
#include <vector>

#include "shadowlab/rational.hpp"

namespace shadowlab {

/// Point in R^m with exact rational coordinates.
struct Point {
  std::vector<Rational> x;

  Point() = default;
  explicit Point(std::vector<Rational> coords) : x(std::move(coords)) {}

  std::size_t dim() const { return x.size(); }
  const Rational& operator[](std::size_t i) const { return x[i]; }
  Rational& operator[](std::size_t i) { return x[i]; }

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Lexicographic; used as map key for exact vertex identification.
  friend bool operator<(const Point& a, const Point& b);
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);

/// Interpolate a + t (b - a).
Point lerp(const Point& a, const Point& b, const Rational& t);

std::string point_str(const Point& p);

struct Segment {
  Point a, b;
  bool degenerate() const { return a == b; }
};

/// Parameter t with lerp(s.a, s.b, t) == p, if p lies on the closed segment.
/// Degenerate segments report t = 0 when p coincides with them.
std::optional<Rational> param_on_segment(const Segment& s, const Point& p);

enum class SegXKind { None, Point, Overlap };

struct SegmentIntersection {
  SegXKind kind = SegXKind::None;
  Point p;  // the point, or one end of the shared subsegment
  Point q;  // other end of the shared subsegment (Overlap only)
};

/// Exact intersection of two closed segments in R^m (same m required).
/// Collinear segments sharing more than a point report Overlap.
SegmentIntersection intersect_segments(const Segment& s1, const Segment& s2);

}  // namespace shadowlab
