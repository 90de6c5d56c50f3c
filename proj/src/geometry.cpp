#include "shadowlab/geometry.hpp"

#include <sstream>
#include <stdexcept>

namespace shadowlab {

bool operator<(const Point& a, const Point& b) {
  std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.x[i] < b.x[i]) return true;
    if (b.x[i] < a.x[i]) return false;
  }
  return a.dim() < b.dim();
}

static void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("points of different dimension");
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r.x[i] += b.x[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r.x[i] -= b.x[i];
  return r;
}

Point operator*(const Rational& s, const Point& p) {
  Point r = p;
  for (auto& c : r.x) c *= s;
  return r;
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
  require_same_dim(a, b);
  Point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r.x[i] += t * (b.x[i] - a.x[i]);
  return r;
}

std::string point_str(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ", ";
    os << p.x[i];
  }
  os << ")";
  return os.str();
}

std::optional<Rational> param_on_segment(const Segment& s, const Point& p) {
  require_same_dim(s.a, p);
  if (s.degenerate()) {
    if (p == s.a) return Rational(0);
    return std::nullopt;
  }
  std::size_t i = 0;
  while (s.a.x[i] == s.b.x[i]) ++i;  // exists: segment not degenerate
  Rational t = (p.x[i] - s.a.x[i]) / (s.b.x[i] - s.a.x[i]);
  if (t < 0 || t > 1) return std::nullopt;
  if (lerp(s.a, s.b, t) != p) return std::nullopt;
  return t;
}

SegmentIntersection intersect_segments(const Segment& s1, const Segment& s2) {
  require_same_dim(s1.a, s2.a);
  SegmentIntersection out;

  if (s1.degenerate() || s2.degenerate()) {
    if (s1.degenerate() && s2.degenerate()) {
      if (s1.a == s2.a) out = {SegXKind::Point, s1.a, {}};
      return out;
    }
    const Segment& seg = s1.degenerate() ? s2 : s1;
    const Point& pt = s1.degenerate() ? s1.a : s2.a;
    if (param_on_segment(seg, pt)) out = {SegXKind::Point, pt, {}};
    return out;
  }

  std::size_t m = s1.a.dim();
  Point d1 = s1.b - s1.a, d2 = s2.b - s2.a, r = s2.a - s1.a;

  // Look for a coordinate pair where the 2x2 system is nonsingular.
  for (std::size_t i = 0; i + 1 <= m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Rational det = d2.x[i] * d1.x[j] - d1.x[i] * d2.x[j];
      if (det.sign() == 0) continue;
      Rational t = (d2.x[i] * r.x[j] - r.x[i] * d2.x[j]) / det;
      Rational u = (d1.x[i] * r.x[j] - r.x[i] * d1.x[j]) / det;
      if (t < 0 || t > 1 || u < 0 || u > 1) return out;
      Point p1 = lerp(s1.a, s1.b, t);
      if (p1 != lerp(s2.a, s2.b, u)) return out;
      out = {SegXKind::Point, p1, {}};
      return out;
    }
  }

  // All 2x2 minors vanish: the directions are parallel.
  std::size_t i = 0;
  while (d1.x[i].sign() == 0) ++i;
  Rational ta = (s2.a.x[i] - s1.a.x[i]) / d1.x[i];
  if (lerp(s1.a, s1.b, ta) != s2.a) return out;  // parallel, not collinear
  Rational tb = (s2.b.x[i] - s1.a.x[i]) / d1.x[i];
  Rational lo = max(Rational(0), min(ta, tb));
  Rational hi = min(Rational(1), max(ta, tb));
  if (hi < lo) return out;
  if (lo == hi) {
    out = {SegXKind::Point, lerp(s1.a, s1.b, lo), {}};
    return out;
  }
  out = {SegXKind::Overlap, lerp(s1.a, s1.b, lo), lerp(s1.a, s1.b, hi)};
  return out;
}

}  // namespace shadowlab
