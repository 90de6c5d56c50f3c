#include "shadowlab/curve.hpp"

#include <set>
#include <stdexcept>

namespace shadowlab {

PLClosedCurve::PLClosedCurve(std::size_t dimension, std::vector<Point> vertices)
    : dim_(dimension), verts_(std::move(vertices)) {
  if (dim_ < 2) throw std::invalid_argument("curve: dimension must be at least 2");
  if (verts_.size() < 3) throw std::invalid_argument("curve: need at least 3 vertices");
  for (const auto& v : verts_)
    if (v.dim() != dim_) throw std::invalid_argument("curve: vertex dimension mismatch");
  for (std::size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i] == verts_[(i + 1) % verts_.size()])
      throw std::invalid_argument("curve: consecutive vertices coincide");
}

Point PLClosedCurve::eval(const Rational& t) const {
  std::size_t n = verts_.size();
  Rational scaled = t.frac() * Rational(static_cast<long>(n));
  mpz_class kz = scaled.floor_z();
  auto k = static_cast<std::size_t>(kz.get_ui());
  if (k >= n) k = 0;  // t == 1 after frac can't happen, defensive
  Rational s = scaled - Rational(kz);
  return lerp(verts_[k], verts_[(k + 1) % n], s);
}

Rational PLClosedCurve::vertex_param(std::size_t i) const {
  std::size_t n = verts_.size();
  return Rational(static_cast<long>(i % n), static_cast<long>(n));
}

bool validate_simple(const PLClosedCurve& curve) {
  std::size_t n = curve.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto hit = intersect_segments(curve.edge(i), curve.edge(j));
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (!adjacent) {
        if (hit.kind != SegXKind::None) return false;
        continue;
      }
      const Point& shared = (j == i + 1) ? curve.vertex(j) : curve.vertex(0);
      if (hit.kind != SegXKind::Point || hit.p != shared) return false;
    }
  }
  return true;
}

Point project_point(const Point& p, int axis) {
  if (axis < 1 || static_cast<std::size_t>(axis) > p.dim())
    throw std::invalid_argument("project: axis out of range");
  Point q;
  q.x.reserve(p.dim() - 1);
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (i != static_cast<std::size_t>(axis - 1)) q.x.push_back(p.x[i]);
  return q;
}

std::vector<Segment> project(const PLClosedCurve& curve, int axis) {
  std::vector<Segment> out;
  out.reserve(curve.size());
  for (std::size_t k = 0; k < curve.size(); ++k) {
    Segment e = curve.edge(k);
    out.push_back({project_point(e.a, axis), project_point(e.b, axis)});
  }
  return out;
}

Rational dyadic_offset(std::size_t index) {
  if (index == 0) return Rational(0);
  // Level L contributes 2^L offsets: +-o / 2^L for odd o < 2^L.
  std::size_t seen = 1;
  for (long level = 1;; ++level) {
    std::size_t count = static_cast<std::size_t>(1) << level;  // 2^(level-1) odds, two signs
    if (index < seen + count) {
      std::size_t k = index - seen;
      long numerator = 1 + 2 * static_cast<long>(k / 2);
      long denominator = 1L << level;
      Rational v(numerator, denominator);
      return (k % 2 == 0) ? v : -v;
    }
    seen += count;
  }
}

GenericityPredicate distinct_axis_coordinates(std::vector<int> axes) {
  return [axes = std::move(axes)](const PLClosedCurve& c) {
    for (int axis : axes) {
      if (axis < 1 || static_cast<std::size_t>(axis) > c.dimension())
        throw std::invalid_argument("distinct coordinates: axis out of range");
      std::set<Rational> seen;
      for (const auto& v : c.vertices())
        if (!seen.insert(v.x[axis - 1]).second) return false;
    }
    return true;
  };
}

GenericityPredicate distinct_axis_coordinates(int axis) {
  return distinct_axis_coordinates(std::vector<int>{axis});
}

GeneralPositionReport perturb_general_position(const PLClosedCurve& curve,
                                               const GenericityPredicate& predicate,
                                               const Rational& budget) {
  if (predicate(curve)) return {curve, false, Rational(0), 0};
  if (budget.sign() <= 0)
    throw std::invalid_argument(
        "perturb: predicate unsatisfied and budget is zero (empty feasible set)");
  std::size_t n = curve.size(), d = curve.dimension();

  // Per round, move every coordinate onto an axis-locally fresh value within
  // a shrinking fraction of the budget. All-axes distinctness is the
  // strongest condition this targets; the caller's predicate is re-checked
  // on the result either way.
  std::string blocked;
  for (int round = 1; round <= 40; ++round) {
    Rational scale = budget;
    for (int h = 1; h < round; ++h) scale = scale / 2;

    std::vector<Point> verts = curve.vertices();
    Rational max_disp(0);
    bool applied = false;
    for (std::size_t j = 0; j < d; ++j) {
      std::set<Rational> used;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t attempt = 0;; ++attempt) {
          Rational candidate = curve.vertices()[i].x[j] + dyadic_offset(attempt) * scale;
          if (used.insert(candidate).second) {
            if (attempt > 0) {
              applied = true;
              max_disp = max(max_disp, (candidate - curve.vertices()[i].x[j]).abs());
            }
            verts[i].x[j] = candidate;
            break;
          }
        }
      }
    }
    PLClosedCurve moved(d, verts);
    if (!validate_simple(moved)) {
      blocked = "simplicity lost at displacement " + max_disp.str();
      continue;
    }
    if (!predicate(moved)) {
      blocked = "predicate unsatisfied after all-axes separation";
      continue;
    }
    return {std::move(moved), applied, max_disp, round};
  }
  throw std::runtime_error("perturb: no admissible perturbation within budget (" + blocked + ")");
}

}  // namespace shadowlab
