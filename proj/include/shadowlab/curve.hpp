#pragma once

#include <functional>
#include <vector>

#include "shadowlab/geometry.hpp"

namespace shadowlab {

/// Piecewise-linear closed curve in R^d given by its cyclic vertex list.
/// Edge k joins vertex k to vertex (k+1) mod n. The parameterization is
/// combinatorial: edge k covers [k/n, (k+1)/n].
class PLClosedCurve {
 public:
  /// Requires d >= 2, at least 3 vertices, all of dimension d, and
  /// cyclically-consecutive vertices distinct.
  PLClosedCurve(std::size_t dimension, std::vector<Point> vertices);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return verts_.size(); }
  const std::vector<Point>& vertices() const { return verts_; }
  const Point& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }
  Segment edge(std::size_t k) const {
    return {verts_[k % verts_.size()], verts_[(k + 1) % verts_.size()]};
  }

  /// Point at parameter t (taken mod 1).
  Point eval(const Rational& t) const;

  /// Parameter of vertex i, i.e. i/n.
  Rational vertex_param(std::size_t i) const;

 private:
  std::size_t dim_;
  std::vector<Point> verts_;
};

/// Exact simplicity test: adjacent edges meet only in their shared vertex,
/// non-adjacent edges are disjoint.
bool validate_simple(const PLClosedCurve& curve);

/// Shadow of the curve along coordinate axis `axis` (1-based): every edge,
/// projected to R^{d-1} by dropping that coordinate. Edges parallel to the
/// axis project to degenerate segments and are kept; downstream consumers
/// decide how to treat them.
std::vector<Segment> project(const PLClosedCurve& curve, int axis);

/// Drop coordinate `axis` (1-based) from a point.
Point project_point(const Point& p, int axis);

struct GeneralPositionReport {
  PLClosedCurve curve;
  bool perturbation_applied = false;
  Rational max_displacement;  // infinity-norm bound over all vertices
  int rounds = 0;             // shrink rounds used (0 when already generic)
};

/// Genericity condition on a curve, e.g. distinct vertex coordinates.
using GenericityPredicate = std::function<bool(const PLClosedCurve&)>;

/// Predicate: the given 1-based axes each see pairwise-distinct vertex
/// coordinates.
GenericityPredicate distinct_axis_coordinates(int axis);
GenericityPredicate distinct_axis_coordinates(std::vector<int> axes);

/// Deterministically nudge vertices (each coordinate by less than budget)
/// until the predicate holds and the curve stays simple. Already-generic
/// input is returned unchanged. Halves the step and retries when a nudge
/// breaks simplicity; throws when no admissible perturbation is found, naming
/// the blocking constraint.
GeneralPositionReport perturb_general_position(const PLClosedCurve& curve,
                                               const GenericityPredicate& predicate,
                                               const Rational& budget);

/// Deterministic enumeration of dyadic offsets:
/// 0, 1/2, -1/2, 1/4, -1/4, 3/4, -3/4, 1/8, ... (all in (-1, 1)).
Rational dyadic_offset(std::size_t index);

}  // namespace shadowlab
