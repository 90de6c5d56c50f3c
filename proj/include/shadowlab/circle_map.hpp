#pragma once

#include <utility>
#include <vector>

#include "shadowlab/rational.hpp"

namespace shadowlab {

/// PL self-map of the circle R/Z, stored as a continuous lift to R.
/// Breakpoints live in [0,1) with breakpoints[0] == 0; the lift at parameter
/// 1 equals lift[0] + wrap, and wrap is the topological degree.
class PLCircleMap {
 public:
  PLCircleMap(std::vector<Rational> breakpoints, std::vector<Rational> lifts, long wrap);

  static PLCircleMap identity() { return rotation(Rational(0)); }
  static PLCircleMap rotation(const Rational& r) { return {{Rational(0)}, {r}, 1}; }
  static PLCircleMap winding(long k) { return {{Rational(0)}, {Rational(0)}, k}; }

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& lifts() const { return lifts_; }
  long degree() const { return wrap_; }

  /// Lift value at any real parameter t, using lift(t + 1) = lift(t) + wrap.
  Rational eval_lift(const Rational& t) const;
  /// Value on the circle, in [0,1).
  Rational eval(const Rational& t) const { return eval_lift(t).frac(); }

  /// Same map with extra breakpoints inserted (mod 1).
  PLCircleMap refined(const std::vector<Rational>& extra) const;

  /// Exact equality as circle maps (same function S1 -> S1).
  friend bool equal_as_maps(const PLCircleMap& f, const PLCircleMap& g);

 private:
  std::vector<Rational> breaks_, lifts_;
  long wrap_;
};

/// f after g. degree = degree(f) * degree(g).
PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g);

/// All parameters t in [0,1) with f(t) = t. Isolated solutions are listed
/// once; a piece fixed pointwise contributes its two endpoints.
std::vector<Rational> fixed_points(const PLCircleMap& f);

/// Curve into the torus: two circle maps on a shared breakpoint grid.
class TorusCurve {
 public:
  TorusCurve(PLCircleMap first, PLCircleMap second);  // refines to common grid
  const PLCircleMap& first() const { return first_; }
  const PLCircleMap& second() const { return second_; }

 private:
  PLCircleMap first_, second_;
};

std::pair<long, long> torus_degree(const TorusCurve& c);

/// Parameters t where first(t) = second(t) on the circle, exact per linear
/// piece, sorted. A piece lying on the diagonal contributes its left
/// endpoint. Non-empty whenever the degrees differ.
std::vector<Rational> diagonal_intersections(const TorusCurve& c);

}  // namespace shadowlab
