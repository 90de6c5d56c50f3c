#pragma once

#include <string>
#include <vector>

#include "shadowlab/circle_map.hpp"
#include "shadowlab/curve.hpp"
#include "shadowlab/image_complex.hpp"

namespace shadowlab {

/// Decomposition of the parameter circle induced by a path-shaped shadow:
/// the top arc [a, a_tilde] and bottom arc [a_tilde, a + 1] both project onto
/// the whole shadow path and meet exactly at the two split parameters.
/// Traversing top then bottom winds once forward (degree 1).
struct ShadowSplit {
  int axis = 1;               // dropped coordinate, 1-based
  Rational a;                 // parameter over the path start, in [0,1)
  Rational a_tilde;           // parameter over the path end, lifted: a < a_tilde < a + 1
  PathParameterization path;  // the shadow path and its parameterization
};

/// Both split parameters are curve vertices; when an endpoint's preimage is a
/// segment, the split point is the segment end with minimal dropped
/// coordinate. Throws std::invalid_argument unless the shadow is a SimplePath.
ShadowSplit split_top_bottom(const PLClosedCurve& curve, int axis);

/// The curve (path-parameter of the projection, dropped coordinate) in R^2;
/// its first coordinate sweeps 0 to 1 over the top arc and back over the
/// bottom arc. Starts at the split parameter a.
PLClosedCurve unravel(const PLClosedCurve& curve, const ShadowSplit& split);

/// Closed curve in the square of the parameter circle whose points (x, y)
/// pair parameters with nearly equal shadow-path positions: within epsilon,
/// with equality failing only through the deliberate vertex perturbation.
struct RelationCurve {
  TorusCurve curve;  // components map into the original curve's parameter circle
  Rational epsilon;
  int axis = 1;
};

/// Realizes the near-diagonal relation of shadow axis `split.axis` as a
/// torus curve of degree (1, -1): perturbs the unraveled arcs to distinct
/// interior heights (each vertex moved less than epsilon/2), forms their
/// fiber product over the height, and doubles the resulting path with its
/// reverse-swap. Throws std::invalid_argument if the perturbation budget is
/// exhausted (epsilon too small relative to the arc geometry).
RelationCurve build_relation_curve(const PLClosedCurve& curve, const ShadowSplit& split,
                                   const Rational& epsilon);

/// Composite of two relation-shaped torus curves psi1 = (x, y), psi2 = (y, z)
/// through their shared middle coordinate.
struct ComposedCurve {
  TorusCurve curve;   // phi = (x ∘ sigma1, z ∘ sigma2)
  long k = 0;         // winding of the middle coordinate along the chosen cycle;
                      // odd, normalized positive; deg(phi) = (k a / b1, k c / b2)
  Rational nu;        // bound on the middle-coordinate mismatch introduced by
                      // the genericity perturbation of psi2's vertices
  PLCircleMap sigma1; // psi1 parameter as a function of phi's parameter
  PLCircleMap sigma2; // psi2 parameter
};

/// Both middle degrees b1 = deg(psi1.second), b2 = deg(psi2.first) must be
/// odd (throws std::invalid_argument naming the even one). Every component of
/// both inputs must be strictly monotone between breakpoints. Internal
/// parity/degree bookkeeping failures raise std::logic_error.
ComposedCurve compose_relation_curves(const TorusCurve& psi1, const TorusCurve& psi2);

/// Witness for a near-fixed point of the composite relation: a diagonal
/// parameter of the twice-composed curve traced back to positions q0, q1, q2
/// on the base circle. The chain joins are exact except where perturbation
/// residuals enter: |r1| <= nu1, |r2| <= nu2, r0 = 0.
struct FixedPointCertificate {
  Rational epsilon;
  long k = 0;                  // final composite degree is (k, -k)
  Rational t_diagonal;         // diagonal parameter of the final composite
  Rational t_psi1, t_psi2, t_psi3;  // traced parameters on the three factors
  Rational q0, q1, q2;         // chain positions on the base circle
  Rational r0, r1, r2;         // circle distances at the three chain joins
  Rational nu1, nu2;           // perturbation bounds of the two compositions
  std::vector<Point> points;   // ambient points when built from a curve
};

FixedPointCertificate find_triple_fixed_point(const TorusCurve& psi1, const TorusCurve& psi2,
                                              const TorusCurve& psi3, const Rational& epsilon);

/// Requires all of the first three shadows to be simple paths, which no
/// simple closed curve admits; for valid input this always throws
/// std::invalid_argument. The body exists to exercise the pipeline on
/// hypothetical data and to expose any classifier bug as a loud failure.
FixedPointCertificate find_triple_fixed_point(const PLClosedCurve& curve, const Rational& epsilon);

/// Step-by-step record of the impossibility argument for a point projecting
/// to an endpoint of three path shadows simultaneously.
struct EndpointWitnessReport {
  bool triple_witness = false;       // q0 is a split point of >= 3 axes
  std::vector<int> matched_axes;
  bool trace_attempted = false;
  Rational c;                        // hyperplane level {x_axis1 = c}
  Point p, p_prime;                  // first hyperplane hits walking both ways from q0
  bool proj2_agree = false;          // both project to the path's first c-hit (axis 2 role)
  bool proj3_agree = false;
  bool diff_parallel_e2 = false;     // p - p' parallel to the axis-2 direction
  bool diff_parallel_e3 = false;
  bool forces_equality = false;      // the two parallelisms leave no nonzero difference
  bool p_equals_p_prime = false;     // true only when the input was not simple
  bool contradiction_complete = false;
  std::string message;
};

/// q0 must lie on the curve. `splits` may cover any axes; the trace runs only
/// if q0 matches split points of at least three of them. A completed trace
/// (p = p' forced and observed) certifies the configuration cannot come from
/// a simple curve.
EndpointWitnessReport endpoint_witness_check(const PLClosedCurve& curve, const Point& q0,
                                             const std::vector<ShadowSplit>& splits);

/// Parameter involution f with projection(f(t)) = projection(t), defined when
/// the shadow is a simple path and the projection is exactly 2-to-1 over the
/// path interior. Degree -1; its only fixed points are the two split
/// parameters. Throws std::invalid_argument when the fiber structure is not
/// 2-to-1 (including segment fibers).
PLCircleMap flip_map_demo(const PLClosedCurve& curve, int axis);

}  // namespace shadowlab
