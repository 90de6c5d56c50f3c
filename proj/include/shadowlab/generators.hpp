#pragma once

#include <cstdint>

#include "shadowlab/curve.hpp"

namespace shadowlab {

// Regular n-gon inscribed in the unit circle of the x1x2-plane, padded with
// zeros up to the requested dimension. Vertices are exact rational points on
// the circle (tan-half-angle), so all downstream incidence tests are exact.
PLClosedCurve gen_planar_circle(int dimension, int resolution);

// Fixed curve in R^3 whose three coordinate shadows are all trees.
PLClosedCurve gen_tree_shadow_curve();

// Seeded random simple curve with vertices in [-1,1]^d; resamples the whole
// vertex list until the simplicity check passes. Identical seed, identical
// curve. Throws GeneratorExhaustedError after the retry budget.
PLClosedCurve gen_random_knot(int dimension, int resolution, std::uint64_t seed);

}  // namespace shadowlab
