#pragma once

#include <string>

#include "shadowlab/image_complex.hpp"

namespace shadowlab {

/// SVG rendering of a planar (ambient dimension 2) complex. Edges are chained
/// into maximal polylines; degree-1 vertices are marked with filled circles,
/// vertices of degree 3 or more with squares, isolated vertices with dots.
/// This is the only place the library converts rationals to floating point.
std::string shadow_svg(const ImageComplex& complex);

}  // namespace shadowlab
