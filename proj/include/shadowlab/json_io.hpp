#pragma once

#include <string>

#include "shadowlab/curve.hpp"
#include "shadowlab/image_complex.hpp"
#include "shadowlab/relations.hpp"

namespace shadowlab {

/// Parses {"dimension": d, "vertices": [["0","1/2",...], ...]}. Coordinates
/// must be integer or p/q rational literals in strings; anything else
/// (floats, bare numbers, malformed fractions) is rejected with
/// std::invalid_argument.
PLClosedCurve curve_from_json(const std::string& text);

std::string curve_to_json(const PLClosedCurve& curve);

/// {"ambient_dimension": m, "vertices": [...], "edges": [[i,j],...]} with
/// exact coordinate strings.
std::string complex_to_json(const ImageComplex& complex);

std::string certificate_to_json(const FixedPointCertificate& cert);

}  // namespace shadowlab
