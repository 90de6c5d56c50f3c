#include "shadowlab/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "shadowlab/errors.hpp"

namespace shadowlab {

PLClosedCurve gen_planar_circle(int dimension, int resolution) {
  if (dimension < 2) throw std::invalid_argument("planar circle: dimension must be >= 2");
  if (resolution < 3) throw std::invalid_argument("planar circle: need at least 3 vertices");
  const long denom = 4096;
  std::vector<Point> verts;
  for (int k = 0; k < resolution; ++k) {
    Point p;
    p.x.assign(dimension, Rational(0));
    if (2 * k == resolution) {
      p.x[0] = Rational(-1);  // tan of pi/2 is out of reach; the point is exact anyway
    } else {
      double half_angle = M_PI * k / resolution;
      Rational u(std::llround(std::tan(half_angle) * denom), denom);
      Rational uu = u * u;
      p.x[0] = (Rational(1) - uu) / (Rational(1) + uu);
      p.x[1] = (u + u) / (Rational(1) + uu);
    }
    verts.push_back(std::move(p));
  }
  return PLClosedCurve(static_cast<std::size_t>(dimension), std::move(verts));
}

PLClosedCurve gen_tree_shadow_curve() {
  static const int coords[][3] = {
      {0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {1, 1, 0}, {1, 1, 1},
      {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {2, 1, 2}, {2, 0, 2}, {2, 0, 1},
      {1, 0, 1}, {1, 0, 2}, {0, 0, 2}, {0, 1, 2}, {0, 2, 2}, {1, 2, 2},
      {1, 2, 1}, {1, 2, 0}, {0, 2, 0}, {0, 2, 1}, {0, 1, 1}, {0, 1, 0},
  };
  std::vector<Point> verts;
  for (const auto& c : coords)
    verts.push_back(Point{{Rational(c[0]), Rational(c[1]), Rational(c[2])}});
  return PLClosedCurve(3, std::move(verts));
}

PLClosedCurve gen_random_knot(int dimension, int resolution, std::uint64_t seed) {
  if (dimension < 3) throw std::invalid_argument("random knot: dimension must be >= 3");
  if (resolution < 4) throw std::invalid_argument("random knot: need at least 4 vertices");
  std::mt19937_64 gen(seed);
  const int max_attempts = 200;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Point> verts(resolution);
    for (auto& p : verts) {
      p.x.resize(dimension);
      for (auto& c : p.x)
        c = Rational(static_cast<long>(gen() % 129) - 64, 64);
    }
    bool distinct_neighbors = true;
    for (int k = 0; k < resolution && distinct_neighbors; ++k)
      if (verts[k] == verts[(k + 1) % resolution]) distinct_neighbors = false;
    if (!distinct_neighbors) continue;
    PLClosedCurve curve(static_cast<std::size_t>(dimension), std::move(verts));
    if (validate_simple(curve)) return curve;
  }
  throw GeneratorExhaustedError("random knot: no simple curve after " +
                                std::to_string(max_attempts) + " attempts");
}

}  // namespace shadowlab
