#include "doctest.h"
#include "shadowlab/errors.hpp"
#include "shadowlab/generators.hpp"
#include "shadowlab/image_complex.hpp"

using namespace shadowlab;

namespace {

int count_path_shadows(const PLClosedCurve& curve) {
  int paths = 0;
  for (const auto& cls : shadow_classes(curve))
    if (cls.tag == TopologyTag::SimplePath) ++paths;
  return paths;
}

}  // namespace

TEST_CASE("planar circle vertices lie exactly on the unit circle") {
  for (int dimension : {2, 3, 5}) {
    for (int resolution : {3, 6, 32}) {
      PLClosedCurve curve = gen_planar_circle(dimension, resolution);
      CHECK(curve.dimension() == static_cast<std::size_t>(dimension));
      CHECK(curve.size() == static_cast<std::size_t>(resolution));
      for (std::size_t k = 0; k < curve.size(); ++k) {
        const Point& p = curve.vertex(k);
        CHECK(p.x[0] * p.x[0] + p.x[1] * p.x[1] == Rational(1));
        for (std::size_t j = 2; j < p.x.size(); ++j) CHECK(p.x[j] == Rational(0));
      }
    }
  }
}

TEST_CASE("even resolutions place an exact antipode") {
  PLClosedCurve curve = gen_planar_circle(2, 6);
  const Point& opposite = curve.vertex(3);
  CHECK(opposite.x[0] == Rational(-1));
  CHECK(opposite.x[1] == Rational(0));
}

TEST_CASE("planar circles project to two paths and otherwise closed curves") {
  for (int dimension : {3, 4, 5}) {
    for (int resolution : {3, 6, 32}) {
      PLClosedCurve curve = gen_planar_circle(dimension, resolution);
      REQUIRE(validate_simple(curve));
      auto classes = shadow_classes(curve);
      REQUIRE(classes.size() == static_cast<std::size_t>(dimension));
      CHECK(classes[0].tag == TopologyTag::SimplePath);
      CHECK(classes[1].tag == TopologyTag::SimplePath);
      for (std::size_t axis = 2; axis < classes.size(); ++axis)
        CHECK(classes[axis].tag == TopologyTag::SimpleClosedCurve);
    }
  }
}

TEST_CASE("planar circle rejects degenerate parameters") {
  CHECK_THROWS_AS(gen_planar_circle(1, 8), std::invalid_argument);
  CHECK_THROWS_AS(gen_planar_circle(3, 2), std::invalid_argument);
}

TEST_CASE("the fixed space curve has three tree shadows") {
  PLClosedCurve curve = gen_tree_shadow_curve();
  CHECK(curve.dimension() == 3);
  REQUIRE(validate_simple(curve));
  auto classes = shadow_classes(curve);
  REQUIRE(classes.size() == 3);
  for (const auto& cls : classes) {
    CHECK(cls.tag == TopologyTag::Tree);
    CHECK(!cls.branch_vertices.empty());
    CHECK(cls.components == 1);
  }
}

TEST_CASE("random knots are seed-deterministic") {
  PLClosedCurve a = gen_random_knot(3, 12, 404);
  PLClosedCurve b = gen_random_knot(3, 12, 404);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a.vertex(k) == b.vertex(k));
  PLClosedCurve c = gen_random_knot(3, 12, 405);
  bool identical = true;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a.vertex(k) == c.vertex(k))) identical = false;
  CHECK(!identical);
}

TEST_CASE("random knots are simple and satisfy the two-path bound") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    PLClosedCurve curve = gen_random_knot(3, 12, seed);
    CHECK(validate_simple(curve));
    CHECK(count_path_shadows(curve) <= 2);
  }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    PLClosedCurve curve = gen_random_knot(4, 10, seed);
    CHECK(validate_simple(curve));
    CHECK(count_path_shadows(curve) <= 2);
  }
}

TEST_CASE("random knot rejects unusable parameters") {
  CHECK_THROWS_AS(gen_random_knot(2, 12, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_knot(3, 3, 1), std::invalid_argument);
}
