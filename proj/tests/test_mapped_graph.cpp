#include <map>
#include <random>

#include "doctest.h"
#include "shadowlab/mapped_graph.hpp"
#include "support.hpp"

using namespace shadowlab;
using namespace shadowlab::testsupport;

namespace {

MappedGraph line_path(std::vector<Rational> values) {
  MappedGraph g;
  g.target = TargetSpace::Line;
  g.vertex_values = std::move(values);
  for (int i = 1; i < static_cast<int>(g.vertex_values.size()); ++i)
    g.edges.push_back({i - 1, i, g.vertex_values[static_cast<std::size_t>(i - 1)],
                       g.vertex_values[static_cast<std::size_t>(i)]});
  return g;
}

struct Span {
  Rational lo, hi;
};

Span span_of(const GraphEdge& e) {
  if (e.lift_u < e.lift_v) return {e.lift_u, e.lift_v};
  return {e.lift_v, e.lift_u};
}

std::map<int, int> degree_histogram(const MappedGraph& g) {
  std::map<int, int> h;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) ++h[g.vertex_degree(v)];
  return h;
}

// A sampled equal-value pair (lift y1 on factor edge e1, lift y2 on e2) must
// appear in the product: inside a matching product edge's closed lift
// interval, or as a recorded product vertex when the overlap is one point.
bool pair_covered(const FiberProduct& fp, const MappedGraph& g1, const MappedGraph& g2, int e1,
                  int e2, const Rational& y1, const Rational& y2) {
  Rational diff = y1 - y2;
  if (!diff.is_integer()) return false;
  for (const auto& info : fp.edge_info)
    if (info.e1 == e1 && info.e2 == e2 && Rational(info.shift) == diff && !(y1 < info.y_lo) &&
        !(info.y_hi < y1))
      return true;
  auto on_edge = [](const FactorPoint& p, const MappedGraph& g, int e, const Rational& y) {
    if (p.at_vertex)
      return (g.edges[static_cast<std::size_t>(e)].u == p.index ||
              g.edges[static_cast<std::size_t>(e)].v == p.index) &&
             (g.vertex_values[static_cast<std::size_t>(p.index)] - y).is_integer();
    return p.index == e && p.lift == y;
  };
  for (const auto& pv : fp.vertex_info)
    if (on_edge(pv.first, g1, e1, y1) && on_edge(pv.second, g2, e2, y2)) return true;
  return false;
}

void check_product_sound(const FiberProduct& fp, const MappedGraph& g1, const MappedGraph& g2) {
  bool circle = g1.target == TargetSpace::Circle;
  CHECK_NOTHROW(validate_mapped_graph(fp.graph));
  REQUIRE(fp.vertex_info.size() == fp.graph.vertex_count());
  REQUIRE(fp.edge_info.size() == fp.graph.edges.size());
  for (const auto& pv : fp.vertex_info) {
    auto check_factor = [&](const FactorPoint& p, const MappedGraph& g) {
      if (p.at_vertex) {
        CHECK((g.vertex_values[static_cast<std::size_t>(p.index)] - pv.value).is_integer());
      } else {
        Span s = span_of(g.edges[static_cast<std::size_t>(p.index)]);
        CHECK(s.lo < p.lift);
        CHECK(p.lift < s.hi);
        CHECK((p.lift - pv.value).is_integer());
      }
    };
    check_factor(pv.first, g1);
    check_factor(pv.second, g2);
    if (circle) {
      CHECK(pv.value >= Rational(0));
      CHECK(pv.value < Rational(1));
    }
  }
  for (const auto& info : fp.edge_info) {
    if (!circle) CHECK(info.shift == 0);
    CHECK(info.y_lo < info.y_hi);
    Span s1 = span_of(g1.edges[static_cast<std::size_t>(info.e1)]);
    Span s2 = span_of(g2.edges[static_cast<std::size_t>(info.e2)]);
    CHECK(!(info.y_lo < s1.lo));
    CHECK(!(s1.hi < info.y_hi));
    CHECK(!(info.y_lo - Rational(info.shift) < s2.lo));
    CHECK(!(s2.hi < info.y_hi - Rational(info.shift)));
  }
}

void check_product_complete(const FiberProduct& fp, const MappedGraph& g1, const MappedGraph& g2,
                            long samples) {
  bool circle = g1.target == TargetSpace::Circle;
  for (int e1 = 0; e1 < static_cast<int>(g1.edges.size()); ++e1) {
    Span s1 = span_of(g1.edges[static_cast<std::size_t>(e1)]);
    for (int e2 = 0; e2 < static_cast<int>(g2.edges.size()); ++e2) {
      Span s2 = span_of(g2.edges[static_cast<std::size_t>(e2)]);
      for (long j = 0; j <= samples; ++j) {
        Rational y1 = s1.lo + (s1.hi - s1.lo) * Rational(j, samples);
        if (!circle) {
          if (!(y1 < s2.lo) && !(s2.hi < y1)) CHECK(pair_covered(fp, g1, g2, e1, e2, y1, y1));
          continue;
        }
        for (mpz_class n = (y1 - s2.hi).floor_z();; ++n) {
          Rational y2 = y1 - Rational(n);
          if (s2.hi < y2) continue;
          if (y2 < s2.lo) break;
          CHECK(pair_covered(fp, g1, g2, e1, e2, y1, y2));
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("zigzag against a tent gives the frozen product complex") {
  MappedGraph g1 = line_path({Rational(0), Rational(1), Rational(1, 2), Rational(1)});
  MappedGraph g2 = line_path({Rational(0), Rational(1), Rational(0)});
  FiberProduct fp = fiber_product(g1, g2);
  CHECK(fp.graph.vertex_count() == 6);
  CHECK(fp.graph.edges.size() == 6);
  std::map<int, int> expect{{1, 2}, {2, 3}, {4, 1}};
  CHECK(degree_histogram(fp.graph) == expect);
  CHECK(vertex_degree_check(fp, g1, g2).ok());
  check_product_sound(fp, g1, g2);
  check_product_complete(fp, g1, g2, 16);
  CHECK_THROWS_AS(cycle_decomposition(fp.graph), std::invalid_argument);  // degree-4 vertex
}

TEST_CASE("two overlapping monotone edges give a single product edge") {
  MappedGraph g1 = line_path({Rational(0), Rational(1)});
  MappedGraph g2 = line_path({Rational(1, 4), Rational(3, 4)});
  FiberProduct fp = fiber_product(g1, g2);
  REQUIRE(fp.graph.vertex_count() == 2);
  REQUIRE(fp.graph.edges.size() == 1);
  CHECK(fp.edge_info[0].y_lo == Rational(1, 4));
  CHECK(fp.edge_info[0].y_hi == Rational(3, 4));
  auto report = vertex_degree_check(fp, g1, g2);
  CHECK(report.checked == 2);
  CHECK(report.ok());
  check_product_sound(fp, g1, g2);
  check_product_complete(fp, g1, g2, 16);
}

TEST_CASE("degree-one loop against itself is one vertex with one loop") {
  MappedGraph loop;
  loop.target = TargetSpace::Circle;
  loop.vertex_values = {Rational(0)};
  loop.edges = {{0, 0, Rational(0), Rational(1)}};
  FiberProduct fp = fiber_product(loop, loop);
  REQUIRE(fp.graph.vertex_count() == 1);
  REQUIRE(fp.graph.edges.size() == 1);
  CHECK(fp.graph.edges[0].u == fp.graph.edges[0].v);
  CHECK(fp.edge_info[0].shift == 0);
  CHECK(fp.graph.vertex_degree(0) == 2);
  check_product_sound(fp, loop, loop);
  check_product_complete(fp, loop, loop, 16);

  auto walks = cycle_decomposition(fp.graph);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].closed);
  CHECK(walks[0].vertices == std::vector<int>{0});
  CHECK(walks[0].edges == std::vector<int>{0});
}

TEST_CASE("graph validation rejects broken inputs") {
  MappedGraph g;
  g.target = TargetSpace::Line;
  g.vertex_values = {Rational(0), Rational(1)};
  g.edges = {{0, 2, Rational(0), Rational(1)}};
  CHECK_THROWS_AS(validate_mapped_graph(g), std::invalid_argument);  // endpoint out of range

  g.edges = {{0, 1, Rational(0), Rational(0)}};
  CHECK_THROWS_AS(validate_mapped_graph(g), std::invalid_argument);  // constant on an edge

  g.edges = {{0, 1, Rational(0), Rational(2)}};
  CHECK_THROWS_AS(validate_mapped_graph(g), std::invalid_argument);  // lift != vertex value

  MappedGraph c;
  c.target = TargetSpace::Circle;
  c.vertex_values = {Rational(0), Rational(1, 2)};
  c.edges = {{0, 1, Rational(0), Rational(1, 3)}};
  CHECK_THROWS_AS(validate_mapped_graph(c), std::invalid_argument);  // lift not congruent

  c.edges = {{0, 1, Rational(0), Rational(3, 2)}};
  CHECK_NOTHROW(validate_mapped_graph(c));  // lifts may leave [0,1)

  c.vertex_values = {Rational(0), Rational(3, 2)};
  c.edges.clear();
  CHECK_THROWS_AS(validate_mapped_graph(c), std::invalid_argument);  // value outside [0,1)

  MappedGraph g1 = line_path({Rational(0), Rational(1)});
  MappedGraph bad = c;
  CHECK_THROWS_AS(fiber_product(g1, bad), std::invalid_argument);  // validates both factors
}

TEST_CASE("fiber products of random line paths are sound and complete") {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 25; ++trial) {
    MappedGraph g1 = random_line_path(gen, static_cast<int>(draw(gen, 2, 6)));
    MappedGraph g2 = random_line_path(gen, static_cast<int>(draw(gen, 2, 6)));
    FiberProduct fp = fiber_product(g1, g2);
    check_product_sound(fp, g1, g2);
    check_product_complete(fp, g1, g2, 12);
  }
}

TEST_CASE("fiber products of random circle cycles are sound and complete") {
  std::mt19937_64 gen(22);
  for (int trial = 0; trial < 12; ++trial) {
    long w1 = draw(gen, 1, 3), w2 = draw(gen, -3, -1);
    MappedGraph g1 = cycle_graph_of(random_monotone_circle_map(gen, w1, static_cast<int>(draw(gen, 2, 4))));
    MappedGraph g2 = cycle_graph_of(random_monotone_circle_map(gen, w2, static_cast<int>(draw(gen, 2, 4))));
    FiberProduct fp = fiber_product(g1, g2);
    check_product_sound(fp, g1, g2);
    check_product_complete(fp, g1, g2, 8);
  }
}

TEST_CASE("product vertices with one factor at a graph vertex keep its degree") {
  std::mt19937_64 gen(23);
  std::size_t checked_total = 0;
  for (int trial = 0; trial < 40; ++trial) {
    MappedGraph g1 = random_line_path(gen, static_cast<int>(draw(gen, 2, 7)));
    MappedGraph g2 = random_line_path(gen, static_cast<int>(draw(gen, 2, 7)));
    FiberProduct fp = fiber_product(g1, g2);
    auto report = vertex_degree_check(fp, g1, g2);
    CHECK(report.ok());
    checked_total += report.checked;
  }
  CHECK(checked_total > 0);
}

TEST_CASE("cycle decomposition separates paths, cycles, and isolated vertices") {
  MappedGraph g;
  g.target = TargetSpace::Line;
  g.vertex_values = {Rational(0), Rational(1), Rational(2),
                     Rational(0), Rational(1), Rational(2), Rational(5)};
  g.edges = {{0, 1, Rational(0), Rational(1)}, {1, 2, Rational(1), Rational(2)},
             {3, 4, Rational(0), Rational(1)}, {4, 5, Rational(1), Rational(2)},
             {5, 3, Rational(2), Rational(0)}};
  auto walks = cycle_decomposition(g);
  REQUIRE(walks.size() == 3);

  CHECK(!walks[0].closed);
  CHECK(walks[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(walks[0].edges == std::vector<int>{0, 1});

  CHECK(walks[1].closed);
  CHECK(walks[1].vertices == std::vector<int>{3, 4, 5});
  CHECK(walks[1].edges.size() == 3);

  CHECK(!walks[2].closed);
  CHECK(walks[2].vertices == std::vector<int>{6});
  CHECK(walks[2].edges.empty());
}

TEST_CASE("cycle decomposition of a plain cycle is a single closed walk") {
  MappedGraph g = cycle_graph_of(PLCircleMap::winding(1).refined(
      {Rational(1, 4), Rational(1, 2), Rational(3, 4)}));
  auto walks = cycle_decomposition(g);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].closed);
  CHECK(walks[0].vertices.size() == 4);
  CHECK(walks[0].edges.size() == 4);
  CHECK(walks[0].vertices[0] == 0);
}
