#pragma once

#include <string>
#include <vector>

#include "shadowlab/rational.hpp"

namespace shadowlab {

enum class TargetSpace { Line, Circle };

/// Abstract finite graph (loops and parallel edges allowed) together with a
/// map to R or to the circle R/Z that is injective on every edge. Each edge
/// carries the lifted values of its two ends; for Circle targets these are
/// lifts (congruent mod 1 to the vertex values), for Line they are the
/// values themselves. lift_u != lift_v encodes edge-injectivity.
struct GraphEdge {
  int u = 0, v = 0;
  Rational lift_u, lift_v;
};

struct MappedGraph {
  TargetSpace target = TargetSpace::Line;
  std::vector<Rational> vertex_values;  // Circle: representatives in [0,1)
  std::vector<GraphEdge> edges;

  std::size_t vertex_count() const { return vertex_values.size(); }
  int vertex_degree(int v) const;
};

/// Throws std::invalid_argument when an edge is degenerate, an index is out
/// of range, or a lift disagrees with its vertex value.
void validate_mapped_graph(const MappedGraph& g);

/// Where a product-factor point sits in its graph: at a vertex, or strictly
/// inside an edge at the given lift value.
struct FactorPoint {
  bool at_vertex = true;
  int index = 0;   // vertex id, or edge id
  Rational lift;   // edge-interior: lift along that edge; vertex: its value
};

struct ProductVertex {
  FactorPoint first, second;
  Rational value;  // common target value (Circle: in [0,1))
};

/// One product edge: factor edges e1, e2 matched at integer shift n
/// (value_on_e1 = value_on_e2 + n; n = 0 for Line targets), covering the
/// open lift interval (y_lo, y_hi) in e1's lift coordinates.
struct ProductEdgeInfo {
  int e1 = 0, e2 = 0;
  long shift = 0;
  Rational y_lo, y_hi;
};

struct FiberProduct {
  MappedGraph graph;  // product graph with the induced map attached
  std::vector<ProductVertex> vertex_info;   // parallel to graph vertices
  std::vector<ProductEdgeInfo> edge_info;   // parallel to graph edges
};

/// Fiber product {(x1,x2) : f1(x1) = f2(x2)} with the cell structure whose
/// vertices are the pairs where at least one factor sits at a vertex.
FiberProduct fiber_product(const MappedGraph& g1, const MappedGraph& g2);

struct DegreeCheckEntry {
  int product_vertex = 0;
  int factor = 0;           // 1 or 2: which side supplied the vertex
  int factor_degree = 0;
  int product_degree = 0;
};

struct DegreeCheckReport {
  std::size_t checked = 0;
  std::vector<DegreeCheckEntry> violations;
  bool ok() const { return violations.empty(); }
};

/// For every product vertex with exactly one factor-vertex coordinate, its
/// graphical degree must equal that factor vertex's degree.
DegreeCheckReport vertex_degree_check(const FiberProduct& fp, const MappedGraph& g1,
                                      const MappedGraph& g2);

/// Maximal paths and cycles of a graph whose degrees are all <= 2.
/// Isolated vertices come out as single-vertex open walks.
struct GraphWalk {
  bool closed = false;
  std::vector<int> vertices;  // open: v0..vk; closed: v0..vk with vk-v0 edge last
  std::vector<int> edges;     // edge ids in walk order
};

std::vector<GraphWalk> cycle_decomposition(const MappedGraph& g);

}  // namespace shadowlab
