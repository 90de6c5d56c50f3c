#pragma once

#include <string>
#include <vector>

#include "shadowlab/curve.hpp"
#include "shadowlab/geometry.hpp"

namespace shadowlab {

/// Embedded 1-complex: the arrangement of a finite set of segments.
/// Edge interiors are pairwise disjoint and contain no vertex; edges have
/// nonzero length. Vertices may be isolated (degree 0).
struct ImageComplex {
  std::size_t ambient_dim = 0;
  std::vector<Point> vertices;               // sorted lexicographically
  std::vector<std::pair<int, int>> edges;    // index pairs, first < second
  std::vector<std::vector<int>> incidence;   // vertex -> incident edge ids

  int degree(int v) const { return static_cast<int>(incidence[v].size()); }
  Segment edge_segment(int e) const {
    return {vertices[edges[e].first], vertices[edges[e].second]};
  }
};

/// Arrangement refinement: split segments at all pairwise intersections,
/// merge collinear overlaps, identify vertices by exact equality.
/// Zero-length input segments contribute their point as a vertex (and as a
/// split point of anything passing through it) but no edge.
ImageComplex build_image_complex(const std::vector<Segment>& segments);

enum class TopologyTag { SimplePath, SimpleClosedCurve, Tree, Disconnected, Other };

const char* to_string(TopologyTag tag);

struct TopologyClass {
  TopologyTag tag = TopologyTag::Other;
  int components = 0;
  std::vector<int> endpoints;        // degree-1 vertices (SimplePath witness)
  std::vector<int> branch_vertices;  // degree >= 3 (Tree/Other witness)
  std::vector<int> cycle;            // closed vertex walk when one exists
  std::string detail;
};

TopologyClass classify(const ImageComplex& complex);

/// Classes of all d coordinate shadows of a simple curve. Raises
/// TheoremViolationError if three or more shadows classify as SimplePath,
/// which for exact arithmetic would indicate a bug rather than a curve.
std::vector<TopologyClass> shadow_classes(const PLClosedCurve& curve);

/// Combinatorial parameterization of a SimplePath complex: the walk from one
/// degree-1 vertex to the other, each edge covering an equal parameter span.
/// The walk starts at the lexicographically smaller endpoint.
class PathParameterization {
 public:
  explicit PathParameterization(std::vector<Point> walk);

  const std::vector<Point>& walk() const { return walk_; }
  std::size_t edge_count() const { return walk_.size() - 1; }
  Rational vertex_param(std::size_t j) const;

  Point eval(const Rational& u) const;  // u in [0,1]
  /// Parameter of a point of the path; throws std::invalid_argument if the
  /// point is not on it.
  Rational inverse(const Point& p) const;

 private:
  std::vector<Point> walk_;
};

PathParameterization path_parameterization(const ImageComplex& complex);

}  // namespace shadowlab
