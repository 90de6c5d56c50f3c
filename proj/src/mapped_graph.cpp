#include "shadowlab/mapped_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace shadowlab {

int MappedGraph::vertex_degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += (e.u == v) + (e.v == v);
  return d;
}

void validate_mapped_graph(const MappedGraph& g) {
  auto n = static_cast<int>(g.vertex_count());
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("mapped graph: edge endpoint out of range");
    if (e.lift_u == e.lift_v)
      throw std::invalid_argument("mapped graph: map not injective on an edge");
    if (g.target == TargetSpace::Line) {
      if (e.lift_u != g.vertex_values[e.u] || e.lift_v != g.vertex_values[e.v])
        throw std::invalid_argument("mapped graph: line-target lift differs from vertex value");
    } else {
      if (!(e.lift_u - g.vertex_values[e.u]).is_integer() ||
          !(e.lift_v - g.vertex_values[e.v]).is_integer())
        throw std::invalid_argument("mapped graph: lift not congruent to vertex value");
    }
  }
  if (g.target == TargetSpace::Circle)
    for (const auto& v : g.vertex_values)
      if (v.sign() < 0 || !(v < Rational(1)))
        throw std::invalid_argument("mapped graph: circle value outside [0,1)");
}

namespace {

struct FactorKey {
  bool at_vertex;
  int index;
  Rational lift;  // ignored for vertices
  friend bool operator<(const FactorKey& a, const FactorKey& b) {
    if (a.at_vertex != b.at_vertex) return a.at_vertex > b.at_vertex;  // vertices first
    if (a.index != b.index) return a.index < b.index;
    if (a.at_vertex) return false;
    return a.lift < b.lift;
  }
};

struct EdgeSpan {
  Rational lo, hi;      // lift interval, lo < hi
  int lo_end, hi_end;   // vertex ids at the lo/hi lifts
};

EdgeSpan span_of(const GraphEdge& e) {
  if (e.lift_u < e.lift_v) return {e.lift_u, e.lift_v, e.u, e.v};
  return {e.lift_v, e.lift_u, e.v, e.u};
}

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("fiber product: shift out of range");
  return z.get_si();
}

}  // namespace

FiberProduct fiber_product(const MappedGraph& g1, const MappedGraph& g2) {
  validate_mapped_graph(g1);
  validate_mapped_graph(g2);
  if (g1.target != g2.target)
    throw std::invalid_argument("fiber product: mismatched targets");
  bool circle = g1.target == TargetSpace::Circle;

  FiberProduct fp;
  fp.graph.target = g1.target;

  std::map<std::pair<FactorKey, FactorKey>, int> ids;
  auto intern = [&](const FactorPoint& p1, const FactorPoint& p2, const Rational& value) {
    FactorKey k1{p1.at_vertex, p1.index, p1.lift};
    FactorKey k2{p2.at_vertex, p2.index, p2.lift};
    auto [it, fresh] = ids.try_emplace({k1, k2}, static_cast<int>(fp.vertex_info.size()));
    if (fresh) {
      fp.vertex_info.push_back({p1, p2, value});
      fp.graph.vertex_values.push_back(value);
    }
    return it->second;
  };

  auto n1 = static_cast<int>(g1.vertex_count());
  auto n2 = static_cast<int>(g2.vertex_count());

  // Vertex x vertex coincidences.
  for (int v1 = 0; v1 < n1; ++v1)
    for (int v2 = 0; v2 < n2; ++v2)
      if (g1.vertex_values[v1] == g2.vertex_values[v2])
        intern({true, v1, g1.vertex_values[v1]}, {true, v2, g2.vertex_values[v2]},
               g1.vertex_values[v1]);

  // Vertex of one factor landing strictly inside an edge of the other.
  for (int v1 = 0; v1 < n1; ++v1) {
    const Rational& val = g1.vertex_values[v1];
    for (int e2 = 0; e2 < static_cast<int>(g2.edges.size()); ++e2) {
      EdgeSpan s = span_of(g2.edges[e2]);
      mpz_class n_lo = circle ? (s.lo - val).floor_z() : mpz_class(0);
      for (mpz_class n = n_lo;; ++n) {
        Rational y = val + Rational(n);
        if (!(s.lo < y)) { if (circle) continue; else break; }
        if (!(y < s.hi)) break;
        intern({true, v1, val}, {false, e2, y}, val);
        if (!circle) break;
      }
    }
  }
  for (int v2 = 0; v2 < n2; ++v2) {
    const Rational& val = g2.vertex_values[v2];
    for (int e1 = 0; e1 < static_cast<int>(g1.edges.size()); ++e1) {
      EdgeSpan s = span_of(g1.edges[e1]);
      mpz_class n_lo = circle ? (s.lo - val).floor_z() : mpz_class(0);
      for (mpz_class n = n_lo;; ++n) {
        Rational y = val + Rational(n);
        if (!(s.lo < y)) { if (circle) continue; else break; }
        if (!(y < s.hi)) break;
        intern({false, e1, y}, {true, v2, val}, circle ? y.frac() : y);
        if (!circle) break;
      }
    }
  }

  // Edge x edge overlaps become product edges.
  auto classify_end = [&](const MappedGraph& g, int e, const Rational& y) -> FactorPoint {
    EdgeSpan s = span_of(g.edges[e]);
    if (y == s.lo) return {true, s.lo_end, g.vertex_values[s.lo_end]};
    if (y == s.hi) return {true, s.hi_end, g.vertex_values[s.hi_end]};
    return {false, e, y};
  };

  for (int e1 = 0; e1 < static_cast<int>(g1.edges.size()); ++e1) {
    EdgeSpan s1 = span_of(g1.edges[e1]);
    for (int e2 = 0; e2 < static_cast<int>(g2.edges.size()); ++e2) {
      EdgeSpan s2 = span_of(g2.edges[e2]);
      long n_min = 0, n_max = 0;
      if (circle) {
        n_min = to_long(mpz_class(-((s2.hi - s1.lo).floor_z())));  // ceil(lo1 - hi2)
        n_max = to_long((s1.hi - s2.lo).floor_z());
      }
      for (long n = n_min; n <= n_max; ++n) {
        Rational lo = max(s1.lo, s2.lo + Rational(n));
        Rational hi = min(s1.hi, s2.hi + Rational(n));
        if (!(lo < hi)) continue;
        int u = intern(classify_end(g1, e1, lo), classify_end(g2, e2, lo - Rational(n)),
                       circle ? lo.frac() : lo);
        int v = intern(classify_end(g1, e1, hi), classify_end(g2, e2, hi - Rational(n)),
                       circle ? hi.frac() : hi);
        fp.graph.edges.push_back({u, v, lo, hi});
        fp.edge_info.push_back({e1, e2, n, lo, hi});
      }
    }
  }
  return fp;
}

DegreeCheckReport vertex_degree_check(const FiberProduct& fp, const MappedGraph& g1,
                                      const MappedGraph& g2) {
  DegreeCheckReport report;
  for (std::size_t pv = 0; pv < fp.vertex_info.size(); ++pv) {
    const auto& info = fp.vertex_info[pv];
    if (info.first.at_vertex == info.second.at_vertex) continue;  // 0 or 2 vertex factors
    ++report.checked;
    int factor = info.first.at_vertex ? 1 : 2;
    int fdeg = info.first.at_vertex ? g1.vertex_degree(info.first.index)
                                    : g2.vertex_degree(info.second.index);
    int pdeg = fp.graph.vertex_degree(static_cast<int>(pv));
    if (fdeg != pdeg)
      report.violations.push_back({static_cast<int>(pv), factor, fdeg, pdeg});
  }
  return report;
}

namespace {

GraphWalk canonical(GraphWalk w) {
  if (w.vertices.size() < 2) return w;
  if (!w.closed) {
    if (w.vertices.back() < w.vertices.front()) {
      std::reverse(w.vertices.begin(), w.vertices.end());
      std::reverse(w.edges.begin(), w.edges.end());
    }
    return w;
  }
  auto mn = std::min_element(w.vertices.begin(), w.vertices.end()) - w.vertices.begin();
  std::rotate(w.vertices.begin(), w.vertices.begin() + mn, w.vertices.end());
  std::rotate(w.edges.begin(), w.edges.begin() + mn, w.edges.end());
  if (w.vertices.size() > 2 && w.vertices.back() < w.vertices[1]) {
    std::reverse(w.vertices.begin() + 1, w.vertices.end());
    std::reverse(w.edges.begin(), w.edges.end());
  }
  return w;
}

}  // namespace

std::vector<GraphWalk> cycle_decomposition(const MappedGraph& g) {
  auto n = static_cast<int>(g.vertex_count());
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    incident[g.edges[e].u].push_back(e);
    if (g.edges[e].v != g.edges[e].u) incident[g.edges[e].v].push_back(e);
  }
  for (int v = 0; v < n; ++v)
    if (g.vertex_degree(v) > 2)
      throw std::invalid_argument("cycle decomposition: vertex of degree > 2");

  std::vector<bool> used(g.edges.size(), false);
  std::vector<GraphWalk> out;

  auto walk_from = [&](int v0) {
    GraphWalk w;
    w.vertices.push_back(v0);
    int cur = v0;
    for (;;) {
      int next_edge = -1;
      for (int e : incident[cur])
        if (!used[e]) { next_edge = e; break; }
      if (next_edge < 0) break;
      used[next_edge] = true;
      w.edges.push_back(next_edge);
      cur = g.edges[next_edge].u == cur ? g.edges[next_edge].v : g.edges[next_edge].u;
      w.vertices.push_back(cur);
    }
    if (!w.edges.empty() && w.vertices.back() == v0) {
      w.closed = true;
      w.vertices.pop_back();
    }
    return w;
  };

  for (int v = 0; v < n; ++v)
    if (g.vertex_degree(v) == 1 && !used[incident[v][0]]) out.push_back(canonical(walk_from(v)));
  for (int v = 0; v < n; ++v) {
    for (int e : incident[v])
      if (!used[e]) {
        out.push_back(canonical(walk_from(v)));
        break;
      }
  }
  for (int v = 0; v < n; ++v)
    if (g.vertex_degree(v) == 0) out.push_back({false, {v}, {}});

  std::stable_sort(out.begin(), out.end(), [](const GraphWalk& a, const GraphWalk& b) {
    return *std::min_element(a.vertices.begin(), a.vertices.end()) <
           *std::min_element(b.vertices.begin(), b.vertices.end());
  });
  return out;
}

}  // namespace shadowlab
