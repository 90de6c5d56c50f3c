#include "shadowlab/image_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "shadowlab/errors.hpp"

namespace shadowlab {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

ImageComplex build_image_complex(const std::vector<Segment>& segments) {
  if (segments.empty()) throw std::invalid_argument("arrangement: no segments");
  std::size_t m = segments.front().a.dim();
  for (const auto& s : segments)
    if (s.a.dim() != m || s.b.dim() != m)
      throw std::invalid_argument("arrangement: mixed dimensions");

  // Global event points: all endpoints plus all pairwise intersections.
  std::set<Point> events;
  for (const auto& s : segments) {
    events.insert(s.a);
    events.insert(s.b);
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      auto hit = intersect_segments(segments[i], segments[j]);
      if (hit.kind == SegXKind::Point) {
        events.insert(hit.p);
      } else if (hit.kind == SegXKind::Overlap) {
        events.insert(hit.p);
        events.insert(hit.q);
      }
    }
  }

  // Split every nondegenerate segment at every event point on it; identical
  // sub-edges coming from overlapping segments merge via the canonical key.
  std::map<Point, int> vertex_id;
  std::vector<Point> vertices;
  auto intern = [&](const Point& p) {
    auto [it, fresh] = vertex_id.try_emplace(p, static_cast<int>(vertices.size()));
    if (fresh) vertices.push_back(p);
    return it->second;
  };
  for (const auto& p : events) intern(p);  // std::set order = lexicographic

  std::set<std::pair<int, int>> edge_set;
  for (const auto& s : segments) {
    if (s.degenerate()) continue;
    std::vector<std::pair<Rational, const Point*>> cuts;
    for (const auto& p : events)
      if (auto t = param_on_segment(s, p)) cuts.emplace_back(*t, &p);
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      int u = intern(*cuts[k].second), v = intern(*cuts[k + 1].second);
      if (u == v) continue;  // duplicate event point, zero-length piece
      edge_set.insert(std::minmax(u, v));
    }
  }

  ImageComplex out;
  out.ambient_dim = m;
  out.vertices = std::move(vertices);
  out.edges.assign(edge_set.begin(), edge_set.end());
  out.incidence.assign(out.vertices.size(), {});
  for (std::size_t e = 0; e < out.edges.size(); ++e) {
    out.incidence[out.edges[e].first].push_back(static_cast<int>(e));
    out.incidence[out.edges[e].second].push_back(static_cast<int>(e));
  }
  return out;
}

const char* to_string(TopologyTag tag) {
  switch (tag) {
    case TopologyTag::SimplePath: return "SimplePath";
    case TopologyTag::SimpleClosedCurve: return "SimpleClosedCurve";
    case TopologyTag::Tree: return "Tree";
    case TopologyTag::Disconnected: return "Disconnected";
    case TopologyTag::Other: return "Other";
  }
  return "?";
}

namespace {

// A closed vertex walk through some cycle, for witness reporting. Only called
// when E >= V - C + 1 guarantees one exists.
std::vector<int> find_cycle_walk(const ImageComplex& ic) {
  std::size_t n = ic.vertices.size();
  // DFS tracking the edge used to enter each vertex.
  std::vector<int> parent(n, -1), parent_edge(n, -1), state(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<int> stack = {static_cast<int>(root)};
    state[root] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : ic.incidence[v]) {
        if (e == parent_edge[v]) continue;
        int w = ic.edges[e].first == v ? ic.edges[e].second : ic.edges[e].first;
        if (!state[w]) {
          state[w] = 1;
          parent[w] = v;
          parent_edge[w] = e;
          stack.push_back(w);
        } else {
          // Back edge v-w closes a cycle: walk both tails to the root.
          std::vector<int> pv, pw;
          for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
          for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
          // Trim to the lowest common ancestor.
          while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
            pv.pop_back();
            pw.pop_back();
          }
          std::reverse(pw.begin(), pw.end());
          pv.insert(pv.end(), pw.begin() + 1, pw.end());
          return pv;  // closed: last == first's neighbor via edge e
        }
      }
    }
  }
  return {};
}

}  // namespace

TopologyClass classify(const ImageComplex& ic) {
  TopologyClass out;
  std::size_t V = ic.vertices.size(), E = ic.edges.size();
  if (V == 0) {
    out.tag = TopologyTag::Other;
    out.detail = "empty complex";
    return out;
  }

  UnionFind uf(V);
  for (const auto& [u, v] : ic.edges) uf.unite(u, v);
  std::set<int> roots;
  for (std::size_t v = 0; v < V; ++v) roots.insert(uf.find(static_cast<int>(v)));
  out.components = static_cast<int>(roots.size());

  for (std::size_t v = 0; v < V; ++v) {
    int d = ic.degree(static_cast<int>(v));
    if (d == 1) out.endpoints.push_back(static_cast<int>(v));
    if (d >= 3) out.branch_vertices.push_back(static_cast<int>(v));
  }

  if (out.components > 1) {
    out.tag = TopologyTag::Disconnected;
    out.detail = std::to_string(out.components) + " components";
    return out;
  }

  bool acyclic = (E == V - 1);  // connected
  bool max_deg_2 = out.branch_vertices.empty();

  if (acyclic && max_deg_2 && out.endpoints.size() == 2) {
    out.tag = TopologyTag::SimplePath;
    return out;
  }
  if (E == V && max_deg_2 && out.endpoints.empty()) {
    out.tag = TopologyTag::SimpleClosedCurve;
    out.cycle = find_cycle_walk(ic);
    return out;
  }
  if (acyclic) {
    out.tag = TopologyTag::Tree;
    return out;
  }
  out.tag = TopologyTag::Other;
  out.cycle = find_cycle_walk(ic);
  return out;
}

std::vector<TopologyClass> shadow_classes(const PLClosedCurve& curve) {
  if (!validate_simple(curve))
    throw std::invalid_argument("shadow_classes: curve is not simple");
  std::vector<TopologyClass> out;
  int paths = 0;
  for (int axis = 1; axis <= static_cast<int>(curve.dimension()); ++axis) {
    out.push_back(classify(build_image_complex(project(curve, axis))));
    if (out.back().tag == TopologyTag::SimplePath) ++paths;
  }
  if (paths >= 3)
    throw TheoremViolationError("simple curve produced " + std::to_string(paths) +
                                " simple-path shadows; exact-arithmetic invariant broken");
  return out;
}

PathParameterization::PathParameterization(std::vector<Point> walk) : walk_(std::move(walk)) {
  if (walk_.size() < 2) throw std::invalid_argument("path: need at least one edge");
}

Rational PathParameterization::vertex_param(std::size_t j) const {
  return Rational(static_cast<long>(j), static_cast<long>(edge_count()));
}

Point PathParameterization::eval(const Rational& u) const {
  if (u < 0 || u > 1) throw std::invalid_argument("path eval: parameter outside [0,1]");
  long E = static_cast<long>(edge_count());
  Rational scaled = u * Rational(E);
  mpz_class kz = scaled.floor_z();
  auto k = static_cast<std::size_t>(kz.get_ui());
  if (k >= edge_count()) return walk_.back();  // u == 1
  return lerp(walk_[k], walk_[k + 1], scaled - Rational(kz));
}

Rational PathParameterization::inverse(const Point& p) const {
  long E = static_cast<long>(edge_count());
  for (std::size_t k = 0; k + 1 < walk_.size(); ++k) {
    if (auto s = param_on_segment({walk_[k], walk_[k + 1]}, p))
      return (Rational(static_cast<long>(k)) + *s) / Rational(E);
  }
  throw std::invalid_argument("path inverse: point not on path");
}

PathParameterization path_parameterization(const ImageComplex& ic) {
  TopologyClass cls = classify(ic);
  if (cls.tag != TopologyTag::SimplePath)
    throw std::invalid_argument("path_parameterization: complex is not a simple path");
  int start = cls.endpoints[0], other = cls.endpoints[1];
  if (ic.vertices[other] < ic.vertices[start]) std::swap(start, other);

  std::vector<Point> walk = {ic.vertices[start]};
  int prev_edge = -1, v = start;
  for (std::size_t steps = 0; steps < ic.edges.size(); ++steps) {
    int next_edge = -1;
    for (int e : ic.incidence[v])
      if (e != prev_edge) next_edge = e;
    if (next_edge < 0) break;
    v = ic.edges[next_edge].first == v ? ic.edges[next_edge].second : ic.edges[next_edge].first;
    walk.push_back(ic.vertices[v]);
    prev_edge = next_edge;
  }
  if (walk.size() != ic.edges.size() + 1)
    throw std::logic_error("path walk did not cover the complex");
  return PathParameterization(std::move(walk));
}

}  // namespace shadowlab
