#include "shadowlab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace shadowlab {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string shadow_svg(const ImageComplex& complex) {
  if (complex.ambient_dim != 2)
    throw std::invalid_argument("svg: only planar complexes can be plotted, got dimension " +
                                std::to_string(complex.ambient_dim));
  if (complex.vertices.empty()) throw std::invalid_argument("svg: empty complex");

  double min_x = complex.vertices[0].x[0].to_double(), max_x = min_x;
  double min_y = complex.vertices[0].x[1].to_double(), max_y = min_y;
  for (const auto& v : complex.vertices) {
    min_x = std::min(min_x, v.x[0].to_double());
    max_x = std::max(max_x, v.x[0].to_double());
    min_y = std::min(min_y, v.x[1].to_double());
    max_y = std::max(max_y, v.x[1].to_double());
  }
  double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  double scale = 600.0 / span, pad = 20.0;
  auto px = [&](int v) { return pad + (complex.vertices[v].x[0].to_double() - min_x) * scale; };
  auto py = [&](int v) { return pad + (max_y - complex.vertices[v].x[1].to_double()) * scale; };
  double width = 2 * pad + (max_x - min_x) * scale;
  double height = 2 * pad + (max_y - min_y) * scale;

  // Chain edges into maximal polylines through degree-2 vertices.
  int n = static_cast<int>(complex.vertices.size());
  std::vector<bool> used(complex.edges.size(), false);
  std::vector<std::vector<int>> polylines;  // vertex index chains
  auto other_end = [&](int e, int v) {
    return complex.edges[static_cast<std::size_t>(e)].first == v
               ? complex.edges[static_cast<std::size_t>(e)].second
               : complex.edges[static_cast<std::size_t>(e)].first;
  };
  auto walk = [&](int v0, int e0) {
    std::vector<int> chain{v0};
    int v = v0, e = e0;
    while (true) {
      used[static_cast<std::size_t>(e)] = true;
      v = other_end(e, v);
      chain.push_back(v);
      if (complex.degree(v) != 2) break;
      int next = -1;
      for (int cand : complex.incidence[static_cast<std::size_t>(v)])
        if (!used[static_cast<std::size_t>(cand)]) next = cand;
      if (next < 0) break;  // closed up or hit the walk's own start
      e = next;
    }
    polylines.push_back(std::move(chain));
  };
  for (int v = 0; v < n; ++v) {
    if (complex.degree(v) == 2) continue;
    for (int e : complex.incidence[static_cast<std::size_t>(v)])
      if (!used[static_cast<std::size_t>(e)]) walk(v, e);
  }
  for (std::size_t e = 0; e < complex.edges.size(); ++e)
    if (!used[e]) walk(complex.edges[e].first, static_cast<int>(e));

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(width) << " "
      << fmt(height) << "\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\">\n";
  for (const auto& chain : polylines) {
    out << "  <polyline fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i) out << " ";
      out << fmt(px(chain[i])) << "," << fmt(py(chain[i]));
    }
    out << "\"/>\n";
  }
  for (int v = 0; v < n; ++v) {
    int deg = complex.degree(v);
    if (deg == 1) {
      out << "  <circle class=\"endpoint\" cx=\"" << fmt(px(v)) << "\" cy=\"" << fmt(py(v))
          << "\" r=\"5\" fill=\"#c0392b\"/>\n";
    } else if (deg >= 3) {
      out << "  <rect class=\"branch\" x=\"" << fmt(px(v) - 4) << "\" y=\"" << fmt(py(v) - 4)
          << "\" width=\"8\" height=\"8\" fill=\"#2980b9\"/>\n";
    } else if (deg == 0) {
      out << "  <circle class=\"isolated\" cx=\"" << fmt(px(v)) << "\" cy=\"" << fmt(py(v))
          << "\" r=\"3\" fill=\"#7f8c8d\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace shadowlab
