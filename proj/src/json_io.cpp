#include "shadowlab/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace shadowlab {

namespace {

using nlohmann::json;

Rational coord_from_json(const json& j) {
  if (!j.is_string())
    throw std::invalid_argument("curve json: coordinates must be rational strings, got " +
                                j.dump());
  return Rational::parse(j.get<std::string>());
}

json point_to_json(const Point& p) {
  json arr = json::array();
  for (const auto& c : p.x) arr.push_back(c.str());
  return arr;
}

}  // namespace

PLClosedCurve curve_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("curve json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dimension") || !j.contains("vertices"))
    throw std::invalid_argument("curve json: expected {\"dimension\":..., \"vertices\":...}");
  if (!j["dimension"].is_number_integer())
    throw std::invalid_argument("curve json: dimension must be an integer");
  auto d = j["dimension"].get<long>();
  if (d < 2) throw std::invalid_argument("curve json: dimension must be at least 2");
  if (!j["vertices"].is_array())
    throw std::invalid_argument("curve json: vertices must be an array");

  std::vector<Point> verts;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("curve json: each vertex needs exactly " + std::to_string(d) +
                                  " coordinates");
    std::vector<Rational> coords;
    coords.reserve(row.size());
    for (const auto& c : row) coords.push_back(coord_from_json(c));
    verts.push_back(Point(std::move(coords)));
  }
  return PLClosedCurve(static_cast<std::size_t>(d), std::move(verts));
}

std::string curve_to_json(const PLClosedCurve& curve) {
  json j;
  j["dimension"] = curve.dimension();
  json verts = json::array();
  for (const auto& v : curve.vertices()) verts.push_back(point_to_json(v));
  j["vertices"] = std::move(verts);
  return j.dump(2) + "\n";
}

std::string complex_to_json(const ImageComplex& complex) {
  json j;
  j["ambient_dimension"] = complex.ambient_dim;
  json verts = json::array();
  for (const auto& v : complex.vertices) verts.push_back(point_to_json(v));
  j["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& [a, b] : complex.edges) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

std::string certificate_to_json(const FixedPointCertificate& cert) {
  json j;
  j["epsilon"] = cert.epsilon.str();
  j["k"] = cert.k;
  j["t_diagonal"] = cert.t_diagonal.str();
  j["t_factors"] = json::array({cert.t_psi1.str(), cert.t_psi2.str(), cert.t_psi3.str()});
  j["q"] = json::array({cert.q0.str(), cert.q1.str(), cert.q2.str()});
  j["residuals"] = json::array({cert.r0.str(), cert.r1.str(), cert.r2.str()});
  j["residual_bounds"] = json::array({"0", cert.nu1.str(), cert.nu2.str()});
  if (!cert.points.empty()) {
    json pts = json::array();
    for (const auto& p : cert.points) pts.push_back(point_to_json(p));
    j["points"] = std::move(pts);
  }
  return j.dump(2) + "\n";
}

}  // namespace shadowlab
