#include "shadowlab/circle_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace shadowlab {

PLCircleMap::PLCircleMap(std::vector<Rational> breakpoints, std::vector<Rational> lifts,
                         long wrap)
    : breaks_(std::move(breakpoints)), lifts_(std::move(lifts)), wrap_(wrap) {
  if (breaks_.empty() || breaks_.size() != lifts_.size())
    throw std::invalid_argument("circle map: breakpoint/lift size mismatch");
  if (breaks_.front().sign() != 0)
    throw std::invalid_argument("circle map: first breakpoint must be 0");
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw std::invalid_argument("circle map: breakpoints not increasing");
  if (!(breaks_.back() < Rational(1)))
    throw std::invalid_argument("circle map: breakpoints must lie in [0,1)");
}

Rational PLCircleMap::eval_lift(const Rational& t) const {
  mpz_class n = t.floor_z();
  Rational x = t - Rational(n);
  // Largest piece start <= x.
  std::size_t i = std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin() - 1;
  Rational x1 = (i + 1 < breaks_.size()) ? breaks_[i + 1] : Rational(1);
  Rational l1 = (i + 1 < lifts_.size()) ? lifts_[i + 1] : lifts_[0] + Rational(wrap_);
  Rational v = lifts_[i];
  if (x != breaks_[i]) v += (x - breaks_[i]) / (x1 - breaks_[i]) * (l1 - lifts_[i]);
  return v + Rational(mpz_class(n * wrap_));
}

PLCircleMap PLCircleMap::refined(const std::vector<Rational>& extra) const {
  std::vector<Rational> all = breaks_;
  for (const auto& e : extra) all.push_back(e.frac());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Rational> lifts;
  lifts.reserve(all.size());
  for (const auto& b : all) lifts.push_back(eval_lift(b));
  return {std::move(all), std::move(lifts), wrap_};
}

bool equal_as_maps(const PLCircleMap& f, const PLCircleMap& g) {
  if (f.degree() != g.degree()) return false;
  std::vector<Rational> grid = f.breaks_;
  grid.insert(grid.end(), g.breaks_.begin(), g.breaks_.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  Rational offset = f.eval_lift(grid[0]) - g.eval_lift(grid[0]);
  if (!offset.is_integer()) return false;
  for (const auto& b : grid)
    if (f.eval_lift(b) - g.eval_lift(b) != offset) return false;
  return true;
}

PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g) {
  const auto& gb = g.breakpoints();
  const auto& gl = g.lifts();
  std::vector<Rational> breaks = gb;

  // Parameters where g's lift crosses a breakpoint of f (mod 1): those are
  // the extra corners of f o g.
  for (std::size_t i = 0; i < gb.size(); ++i) {
    Rational x0 = gb[i];
    Rational x1 = (i + 1 < gb.size()) ? gb[i + 1] : Rational(1);
    Rational y0 = gl[i];
    Rational y1 = (i + 1 < gl.size()) ? gl[i + 1] : gl[0] + Rational(g.degree());
    if (y0 == y1) continue;
    Rational lo = min(y0, y1), hi = max(y0, y1);
    for (const auto& b : f.breakpoints()) {
      for (mpz_class m = (lo - b).floor_z();; ++m) {
        Rational y = b + Rational(m);
        if (y < lo) continue;
        if (y > hi) break;
        Rational t = x0 + (y - y0) / (y1 - y0) * (x1 - x0);
        if (t < 1) breaks.push_back(t);
      }
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<Rational> lifts;
  lifts.reserve(breaks.size());
  for (const auto& t : breaks) lifts.push_back(f.eval_lift(g.eval_lift(t)));
  return {std::move(breaks), std::move(lifts), f.degree() * g.degree()};
}

std::vector<Rational> fixed_points(const PLCircleMap& f) {
  std::vector<Rational> out;
  const auto& fb = f.breakpoints();
  for (std::size_t i = 0; i < fb.size(); ++i) {
    Rational x0 = fb[i];
    Rational x1 = (i + 1 < fb.size()) ? fb[i + 1] : Rational(1);
    Rational h0 = f.eval_lift(x0) - x0;
    Rational h1 = f.eval_lift(x1) - x1;
    if (h0 == h1) {
      if (h0.is_integer()) {
        out.push_back(x0);
        out.push_back(x1.frac());
      }
      continue;
    }
    Rational lo = min(h0, h1), hi = max(h0, h1);
    for (mpz_class m = lo.floor_z();; ++m) {
      Rational v(m);
      if (v < lo) continue;
      if (v > hi) break;
      Rational t = x0 + (v - h0) / (h1 - h0) * (x1 - x0);
      out.push_back(t.frac());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TorusCurve::TorusCurve(PLCircleMap first, PLCircleMap second)
    : first_(first.refined(second.breakpoints())), second_(second.refined(first.breakpoints())) {
  if (first_.breakpoints() != second_.breakpoints())
    throw std::logic_error("torus curve: grid refinement mismatch");
}

std::pair<long, long> torus_degree(const TorusCurve& c) {
  return {c.first().degree(), c.second().degree()};
}

std::vector<Rational> diagonal_intersections(const TorusCurve& c) {
  std::vector<Rational> out;
  const auto& b = c.first().breakpoints();
  for (std::size_t i = 0; i < b.size(); ++i) {
    Rational x0 = b[i];
    Rational x1 = (i + 1 < b.size()) ? b[i + 1] : Rational(1);
    Rational h0 = c.first().eval_lift(x0) - c.second().eval_lift(x0);
    Rational h1 = c.first().eval_lift(x1) - c.second().eval_lift(x1);
    if (h0 == h1) {
      // Piece runs parallel to the diagonal; if on it, the left endpoint
      // represents the whole contact segment.
      if (h0.is_integer()) out.push_back(x0);
      continue;
    }
    Rational lo = min(h0, h1), hi = max(h0, h1);
    for (mpz_class m = lo.floor_z();; ++m) {
      Rational v(m);
      if (v < lo) continue;
      if (v > hi) break;
      Rational t = x0 + (v - h0) / (h1 - h0) * (x1 - x0);
      out.push_back(t.frac());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace shadowlab
