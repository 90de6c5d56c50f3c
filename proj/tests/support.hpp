#pragma once

#include <random>
#include <vector>

#include "shadowlab/circle_map.hpp"
#include "shadowlab/mapped_graph.hpp"
#include "shadowlab/rational.hpp"

namespace shadowlab::testsupport {

// All sampling uses raw mt19937_64 draws so the sequences are identical on
// every platform.
inline long draw(std::mt19937_64& gen, long lo, long hi) {
  return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rational dyadic(std::mt19937_64& gen, long denom_pow = 4) {
  long den = 1L << denom_pow;
  return Rational(draw(gen, -den, den), den);
}

/// Valid circle map with `pieces` pieces, arbitrary lifts, prescribed wrap.
inline PLCircleMap random_circle_map(std::mt19937_64& gen, long wrap, int pieces) {
  std::vector<Rational> breaks{Rational(0)};
  std::vector<bool> taken(16, false);
  for (int i = 1; i < pieces; ++i) {
    long j;
    do {
      j = draw(gen, 1, 15);
    } while (taken[static_cast<std::size_t>(j)]);
    taken[static_cast<std::size_t>(j)] = true;
    breaks.push_back(Rational(j, 16));
  }
  std::sort(breaks.begin(), breaks.end());
  std::vector<Rational> lifts;
  lifts.reserve(breaks.size());
  for (std::size_t i = 0; i < breaks.size(); ++i) lifts.push_back(dyadic(gen));
  return PLCircleMap(std::move(breaks), std::move(lifts), wrap);
}

/// Circle map whose pieces are all strictly monotone (nonzero slope), with
/// prescribed nonzero wrap.
inline PLCircleMap random_monotone_circle_map(std::mt19937_64& gen, long wrap, int pieces) {
  std::vector<Rational> breaks{Rational(0)};
  for (int i = 1; i < pieces; ++i) breaks.push_back(Rational(i, pieces));
  std::vector<Rational> lifts{dyadic(gen)};
  for (int i = 1; i < pieces; ++i) {
    Rational delta;
    do {
      delta = Rational(draw(gen, -8, 8), 16);
    } while (delta.sign() == 0);
    lifts.push_back(lifts.back() + delta);
  }
  // wrap edge must have nonzero slope too
  if (lifts.front() + Rational(wrap) == lifts.back()) lifts.back() += Rational(1, 32);
  return PLCircleMap(std::move(breaks), std::move(lifts), wrap);
}

/// Line-target path graph with distinct consecutive values.
inline MappedGraph random_line_path(std::mt19937_64& gen, int vertices) {
  MappedGraph g;
  g.target = TargetSpace::Line;
  g.vertex_values.push_back(dyadic(gen));
  for (int i = 1; i < vertices; ++i) {
    Rational v;
    do {
      v = dyadic(gen);
    } while (v == g.vertex_values.back());
    g.vertex_values.push_back(v);
    g.edges.push_back({i - 1, i, g.vertex_values[static_cast<std::size_t>(i - 1)], v});
  }
  return g;
}

/// Circle-target cycle graph tracing a circle map's graph: vertex j carries
/// the value at break j, edges the lift spans between consecutive breaks.
inline MappedGraph cycle_graph_of(const PLCircleMap& f) {
  MappedGraph g;
  g.target = TargetSpace::Circle;
  const auto& breaks = f.breakpoints();
  std::size_t m = breaks.size();
  for (std::size_t j = 0; j < m; ++j) g.vertex_values.push_back(f.eval(breaks[j]));
  for (std::size_t j = 0; j < m; ++j) {
    Rational t_next = (j + 1 < m) ? breaks[j + 1] : breaks[0] + 1;
    g.edges.push_back({static_cast<int>(j), static_cast<int>((j + 1) % m),
                       f.eval_lift(breaks[j]), f.eval_lift(t_next)});
  }
  return g;
}

}  // namespace shadowlab::testsupport
