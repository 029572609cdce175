#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "grhopf/graph.hpp"
#include "grhopf/tensor.hpp"

namespace testing_helpers {

using namespace grhopf;

inline SimpleGraph sg(int n, std::initializer_list<std::pair<int, int>> edges = {}) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline OrientedGraph og(int n, std::initializer_list<std::pair<int, int>> arcs = {}) {
  OrientedGraph g(n);
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

inline MixedGraph mg(int n, std::initializer_list<std::pair<int, int>> edges,
                     std::initializer_list<std::pair<int, int>> arcs) {
  MixedGraph h(n);
  for (auto [u, v] : edges) h.add_edge(u, v);
  for (auto [u, v] : arcs) h.add_arc(u, v);
  return h;
}

inline const SimpleGraph& point() {
  static const SimpleGraph g(1);
  return g;
}
inline SimpleGraph K(int n) { return SimpleGraph::complete(n); }
inline SimpleGraph P3() { return SimpleGraph::path(3); }
/// K2 plus an isolated vertex.
inline SimpleGraph K2_point() { return sg(3, {{0, 1}}); }

template <class G>
GraphSum<G> one(const G& g, const Rational& c = 1) {
  GraphSum<G> s = GraphSum<G>::basis(g);
  return s * c;
}

template <class G>
GraphSum<G> sum(std::initializer_list<std::pair<G, Rational>> terms) {
  GraphSum<G> s;
  for (const auto& [g, c] : terms) s.add({g}, c);
  return s;
}

template <class G>
TensorSum<G> tensor(int arity, std::initializer_list<std::pair<std::vector<G>, Rational>> terms,
                    Flavor flavor = default_flavor<G>()) {
  TensorSum<G> t(arity, flavor);
  for (const auto& [f, c] : terms) t.add(f, c);
  return t;
}

}  // namespace testing_helpers
