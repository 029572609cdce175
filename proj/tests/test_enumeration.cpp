#include <doctest.h>

#include "grhopf/enumeration.hpp"
#include "grhopf/invariants.hpp"
#include "helpers.hpp"

using namespace grhopf;
using namespace testing_helpers;

TEST_CASE("subgraph families of K3") {
  CHECK(count_subgraphs(K(3), SubgraphFamily::kSpanning) == 8);
  CHECK(count_subgraphs(K(3), SubgraphFamily::kCovering) == 4);
  CHECK(count_subgraphs(K(3), SubgraphFamily::kCoveringForest) == 3);
  CHECK(count_subgraphs(K(3), SubgraphFamily::kSpanningForest) == 7);
  for (const SimpleGraph& h : covering_graphs(K(3))) CHECK(component_count(h) == 1);
  for (const SimpleGraph& h : spanning_forests(K(3))) CHECK(is_forest(h));
  for (const SimpleGraph& h : spanning_graphs(K(3))) CHECK(h.order() == 3);
}

TEST_CASE("covering graphs of a disconnected graph keep the component count") {
  SimpleGraph g = sg(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  for (const SimpleGraph& h : covering_graphs(g)) CHECK(component_count(h) == 2);
  // 4 covering graphs of the triangle times 1 for the edge.
  CHECK(covering_graphs(g).size() == 4);
  CHECK(covering_forests(g).size() == 3);
}

TEST_CASE("orientations") {
  CHECK(orientations(K(3)).size() == 8);
  CHECK(acyclic_orientations(K(3)).size() == 6);
  CHECK(strongly_connected_orientations(K(3)).size() == 2);
  CHECK(acyclic_orientations(K(2)).size() == 2);
  CHECK(count_acyclic_orientations(K(4)) == 24);
  // A single vertex is strongly connected; a bridge never is.
  CHECK(count_strongly_connected_orientations(point()) == 1);
  CHECK(count_strongly_connected_orientations(K(2)) == 0);
  CHECK(count_strongly_connected_orientations(SimpleGraph::cycle(4)) == 2);
  CHECK(orientation(K(2), 0) == og(2, {{0, 1}}));
  CHECK(orientation(K(2), 1) == og(2, {{1, 0}}));
}

TEST_CASE("Stanley counts") {
  CHECK(stanley_count(K(3)) == 6);
  CHECK(chromatic_polynomial(K(3))(Rational(-1)) == -6);
  CHECK(stanley_count(SimpleGraph(2)) == 1);
  CHECK(stanley_count(P3()) == 4);
  CHECK(chromatic_polynomial(P3())(Rational(-1)) == -4);
}

TEST_CASE("total acyclicity") {
  CHECK(is_totally_acyclic(mg(3, {{0, 1}, {1, 2}, {0, 2}}, {})));
  CHECK(is_totally_acyclic(mg(3, {}, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK_FALSE(is_totally_acyclic(mg(3, {}, {{0, 1}, {1, 2}, {2, 0}})));
  // Walk 2->0, 0-1, 1-2 closes through one arc.
  MixedGraph excluded = mg(3, {{0, 1}, {1, 2}}, {{2, 0}});
  CHECK_FALSE(is_totally_acyclic(excluded));
  CHECK_FALSE(is_totally_acyclic_by_walks(excluded));
  MixedGraph fine = mg(3, {{0, 1}}, {{0, 2}, {1, 2}});
  CHECK(is_totally_acyclic(fine));
  CHECK(is_totally_acyclic_by_walks(fine));
  // A 2-cycle of arcs is not representable in a mixed graph on one pair,
  // so the shortest bad cycle uses an edge plus an arc on a triangle.
  CHECK_FALSE(is_totally_acyclic(mg(3, {{0, 1}}, {{1, 2}, {2, 0}})));
}

TEST_CASE("totally acyclic partial orientations") {
  std::vector<MixedGraph> k2 = totally_acyclic_partial_orientations(K(2));
  CHECK(k2.size() == 3);
  CHECK(count_totally_acyclic_partial_orientations(P3()) == 9);
  // K3: of 27 states drop the 2 cyclic orientations, the 6 states with one
  // arc and two edges, and 6 of the 12 states with two arcs and one edge.
  CHECK(count_totally_acyclic_partial_orientations(K(3)) == 27 - 2 - 6 - 6);
  for (const MixedGraph& h : totally_acyclic_partial_orientations(K(3))) {
    CHECK(gr(h) == K(3));
    CHECK(is_totally_acyclic_by_walks(h));
  }
  std::vector<EdgeState> bad{EdgeState::kUnoriented, EdgeState::kBackward, EdgeState::kUnoriented};
  CHECK_FALSE(is_totally_acyclic(partial_orientation(K(3), bad)));
}

TEST_CASE("partial orientations respect the edge cap") {
  SimpleGraph big = SimpleGraph::complete(7);  // 21 edges
  CHECK_THROWS_AS(count_totally_acyclic_partial_orientations(big), ResourceCapExceeded);
  CHECK_THROWS_AS(antipode_orientation_formula(big), ResourceCapExceeded);
}

TEST_CASE("antipode by orientations on small cases") {
  GraphSum<SimpleGraph> s_point = antipode_orientation_formula(point());
  CHECK(s_point == one(point(), -1));
  CHECK(antipode_orientation_formula(K(2)) == one(K(2), -1) + one(SimpleGraph(2), 2));
  auto classes = signed_partial_orientation_classes(K(2));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::pair<EdgeSet, std::int64_t>{0, 2});
  CHECK(classes[1] == std::pair<EdgeSet, std::int64_t>{1, -1});
}
