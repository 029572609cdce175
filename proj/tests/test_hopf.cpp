#include <doctest.h>

#include "grhopf/enumeration.hpp"
#include "grhopf/hopf.hpp"
#include "helpers.hpp"

using namespace grhopf;
using namespace testing_helpers;

namespace {

const SimpleGraph kEmpty(0);
const OrientedGraph kOEmpty(0);

}  // namespace

TEST_CASE("graph sums: product and linearity") {
  CHECK(product(one(point()), one(point())) == one(SimpleGraph(2)));
  CHECK(product(GraphSum<SimpleGraph>::unit(), one(K(3))) == one(K(3)));
  CHECK(product(one(K(2), 2), one(point(), 3)) == one(K2_point(), 6));
  GraphSum<SimpleGraph> a = one(K(2)) + one(SimpleGraph(2), 2);
  CHECK(counit_delta(a) == 2);
  CHECK(counit_Delta(a) == 0);
  // Isomorphic labelings merge.
  GraphSum<SimpleGraph> b = one(sg(3, {{0, 1}, {1, 2}})) + one(sg(3, {{0, 2}, {2, 1}}));
  CHECK(b.term_count() == 1);
  CHECK(b.coefficient({P3()}) == 2);
  CHECK((a - a).is_zero());
}

TEST_CASE("Delta on simple graphs") {
  CHECK(coproduct_bipartition(point()) == tensor<SimpleGraph>(2, {{{point(), kEmpty}, 1}, {{kEmpty, point()}, 1}}));
  CHECK(coproduct_bipartition(K(2)) ==
        tensor<SimpleGraph>(2, {{{K(2), kEmpty}, 1}, {{kEmpty, K(2)}, 1}, {{point(), point()}, 2}}));
  CHECK(coproduct_bipartition(K(3)) == tensor<SimpleGraph>(2, {{{K(3), kEmpty}, 1},
                                                               {{kEmpty, K(3)}, 1},
                                                               {{point(), K(2)}, 3},
                                                               {{K(2), point()}, 3}}));
  CHECK(coproduct_bipartition(kEmpty) == tensor<SimpleGraph>(2, {{{kEmpty, kEmpty}, 1}}));
}

TEST_CASE("Delta on oriented graphs sums over ideals") {
  OrientedGraph arc = og(2, {{0, 1}});
  OrientedGraph o1(1);
  CHECK(ideals(arc) == std::vector<VertexSet>{0b00, 0b10, 0b11});
  CHECK(coproduct_ideal(arc) ==
        tensor<OrientedGraph>(2, {{{arc, kOEmpty}, 1}, {{o1, o1}, 1}, {{kOEmpty, arc}, 1}}));
  CHECK(ideals(OrientedGraph(3)).size() == 8);
  CHECK(ideals(og(2, {{0, 1}, {1, 0}})) == std::vector<VertexSet>{0b00, 0b11});
}

TEST_CASE("delta on simple graphs") {
  CHECK(coproduct_contraction(K(2)) ==
        tensor<SimpleGraph>(2, {{{K(2), SimpleGraph(2)}, 1}, {{point(), K(2)}, 1}}));
  CHECK(coproduct_contraction(K(3)) == tensor<SimpleGraph>(2, {{{K(3), SimpleGraph(3)}, 1},
                                                               {{point(), K(3)}, 1},
                                                               {{K(2), K2_point()}, 3}}));
  CHECK(coproduct_contraction(P3()) == tensor<SimpleGraph>(2, {{{P3(), SimpleGraph(3)}, 1},
                                                               {{point(), P3()}, 1},
                                                               {{K(2), K2_point()}, 2}}));
  CHECK(coproduct_contraction(SimpleGraph(3)) == tensor<SimpleGraph>(2, {{{SimpleGraph(3), SimpleGraph(3)}, 1}}));
}

TEST_CASE("delta on oriented graphs") {
  OrientedGraph arc = og(2, {{0, 1}});
  OrientedGraph o1(1);
  CHECK(coproduct_contraction(arc) ==
        tensor<OrientedGraph>(2, {{{arc, OrientedGraph(2)}, 1}, {{o1, arc}, 1}}));
  OrientedGraph cyclic = og(3, {{0, 1}, {1, 2}, {2, 0}});
  OrientedGraph two_cycle = og(2, {{0, 1}, {1, 0}});
  OrientedGraph arc_point = og(3, {{0, 1}});
  CHECK(coproduct_contraction(cyclic) == tensor<OrientedGraph>(2, {{{cyclic, OrientedGraph(3)}, 1},
                                                                   {{o1, cyclic}, 1},
                                                                   {{two_cycle, arc_point}, 3}}));
  auto ac = coproduct_contraction(cyclic, Flavor::kOrientedAcyclic);
  CHECK(ac.is_zero());
}

TEST_CASE("counits") {
  CHECK(counit_Delta(kEmpty) == 1);
  CHECK(counit_Delta(point()) == 0);
  CHECK(counit_delta(SimpleGraph(3)) == 1);
  CHECK(counit_delta(K(2)) == 0);
  CHECK(counit_delta(one(K(2)) + one(SimpleGraph(2), 2)) == 2);
  CHECK(counit_delta(OrientedGraph(2)) == 1);
  CHECK(counit_delta(og(2, {{0, 1}})) == 0);
  CHECK(counit_Delta(kOEmpty) == 1);
}

TEST_CASE("reduced coproducts") {
  CHECK(reduced_coproduct(one(point())).is_zero());
  CHECK(reduced_coproduct(one(K(2))) == tensor<SimpleGraph>(2, {{{point(), point()}, 2}}));
  CHECK(iterated_reduced_coproduct(one(K(3)), 2) == tensor<SimpleGraph>(3, {{{point(), point(), point()}, 6}}));
  CHECK(iterated_reduced_coproduct(one(K(3)), 3).is_zero());
  CHECK_THROWS(reduced_coproduct(GraphSum<SimpleGraph>::unit()));
}

TEST_CASE("antipode") {
  CHECK(antipode_recursive(GraphSum<SimpleGraph>::unit()) == GraphSum<SimpleGraph>::unit());
  CHECK(antipode_recursive(point()) == one(point(), -1));
  CHECK(antipode_recursive(K(2)) == one(K(2), -1) + one(SimpleGraph(2), 2));
  // From the contraction form: chromatic values at -1 of K3, K2, K1.
  GraphSum<SimpleGraph> s_k3 = one(K(3), -1) + one(K2_point(), 6) + one(SimpleGraph(3), -6);
  CHECK(antipode_recursive(K(3)) == s_k3);
  CHECK(antipode_from_contraction(K(3)) == s_k3);
  CHECK(antipode_orientation_formula(K(3)) == s_k3);
  CHECK(antipode_orientation_formula(point()) == one(point(), -1));
  CHECK(antipode_orientation_formula(K(2)) == one(K(2), -1) + one(SimpleGraph(2), 2));
  // Linearity and multiplicativity.
  GraphSum<SimpleGraph> a = one(K(2), 3) + one(P3(), Rational(1, 2));
  CHECK(antipode_recursive(a) == antipode_recursive(K(2)) * 3 + antipode_recursive(P3()) * Rational(1, 2));
  CHECK(antipode_recursive(disjoint_union(K(2), P3())) == product(antipode_recursive(K(2)), antipode_recursive(P3())));
}

TEST_CASE("Theta and its acyclic projection") {
  OrientedGraph arc = og(2, {{0, 1}});
  CHECK(theta(K(2)) == one(arc, 2));
  OrientedGraph cyclic = og(3, {{0, 1}, {1, 2}, {2, 0}});
  OrientedGraph transitive = og(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(theta(K(3)) == one(cyclic, 2) + one(transitive, 6));
  GraphSum<OrientedGraph> ac = theta_ac(K(3));
  CHECK(ac.flavor() == Flavor::kOrientedAcyclic);
  CHECK(ac.term_count() == 1);
  CHECK(ac.coefficient({transitive}) == 6);
  CHECK(project_acyclic(theta(K(3))) == ac);
  CHECK(counit_Delta(theta(K(4))) == 0);
}

TEST_CASE("the acyclic flavor drops terms with a cyclic factor") {
  TensorSum<OrientedGraph> t(2, Flavor::kOrientedAcyclic);
  OrientedGraph two_cycle = og(2, {{0, 1}, {1, 0}});
  t.add({two_cycle, OrientedGraph(1)}, 5);
  CHECK(t.is_zero());
  t.add({og(2, {{0, 1}}), OrientedGraph(1)}, 5);
  CHECK(t.term_count() == 1);
  GraphSum<OrientedGraph> plain = one(two_cycle);
  CHECK_THROWS(plain += GraphSum<OrientedGraph>(1, Flavor::kOrientedAcyclic));
}

TEST_CASE("double bialgebra compatibility on P4 and C4") {
  for (const SimpleGraph& g : {SimpleGraph::path(4), SimpleGraph::cycle(4), K(4)}) {
    auto lhs = coproduct_Delta(coproduct_contraction(g), 0);
    auto rhs = multiply_1_3_24(coproduct_delta(coproduct_delta(coproduct_bipartition(g), 0), 2));
    CHECK(lhs == rhs);
  }
}
