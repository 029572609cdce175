#include <doctest.h>

#include <thread>

#include "grhopf/characters.hpp"
#include "grhopf/enumeration.hpp"
#include "grhopf/invariants.hpp"
#include "helpers.hpp"

using namespace grhopf;
using namespace testing_helpers;

namespace {

const UniPoly x = UniPoly::X();

}  // namespace

TEST_CASE("characters are multiplicative and unital") {
  Character mu1 = characters::mu(1);
  CHECK(mu1(SimpleGraph(0)) == 1);
  CHECK(mu1(K(3)) == 8);
  CHECK(mu1(disjoint_union(K(3), K(2))) == 16);
  Character a = characters::alpha();
  CHECK(a(K(3)) == -2);
  CHECK(a(point()) == -1);
  CHECK(a(disjoint_union(K(3), K(3))) == 4);
  CHECK(characters::lambda(1)(K(3)) == 4);
  CHECK(characters::chromatic_at(3)(K(3)) == 6);
  CHECK(characters::counting_at(2, 1)(K(2)) == 6);
  // Values on the empty graph are never delegated to the rule.
  Character odd("odd", Character::Mode::kWhole, [](const Character&, const SimpleGraph&) { return Rational(7); });
  CHECK(odd(SimpleGraph(0)) == 1);
  CHECK(odd(point()) == 7);
}

TEST_CASE("convolutions") {
  Character eD = characters::epsilon_Delta();
  Character ed = characters::epsilon_delta();
  Character l2 = characters::lambda(2);
  for (const SimpleGraph& g : {point(), K(2), K(3), P3(), SimpleGraph::cycle(4)}) {
    CHECK(convolve_Delta(eD, l2)(g) == l2(g));
    CHECK(convolve_delta(ed, l2)(g) == l2(g));
    CHECK(convolve_delta(l2, ed)(g) == l2(g));
  }
  CHECK(convolve_delta(characters::mu(0), characters::lambda(-1))(K(2)) == 0);
  OrientedCharacter o1 = characters::oriented_mu_1();
  OrientedCharacter sc = characters::mu_sc();
  CHECK(convolve_Delta(o1, sc)(og(2, {{0, 1}})) == 0);
  CHECK(sc(og(2, {{0, 1}, {1, 0}})) == -1);
  CHECK(sc(og(2, {{0, 1}})) == 0);
  CHECK(sc(OrientedGraph(2)) == 1);
}

TEST_CASE("inverses") {
  Character eD = characters::epsilon_Delta();
  Character ed = characters::epsilon_delta();
  for (const SimpleGraph& g : {point(), K(2), K(3), P3()}) {
    CHECK(char_inverse_Delta(eD)(g) == eD(g));
    CHECK(char_inverse_delta(ed)(g) == ed(g));
    CHECK(char_inverse_Delta(characters::mu(1))(g) == characters::alpha()(g));
    CHECK(char_inverse_Delta(characters::mu(2))(g) == fk_polynomial(g)(-1, 2));
    CHECK(char_inverse_delta(characters::mu(0))(g) == characters::lambda(-1)(g));
  }
  Character l = characters::lambda(3);
  CHECK(convolve_delta(l, char_inverse_delta(l))(K(3)) == 0);
  CHECK_THROWS_AS(char_inverse_delta(characters::chromatic_at(0)), std::domain_error);
}

TEST_CASE("action on polynomial morphisms") {
  PolyMorphism chr = morphisms::phi_chr();
  CHECK(act(chr, characters::epsilon_delta())(K(3)) == chr(K(3)));
  Rational y(5, 3);
  CHECK(act(morphisms::phi0(), characters::lambda(y))(K(2)) == x * x + x * y);
  CHECK(act(chr, characters::mu(y))(K(2)) == x * x + x * y);
}

TEST_CASE("phi_lambda") {
  Character ed = characters::epsilon_delta();
  CHECK(phi_lambda(ed, K(2)) == x * (x - 1));
  Character l = characters::lambda(Rational(2, 7));
  CHECK(phi_lambda(l, point()) == x * l(point()));
  CHECK(phi_lambda(characters::mu(1), K(2)) == x * x + x);
  CHECK(phi_lambda_by_coproducts(characters::mu(1), K(2)) == x * x + x);
  CHECK(phi_lambda(ed)(K(3)) == chromatic_polynomial(K(3)));
  CHECK(phi_lambda(characters::mu(0), K(3)) == x * x * x);
}

TEST_CASE("memoized maps are safe to share across threads") {
  Character inv = char_inverse_Delta_recursive(characters::mu(1));
  std::vector<SimpleGraph> graphs{K(4), SimpleGraph::cycle(5), P3(), K(3), SimpleGraph::path(5)};
  std::vector<Rational> expected;
  for (const SimpleGraph& g : graphs) expected.push_back(characters::alpha()(g));
  std::vector<std::thread> pool;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t]() {
      for (int r = 0; r < 5; ++r) {
        for (std::size_t i = 0; i < graphs.size(); ++i) ok[t] &= inv(graphs[(i + t) % graphs.size()]) == expected[(i + t) % graphs.size()];
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (int v : ok) CHECK(v == 1);
  CHECK(inv.cache_size() > 0);
}
