#include <doctest.h>

#include "grhopf/invariants.hpp"
#include "helpers.hpp"

using namespace grhopf;
using namespace testing_helpers;

namespace {

const BiPoly X = BiPoly::X();
const BiPoly Y = BiPoly::Y();
const UniPoly x = UniPoly::X();

// Proper colorings by brute force, used to interpolate.
long brute_colorings(const SimpleGraph& g, int q) {
  long count = 0;
  std::vector<int> c(g.order(), 0);
  long total = 1;
  for (int i = 0; i < g.order(); ++i) total *= q;
  for (long code = 0; code < total; ++code) {
    long r = code;
    for (int i = 0; i < g.order(); ++i) {
      c[i] = static_cast<int>(r % q);
      r /= q;
    }
    bool ok = true;
    for (const Edge& e : g.edges()) ok &= c[e.u] != c[e.v];
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(UniPoly::falling_factorial(3) == x * (x - 1) * (x - 2));
  CHECK((x * x + x)(Rational(2)) == 6);
  CHECK((x * x).compose_affine(-1, 0) == x * x);
  CHECK(x.compose_affine(2, 1) == x * 2 + 1);
  CHECK(pow(x + 1, 3) == x * x * x + x * x * 3 + x * 3 + 1);
  CHECK((X * Y + X).substitute(X + Y, Y) == X * Y + Y * Y + X + Y);
  CHECK((X * X * Y).divide_monomial(1, 1) == X);
  CHECK_THROWS_AS((X + Y).divide_monomial(1, 0), std::domain_error);
  CHECK((X * X + X * Y * 3).to_string() == "X^2 + 3*X*Y");
  CHECK(BiPoly(Rational(1, 2)).to_string() == "1/2");
  CHECK((X - X).is_zero());
  CHECK((X * Rational(1, 2)).has_nonnegative_integer_coefficients() == false);
  CHECK((X * X * Y).degree_x() == 2);
  CHECK((X * X + X).lowest_degree_x() == 1);
}

TEST_CASE("chromatic polynomial") {
  CHECK(chromatic_polynomial(SimpleGraph(3)) == x * x * x);
  CHECK(chromatic_polynomial(K(2)) == x * x - x);
  CHECK(chromatic_polynomial(K(3)) == x * (x - 1) * (x - 2));
  CHECK(chromatic_polynomial(SimpleGraph(0)) == UniPoly(1));
  // Interpolation oracle on C5: degree 5 fixed by 6 values.
  SimpleGraph c5 = SimpleGraph::cycle(5);
  UniPoly p = chromatic_polynomial(c5);
  for (int q = 0; q <= 5; ++q) CHECK(p(Rational(q)) == brute_colorings(c5, q));
  CHECK(p == pow(x - 1, 5) - (x - 1));
}

TEST_CASE("Fortuin-Kasteleyn polynomial") {
  CHECK(fk_polynomial(point()) == X);
  CHECK(fk_polynomial(K(2)) == X * X + X * Y);
  CHECK(fk_polynomial(K(3)) == X * X * X + X * X * Y * 3 + X * Y * Y * 3 + X * Y * Y * Y);
}

TEST_CASE("rank-generating and Tutte polynomials") {
  CHECK(tutte_polynomial(K(2)) == X);
  CHECK(tutte_polynomial(K(3)) == X * X + X + Y);
  CHECK(tutte_polynomial(SimpleGraph(4)) == BiPoly(1));
  CHECK(rank_generating_polynomial(K(2)) == X + 1);
  // K4: well known.
  BiPoly k4 = X * X * X + X * X * 3 + X * 2 + X * Y * 4 + Y * 2 + Y * Y * 3 + Y * Y * Y;
  CHECK(tutte_polynomial(K(4)) == k4);
  // Trees: X^{|E|}.
  CHECK(tutte_polynomial(SimpleGraph::path(5)) == pow(X, 4));
  // Cycles: X^{n-1} + ... + X + Y.
  CHECK(tutte_polynomial(SimpleGraph::cycle(4)) == X * X * X + X * X + X + Y);
}

TEST_CASE("deletion-contraction oracle") {
  Multigraph loop(1);
  loop.add_edge(0, 0);
  CHECK(tutte_deletion_contraction(loop) == Y);
  CHECK(tutte_deletion_contraction(Multigraph(K(2))) == X);
  CHECK(tutte_deletion_contraction(Multigraph(K(3))) == X * X + X + Y);
  Multigraph doubled(2);
  doubled.add_edge(0, 1, 2);
  CHECK(tutte_deletion_contraction(doubled) == X + Y);
  CHECK(tutte_deletion_contraction(Multigraph(K(4))) == tutte_polynomial(K(4)));
}

TEST_CASE("conversions between Z and T") {
  CHECK(fk_from_tutte(X, 2, 1) == X * X + X * Y);
  CHECK(fk_from_tutte(BiPoly(1), 4, 4) == pow(X, 4));
  CHECK(tutte_from_fk(fk_polynomial(K(3)), 3, 1) == tutte_polynomial(K(3)));
  CHECK(fk_from_tutte(tutte_polynomial(K(3)), 3, 1) == fk_polynomial(K(3)));
  SimpleGraph g = sg(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  CHECK(fk_from_tutte(tutte_polynomial(g), 5, 2) == fk_polynomial(g));
}

TEST_CASE("zeta, phi0 and the scalar characters") {
  CHECK(zeta(K(3), -1) == x * (x - 1) * (x - 2));
  CHECK(zeta(K(3), 0) == x * x * x);
  CHECK(zeta(K(2), 1) == x * x + x);
  CHECK(phi0(SimpleGraph(0)) == UniPoly(1));
  CHECK(phi0(point()) == x);
  CHECK(phi0(K(3)) == x * x * x);
  CHECK(character_mu_y(K(3), 1) == 8);
  CHECK(character_lambda_y(K(3), 1) == 4);
  CHECK(character_lambda_y(K(3), 0) == 0);
  CHECK(character_lambda_y(SimpleGraph(3), 0) == 1);
  CHECK(character_mu_y(K(2), Rational(-1, 2)) == Rational(1, 2));
}

TEST_CASE("coproduct of K[X]") {
  CHECK(add_coproduct_eval(x) == X + Y);
  CHECK(add_coproduct_eval(x * x) == X * X + X * Y * 2 + Y * Y);
  CHECK(add_coproduct_eval(chromatic_polynomial(K(2))) == (X + Y) * (X + Y - 1));
}
