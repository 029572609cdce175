#include "grhopf/characters.hpp"

#include <vector>

#include "grhopf/enumeration.hpp"
#include "grhopf/invariants.hpp"

namespace grhopf {

namespace characters {

namespace {

Character whole(std::string name, std::function<Rational(const SimpleGraph&)> f) {
  return Character(std::move(name), Character::Mode::kWhole,
                   [f = std::move(f)](const Character&, const SimpleGraph& g) { return f(g); });
}

OrientedCharacter whole_oriented(std::string name, std::function<Rational(const OrientedGraph&)> f) {
  return OrientedCharacter(std::move(name), OrientedCharacter::Mode::kWhole,
                           [f = std::move(f)](const OrientedCharacter&, const OrientedGraph& g) { return f(g); });
}

Rational sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

Character epsilon_Delta() {
  return whole("eps_Delta", [](const SimpleGraph& g) -> Rational { return counit_Delta(g); });
}

Character epsilon_delta() {
  return whole("eps_delta", [](const SimpleGraph& g) -> Rational { return counit_delta(g); });
}

Character mu(const Rational& y) {
  return whole("mu_" + to_string(y), [y](const SimpleGraph& g) -> Rational { return character_mu_y(g, y); });
}

Character lambda(const Rational& y) {
  return whole("lambda_" + to_string(y), [y](const SimpleGraph& g) -> Rational { return character_lambda_y(g, y); });
}

Character alpha() {
  return whole("alpha", [](const SimpleGraph& g) -> Rational {
    return sign(component_count(g)) * Rational(count_strongly_connected_orientations(g));
  });
}

Character chromatic_at(const Rational& q) {
  return whole("chr@" + to_string(q), [q](const SimpleGraph& g) -> Rational { return chromatic_polynomial(g)(q); });
}

Character counting_at(const Rational& x, const Rational& y) {
  return whole("Z@" + to_string(x) + "," + to_string(y),
               [x, y](const SimpleGraph& g) -> Rational { return fk_polynomial(g)(x, y); });
}

OrientedCharacter oriented_epsilon_Delta() {
  return whole_oriented("eps_Delta", [](const OrientedGraph& g) -> Rational { return counit_Delta(g); });
}

OrientedCharacter oriented_epsilon_delta() {
  return whole_oriented("eps_delta", [](const OrientedGraph& g) -> Rational { return counit_delta(g); });
}

OrientedCharacter oriented_mu_1() {
  return whole_oriented("mu_1", [](const OrientedGraph&) -> Rational { return Rational(1); });
}

OrientedCharacter mu_sc() {
  return whole_oriented("mu_sc", [](const OrientedGraph& g) -> Rational {
    return components_strongly_connected(g) ? sign(component_count(g)) : Rational(0);
  });
}

}  // namespace characters

Character char_inverse_Delta(const Character& lambda) {
  return Character("inv*(" + lambda.name() + ")", Character::Mode::kSplit,
                   [lambda](const Character&, const SimpleGraph& g) { return lambda(antipode_recursive(g)); });
}

namespace morphisms {

PolyMorphism phi_chr() {
  return PolyMorphism("phi_chr", PolyMorphism::Mode::kWhole,
                      [](const PolyMorphism&, const SimpleGraph& g) { return chromatic_polynomial(g); });
}

PolyMorphism phi0() {
  return PolyMorphism("phi_0", PolyMorphism::Mode::kWhole,
                      [](const PolyMorphism&, const SimpleGraph& g) { return grhopf::phi0(g); });
}

PolyMorphism zeta(const Rational& y) {
  return PolyMorphism("zeta_" + to_string(y), PolyMorphism::Mode::kWhole,
                      [y](const PolyMorphism&, const SimpleGraph& g) { return grhopf::zeta(g, y); });
}

}  // namespace morphisms

PolyMorphism act(const PolyMorphism& phi, const Character& lambda) {
  return PolyMorphism(phi.name() + "<~" + lambda.name(), PolyMorphism::Mode::kSplit,
                      [phi, lambda](const PolyMorphism&, const SimpleGraph& g) {
                        UniPoly total;
                        for_each_delta_term(g, [&](const SimpleGraph& c, const SimpleGraph& r) {
                          total += phi(c) * lambda(r);
                        });
                        return total;
                      });
}

UniPoly phi_lambda(const Character& lambda, const SimpleGraph& g) {
  int n = g.order();
  if (n > 20) throw std::out_of_range("phi_lambda limited to 20 vertices");
  VertexSet all = all_vertices(n);
  std::vector<Rational> value(std::size_t{1} << n);
  for (VertexSet s = 1; s <= all; ++s) value[s] = lambda(induced_subgraph(g, s));
  // f[s]: sum over ordered partitions of s into k nonempty blocks of the
  // product of lambda over blocks; iterated over k.
  std::vector<Rational> f(std::size_t{1} << n, Rational(0));
  f[0] = 1;
  UniPoly result = n == 0 ? UniPoly(1) : UniPoly();
  Rational factorial = 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<Rational> next(std::size_t{1} << n, Rational(0));
    for (VertexSet s = 1; s <= all; ++s) {
      for (VertexSet b = s; b != 0; b = (b - 1) & s) {
        if (f[s & ~b] != 0 && value[b] != 0) next[s] += value[b] * f[s & ~b];
      }
    }
    f = std::move(next);
    factorial *= k;
    if (f[all] != 0) result += UniPoly::falling_factorial(k) * Rational(f[all] / factorial);
  }
  return result;
}

UniPoly phi_lambda_by_coproducts(const Character& lambda, const SimpleGraph& g) {
  if (g.order() == 0) return UniPoly(1);
  GraphSum<SimpleGraph> a = GraphSum<SimpleGraph>::basis(g);
  UniPoly result;
  Rational factorial = 1;
  for (int k = 1; k <= g.order(); ++k) {
    factorial *= k;
    TensorSum<SimpleGraph> t = iterated_reduced_coproduct(a, k - 1);
    Rational total = 0;
    for (const auto& [key, term] : t.terms()) {
      Rational p = term.coeff;
      for (const SimpleGraph& h : term.factors) p *= lambda(h);
      total += p;
    }
    if (total != 0) result += UniPoly::falling_factorial(k) * Rational(total / factorial);
  }
  return result;
}

PolyMorphism phi_lambda(const Character& lambda) {
  return PolyMorphism("phi[" + lambda.name() + "]", PolyMorphism::Mode::kSplit,
                      [lambda](const PolyMorphism&, const SimpleGraph& g) { return phi_lambda(lambda, g); });
}

}  // namespace grhopf
