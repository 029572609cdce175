#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "grhopf/canonical.hpp"
#include "grhopf/graph.hpp"
#include "grhopf/hopf.hpp"
#include "grhopf/poly.hpp"
#include "grhopf/tensor.hpp"

namespace grhopf {

/// A multiplicative map from basis graphs to a commutative ring V (Rational
/// for characters, UniPoly for polynomial-valued morphisms). Values are
/// memoized by canonical key and shared between copies; concurrent
/// evaluation is safe.
///
/// In Whole mode the rule sees every graph as given. In Split mode the rule
/// only sees connected graphs and values on disconnected graphs are products
/// over components. The rule receives the map itself for recursion.
template <class G, class V>
class MultiplicativeMap {
 public:
  enum class Mode { kWhole, kSplit };
  using Rule = std::function<V(const MultiplicativeMap&, const G&)>;

  MultiplicativeMap(std::string name, Mode mode, Rule rule)
      : state_(std::make_shared<State>(std::move(name), mode, std::move(rule))) {}

  const std::string& name() const { return state_->name; }
  Mode mode() const { return state_->mode; }

  V operator()(const G& g) const {
    if (g.order() == 0) return V(1);
    if (state_->mode == Mode::kWhole) return memoized(g);
    V value(1);
    SetPartition components = connected_components(g);
    for (VertexSet block : components.blocks()) {
      value *= memoized(induced_subgraph(g, block));
    }
    return value;
  }

  /// Linear extension to an arity-1 sum.
  V operator()(const GraphSum<G>& a) const {
    if (a.arity() != 1) throw std::invalid_argument("map needs an arity-1 sum");
    V total(0);
    for (const auto& [k, t] : a.terms()) {
      V v = (*this)(t.factors[0]);
      v *= t.coeff;
      total += v;
    }
    return total;
  }

  std::size_t cache_size() const {
    std::shared_lock lock(state_->mutex);
    return state_->memo.size();
  }

 private:
  struct State {
    State(std::string n, Mode m, Rule r) : name(std::move(n)), mode(m), rule(std::move(r)) {}
    std::string name;
    Mode mode;
    Rule rule;
    mutable std::shared_mutex mutex;
    std::unordered_map<std::string, V> memo;
  };

  V memoized(const G& g) const {
    Canonical<G> c = canonical_form(g);
    {
      std::shared_lock lock(state_->mutex);
      auto it = state_->memo.find(c.key.bytes);
      if (it != state_->memo.end()) return it->second;
    }
    V value = state_->rule(*this, c.graph);
    std::unique_lock lock(state_->mutex);
    return state_->memo.try_emplace(c.key.bytes, std::move(value)).first->second;
  }

  std::shared_ptr<State> state_;
};

template <class G>
using CharacterOf = MultiplicativeMap<G, Rational>;
using Character = CharacterOf<SimpleGraph>;
using OrientedCharacter = CharacterOf<OrientedGraph>;
using PolyMorphism = MultiplicativeMap<SimpleGraph, UniPoly>;

// --- builtin characters -----------------------------------------------------

namespace characters {

Character epsilon_Delta();
Character epsilon_delta();
/// (1+y)^|E|.
Character mu(const Rational& y);
/// Sum over covering graphs H of y^|E(H)|.
Character lambda(const Rational& y);
/// (-1)^cc |O_sc(G)|.
Character alpha();
/// phi_chr(G)(q).
Character chromatic_at(const Rational& q);
/// Z_G(x, y).
Character counting_at(const Rational& x, const Rational& y);

OrientedCharacter oriented_epsilon_Delta();
/// 1 when the graph has no arcs.
OrientedCharacter oriented_epsilon_delta();
/// Constant 1.
OrientedCharacter oriented_mu_1();
/// (-1)^cc when every weak component is strongly connected, 0 otherwise.
OrientedCharacter mu_sc();

}  // namespace characters

// --- convolutions and inverses ----------------------------------------------

/// (lambda (x) mu) o Delta.
template <class G>
CharacterOf<G> convolve_Delta(const CharacterOf<G>& lambda, const CharacterOf<G>& mu) {
  return CharacterOf<G>(lambda.name() + "*" + mu.name(), CharacterOf<G>::Mode::kSplit,
                        [lambda, mu](const CharacterOf<G>&, const G& g) {
                          Rational total = 0;
                          for_each_Delta_term(g, [&](const G& l, const G& r) { total += lambda(l) * mu(r); });
                          return total;
                        });
}

/// (lambda (x) mu) o delta.
template <class G>
CharacterOf<G> convolve_delta(const CharacterOf<G>& lambda, const CharacterOf<G>& mu) {
  return CharacterOf<G>(lambda.name() + "#" + mu.name(), CharacterOf<G>::Mode::kSplit,
                        [lambda, mu](const CharacterOf<G>&, const G& g) {
                          Rational total = 0;
                          for_each_delta_term(g, [&](const G& c, const G& r) { total += lambda(c) * mu(r); });
                          return total;
                        });
}

/// Inverse for Delta-convolution by nu(G) = -sum_{I nonempty} lambda(G|I) nu(G|V\I),
/// I ranging over the Delta left factors (vertex subsets, or ideals).
template <class G>
CharacterOf<G> char_inverse_Delta_recursive(const CharacterOf<G>& lambda) {
  return CharacterOf<G>("inv*(" + lambda.name() + ")", CharacterOf<G>::Mode::kSplit,
                        [lambda](const CharacterOf<G>& self, const G& g) {
                          Rational total = 0;
                          for_each_Delta_term(g, [&](const G& l, const G& r) {
                            if (l.order() != 0) total -= lambda(l) * self(r);
                          });
                          return total;
                        });
}

/// Inverse for Delta-convolution as lambda o S (simple graphs).
Character char_inverse_Delta(const Character& lambda);

/// Inverse for delta-convolution; requires lambda(.) != 0 (std::domain_error).
template <class G>
CharacterOf<G> char_inverse_delta(const CharacterOf<G>& lambda) {
  Rational point = lambda(G(1));
  if (point == 0) {
    throw std::domain_error("character " + lambda.name() + " vanishes on the single vertex: not invertible");
  }
  return CharacterOf<G>("inv#(" + lambda.name() + ")", CharacterOf<G>::Mode::kSplit,
                        [lambda, point](const CharacterOf<G>& self, const G& g) -> Rational {
                          if (g.order() == 1) return Rational(1) / point;
                          // g is connected with at least one edge; the one-block
                          // partition contributes lambda(.) * nu(g).
                          Rational rest = 0;
                          for_each_connected_partition(g, [&](const SetPartition& p) {
                            if (p.block_count() == 1) return;
                            rest += lambda(contract(g, p)) * self(restrict(g, p));
                          });
                          return -rest / point;
                        });
}

// --- polynomial morphisms ---------------------------------------------------

namespace morphisms {

/// Chromatic polynomial.
PolyMorphism phi_chr();
/// X^|V|.
PolyMorphism phi0();
/// Z_G(X, y).
PolyMorphism zeta(const Rational& y);

}  // namespace morphisms

/// phi <~ lambda: G -> sum over connected partitions of phi(G/~) lambda(G|~).
PolyMorphism act(const PolyMorphism& phi, const Character& lambda);

/// sum_n lambda^{(x)n}(reduced Delta^{(n-1)}(g)) X(X-1)...(X-n+1)/n!, by a
/// subset recursion over ordered set partitions into nonempty blocks.
UniPoly phi_lambda(const Character& lambda, const SimpleGraph& g);
/// The same through explicit iterated reduced coproducts (reference route).
UniPoly phi_lambda_by_coproducts(const Character& lambda, const SimpleGraph& g);
/// phi_lambda as a memoized morphism.
PolyMorphism phi_lambda(const Character& lambda);

}  // namespace grhopf
