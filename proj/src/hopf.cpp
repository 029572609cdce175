#include "grhopf/hopf.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "grhopf/enumeration.hpp"
#include "grhopf/invariants.hpp"

namespace grhopf {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::kSimple:
      return "simple";
    case Flavor::kOriented:
      return "oriented";
    case Flavor::kOrientedAcyclic:
      return "oriented-acyclic";
  }
  return "unknown";
}

namespace {

void check_enumerable(int n) {
  if (n > 30) throw std::out_of_range("vertex-subset enumeration limited to 30 vertices");
}

}  // namespace

std::vector<VertexSet> ideals(const OrientedGraph& g) {
  int n = g.order();
  check_enumerable(n);
  std::vector<VertexSet> out;
  for (VertexSet s = 0; s <= all_vertices(n); ++s) {
    bool closed = true;
    for_each_bit(s, [&](int v) { closed &= (g.successors(v) & ~s) == 0; });
    if (closed) out.push_back(s);
  }
  return out;
}

void for_each_Delta_term(const SimpleGraph& g,
                         const std::function<void(const SimpleGraph&, const SimpleGraph&)>& visit) {
  int n = g.order();
  check_enumerable(n);
  VertexSet all = all_vertices(n);
  for (VertexSet s = 0; s <= all; ++s) visit(induced_subgraph(g, s), induced_subgraph(g, all & ~s));
}

void for_each_Delta_term(
    const OrientedGraph& g,
    const std::function<void(const OrientedGraph&, const OrientedGraph&)>& visit) {
  VertexSet all = all_vertices(g.order());
  for (VertexSet s : ideals(g)) visit(induced_subgraph(g, s), induced_subgraph(g, all & ~s));
}

void for_each_delta_term(const SimpleGraph& g,
                         const std::function<void(const SimpleGraph&, const SimpleGraph&)>& visit) {
  for_each_connected_partition(g, [&](const SetPartition& p) { visit(contract(g, p), restrict(g, p)); });
}

void for_each_delta_term(
    const OrientedGraph& g,
    const std::function<void(const OrientedGraph&, const OrientedGraph&)>& visit) {
  for_each_connected_partition(g, [&](const SetPartition& p) { visit(contract(g, p), restrict(g, p)); });
}

TensorSum<SimpleGraph> coproduct_bipartition(const SimpleGraph& g) {
  TensorSum<SimpleGraph> out(2);
  for_each_Delta_term(g, [&](const SimpleGraph& a, const SimpleGraph& b) { out.add({a, b}, 1); });
  return out;
}

TensorSum<OrientedGraph> coproduct_ideal(const OrientedGraph& g, Flavor flavor) {
  TensorSum<OrientedGraph> out(2, flavor);
  for_each_Delta_term(g, [&](const OrientedGraph& a, const OrientedGraph& b) { out.add({a, b}, 1); });
  return out;
}

TensorSum<SimpleGraph> coproduct_contraction(const SimpleGraph& g) {
  TensorSum<SimpleGraph> out(2);
  for_each_delta_term(g, [&](const SimpleGraph& a, const SimpleGraph& b) { out.add({a, b}, 1); });
  return out;
}

TensorSum<OrientedGraph> coproduct_contraction(const OrientedGraph& g, Flavor flavor) {
  TensorSum<OrientedGraph> out(2, flavor);
  for_each_delta_term(g, [&](const OrientedGraph& a, const OrientedGraph& b) { out.add({a, b}, 1); });
  return out;
}

TensorSum<SimpleGraph> coproduct_Delta(const TensorSum<SimpleGraph>& t, int factor) {
  return expand_factor(t, factor, [](const SimpleGraph& g) { return coproduct_bipartition(g); });
}

TensorSum<OrientedGraph> coproduct_Delta(const TensorSum<OrientedGraph>& t, int factor) {
  return expand_factor(t, factor, [&](const OrientedGraph& g) { return coproduct_ideal(g, t.flavor()); });
}

TensorSum<SimpleGraph> coproduct_delta(const TensorSum<SimpleGraph>& t, int factor) {
  return expand_factor(t, factor, [](const SimpleGraph& g) { return coproduct_contraction(g); });
}

TensorSum<OrientedGraph> coproduct_delta(const TensorSum<OrientedGraph>& t, int factor) {
  return expand_factor(t, factor,
                       [&](const OrientedGraph& g) { return coproduct_contraction(g, t.flavor()); });
}

Rational counit_Delta(const SimpleGraph& g) { return g.order() == 0 ? 1 : 0; }
Rational counit_Delta(const OrientedGraph& g) { return g.order() == 0 ? 1 : 0; }
Rational counit_delta(const SimpleGraph& g) { return g.size() == 0 ? 1 : 0; }
Rational counit_delta(const OrientedGraph& g) { return g.size() == 0 ? 1 : 0; }

namespace {

template <class G, class F>
Rational linear_scalar(const GraphSum<G>& a, F&& f) {
  if (a.arity() != 1) throw std::invalid_argument("counit needs an arity-1 sum");
  Rational total = 0;
  for (const auto& [k, t] : a.terms()) total += t.coeff * f(t.factors[0]);
  return total;
}

}  // namespace

Rational counit_Delta(const GraphSum<SimpleGraph>& a) {
  return linear_scalar(a, [](const SimpleGraph& g) { return counit_Delta(g); });
}
Rational counit_Delta(const GraphSum<OrientedGraph>& a) {
  return linear_scalar(a, [](const OrientedGraph& g) { return counit_Delta(g); });
}
Rational counit_delta(const GraphSum<SimpleGraph>& a) {
  return linear_scalar(a, [](const SimpleGraph& g) { return counit_delta(g); });
}
Rational counit_delta(const GraphSum<OrientedGraph>& a) {
  return linear_scalar(a, [](const OrientedGraph& g) { return counit_delta(g); });
}

TensorSum<SimpleGraph> reduced_coproduct(const GraphSum<SimpleGraph>& a) {
  if (counit_Delta(a) != 0) {
    throw std::invalid_argument("reduced coproduct needs a zero empty-graph coefficient");
  }
  TensorSum<SimpleGraph> out(2);
  SimpleGraph one(0);
  for (const auto& [k, t] : a.terms()) {
    for_each_Delta_term(t.factors[0], [&](const SimpleGraph& l, const SimpleGraph& r) {
      if (l.order() != 0 && r.order() != 0) out.add({l, r}, t.coeff);
    });
  }
  return out;
}

TensorSum<SimpleGraph> iterated_reduced_coproduct(const GraphSum<SimpleGraph>& a, int k) {
  if (k < 0) throw std::invalid_argument("negative iteration count");
  if (counit_Delta(a) != 0) {
    throw std::invalid_argument("reduced coproduct needs a zero empty-graph coefficient");
  }
  TensorSum<SimpleGraph> t = a;
  for (int i = 0; i < k; ++i) {
    t = expand_factor(t, 0, [](const SimpleGraph& g) {
      return reduced_coproduct(GraphSum<SimpleGraph>::basis(g));
    });
  }
  return t;
}

namespace {

class AntipodeMemo {
 public:
  static AntipodeMemo& instance() {
    static AntipodeMemo memo;
    return memo;
  }

  GraphSum<SimpleGraph> get(const SimpleGraph& g) {
    Canonical<SimpleGraph> c = canonical_form(g);
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(c.key.bytes);
      if (it != table_.end()) return it->second;
    }
    GraphSum<SimpleGraph> value = compute(c.graph);
    std::unique_lock lock(mutex_);
    return table_.try_emplace(c.key.bytes, std::move(value)).first->second;
  }

 private:
  GraphSum<SimpleGraph> compute(const SimpleGraph& g) {
    if (g.order() == 0) return GraphSum<SimpleGraph>::unit();
    GraphSum<SimpleGraph> out = GraphSum<SimpleGraph>::basis(g) * Rational(-1);
    TensorSum<SimpleGraph> reduced = reduced_coproduct(GraphSum<SimpleGraph>::basis(g));
    for (const auto& [k, t] : reduced.terms()) {
      GraphSum<SimpleGraph> s = get(t.factors[0]);
      out -= product(s, GraphSum<SimpleGraph>::basis(t.factors[1])) * t.coeff;
    }
    return out;
  }

  std::shared_mutex mutex_;
  std::unordered_map<std::string, GraphSum<SimpleGraph>> table_;
};

}  // namespace

GraphSum<SimpleGraph> antipode_recursive(const SimpleGraph& g) { return AntipodeMemo::instance().get(g); }

GraphSum<SimpleGraph> antipode_recursive(const GraphSum<SimpleGraph>& a) {
  if (a.arity() != 1) throw std::invalid_argument("antipode needs an arity-1 sum");
  GraphSum<SimpleGraph> out;
  for (const auto& [k, t] : a.terms()) out += antipode_recursive(t.factors[0]) * t.coeff;
  return out;
}

GraphSum<SimpleGraph> antipode_from_contraction(const SimpleGraph& g) {
  GraphSum<SimpleGraph> out;
  for_each_delta_term(g, [&](const SimpleGraph& contracted, const SimpleGraph& restricted) {
    out.add({restricted}, chromatic_polynomial(contracted)(Rational(-1)));
  });
  return out;
}

GraphSum<OrientedGraph> theta(const SimpleGraph& g) {
  GraphSum<OrientedGraph> out(1, Flavor::kOriented);
  for_each_orientation(g, [&](const OrientedGraph& h) { out.add({h}, 1); });
  return out;
}

GraphSum<OrientedGraph> theta_ac(const SimpleGraph& g) {
  GraphSum<OrientedGraph> out(1, Flavor::kOrientedAcyclic);
  for_each_orientation(g, [&](const OrientedGraph& h) { out.add({h}, 1); });
  return out;
}

TensorSum<OrientedGraph> project_acyclic(const TensorSum<OrientedGraph>& t) {
  TensorSum<OrientedGraph> out(t.arity(), Flavor::kOrientedAcyclic);
  for (const auto& [k, term] : t.terms()) out.add(term.factors, term.coeff);
  return out;
}

TensorSum<OrientedGraph> theta(const TensorSum<SimpleGraph>& t) {
  return map_factors<OrientedGraph>(t, Flavor::kOriented, [](const SimpleGraph& g) { return theta(g); });
}

TensorSum<OrientedGraph> theta_ac(const TensorSum<SimpleGraph>& t) {
  return map_factors<OrientedGraph>(t, Flavor::kOrientedAcyclic,
                                    [](const SimpleGraph& g) { return theta_ac(g); });
}

}  // namespace grhopf
