#pragma once

#include <functional>

#include "grhopf/graph.hpp"
#include "grhopf/tensor.hpp"

namespace grhopf {

// Coproducts on basis graphs. Each returns an arity-2 TensorSum.

/// Delta on simple graphs: sum over vertex subsets I of G|I (x) G|V\I.
TensorSum<SimpleGraph> coproduct_bipartition(const SimpleGraph& g);
/// Delta on oriented graphs: sum over ideals I (closed under outgoing arcs)
/// of G|I (x) G|V\I.
TensorSum<OrientedGraph> coproduct_ideal(const OrientedGraph& g,
                                         Flavor flavor = Flavor::kOriented);
/// delta: sum over connected partitions of G/~ (x) G|~.
TensorSum<SimpleGraph> coproduct_contraction(const SimpleGraph& g);
TensorSum<OrientedGraph> coproduct_contraction(const OrientedGraph& g,
                                               Flavor flavor = Flavor::kOriented);

/// Vertex subsets closed under outgoing arcs, in increasing mask order.
std::vector<VertexSet> ideals(const OrientedGraph& g);

/// Calls visit(left, right) for each Delta term of g without canonicalizing.
void for_each_Delta_term(const SimpleGraph& g,
                         const std::function<void(const SimpleGraph&, const SimpleGraph&)>& visit);
void for_each_Delta_term(
    const OrientedGraph& g,
    const std::function<void(const OrientedGraph&, const OrientedGraph&)>& visit);
/// Calls visit(contracted, restricted) for each delta term of g.
void for_each_delta_term(const SimpleGraph& g,
                         const std::function<void(const SimpleGraph&, const SimpleGraph&)>& visit);
void for_each_delta_term(
    const OrientedGraph& g,
    const std::function<void(const OrientedGraph&, const OrientedGraph&)>& visit);

// Linear extensions to formal sums (applied to one factor of a tensor).

TensorSum<SimpleGraph> coproduct_Delta(const TensorSum<SimpleGraph>& t, int factor = 0);
TensorSum<OrientedGraph> coproduct_Delta(const TensorSum<OrientedGraph>& t, int factor = 0);
TensorSum<SimpleGraph> coproduct_delta(const TensorSum<SimpleGraph>& t, int factor = 0);
TensorSum<OrientedGraph> coproduct_delta(const TensorSum<OrientedGraph>& t, int factor = 0);

// Counits.

Rational counit_Delta(const SimpleGraph& g);
Rational counit_Delta(const OrientedGraph& g);
/// 1 on graphs without edges (arcs), 0 otherwise.
Rational counit_delta(const SimpleGraph& g);
Rational counit_delta(const OrientedGraph& g);
Rational counit_Delta(const GraphSum<SimpleGraph>& a);
Rational counit_Delta(const GraphSum<OrientedGraph>& a);
Rational counit_delta(const GraphSum<SimpleGraph>& a);
Rational counit_delta(const GraphSum<OrientedGraph>& a);

/// Delta(a) - a (x) 1 - 1 (x) a for a with zero empty-graph coefficient.
TensorSum<SimpleGraph> reduced_coproduct(const GraphSum<SimpleGraph>& a);
/// k-th iterate: a (k+1)-fold tensor; the zeroth iterate is a itself.
TensorSum<SimpleGraph> iterated_reduced_coproduct(const GraphSum<SimpleGraph>& a, int k);

/// Antipode of (H_G, m, Delta) by the recursion S(G) = -G - sum S(G') G''
/// over reduced-coproduct terms. Memoized per isoclass.
GraphSum<SimpleGraph> antipode_recursive(const SimpleGraph& g);
GraphSum<SimpleGraph> antipode_recursive(const GraphSum<SimpleGraph>& a);

/// Sum over connected partitions of phi_chr(G/~)(-1) * G|~.
GraphSum<SimpleGraph> antipode_from_contraction(const SimpleGraph& g);

/// Sum of all 2^|E| orientations (oriented flavor).
GraphSum<OrientedGraph> theta(const SimpleGraph& g);
/// Sum of the acyclic orientations (oriented-acyclic flavor).
GraphSum<OrientedGraph> theta_ac(const SimpleGraph& g);
/// Projection to the acyclic quotient, applied to every factor.
TensorSum<OrientedGraph> project_acyclic(const TensorSum<OrientedGraph>& t);

/// Theta (x) ... (x) Theta and its acyclic variant.
TensorSum<OrientedGraph> theta(const TensorSum<SimpleGraph>& t);
TensorSum<OrientedGraph> theta_ac(const TensorSum<SimpleGraph>& t);

}  // namespace grhopf
