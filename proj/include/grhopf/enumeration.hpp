#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "grhopf/graph.hpp"
#include "grhopf/tensor.hpp"

namespace grhopf {

/// Thrown when an exhaustive enumeration would exceed its desk-scale cap.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 3^15 partial orientations is the largest enumeration we attempt.
inline constexpr int kMaxPartialOrientationEdges = 15;
/// 2^24 edge subsets / orientations.
inline constexpr int kMaxSubsetEdges = 24;

// --- spanning and covering subgraphs ------------------------------------------

enum class SubgraphFamily { kSpanning, kCovering, kSpanningForest, kCoveringForest };

bool is_forest(const SimpleGraph& g);

/// Visits members of the family as (subgraph, mask over g.edges()) in
/// increasing mask order.
void for_each_subgraph(const SimpleGraph& g, SubgraphFamily family,
                       const std::function<void(const SimpleGraph&, EdgeSet)>& visit);
std::vector<SimpleGraph> subgraphs(const SimpleGraph& g, SubgraphFamily family);
std::int64_t count_subgraphs(const SimpleGraph& g, SubgraphFamily family);

inline std::vector<SimpleGraph> spanning_graphs(const SimpleGraph& g) {
  return subgraphs(g, SubgraphFamily::kSpanning);
}
inline std::vector<SimpleGraph> covering_graphs(const SimpleGraph& g) {
  return subgraphs(g, SubgraphFamily::kCovering);
}
inline std::vector<SimpleGraph> spanning_forests(const SimpleGraph& g) {
  return subgraphs(g, SubgraphFamily::kSpanningForest);
}
inline std::vector<SimpleGraph> covering_forests(const SimpleGraph& g) {
  return subgraphs(g, SubgraphFamily::kCoveringForest);
}

// --- orientations ---------------------------------------------------------------

/// Orientation selected by `backward`: bit i set orients edge i = {u<v} as
/// v->u, otherwise u->v.
OrientedGraph orientation(const SimpleGraph& g, EdgeSet backward);

void for_each_orientation(const SimpleGraph& g,
                          const std::function<void(const OrientedGraph&)>& visit);
std::vector<OrientedGraph> orientations(const SimpleGraph& g);
std::vector<OrientedGraph> acyclic_orientations(const SimpleGraph& g);
std::vector<OrientedGraph> strongly_connected_orientations(const SimpleGraph& g);

/// True iff every weakly connected component is strongly connected.
bool components_strongly_connected(const OrientedGraph& g);

std::int64_t count_acyclic_orientations(const SimpleGraph& g);
std::int64_t count_strongly_connected_orientations(const SimpleGraph& g);

/// |O_ac(g)|, the count whose signed value is phi_chr(g)(-1).
std::int64_t stanley_count(const SimpleGraph& g);

// --- partial orientations ---------------------------------------------------

enum class EdgeState : std::uint8_t { kUnoriented = 0, kForward = 1, kBackward = 2 };

/// Mixed graph with gr(h) = g: each edge kept, or oriented u->v / v->u.
MixedGraph partial_orientation(const SimpleGraph& g, std::span<const EdgeState> states);

/// No closed mixed walk uses an arc. Decided by contracting the components
/// of gr0(h) and testing the quotient digraph for cycles.
bool is_totally_acyclic(const MixedGraph& h);

/// Reference decision by explicit walk search: for each arc (a,b), is a
/// reachable from b by edges (either way) and arcs (forward)?
bool is_totally_acyclic_by_walks(const MixedGraph& h);

/// Visits the totally acyclic partial orientations in lexicographic order of
/// per-edge states (edge 0 most significant; unoriented < forward <
/// backward). `unoriented` is the mask of edges left unoriented.
/// Throws ResourceCapExceeded beyond kMaxPartialOrientationEdges edges.
void for_each_totally_acyclic_partial_orientation(
    const SimpleGraph& g,
    const std::function<void(std::span<const EdgeState> states, EdgeSet unoriented)>& visit);
std::vector<MixedGraph> totally_acyclic_partial_orientations(const SimpleGraph& g);
std::int64_t count_totally_acyclic_partial_orientations(const SimpleGraph& g);

/// For each unoriented-edge mask U, the signed count sum over members with
/// that mask of (-1)^{cc(gr0 H)}. Every member's gr0 is spanning_subgraph(g, U).
std::vector<std::pair<EdgeSet, std::int64_t>> signed_partial_orientation_classes(
    const SimpleGraph& g);

/// Sum over totally acyclic partial orientations H of (-1)^{cc(gr0 H)} gr0(H).
GraphSum<SimpleGraph> antipode_orientation_formula(const SimpleGraph& g);

}  // namespace grhopf
