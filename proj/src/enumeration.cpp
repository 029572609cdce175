#include "grhopf/enumeration.hpp"

#include <map>
#include <numeric>

namespace grhopf {

namespace {

void check_subset_cap(std::size_t edges) {
  if (edges > kMaxSubsetEdges) {
    throw ResourceCapExceeded("2^" + std::to_string(edges) + " edge subsets exceed the cap of 2^" +
                              std::to_string(kMaxSubsetEdges));
  }
}

// Union-find over vertices; component count of (V, selected edges).
class Components {
 public:
  explicit Components(int n) : parent_(n), count_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  // False if u and v were already joined.
  bool unite(int u, int v) {
    u = find(u);
    v = find(v);
    if (u == v) return false;
    parent_[u] = v;
    --count_;
    return true;
  }
  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

// Reachability closure in a digraph given by successor masks.
VertexSet reachable(const std::vector<VertexSet>& succ, int from) {
  VertexSet seen = bit(from);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_bit(frontier, [&](int v) { next |= succ[v]; });
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_forest(const SimpleGraph& g) { return g.size() == rank(g); }

void for_each_subgraph(const SimpleGraph& g, SubgraphFamily family,
                       const std::function<void(const SimpleGraph&, EdgeSet)>& visit) {
  std::vector<Edge> edges = g.edges();
  check_subset_cap(edges.size());
  int base_cc = component_count(g);
  EdgeSet total = EdgeSet{1} << edges.size();
  for (EdgeSet mask = 0; mask < total; ++mask) {
    Components c(g.order());
    bool acyclic = true;
    for_each_bit(mask, [&](int i) { acyclic &= c.unite(edges[i].u, edges[i].v); });
    bool keep = true;
    switch (family) {
      case SubgraphFamily::kSpanning:
        break;
      case SubgraphFamily::kCovering:
        keep = c.count() == base_cc;
        break;
      case SubgraphFamily::kSpanningForest:
        keep = acyclic;
        break;
      case SubgraphFamily::kCoveringForest:
        keep = acyclic && c.count() == base_cc;
        break;
    }
    if (keep) visit(spanning_subgraph(g, mask), mask);
  }
}

std::vector<SimpleGraph> subgraphs(const SimpleGraph& g, SubgraphFamily family) {
  std::vector<SimpleGraph> out;
  for_each_subgraph(g, family, [&](const SimpleGraph& h, EdgeSet) { out.push_back(h); });
  return out;
}

std::int64_t count_subgraphs(const SimpleGraph& g, SubgraphFamily family) {
  std::int64_t n = 0;
  for_each_subgraph(g, family, [&](const SimpleGraph&, EdgeSet) { ++n; });
  return n;
}

OrientedGraph orientation(const SimpleGraph& g, EdgeSet backward) {
  OrientedGraph out(g.order());
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((backward >> i) & 1U) {
      out.add_arc(edges[i].v, edges[i].u);
    } else {
      out.add_arc(edges[i].u, edges[i].v);
    }
  }
  return out;
}

void for_each_orientation(const SimpleGraph& g,
                          const std::function<void(const OrientedGraph&)>& visit) {
  std::size_t m = static_cast<std::size_t>(g.size());
  check_subset_cap(m);
  for (EdgeSet mask = 0; mask < (EdgeSet{1} << m); ++mask) visit(orientation(g, mask));
}

std::vector<OrientedGraph> orientations(const SimpleGraph& g) {
  std::vector<OrientedGraph> out;
  for_each_orientation(g, [&](const OrientedGraph& h) { out.push_back(h); });
  return out;
}

std::vector<OrientedGraph> acyclic_orientations(const SimpleGraph& g) {
  std::vector<OrientedGraph> out;
  for_each_orientation(g, [&](const OrientedGraph& h) {
    if (!has_directed_cycle(h)) out.push_back(h);
  });
  return out;
}

std::vector<OrientedGraph> strongly_connected_orientations(const SimpleGraph& g) {
  std::vector<OrientedGraph> out;
  for_each_orientation(g, [&](const OrientedGraph& h) {
    if (components_strongly_connected(h)) out.push_back(h);
  });
  return out;
}

bool components_strongly_connected(const OrientedGraph& g) {
  std::vector<VertexSet> succ(g.order());
  for (int v = 0; v < g.order(); ++v) succ[v] = g.successors(v);
  SetPartition components = connected_components(g);
  for (VertexSet block : components.blocks()) {
    // Strongly connected iff some vertex reaches every vertex of its weak
    // component and is reached by all of them.
    int root = lowest(block);
    if ((reachable(succ, root) & block) != block) return false;
    bool back = true;
    for_each_bit(block, [&](int v) { back &= ((reachable(succ, v) >> root) & 1U) != 0; });
    if (!back) return false;
  }
  return true;
}

std::int64_t count_acyclic_orientations(const SimpleGraph& g) {
  std::int64_t n = 0;
  for_each_orientation(g, [&](const OrientedGraph& h) { n += has_directed_cycle(h) ? 0 : 1; });
  return n;
}

std::int64_t count_strongly_connected_orientations(const SimpleGraph& g) {
  std::int64_t n = 0;
  for_each_orientation(g, [&](const OrientedGraph& h) { n += components_strongly_connected(h) ? 1 : 0; });
  return n;
}

std::int64_t stanley_count(const SimpleGraph& g) { return count_acyclic_orientations(g); }

MixedGraph partial_orientation(const SimpleGraph& g, std::span<const EdgeState> states) {
  std::vector<Edge> edges = g.edges();
  if (states.size() != edges.size()) throw std::invalid_argument("one state per edge required");
  MixedGraph h(g.order());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    switch (states[i]) {
      case EdgeState::kUnoriented:
        h.add_edge(edges[i].u, edges[i].v);
        break;
      case EdgeState::kForward:
        h.add_arc(edges[i].u, edges[i].v);
        break;
      case EdgeState::kBackward:
        h.add_arc(edges[i].v, edges[i].u);
        break;
    }
  }
  return h;
}

namespace {

// Core test on raw edge/arc lists.
bool totally_acyclic(int n, std::span<const Edge> edges, std::span<const Arc> arcs) {
  Components c(n);
  for (const Edge& e : edges) c.unite(e.u, e.v);
  std::vector<VertexSet> succ(n, 0);
  for (const Arc& a : arcs) {
    int s = c.find(a.tail);
    int t = c.find(a.head);
    if (s == t) return false;
    succ[s] |= bit(t);
  }
  // Kahn on the quotient (roots only carry arcs).
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v) for_each_bit(succ[v], [&](int w) { ++indeg[w]; });
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  int removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for_each_bit(succ[v], [&](int w) {
      if (--indeg[w] == 0) stack.push_back(w);
    });
  }
  return removed == n;
}

}  // namespace

bool is_totally_acyclic(const MixedGraph& h) {
  std::vector<Edge> edges = h.edges();
  std::vector<Arc> arcs = h.arcs();
  return totally_acyclic(h.order(), edges, arcs);
}

bool is_totally_acyclic_by_walks(const MixedGraph& h) {
  std::vector<VertexSet> step(h.order());
  for (int v = 0; v < h.order(); ++v) step[v] = h.edge_neighbors(v) | h.successors(v);
  for (const Arc& a : h.arcs()) {
    if ((reachable(step, a.head) >> a.tail) & 1U) return false;
  }
  return true;
}

void for_each_totally_acyclic_partial_orientation(
    const SimpleGraph& g,
    const std::function<void(std::span<const EdgeState> states, EdgeSet unoriented)>& visit) {
  std::vector<Edge> edges = g.edges();
  std::size_t m = edges.size();
  if (m > kMaxPartialOrientationEdges) {
    throw ResourceCapExceeded("3^" + std::to_string(m) +
                              " partial orientations exceed the cap of 3^" +
                              std::to_string(kMaxPartialOrientationEdges));
  }
  std::vector<EdgeState> states(m, EdgeState::kUnoriented);
  std::vector<Edge> kept;
  std::vector<Arc> arcs;
  while (true) {
    kept.clear();
    arcs.clear();
    EdgeSet unoriented = 0;
    for (std::size_t i = 0; i < m; ++i) {
      switch (states[i]) {
        case EdgeState::kUnoriented:
          kept.push_back(edges[i]);
          unoriented |= EdgeSet{1} << i;
          break;
        case EdgeState::kForward:
          arcs.push_back({edges[i].u, edges[i].v});
          break;
        case EdgeState::kBackward:
          arcs.push_back({edges[i].v, edges[i].u});
          break;
      }
    }
    if (totally_acyclic(g.order(), kept, arcs)) visit(states, unoriented);
    // Odometer with the last edge as the fastest digit.
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (states[i] != EdgeState::kBackward) {
        states[i] = static_cast<EdgeState>(static_cast<int>(states[i]) + 1);
        break;
      }
      states[i] = EdgeState::kUnoriented;
      if (i == 0) return;
    }
    if (m == 0) return;
  }
}

std::vector<MixedGraph> totally_acyclic_partial_orientations(const SimpleGraph& g) {
  std::vector<MixedGraph> out;
  for_each_totally_acyclic_partial_orientation(
      g, [&](std::span<const EdgeState> s, EdgeSet) { out.push_back(partial_orientation(g, s)); });
  return out;
}

std::int64_t count_totally_acyclic_partial_orientations(const SimpleGraph& g) {
  std::int64_t n = 0;
  for_each_totally_acyclic_partial_orientation(g, [&](std::span<const EdgeState>, EdgeSet) { ++n; });
  return n;
}

std::vector<std::pair<EdgeSet, std::int64_t>> signed_partial_orientation_classes(
    const SimpleGraph& g) {
  std::map<EdgeSet, std::int64_t> classes;
  std::map<EdgeSet, int> cc_of;
  for_each_totally_acyclic_partial_orientation(g, [&](std::span<const EdgeState>, EdgeSet u) {
    auto it = cc_of.find(u);
    if (it == cc_of.end()) it = cc_of.emplace(u, component_count(spanning_subgraph(g, u))).first;
    classes[u] += (it->second % 2 == 0) ? 1 : -1;
  });
  return {classes.begin(), classes.end()};
}

GraphSum<SimpleGraph> antipode_orientation_formula(const SimpleGraph& g) {
  GraphSum<SimpleGraph> out;
  for (const auto& [mask, signed_count] : signed_partial_orientation_classes(g)) {
    out.add({spanning_subgraph(g, mask)}, Rational(static_cast<long>(signed_count)));
  }
  return out;
}

}  // namespace grhopf
