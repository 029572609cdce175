#include "grhopf/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace grhopf {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::out_of_range("vertex count " + std::to_string(n) + " outside [0, 64]");
  }
}

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) +
                            ")");
  }
}

void check_pair(int u, int v, int n) {
  check_vertex(u, n);
  check_vertex(v, n);
  if (u == v) throw std::invalid_argument("self-pair on vertex " + std::to_string(u));
}

// Closure of `start` under the symmetric relation given by adj, inside `within`.
template <class Adj>
VertexSet reach(VertexSet start, VertexSet within, Adj&& adj) {
  VertexSet seen = start & within;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_bit(frontier, [&](int v) { next |= adj(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

template <class Adj>
SetPartition components_of(int n, Adj&& adj) {
  std::vector<VertexSet> blocks;
  VertexSet rest = all_vertices(n);
  while (rest != 0) {
    VertexSet c = reach(bit(lowest(rest)), rest, adj);
    blocks.push_back(c);
    rest &= ~c;
  }
  return SetPartition(std::move(blocks), n);
}

// Connected vertex sets containing the current seed, inside `allowed`. Each
// set is produced once: candidates already branched on are forbidden in
// later siblings.
template <class Adj, class Visit>
void grow_connected(VertexSet block, VertexSet candidates, VertexSet forbidden, VertexSet allowed,
                    Adj& adj, Visit& visit) {
  visit(block);
  VertexSet remaining = candidates;
  while (remaining != 0) {
    int w = lowest(remaining);
    remaining &= remaining - 1;
    VertexSet grown = block | bit(w);
    VertexSet next = (remaining | (adj(w) & allowed)) & ~grown & ~forbidden;
    grow_connected(grown, next, forbidden, allowed, adj, visit);
    forbidden |= bit(w);
  }
}

template <class Adj>
void connected_partitions_rec(int n, VertexSet unassigned, std::vector<VertexSet>& blocks,
                              Adj& adj, const std::function<void(const SetPartition&)>& visit) {
  if (unassigned == 0) {
    visit(SetPartition(blocks, n));
    return;
  }
  int seed = lowest(unassigned);
  VertexSet allowed = unassigned;
  auto on_block = [&](VertexSet block) {
    blocks.push_back(block);
    connected_partitions_rec(n, unassigned & ~block, blocks, adj, visit);
    blocks.pop_back();
  };
  grow_connected(bit(seed), adj(seed) & allowed, bit(seed), allowed, adj, on_block);
}

}  // namespace

// --- SimpleGraph -------------------------------------------------------------

SimpleGraph::SimpleGraph(int n) : n_(n) {
  check_order(n);
  adj_.assign(n, 0);
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const Edge& e : edges) {
    check_pair(e.u, e.v, n);
    if (adjacent(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    }
    add_edge(e.u, e.v);
  }
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
  SimpleGraph g = path(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

int SimpleGraph::size() const {
  int twice = 0;
  for (VertexSet a : adj_) twice += popcount(a);
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(adj_[u] & ~all_vertices(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

void SimpleGraph::add_edge(int u, int v) {
  check_pair(u, v, n_);
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void SimpleGraph::remove_edge(int u, int v) {
  check_pair(u, v, n_);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

// --- OrientedGraph -----------------------------------------------------------

OrientedGraph::OrientedGraph(int n) : n_(n) {
  check_order(n);
  out_.assign(n, 0);
  in_.assign(n, 0);
}

OrientedGraph::OrientedGraph(int n, std::span<const Arc> arcs) : OrientedGraph(n) {
  for (const Arc& a : arcs) {
    check_pair(a.tail, a.head, n);
    if (has_arc(a.tail, a.head)) {
      throw std::invalid_argument("duplicate arc (" + std::to_string(a.tail) + "," +
                                  std::to_string(a.head) + ")");
    }
    add_arc(a.tail, a.head);
  }
}

int OrientedGraph::size() const {
  int m = 0;
  for (VertexSet a : out_) m += popcount(a);
  return m;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n_; ++u) for_each_bit(out_[u], [&](int v) { out.push_back({u, v}); });
  return out;
}

void OrientedGraph::add_arc(int tail, int head) {
  check_pair(tail, head, n_);
  out_[tail] |= bit(head);
  in_[head] |= bit(tail);
}

SimpleGraph OrientedGraph::underlying() const {
  SimpleGraph g(n_);
  for (const Arc& a : arcs()) g.add_edge(a.tail, a.head);
  return g;
}

// --- MixedGraph --------------------------------------------------------------

MixedGraph::MixedGraph(int n) : n_(n) {
  check_order(n);
  edge_adj_.assign(n, 0);
  out_.assign(n, 0);
}

MixedGraph::MixedGraph(int n, std::span<const Edge> edges, std::span<const Arc> arcs)
    : MixedGraph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
  for (const Arc& a : arcs) add_arc(a.tail, a.head);
}

void MixedGraph::check_free(int u, int v) const {
  check_pair(u, v, n_);
  if (has_edge(u, v) || has_arc(u, v) || has_arc(v, u)) {
    throw std::invalid_argument("mixed graph already relates " + std::to_string(u) + " and " +
                                std::to_string(v));
  }
}

void MixedGraph::add_edge(int u, int v) {
  check_free(u, v);
  edge_adj_[u] |= bit(v);
  edge_adj_[v] |= bit(u);
}

void MixedGraph::add_arc(int tail, int head) {
  check_free(tail, head);
  out_[tail] |= bit(head);
}

std::vector<Edge> MixedGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(edge_adj_[u] & ~all_vertices(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

std::vector<Arc> MixedGraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n_; ++u) for_each_bit(out_[u], [&](int v) { out.push_back({u, v}); });
  return out;
}

// --- Multigraph --------------------------------------------------------------

Multigraph::Multigraph(int n) : n_(n) {
  check_order(n);
  mult_.assign(static_cast<std::size_t>(n) * n, 0);
  loops_.assign(n, 0);
}

Multigraph::Multigraph(const SimpleGraph& g) : Multigraph(g.order()) {
  for (const Edge& e : g.edges()) add_edge(e.u, e.v);
}

int Multigraph::edge_count() const {
  int m = 0;
  for (int u = 0; u < n_; ++u) {
    m += loops_[u];
    for (int v = u + 1; v < n_; ++v) m += multiplicity(u, v);
  }
  return m;
}

void Multigraph::add_edge(int u, int v, int count) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v) {
    loops_[u] += count;
    return;
  }
  mult_[u * n_ + v] += count;
  mult_[v * n_ + u] += count;
}

void Multigraph::remove_edge(int u, int v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  int& m = (u == v) ? loops_[u] : mult_[u * n_ + v];
  if (m == 0) throw std::invalid_argument("no such multigraph edge");
  if (u == v) {
    --loops_[u];
  } else {
    --mult_[u * n_ + v];
    --mult_[v * n_ + u];
  }
}

Multigraph Multigraph::contract_edge(int u, int v) const {
  check_pair(u, v, n_);
  if (multiplicity(u, v) == 0) throw std::invalid_argument("contracting a non-edge");
  std::vector<int> image(n_);
  for (int x = 0, next = 0; x < n_; ++x) image[x] = (x == v) ? -1 : next++;
  image[v] = image[u];
  Multigraph out(n_ - 1);
  for (int x = 0; x < n_; ++x) {
    out.loops_[image[x]] += loops_[x];
    for (int y = x + 1; y < n_; ++y) {
      int m = multiplicity(x, y);
      if (m == 0) continue;
      if ((x == u && y == v) || (x == v && y == u)) m -= 1;
      if (m > 0) out.add_edge(image[x], image[y], m);
    }
  }
  return out;
}

bool Multigraph::connected_without(int u, int v) const {
  // Is v reachable from u once a single u-v edge is removed?
  auto adj = [&](int x) {
    VertexSet s = 0;
    for (int y = 0; y < n_; ++y) {
      int m = multiplicity(x, y);
      if ((x == u && y == v) || (x == v && y == u)) --m;
      if (m > 0) s |= bit(y);
    }
    return s;
  };
  return (reach(bit(u), all_vertices(n_), adj) >> v) & 1U;
}

// --- SetPartition ------------------------------------------------------------

SetPartition::SetPartition(std::vector<VertexSet> blocks, int n) : n_(n) {
  check_order(n);
  VertexSet seen = 0;
  for (VertexSet b : blocks) {
    if (b == 0) throw std::invalid_argument("empty block in set partition");
    if ((b & seen) != 0) throw std::invalid_argument("overlapping blocks in set partition");
    if ((b & ~all_vertices(n)) != 0) throw std::invalid_argument("block outside ground set");
    seen |= b;
  }
  if (seen != all_vertices(n)) throw std::invalid_argument("blocks do not cover the ground set");
  std::sort(blocks.begin(), blocks.end(),
            [](VertexSet a, VertexSet b) { return lowest(a) < lowest(b); });
  blocks_ = std::move(blocks);
  block_of_.assign(n, 0);
  for (int i = 0; i < block_count(); ++i) for_each_bit(blocks_[i], [&](int v) { block_of_[v] = i; });
}

SetPartition SetPartition::singletons(int n) {
  std::vector<VertexSet> blocks;
  for (int v = 0; v < n; ++v) blocks.push_back(bit(v));
  return SetPartition(std::move(blocks), n);
}

SetPartition SetPartition::one_block(int n) {
  if (n == 0) return SetPartition({}, 0);
  return SetPartition({all_vertices(n)}, n);
}

SetPartition SetPartition::from_labels(std::span<const int> label) {
  int n = static_cast<int>(label.size());
  std::vector<std::pair<int, VertexSet>> by_label;
  for (int v = 0; v < n; ++v) {
    auto it = std::find_if(by_label.begin(), by_label.end(),
                           [&](const auto& p) { return p.first == label[v]; });
    if (it == by_label.end()) {
      by_label.emplace_back(label[v], bit(v));
    } else {
      it->second |= bit(v);
    }
  }
  std::vector<VertexSet> blocks;
  for (const auto& [l, b] : by_label) blocks.push_back(b);
  return SetPartition(std::move(blocks), n);
}

// --- operations --------------------------------------------------------------

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  SimpleGraph out(g.order() + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(e.u + g.order(), e.v + g.order());
  return out;
}

OrientedGraph disjoint_union(const OrientedGraph& g, const OrientedGraph& h) {
  OrientedGraph out(g.order() + h.order());
  for (const Arc& a : g.arcs()) out.add_arc(a.tail, a.head);
  for (const Arc& a : h.arcs()) out.add_arc(a.tail + g.order(), a.head + g.order());
  return out;
}

MixedGraph disjoint_union(const MixedGraph& g, const MixedGraph& h) {
  MixedGraph out(g.order() + h.order());
  int s = g.order();
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Arc& a : g.arcs()) out.add_arc(a.tail, a.head);
  for (const Edge& e : h.edges()) out.add_edge(e.u + s, e.v + s);
  for (const Arc& a : h.arcs()) out.add_arc(a.tail + s, a.head + s);
  return out;
}

namespace {

std::vector<int> relabel_map(VertexSet s, int n) {
  if ((s & ~all_vertices(n)) != 0) throw std::out_of_range("vertex subset outside the graph");
  std::vector<int> pos(n, -1);
  int next = 0;
  for_each_bit(s, [&](int v) { pos[v] = next++; });
  return pos;
}

}  // namespace

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet s) {
  std::vector<int> pos = relabel_map(s, g.order());
  SimpleGraph out(popcount(s));
  for (const Edge& e : g.edges()) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) out.add_edge(pos[e.u], pos[e.v]);
  }
  return out;
}

OrientedGraph induced_subgraph(const OrientedGraph& g, VertexSet s) {
  std::vector<int> pos = relabel_map(s, g.order());
  OrientedGraph out(popcount(s));
  for (const Arc& a : g.arcs()) {
    if (pos[a.tail] >= 0 && pos[a.head] >= 0) out.add_arc(pos[a.tail], pos[a.head]);
  }
  return out;
}

SimpleGraph spanning_subgraph(const SimpleGraph& g, std::span<const Edge> f) {
  SimpleGraph out(g.order());
  for (Edge e : f) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) {
      throw std::invalid_argument("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} is not an edge of the graph");
    }
    out.add_edge(e.u, e.v);
  }
  return out;
}

SimpleGraph spanning_subgraph(const SimpleGraph& g, EdgeSet mask) {
  std::vector<Edge> all = g.edges();
  if (all.size() < 64 && (mask >> all.size()) != 0) {
    throw std::invalid_argument("edge mask selects a non-edge");
  }
  SimpleGraph out(g.order());
  for_each_bit(mask, [&](int i) { out.add_edge(all[i].u, all[i].v); });
  return out;
}

SetPartition connected_components(const SimpleGraph& g) {
  return components_of(g.order(), [&](int v) { return g.neighbors(v); });
}

SetPartition connected_components(const OrientedGraph& g) {
  return components_of(g.order(), [&](int v) { return g.successors(v) | g.predecessors(v); });
}

int component_count(const SimpleGraph& g) { return connected_components(g).block_count(); }
int component_count(const OrientedGraph& g) { return connected_components(g).block_count(); }

bool is_connected(const SimpleGraph& g, VertexSet s) {
  if (s == 0) return false;
  return reach(bit(lowest(s)), s, [&](int v) { return g.neighbors(v); }) == s;
}

int rank(const SimpleGraph& g) { return g.order() - component_count(g); }
int nullity(const SimpleGraph& g) { return g.size() - rank(g); }

void for_each_connected_partition(const SimpleGraph& g,
                                  const std::function<void(const SetPartition&)>& visit) {
  auto adj = [&](int v) { return g.neighbors(v); };
  std::vector<VertexSet> blocks;
  connected_partitions_rec(g.order(), all_vertices(g.order()), blocks, adj, visit);
}

void for_each_connected_partition(const OrientedGraph& g,
                                  const std::function<void(const SetPartition&)>& visit) {
  auto adj = [&](int v) { return g.successors(v) | g.predecessors(v); };
  std::vector<VertexSet> blocks;
  connected_partitions_rec(g.order(), all_vertices(g.order()), blocks, adj, visit);
}

std::vector<SetPartition> connected_partitions(const SimpleGraph& g) {
  std::vector<SetPartition> out;
  for_each_connected_partition(g, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<SetPartition> connected_partitions(const OrientedGraph& g) {
  std::vector<SetPartition> out;
  for_each_connected_partition(g, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

namespace {

void check_partition(int n, const SetPartition& p) {
  if (p.ground_size() != n) {
    throw std::invalid_argument("partition of " + std::to_string(p.ground_size()) +
                                " elements applied to a graph on " + std::to_string(n) +
                                " vertices");
  }
}

}  // namespace

SimpleGraph contract(const SimpleGraph& g, const SetPartition& p) {
  check_partition(g.order(), p);
  SimpleGraph out(p.block_count());
  for (const Edge& e : g.edges()) {
    int a = p.block_of(e.u);
    int b = p.block_of(e.v);
    if (a != b) out.add_edge(a, b);
  }
  return out;
}

SimpleGraph restrict(const SimpleGraph& g, const SetPartition& p) {
  check_partition(g.order(), p);
  SimpleGraph out(g.order());
  for (const Edge& e : g.edges()) {
    if (p.block_of(e.u) == p.block_of(e.v)) out.add_edge(e.u, e.v);
  }
  return out;
}

OrientedGraph contract(const OrientedGraph& g, const SetPartition& p) {
  check_partition(g.order(), p);
  OrientedGraph out(p.block_count());
  for (const Arc& a : g.arcs()) {
    int s = p.block_of(a.tail);
    int t = p.block_of(a.head);
    if (s != t && !out.has_arc(s, t)) out.add_arc(s, t);
  }
  return out;
}

OrientedGraph restrict(const OrientedGraph& g, const SetPartition& p) {
  check_partition(g.order(), p);
  OrientedGraph out(g.order());
  for (const Arc& a : g.arcs()) {
    if (p.block_of(a.tail) == p.block_of(a.head)) out.add_arc(a.tail, a.head);
  }
  return out;
}

SimpleGraph gr(const MixedGraph& h) {
  SimpleGraph out(h.order());
  for (const Edge& e : h.edges()) out.add_edge(e.u, e.v);
  for (const Arc& a : h.arcs()) out.add_edge(a.tail, a.head);
  return out;
}

SimpleGraph gr0(const MixedGraph& h) {
  SimpleGraph out(h.order());
  for (const Edge& e : h.edges()) out.add_edge(e.u, e.v);
  return out;
}

bool has_directed_cycle(const OrientedGraph& g) {
  // Kahn: repeatedly strip sources.
  VertexSet alive = all_vertices(g.order());
  bool removed = true;
  while (alive != 0 && removed) {
    removed = false;
    VertexSet sources = 0;
    for_each_bit(alive, [&](int v) {
      if ((g.predecessors(v) & alive) == 0) sources |= bit(v);
    });
    if (sources != 0) {
      alive &= ~sources;
      removed = true;
    }
  }
  return alive != 0;
}

std::string to_string(const SimpleGraph& g) {
  std::string s = std::to_string(g.order()) + ":";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

std::string to_string(const OrientedGraph& g) {
  std::string s = std::to_string(g.order()) + ":";
  bool first = true;
  for (const Arc& a : g.arcs()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(a.tail) + ">" + std::to_string(a.head);
  }
  return s;
}

std::string to_string(const MixedGraph& h) {
  std::string s = std::to_string(h.order()) + ":";
  bool first = true;
  for (const Edge& e : h.edges()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  for (const Arc& a : h.arcs()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(a.tail) + ">" + std::to_string(a.head);
  }
  return s;
}

}  // namespace grhopf
