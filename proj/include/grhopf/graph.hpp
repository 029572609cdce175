#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace grhopf {

/// Vertex subsets and edge subsets are machine words; bit i stands for vertex
/// (or edge index) i.
using VertexSet = std::uint64_t;
using EdgeSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int i) { return VertexSet{1} << i; }
inline constexpr VertexSet all_vertices(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int lowest(VertexSet s) { return std::countr_zero(s); }
inline int popcount(VertexSet s) { return std::popcount(s); }

template <class F>
void for_each_bit(VertexSet s, F&& f) {
  while (s != 0) {
    int i = lowest(s);
    s &= s - 1;
    f(i);
  }
}

/// Unordered pair {u, v}, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Ordered pair (tail, head).
struct Arc {
  int tail = 0;
  int head = 0;
  auto operator<=>(const Arc&) const = default;
};

class SetPartition;

/// Simple graph on vertices 0..n-1. Adjacency is stored as one bitmask per
/// vertex.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::span<const Edge> edges);

  static SimpleGraph edgeless(int n) { return SimpleGraph(n); }
  static SimpleGraph complete(int n);
  static SimpleGraph path(int n);
  static SimpleGraph cycle(int n);

  int order() const { return n_; }
  int size() const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }

  /// Edges in lexicographic order; edge-subset masks index into this list.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Oriented graph: arcs are ordered pairs of distinct vertices. Both (u,v) and
/// (v,u) may be present.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(int n);
  OrientedGraph(int n, std::span<const Arc> arcs);

  int order() const { return n_; }
  int size() const;
  bool has_arc(int tail, int head) const { return (out_[tail] >> head) & 1U; }
  VertexSet successors(int v) const { return out_[v]; }
  VertexSet predecessors(int v) const { return in_[v]; }

  std::vector<Arc> arcs() const;
  void add_arc(int tail, int head);

  /// Underlying simple graph (directions forgotten, 2-cycles merged).
  SimpleGraph underlying() const;

  bool operator==(const OrientedGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Graph with undirected edges and arcs; at most one relation per vertex pair.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(int n);
  MixedGraph(int n, std::span<const Edge> edges, std::span<const Arc> arcs);

  int order() const { return n_; }
  bool has_edge(int u, int v) const { return (edge_adj_[u] >> v) & 1U; }
  bool has_arc(int tail, int head) const { return (out_[tail] >> head) & 1U; }
  VertexSet edge_neighbors(int v) const { return edge_adj_[v]; }
  VertexSet successors(int v) const { return out_[v]; }

  std::vector<Edge> edges() const;
  std::vector<Arc> arcs() const;

  void add_edge(int u, int v);
  void add_arc(int tail, int head);

  bool operator==(const MixedGraph&) const = default;

 private:
  void check_free(int u, int v) const;

  int n_ = 0;
  std::vector<VertexSet> edge_adj_;
  std::vector<VertexSet> out_;
};

/// Loopy multigraph used by the deletion-contraction Tutte oracle only.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);
  explicit Multigraph(const SimpleGraph& g);

  int order() const { return n_; }
  int multiplicity(int u, int v) const { return mult_[u * n_ + v]; }
  int loops(int v) const { return loops_[v]; }
  int edge_count() const;

  void add_edge(int u, int v, int count = 1);
  void remove_edge(int u, int v);
  /// Merges v into u; parallel u-v edges other than one become loops at u.
  /// The returned multigraph has n-1 vertices (v removed, later ids shift).
  Multigraph contract_edge(int u, int v) const;
  bool connected_without(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<int> mult_;
  std::vector<int> loops_;
};

/// Partition of {0..n-1}; blocks ordered by their smallest element.
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(std::vector<VertexSet> blocks, int n);

  static SetPartition singletons(int n);
  static SetPartition one_block(int n);
  static SetPartition from_labels(std::span<const int> label);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  int block_of(int v) const { return block_of_[v]; }

  bool operator==(const SetPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> blocks_;
  std::vector<int> block_of_;
};

// --- simple graph operations -------------------------------------------------

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);
OrientedGraph disjoint_union(const OrientedGraph& g, const OrientedGraph& h);
MixedGraph disjoint_union(const MixedGraph& g, const MixedGraph& h);

/// Vertices of s relabeled 0..|s|-1 in increasing order.
SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet s);
OrientedGraph induced_subgraph(const OrientedGraph& g, VertexSet s);

/// Same vertices, edge set exactly f.
SimpleGraph spanning_subgraph(const SimpleGraph& g, std::span<const Edge> f);
/// Same vertices, edges selected by a mask over g.edges().
SimpleGraph spanning_subgraph(const SimpleGraph& g, EdgeSet mask);

SetPartition connected_components(const SimpleGraph& g);
/// Weakly connected components.
SetPartition connected_components(const OrientedGraph& g);
int component_count(const SimpleGraph& g);
int component_count(const OrientedGraph& g);
bool is_connected(const SimpleGraph& g, VertexSet s);

int rank(const SimpleGraph& g);
int nullity(const SimpleGraph& g);

/// Calls visit(p) for each partition of V(g) whose blocks induce connected
/// subgraphs. Each such partition is produced once, in a fixed order.
void for_each_connected_partition(const SimpleGraph& g,
                                  const std::function<void(const SetPartition&)>& visit);
void for_each_connected_partition(const OrientedGraph& g,
                                  const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> connected_partitions(const SimpleGraph& g);
std::vector<SetPartition> connected_partitions(const OrientedGraph& g);

SimpleGraph contract(const SimpleGraph& g, const SetPartition& p);
SimpleGraph restrict(const SimpleGraph& g, const SetPartition& p);
OrientedGraph contract(const OrientedGraph& g, const SetPartition& p);
OrientedGraph restrict(const OrientedGraph& g, const SetPartition& p);

SimpleGraph gr(const MixedGraph& h);
SimpleGraph gr0(const MixedGraph& h);

/// True iff the oriented graph has a directed cycle (2-cycles included).
bool has_directed_cycle(const OrientedGraph& g);

/// Compact human-readable form, e.g. "3:0-1,1-2" or "3:0>1,2>0".
std::string to_string(const SimpleGraph& g);
std::string to_string(const OrientedGraph& g);
std::string to_string(const MixedGraph& h);

}  // namespace grhopf
