#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grhopf/graph.hpp"

namespace grhopf {

/// Byte string identifying an isomorphism class. Keys of different graph
/// kinds never collide (the first byte tags the kind).
struct CanonicalKey {
  std::string bytes;

  auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};

/// A graph relabeled into canonical position, with its key.
template <class G>
struct Canonical {
  CanonicalKey key;
  G graph;
};

/// Canonical relabeling: the vertex order minimizing the row-by-row code
/// sequence, searched by individualization with color refinement and twin
/// pruning.
Canonical<SimpleGraph> canonical_form(const SimpleGraph& g);
Canonical<OrientedGraph> canonical_form(const OrientedGraph& g);
Canonical<MixedGraph> canonical_form(const MixedGraph& h);

CanonicalKey canonical_key(const SimpleGraph& g);
CanonicalKey canonical_key(const OrientedGraph& g);
CanonicalKey canonical_key(const MixedGraph& h);
CanonicalKey canonical_key(const Multigraph& g);

/// Canonical vertex order for an arbitrary symmetric-coded structure:
/// code[i*n+j] relates i to j, and code[j*n+i] must be determined by
/// code[i*n+j]. Returns order[k] = original vertex placed at position k.
std::vector<int> canonical_order(int n, const std::vector<std::uint8_t>& vertex_label,
                                 const std::vector<std::uint8_t>& code);

/// Applies order (order[k] = old vertex at new position k).
SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& order);
OrientedGraph relabel(const OrientedGraph& g, const std::vector<int>& order);
MixedGraph relabel(const MixedGraph& h, const std::vector<int>& order);

}  // namespace grhopf
