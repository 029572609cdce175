#include "grhopf/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grhopf {

namespace {

enum class KindTag : std::uint8_t { kSimple = 'S', kOriented = 'O', kMixed = 'M', kMulti = 'U' };

class CanonicalSearch {
 public:
  CanonicalSearch(int n, const std::vector<std::uint8_t>& label,
                  const std::vector<std::uint8_t>& code)
      : n_(n), label_(label), code_(code) {}

  std::vector<int> run() {
    if (n_ == 0) return {};
    std::vector<int> placed;
    std::vector<std::uint8_t> seq;
    search(placed, seq, all_vertices(n_), /*cmp=*/best_.empty() ? -1 : 0);
    return best_order_;
  }

 private:
  std::uint8_t code(int i, int j) const { return code_[static_cast<std::size_t>(i) * n_ + j]; }

  // Iterated refinement of the unplaced vertices; returns the cell of
  // minimal color.
  VertexSet first_cell(const std::vector<int>& placed, VertexSet remaining) const {
    std::vector<int> verts;
    for_each_bit(remaining, [&](int v) { verts.push_back(v); });
    std::vector<std::vector<int>> sig(n_);
    for (int v : verts) {
      sig[v].push_back(label_[v]);
      for (int p : placed) sig[v].push_back(code(p, v));
    }
    std::vector<int> color(n_, 0);
    int classes = rank_signatures(verts, sig, color);
    while (true) {
      for (int v : verts) {
        std::vector<int> nb;
        nb.reserve(verts.size());
        for (int u : verts) {
          if (u != v) nb.push_back(color[u] * 256 + code(v, u));
        }
        std::sort(nb.begin(), nb.end());
        sig[v].assign(1, color[v]);
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      int refined = rank_signatures(verts, sig, color);
      if (refined == classes) break;
      classes = refined;
    }
    VertexSet cell = 0;
    for (int v : verts) {
      if (color[v] == 0) cell |= bit(v);
    }
    return cell;
  }

  static int rank_signatures(const std::vector<int>& verts, const std::vector<std::vector<int>>& sig,
                             std::vector<int>& color) {
    std::vector<std::vector<int>> distinct;
    distinct.reserve(verts.size());
    for (int v : verts) distinct.push_back(sig[v]);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v : verts) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                  distinct.begin());
    }
    return static_cast<int>(distinct.size());
  }

  bool twins(int u, int w) const {
    if (label_[u] != label_[w] || code(u, w) != code(w, u)) return false;
    for (int x = 0; x < n_; ++x) {
      if (x == u || x == w) continue;
      if (code(u, x) != code(w, x)) return false;
    }
    return true;
  }

  void search(std::vector<int>& placed, std::vector<std::uint8_t>& seq, VertexSet remaining,
              int cmp) {
    if (remaining == 0) {
      if (cmp < 0) {
        best_ = seq;
        best_order_ = placed;
      }
      return;
    }
    VertexSet cell = first_cell(placed, remaining);
    std::vector<int> tried;
    for_each_bit(cell, [&](int v) {
      for (int t : tried) {
        if (twins(t, v)) return;
      }
      tried.push_back(v);
      std::size_t mark = seq.size();
      seq.push_back(label_[v]);
      for (int p : placed) seq.push_back(code(p, v));
      int next_cmp = cmp;
      if (next_cmp == 0) {
        auto [a, b] = std::mismatch(seq.begin() + mark, seq.end(), best_.begin() + mark);
        if (a != seq.end()) next_cmp = (*a < *b) ? -1 : 1;
      }
      if (next_cmp <= 0) {
        placed.push_back(v);
        search(placed, seq, remaining & ~bit(v), next_cmp);
        placed.pop_back();
      }
      seq.resize(mark);
      // A completed better leaf resets the comparison baseline for siblings.
      if (cmp < 0 && !best_.empty()) cmp = compare_prefix(seq);
    });
  }

  int compare_prefix(const std::vector<std::uint8_t>& seq) const {
    auto [a, b] = std::mismatch(seq.begin(), seq.end(), best_.begin());
    if (a == seq.end()) return 0;
    return (*a < *b) ? -1 : 1;
  }

  int n_;
  const std::vector<std::uint8_t>& label_;
  const std::vector<std::uint8_t>& code_;
  std::vector<std::uint8_t> best_;
  std::vector<int> best_order_;
};

CanonicalKey make_key(KindTag tag, int n, const std::vector<int>& order,
                      const std::vector<std::uint8_t>& label, const std::vector<std::uint8_t>& code) {
  CanonicalKey key;
  key.bytes.push_back(static_cast<char>(tag));
  key.bytes.push_back(static_cast<char>(n));
  for (int k = 0; k < n; ++k) {
    key.bytes.push_back(static_cast<char>(label[order[k]]));
    for (int j = 0; j < k; ++j) {
      key.bytes.push_back(static_cast<char>(code[static_cast<std::size_t>(order[j]) * n + order[k]]));
    }
  }
  return key;
}

std::vector<std::uint8_t> codes_of(const SimpleGraph& g) {
  int n = g.order();
  std::vector<std::uint8_t> code(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    code[e.u * n + e.v] = 1;
    code[e.v * n + e.u] = 1;
  }
  return code;
}

std::vector<std::uint8_t> codes_of(const OrientedGraph& g) {
  int n = g.order();
  std::vector<std::uint8_t> code(static_cast<std::size_t>(n) * n, 0);
  for (const Arc& a : g.arcs()) {
    code[a.tail * n + a.head] |= 1;
    code[a.head * n + a.tail] |= 2;
  }
  return code;
}

std::vector<std::uint8_t> codes_of(const MixedGraph& h) {
  int n = h.order();
  std::vector<std::uint8_t> code(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : h.edges()) {
    code[e.u * n + e.v] = 1;
    code[e.v * n + e.u] = 1;
  }
  for (const Arc& a : h.arcs()) {
    code[a.tail * n + a.head] = 2;
    code[a.head * n + a.tail] = 3;
  }
  return code;
}

template <class G>
Canonical<G> canonicalize(const G& g, KindTag tag) {
  std::vector<std::uint8_t> label(g.order(), 0);
  std::vector<std::uint8_t> code = codes_of(g);
  std::vector<int> order = canonical_order(g.order(), label, code);
  return {make_key(tag, g.order(), order, label, code), relabel(g, order)};
}

std::vector<int> inverse(const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
  return pos;
}

}  // namespace

std::vector<int> canonical_order(int n, const std::vector<std::uint8_t>& vertex_label,
                                 const std::vector<std::uint8_t>& code) {
  if (static_cast<int>(vertex_label.size()) != n ||
      code.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("canonical_order: size mismatch");
  }
  return CanonicalSearch(n, vertex_label, code).run();
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& order) {
  std::vector<int> pos = inverse(order);
  SimpleGraph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(pos[e.u], pos[e.v]);
  return out;
}

OrientedGraph relabel(const OrientedGraph& g, const std::vector<int>& order) {
  std::vector<int> pos = inverse(order);
  OrientedGraph out(g.order());
  for (const Arc& a : g.arcs()) out.add_arc(pos[a.tail], pos[a.head]);
  return out;
}

MixedGraph relabel(const MixedGraph& h, const std::vector<int>& order) {
  std::vector<int> pos = inverse(order);
  MixedGraph out(h.order());
  for (const Edge& e : h.edges()) out.add_edge(pos[e.u], pos[e.v]);
  for (const Arc& a : h.arcs()) out.add_arc(pos[a.tail], pos[a.head]);
  return out;
}

Canonical<SimpleGraph> canonical_form(const SimpleGraph& g) {
  return canonicalize(g, KindTag::kSimple);
}

Canonical<OrientedGraph> canonical_form(const OrientedGraph& g) {
  return canonicalize(g, KindTag::kOriented);
}

Canonical<MixedGraph> canonical_form(const MixedGraph& h) {
  return canonicalize(h, KindTag::kMixed);
}

CanonicalKey canonical_key(const SimpleGraph& g) { return canonical_form(g).key; }
CanonicalKey canonical_key(const OrientedGraph& g) { return canonical_form(g).key; }
CanonicalKey canonical_key(const MixedGraph& h) { return canonical_form(h).key; }

CanonicalKey canonical_key(const Multigraph& g) {
  int n = g.order();
  std::vector<std::uint8_t> label(n);
  std::vector<std::uint8_t> code(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    if (g.loops(u) > 255) throw std::out_of_range("too many loops for canonical key");
    label[u] = static_cast<std::uint8_t>(g.loops(u));
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (g.multiplicity(u, v) > 255) throw std::out_of_range("multiplicity too large");
      code[static_cast<std::size_t>(u) * n + v] = static_cast<std::uint8_t>(g.multiplicity(u, v));
    }
  }
  std::vector<int> order = canonical_order(n, label, code);
  return make_key(KindTag::kMulti, n, order, label, code);
}

}  // namespace grhopf
