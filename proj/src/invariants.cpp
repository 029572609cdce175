#include "grhopf/invariants.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "grhopf/canonical.hpp"
#include "grhopf/enumeration.hpp"

namespace grhopf {

namespace {

template <class V>
class Memo {
 public:
  bool find(const std::string& key, V& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  const V& insert(const std::string& key, V value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, V> table_;
};

// cc of (V, edges selected by mask) via union-find.
int components_of_mask(int n, const std::vector<Edge>& edges, EdgeSet mask) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int cc = n;
  for_each_bit(mask, [&](int i) {
    int a = find(edges[i].u);
    int b = find(edges[i].v);
    if (a != b) {
      parent[a] = b;
      --cc;
    }
  });
  return cc;
}

template <class F>
void for_each_edge_subset(const SimpleGraph& g, F&& visit) {
  std::vector<Edge> edges = g.edges();
  if (edges.size() > static_cast<std::size_t>(kMaxSubsetEdges)) {
    throw ResourceCapExceeded("edge-subset expansion limited to " + std::to_string(kMaxSubsetEdges) +
                              " edges");
  }
  for (EdgeSet mask = 0; mask < (EdgeSet{1} << edges.size()); ++mask) {
    visit(popcount(mask), components_of_mask(g.order(), edges, mask));
  }
}

}  // namespace

UniPoly chromatic_polynomial(const SimpleGraph& g) {
  static Memo<UniPoly> memo;
  if (g.size() == 0) return UniPoly::monomial(g.order(), 1);
  Canonical<SimpleGraph> c = canonical_form(g);
  UniPoly cached;
  if (memo.find(c.key.bytes, cached)) return cached;
  const SimpleGraph& h = c.graph;
  Edge e = h.edges().front();
  SimpleGraph deleted = h;
  deleted.remove_edge(e.u, e.v);
  std::vector<int> label(h.order());
  for (int v = 0, next = 0; v < h.order(); ++v) label[v] = (v == e.v) ? -1 : next++;
  label[e.v] = label[e.u];
  SimpleGraph contracted = contract(h, SetPartition::from_labels(label));
  return memo.insert(c.key.bytes, chromatic_polynomial(deleted) - chromatic_polynomial(contracted));
}

BiPoly fk_polynomial(const SimpleGraph& g) {
  std::map<std::pair<int, int>, long> counts;
  for_each_edge_subset(g, [&](int size, int cc) { ++counts[{cc, size}]; });
  BiPoly out;
  for (const auto& [e, c] : counts) out += BiPoly::monomial(e.first, e.second, Rational(c));
  return out;
}

BiPoly rank_generating_polynomial(const SimpleGraph& g) {
  int n = g.order();
  int full_rank = rank(g);
  std::map<std::pair<int, int>, long> counts;
  for_each_edge_subset(g, [&](int size, int cc) {
    int r = n - cc;
    ++counts[{full_rank - r, size - r}];
  });
  BiPoly out;
  for (const auto& [e, c] : counts) out += BiPoly::monomial(e.first, e.second, Rational(c));
  return out;
}

BiPoly tutte_polynomial(const SimpleGraph& g) {
  return rank_generating_polynomial(g).substitute(BiPoly::X() - BiPoly(1), BiPoly::Y() - BiPoly(1));
}

BiPoly tutte_deletion_contraction(const Multigraph& g) {
  static Memo<BiPoly> memo;
  if (g.edge_count() == 0) return BiPoly(1);
  std::string key = canonical_key(g).bytes;
  BiPoly cached;
  if (memo.find(key, cached)) return cached;
  BiPoly result;
  int n = g.order();
  int loop_vertex = -1;
  for (int v = 0; v < n && loop_vertex < 0; ++v) {
    if (g.loops(v) > 0) loop_vertex = v;
  }
  if (loop_vertex >= 0) {
    Multigraph deleted = g;
    deleted.remove_edge(loop_vertex, loop_vertex);
    result = BiPoly::Y() * tutte_deletion_contraction(deleted);
  } else {
    int u = -1;
    int v = -1;
    for (int a = 0; a < n && u < 0; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (g.multiplicity(a, b) > 0) {
          u = a;
          v = b;
          break;
        }
      }
    }
    Multigraph deleted = g;
    deleted.remove_edge(u, v);
    if (!g.connected_without(u, v)) {
      result = BiPoly::X() * tutte_deletion_contraction(deleted);
    } else {
      result = tutte_deletion_contraction(deleted) + tutte_deletion_contraction(g.contract_edge(u, v));
    }
  }
  return memo.insert(key, std::move(result));
}

BiPoly fk_from_tutte(const BiPoly& t, int n_vertices, int cc) {
  if (cc < 0 || cc > n_vertices) throw std::invalid_argument("component count out of range");
  int r = n_vertices - cc;
  int d = std::max(t.degree_x(), 0);
  // Y^d T(X/Y + 1, Y + 1) is polynomial: each X-power i brings Y^{d-i} (X+Y)^i.
  BiPoly x_plus_y = BiPoly::X() + BiPoly::Y();
  BiPoly y_plus_1 = BiPoly::Y() + BiPoly(1);
  BiPoly numerator;
  for (const auto& [e, c] : t.terms()) {
    numerator += c * (pow(x_plus_y, e.first) * pow(y_plus_1, e.second) * BiPoly::monomial(0, d - e.first, 1));
  }
  BiPoly z = numerator * BiPoly::monomial(cc, 0, 1);
  if (r >= d) return z * BiPoly::monomial(0, r - d, 1);
  return z.divide_monomial(0, d - r);
}

BiPoly tutte_from_fk(const BiPoly& z, int n_vertices, int cc) {
  if (cc < 0 || cc > n_vertices) throw std::invalid_argument("component count out of range");
  // Work in U = X-1, V = Y-1: T = Z(UV, V) / (U^cc V^|V|).
  BiPoly w = z.substitute(BiPoly::X() * BiPoly::Y(), BiPoly::Y()).divide_monomial(cc, n_vertices);
  return w.substitute(BiPoly::X() - BiPoly(1), BiPoly::Y() - BiPoly(1));
}

UniPoly zeta(const SimpleGraph& g, const Rational& y) { return fk_polynomial(g).specialize_y(y); }

UniPoly phi0(const SimpleGraph& g) { return UniPoly::monomial(g.order(), 1); }

Rational character_mu_y(const SimpleGraph& g, const Rational& y) { return pow(Rational(Rational(1) + y), g.size()); }

Rational character_lambda_y(const SimpleGraph& g, const Rational& y) {
  int base_cc = component_count(g);
  std::map<int, long> by_size;
  for_each_edge_subset(g, [&](int size, int cc) {
    if (cc == base_cc) ++by_size[size];
  });
  Rational total = 0;
  for (const auto& [k, c] : by_size) total += Rational(c) * pow(y, k);
  return total;
}

BiPoly add_coproduct_eval(const UniPoly& p) {
  return BiPoly::from_x(p).substitute(BiPoly::X() + BiPoly::Y(), BiPoly::Y());
}

}  // namespace grhopf
