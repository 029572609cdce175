#include "grhopf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "grhopf/canonical.hpp"
#include "grhopf/characters.hpp"
#include "grhopf/colorings.hpp"
#include "grhopf/enumeration.hpp"
#include "grhopf/graph6.hpp"
#include "grhopf/hopf.hpp"
#include "grhopf/invariants.hpp"

namespace grhopf::verify {

using Failure = std::optional<std::string>;

// --- universes -------------------------------------------------------------

namespace {

template <class G>
std::vector<G> sorted_level(std::map<std::string, G>& level) {
  std::vector<std::pair<std::string, G>> items(level.begin(), level.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  std::vector<G> out;
  for (auto& [k, g] : items) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<SimpleGraph> simple_isoclasses(int max_vertices, int max_edges) {
  if (max_vertices < 0 || max_vertices > 10) throw std::out_of_range("simple universe limited to 10 vertices");
  std::vector<SimpleGraph> out;
  std::vector<SimpleGraph> previous{SimpleGraph(0)};
  out.push_back(SimpleGraph(0));
  for (int n = 1; n <= max_vertices; ++n) {
    std::map<std::string, SimpleGraph> level;
    for (const SimpleGraph& base : previous) {
      for (VertexSet nbrs = 0; nbrs < bit(n - 1); ++nbrs) {
        SimpleGraph g(n);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for_each_bit(nbrs, [&](int v) { g.add_edge(v, n - 1); });
        Canonical<SimpleGraph> c = canonical_form(g);
        level.try_emplace(c.key.bytes, std::move(c.graph));
      }
    }
    previous = sorted_level(level);
    out.insert(out.end(), previous.begin(), previous.end());
  }
  if (max_edges >= 0) {
    std::erase_if(out, [&](const SimpleGraph& g) { return g.size() > max_edges; });
  }
  return out;
}

std::vector<SimpleGraph> connected_isoclasses_by_edges(int max_edges) {
  if (max_edges < 0 || max_edges > 12) throw std::out_of_range("connected universe limited to 12 edges");
  std::map<std::string, SimpleGraph> all;
  std::vector<SimpleGraph> frontier{SimpleGraph(1)};
  all.try_emplace(canonical_key(frontier.front()).bytes, frontier.front());
  for (int m = 1; m <= max_edges; ++m) {
    std::map<std::string, SimpleGraph> level;
    auto keep = [&](const SimpleGraph& g) {
      Canonical<SimpleGraph> c = canonical_form(g);
      level.try_emplace(c.key.bytes, std::move(c.graph));
    };
    for (const SimpleGraph& base : frontier) {
      int n = base.order();
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (base.adjacent(u, v)) continue;
          SimpleGraph g = base;
          g.add_edge(u, v);
          keep(g);
        }
        SimpleGraph g(n + 1);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        g.add_edge(u, n);
        keep(g);
      }
    }
    frontier = sorted_level(level);
    for (const SimpleGraph& g : frontier) all.try_emplace(canonical_key(g).bytes, g);
  }
  std::vector<SimpleGraph> out;
  for (auto& [key, g] : all) out.push_back(g);
  std::stable_sort(out.begin(), out.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
    return std::pair(a.order(), a.size()) < std::pair(b.order(), b.size());
  });
  return out;
}

std::vector<OrientedGraph> oriented_isoclasses(int max_vertices) {
  if (max_vertices < 0 || max_vertices > 6) throw std::out_of_range("oriented universe limited to 6 vertices");
  std::vector<OrientedGraph> out;
  std::vector<OrientedGraph> previous{OrientedGraph(0)};
  out.push_back(OrientedGraph(0));
  for (int n = 1; n <= max_vertices; ++n) {
    std::map<std::string, OrientedGraph> level;
    std::size_t choices = std::size_t{1} << (2 * (n - 1));
    for (const OrientedGraph& base : previous) {
      for (std::size_t code = 0; code < choices; ++code) {
        OrientedGraph g(n);
        for (const Arc& a : base.arcs()) g.add_arc(a.tail, a.head);
        for (int v = 0; v < n - 1; ++v) {
          std::size_t state = (code >> (2 * v)) & 3U;
          if (state & 1U) g.add_arc(v, n - 1);
          if (state & 2U) g.add_arc(n - 1, v);
        }
        Canonical<OrientedGraph> c = canonical_form(g);
        level.try_emplace(c.key.bytes, std::move(c.graph));
      }
    }
    previous = sorted_level(level);
    out.insert(out.end(), previous.begin(), previous.end());
  }
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "PASS";
    case Status::kFail:
      return "FAIL";
    case Status::kSkipped:
      return "SKIPPED";
  }
  return "?";
}

bool RunReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == Status::kFail; });
}

// --- comparison helpers ------------------------------------------------------

namespace {

template <class G>
std::string describe(const TensorSum<G>& t, std::size_t limit = 3) {
  if (t.is_zero()) return "0";
  std::string out;
  std::size_t shown = 0;
  for (const auto& [k, term] : t.terms()) {
    if (shown == limit) {
      out += " + ... (" + std::to_string(t.term_count()) + " terms)";
      break;
    }
    if (!out.empty()) out += " + ";
    out += grhopf::to_string(term.coeff) + "*[";
    for (std::size_t i = 0; i < term.factors.size(); ++i) {
      if (i > 0) out += " | ";
      out += grhopf::to_string(term.factors[i]);
    }
    out += "]";
    ++shown;
  }
  return out;
}

template <class G>
Failure expect_equal(const TensorSum<G>& a, const TensorSum<G>& b, const std::string& what) {
  if (a == b) return std::nullopt;
  if (a.arity() != b.arity() || a.flavor() != b.flavor()) return what + ": arity or flavor mismatch";
  return what + ": lhs - rhs = " + describe(a - b);
}

Failure expect_equal(const Rational& a, const Rational& b, const std::string& what) {
  if (a == b) return std::nullopt;
  return what + ": " + grhopf::to_string(a) + " != " + grhopf::to_string(b);
}

Failure expect_equal(const Integer& a, const Integer& b, const std::string& what) {
  if (a == b) return std::nullopt;
  return what + ": " + a.get_str() + " != " + b.get_str();
}

Failure expect_equal(const UniPoly& a, const UniPoly& b, const std::string& what) {
  if (a == b) return std::nullopt;
  return what + ": " + a.to_string() + " != " + b.to_string();
}

Failure expect_equal(const BiPoly& a, const BiPoly& b, const std::string& what) {
  if (a == b) return std::nullopt;
  return what + ": " + a.to_string() + " != " + b.to_string();
}

Failure expect_true(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

std::string at(const Rational& y) { return " at y=" + grhopf::to_string(y); }

Scope up_to(int max_order) {
  return [max_order](int n, int) { return n <= max_order; };
}

Scope edges_up_to(int max_size) {
  return [max_size](int, int m) { return m <= max_size; };
}

Check simple_check(std::string suite, std::string name, Scope scope, SimpleProperty p) {
  return Check{std::move(suite), std::move(name), std::move(scope), std::move(p), nullptr, nullptr};
}

Check oriented_check(std::string suite, std::string name, Scope scope, OrientedProperty p) {
  return Check{std::move(suite), std::move(name), std::move(scope), nullptr, std::move(p), nullptr};
}

Check fixed_check(std::string suite, std::string name, FixedProperty p) {
  return Check{std::move(suite), std::move(name), nullptr, nullptr, nullptr, std::move(p)};
}

GraphSum<SimpleGraph> basis(const SimpleGraph& g) { return GraphSum<SimpleGraph>::basis(g); }

Rational sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

SimpleGraph edgeless(int n) { return SimpleGraph(n); }

// All set partitions of {0..n-1} by restricted growth strings.
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      visit(SetPartition::from_labels(label));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    visit(SetPartition({}, 0));
    return;
  }
  rec(0, 0);
}

// Acyclic orientation count by inclusion-exclusion over nonempty
// independent source sets.
std::int64_t acyclic_orientations_by_sources(const SimpleGraph& g) {
  int n = g.order();
  VertexSet all = all_vertices(n);
  std::vector<std::int64_t> a(std::size_t{1} << n, 0);
  a[0] = 1;
  for (VertexSet s = 1; s <= all; ++s) {
    std::int64_t total = 0;
    for (VertexSet i = s; i != 0; i = (i - 1) & s) {
      bool independent = true;
      for_each_bit(i, [&](int v) { independent &= (g.neighbors(v) & i) == 0; });
      if (!independent) continue;
      total += (popcount(i) % 2 == 1 ? 1 : -1) * a[s & ~i];
    }
    a[s] = total;
  }
  return a[all];
}

// Integer sample values for y plus |E|+1 half-integers, all distinct.
std::vector<Rational> sample_ys(int edges) {
  std::vector<Rational> ys;
  for (int y = -2; y <= 3; ++y) ys.emplace_back(y);
  for (int k = 0; k <= edges; ++k) ys.emplace_back(2 * k + 1, 2);
  for (Rational& y : ys) y.canonicalize();
  return ys;
}

// --- axioms ----------------------------------------------------------------

void add_axioms(std::vector<Check>& out) {
  const std::string s = "axioms";
  out.push_back(simple_check(s, "Delta-coassociative", up_to(6), [](const SimpleGraph& g) -> Failure {
    auto t = coproduct_bipartition(g);
    return expect_equal(coproduct_Delta(t, 0), coproduct_Delta(t, 1), "(Delta x Id)Delta != (Id x Delta)Delta");
  }));
  out.push_back(simple_check(s, "delta-coassociative", up_to(6), [](const SimpleGraph& g) -> Failure {
    auto t = coproduct_contraction(g);
    return expect_equal(coproduct_delta(t, 0), coproduct_delta(t, 1), "(delta x Id)delta != (Id x delta)delta");
  }));
  out.push_back(simple_check(s, "Delta-cocommutative", up_to(6), [](const SimpleGraph& g) -> Failure {
    auto t = coproduct_bipartition(g);
    return expect_equal(permute_factors(t, {1, 0}), t, "tau o Delta != Delta");
  }));
  out.push_back(simple_check(s, "Delta-counit", up_to(6), [](const SimpleGraph& g) -> Failure {
    auto t = coproduct_bipartition(g);
    auto eps = [](const SimpleGraph& h) { return counit_Delta(h); };
    if (auto f = expect_equal(apply_scalar_to_factor(t, 0, eps), basis(g), "(eps x Id)Delta != Id")) return f;
    return expect_equal(apply_scalar_to_factor(t, 1, eps), basis(g), "(Id x eps)Delta != Id");
  }));
  out.push_back(simple_check(s, "delta-counit", up_to(6), [](const SimpleGraph& g) -> Failure {
    auto t = coproduct_contraction(g);
    auto eps = [](const SimpleGraph& h) { return counit_delta(h); };
    if (auto f = expect_equal(apply_scalar_to_factor(t, 0, eps), basis(g), "(eps x Id)delta != Id")) return f;
    return expect_equal(apply_scalar_to_factor(t, 1, eps), basis(g), "(Id x eps)delta != Id");
  }));
  out.push_back(simple_check(s, "double-bialgebra-compatibility", up_to(6), [](const SimpleGraph& g) -> Failure {
    auto lhs = coproduct_Delta(coproduct_contraction(g), 0);
    auto four = coproduct_delta(coproduct_delta(coproduct_bipartition(g), 0), 2);
    return expect_equal(lhs, multiply_1_3_24(four), "(Delta x Id)delta != m_{1,3,24}(delta x delta)Delta");
  }));
  out.push_back(simple_check(s, "Delta-counit-through-delta", up_to(6), [](const SimpleGraph& g) -> Failure {
    auto t = coproduct_contraction(g);
    auto lhs = apply_scalar_to_factor(t, 0, [](const SimpleGraph& h) { return counit_Delta(h); });
    return expect_equal(lhs, GraphSum<SimpleGraph>::unit() * counit_Delta(g), "(eps_Delta x Id)delta != eps_Delta 1");
  }));
  out.push_back(simple_check(s, "contraction-restriction-identities", nullptr, [](const SimpleGraph& g) -> Failure {
    SetPartition singles = SetPartition::singletons(g.order());
    if (auto f = expect_true(canonical_key(contract(g, singles)) == canonical_key(g), "G/singletons != G")) return f;
    if (auto f = expect_true(restrict(g, singles) == edgeless(g.order()), "G|singletons has edges")) return f;
    SetPartition one = SetPartition::one_block(g.order());
    if (g.order() > 0 && component_count(g) == 1) {
      if (auto f = expect_true(contract(g, one).order() == 1, "G/one-block is not a vertex")) return f;
      if (auto f = expect_true(restrict(g, one) == g, "G|one-block != G")) return f;
    }
    return expect_true(rank(g) + nullity(g) == g.size(), "r + n != |E|");
  }));
  out.push_back(simple_check(s, "connected-partitions-brute-force", up_to(6), [](const SimpleGraph& g) -> Failure {
    std::vector<std::vector<VertexSet>> fast;
    for_each_connected_partition(g, [&](const SetPartition& p) {
      fast.push_back(p.blocks());
    });
    std::vector<std::vector<VertexSet>> slow;
    Failure bad;
    for_each_set_partition(g.order(), [&](const SetPartition& p) {
      bool ok = std::all_of(p.blocks().begin(), p.blocks().end(),
                            [&](VertexSet b) { return is_connected(g, b); });
      if (ok) slow.push_back(p.blocks());
    });
    for (const auto& blocks : fast) {
      SetPartition p(blocks, g.order());
      if (component_count(restrict(g, p)) != p.block_count()) bad = "cc(G|~) != number of blocks";
    }
    if (bad) return bad;
    std::size_t fast_count = fast.size();
    std::sort(fast.begin(), fast.end());
    std::sort(slow.begin(), slow.end());
    if (std::adjacent_find(fast.begin(), fast.end()) != fast.end()) return "a connected partition is repeated";
    return expect_true(fast == slow, "connected partitions differ from filtered set partitions (" +
                                         std::to_string(fast_count) + " vs " + std::to_string(slow.size()) + ")");
  }));
  out.push_back(simple_check(s, "canonical-key-relabeling", up_to(6), [](const SimpleGraph& g) -> Failure {
    std::mt19937 rng(static_cast<unsigned>(g.order() * 131 + g.size()));
    CanonicalKey key = canonical_key(g);
    std::vector<int> order(g.order());
    for (int i = 0; i < g.order(); ++i) order[i] = i;
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      if (canonical_key(relabel(g, order)) != key) return "canonical key changed under relabeling";
    }
    return std::nullopt;
  }));

  const Scope small = up_to(4);
  out.push_back(oriented_check(s, "oriented-Delta-coassociative", small, [](const OrientedGraph& g) -> Failure {
    auto t = coproduct_ideal(g);
    return expect_equal(coproduct_Delta(t, 0), coproduct_Delta(t, 1), "oriented (Delta x Id)Delta != (Id x Delta)Delta");
  }));
  out.push_back(oriented_check(s, "oriented-delta-coassociative", small, [](const OrientedGraph& g) -> Failure {
    auto t = coproduct_contraction(g);
    return expect_equal(coproduct_delta(t, 0), coproduct_delta(t, 1), "oriented (delta x Id)delta != (Id x delta)delta");
  }));
  out.push_back(oriented_check(s, "oriented-counits", small, [](const OrientedGraph& g) -> Failure {
    auto b = GraphSum<OrientedGraph>::basis(g);
    auto eD = [](const OrientedGraph& h) { return counit_Delta(h); };
    auto ed = [](const OrientedGraph& h) { return counit_delta(h); };
    auto D = coproduct_ideal(g);
    auto d = coproduct_contraction(g);
    if (auto f = expect_equal(apply_scalar_to_factor(D, 0, eD), b, "oriented (eps x Id)Delta")) return f;
    if (auto f = expect_equal(apply_scalar_to_factor(D, 1, eD), b, "oriented (Id x eps)Delta")) return f;
    if (auto f = expect_equal(apply_scalar_to_factor(d, 0, ed), b, "oriented (eps x Id)delta")) return f;
    return expect_equal(apply_scalar_to_factor(d, 1, ed), b, "oriented (Id x eps)delta");
  }));
  out.push_back(oriented_check(s, "oriented-double-bialgebra-compatibility", small, [](const OrientedGraph& g) -> Failure {
    auto lhs = coproduct_Delta(coproduct_contraction(g), 0);
    auto four = coproduct_delta(coproduct_delta(coproduct_ideal(g), 0), 2);
    return expect_equal(lhs, multiply_1_3_24(four), "oriented (Delta x Id)delta != m_{1,3,24}(delta x delta)Delta");
  }));
  out.push_back(oriented_check(s, "acyclic-quotient-coideal", small, [](const OrientedGraph& g) -> Failure {
    bool cyclic = has_directed_cycle(g);
    TensorSum<OrientedGraph> zero(2, Flavor::kOrientedAcyclic);
    auto d = project_acyclic(coproduct_contraction(g));
    auto D = project_acyclic(coproduct_ideal(g));
    auto expected_d = cyclic ? zero : coproduct_contraction(g, Flavor::kOrientedAcyclic);
    auto expected_D = cyclic ? zero : coproduct_ideal(g, Flavor::kOrientedAcyclic);
    if (auto f = expect_equal(d, expected_d, "(pi x pi)delta != delta o pi")) return f;
    return expect_equal(D, expected_D, "(pi x pi)Delta != Delta o pi");
  }));
}

// --- antipode --------------------------------------------------------------

GraphSum<SimpleGraph> antipode_convolution(const SimpleGraph& g, bool left) {
  GraphSum<SimpleGraph> out;
  for_each_Delta_term(g, [&](const SimpleGraph& l, const SimpleGraph& r) {
    out += left ? product(antipode_recursive(l), basis(r)) : product(basis(l), antipode_recursive(r));
  });
  return out;
}

Scope partial_orientation_scope() {
  return [](int n, int m) { return n <= 5 || m <= 10; };
}

void add_antipode(std::vector<Check>& out) {
  const std::string s = "antipode";
  out.push_back(simple_check(s, "antipode-law", up_to(6), [](const SimpleGraph& g) -> Failure {
    auto expected = GraphSum<SimpleGraph>::unit() * counit_Delta(g);
    if (auto f = expect_equal(antipode_convolution(g, true), expected, "m(S x Id)Delta != eps")) return f;
    return expect_equal(antipode_convolution(g, false), expected, "m(Id x S)Delta != eps");
  }));
  out.push_back(simple_check(s, "antipode-orientation-formula", partial_orientation_scope(),
                             [](const SimpleGraph& g) -> Failure {
                               return expect_equal(antipode_orientation_formula(g), antipode_recursive(g),
                                                   "orientation formula != recursive antipode");
                             }));
  out.push_back(simple_check(s, "antipode-contraction-formula", up_to(6), [](const SimpleGraph& g) -> Failure {
    return expect_equal(antipode_from_contraction(g), antipode_recursive(g),
                        "sum phi_chr(G/~)(-1) G|~ != recursive antipode");
  }));
  out.push_back(simple_check(s, "partial-orientation-bijection", partial_orientation_scope(),
                             [](const SimpleGraph& g) -> Failure {
                               std::int64_t total = 0;
                               for_each_delta_term(g, [&](const SimpleGraph& c, const SimpleGraph&) {
                                 total += count_acyclic_orientations(c);
                               });
                               return expect_equal(Integer(static_cast<long>(count_totally_acyclic_partial_orientations(g))),
                                                   Integer(static_cast<long>(total)),
                                                   "|PO_tac| != sum over E_c of |O_ac(G/~)|");
                             }));
  out.push_back(simple_check(s, "partial-orientation-walk-oracle", edges_up_to(8), [](const SimpleGraph& g) -> Failure {
    std::vector<Edge> edges = g.edges();
    std::size_t m = edges.size();
    std::vector<EdgeState> states(m, EdgeState::kUnoriented);
    std::vector<std::string> filtered;
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = m; i > 0; --i) {
        states[i - 1] = static_cast<EdgeState>(c % 3);
        c /= 3;
      }
      MixedGraph h = partial_orientation(g, states);
      bool fast = is_totally_acyclic(h);
      if (fast != is_totally_acyclic_by_walks(h)) return "total acyclicity disagrees with walk search on " + to_string(h);
      if (!(gr(h) == g)) return "gr(H) != G for " + to_string(h);
      if (fast) filtered.push_back(to_string(h));
    }
    std::vector<std::string> streamed;
    for (const MixedGraph& h : totally_acyclic_partial_orientations(g)) streamed.push_back(to_string(h));
    return expect_true(streamed == filtered, "PO_tac stream differs from generate-and-filter");
  }));
  out.push_back(simple_check(s, "reduced-coproduct-grading", up_to(5), [](const SimpleGraph& g) -> Failure {
    int n = g.order();
    if (n == 0) return std::nullopt;
    auto top = iterated_reduced_coproduct(basis(g), n - 1);
    TensorSum<SimpleGraph> expected(n);
    Rational factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    expected.add(std::vector<SimpleGraph>(n, SimpleGraph(1)), factorial);
    if (auto f = expect_equal(top, expected, "reduced Delta^(|V|-1)(G) != |V|! (. x ... x .)")) return f;
    return expect_true(iterated_reduced_coproduct(basis(g), n).is_zero(), "reduced Delta^(|V|)(G) != 0");
  }));
}

// --- morphisms and characters ---------------------------------------------

struct YFamily {
  std::vector<Rational> ys;
  std::map<Rational, PolyMorphism> phi0_lambda;
  std::map<Rational, PolyMorphism> chr_mu;
};

std::shared_ptr<YFamily> make_y_family() {
  auto fam = std::make_shared<YFamily>();
  fam->ys = sample_ys(21);
  for (const Rational& y : fam->ys) {
    fam->phi0_lambda.emplace(y, act(morphisms::phi0(), characters::lambda(y)));
    fam->chr_mu.emplace(y, act(morphisms::phi_chr(), characters::mu(y)));
  }
  return fam;
}

void add_morphisms(std::vector<Check>& out) {
  const std::string s = "morphisms";
  auto fam = make_y_family();
  out.push_back(simple_check(s, "zeta-action-identities", up_to(5), [fam](const SimpleGraph& g) -> Failure {
    for (const Rational& y : sample_ys(g.size())) {
      UniPoly z = zeta(g, y);
      if (auto f = expect_equal(fam->phi0_lambda.at(y)(g), z, "phi_0 <~ lambda_y != zeta_y" + at(y))) return f;
      if (auto f = expect_equal(fam->chr_mu.at(y)(g), z, "phi_chr <~ mu_y != zeta_y" + at(y))) return f;
    }
    return std::nullopt;
  }));
  out.push_back(simple_check(s, "zeta-Delta-morphism", up_to(5), [](const SimpleGraph& g) -> Failure {
    for (int k = 0; k <= g.size(); ++k) {
      Rational y(k - 1);
      BiPoly rhs;
      for_each_Delta_term(g, [&](const SimpleGraph& l, const SimpleGraph& r) {
        rhs += BiPoly::from_x(zeta(l, y)) * BiPoly::from_y(zeta(r, y));
      });
      if (auto f = expect_equal(add_coproduct_eval(zeta(g, y)), rhs, "Z(X1+X2) != sum Z(X1) Z(X2)" + at(y))) return f;
    }
    return std::nullopt;
  }));
  auto eps_delta = characters::epsilon_delta();
  out.push_back(simple_check(s, "phi-lambda-chromatic", up_to(6), [eps_delta](const SimpleGraph& g) -> Failure {
    return expect_equal(phi_lambda(eps_delta, g), chromatic_polynomial(g), "phi_{eps_delta} != chromatic");
  }));
  std::vector<Character> sample_chars{characters::mu(1), characters::lambda(1), characters::mu(0)};
  out.push_back(simple_check(s, "phi-lambda-routes", up_to(5), [sample_chars](const SimpleGraph& g) -> Failure {
    for (const Character& c : sample_chars) {
      if (auto f = expect_equal(phi_lambda(c, g), phi_lambda_by_coproducts(c, g),
                                "phi_lambda subset recursion != iterated coproducts for " + c.name()))
        return f;
    }
    return std::nullopt;
  }));
  out.push_back(simple_check(s, "phi-lambda-counit", up_to(5), [sample_chars](const SimpleGraph& g) -> Failure {
    for (const Character& c : sample_chars) {
      if (auto f = expect_equal(phi_lambda(c, g)(Rational(1)), c(g), "eps_delta o phi_lambda != lambda for " + c.name()))
        return f;
    }
    return std::nullopt;
  }));
  out.push_back(simple_check(s, "theta-Delta-morphism", up_to(5), [](const SimpleGraph& g) -> Failure {
    return expect_equal(coproduct_Delta(theta(g)), theta(coproduct_bipartition(g)),
                        "Delta o Theta != (Theta x Theta) o Delta");
  }));
  out.push_back(simple_check(s, "theta-ac-Delta-morphism", up_to(5), [](const SimpleGraph& g) -> Failure {
    return expect_equal(coproduct_Delta(theta_ac(g)), theta_ac(coproduct_bipartition(g)),
                        "Delta o Theta_ac != (Theta_ac x Theta_ac) o Delta");
  }));
  out.push_back(simple_check(s, "theta-ac-delta-morphism", up_to(5), [](const SimpleGraph& g) -> Failure {
    return expect_equal(coproduct_delta(theta_ac(g)), theta_ac(coproduct_contraction(g)),
                        "delta o Theta_ac != (Theta_ac x Theta_ac) o delta");
  }));
  out.push_back(fixed_check(s, "theta-delta-defect-K3", []() -> Failure {
    SimpleGraph k3 = SimpleGraph::complete(3);
    auto diff = coproduct_delta(theta(k3)) - theta(coproduct_contraction(k3));
    OrientedGraph two_cycle(2);
    two_cycle.add_arc(0, 1);
    two_cycle.add_arc(1, 0);
    OrientedGraph arc_point(3);
    arc_point.add_arc(0, 1);
    TensorSum<OrientedGraph> expected(2, Flavor::kOriented);
    expected.add({two_cycle, arc_point}, 12);
    return expect_equal(diff, expected, "delta o Theta - (Theta x Theta) o delta on K3");
  }));

  auto eD = characters::epsilon_Delta();
  auto ed = characters::epsilon_delta();
  std::vector<Character> unit_probe{characters::mu(1), characters::lambda(2), characters::alpha()};
  out.push_back(simple_check(s, "convolution-units", up_to(5), [eD, ed, unit_probe](const SimpleGraph& g) -> Failure {
    for (const Character& c : unit_probe) {
      Rational v = c(g);
      if (auto f = expect_equal(convolve_Delta(eD, c)(g), v, "eps_Delta * " + c.name())) return f;
      if (auto f = expect_equal(convolve_Delta(c, eD)(g), v, c.name() + " * eps_Delta")) return f;
      if (auto f = expect_equal(convolve_delta(ed, c)(g), v, "eps_delta # " + c.name())) return f;
      if (auto f = expect_equal(convolve_delta(c, ed)(g), v, c.name() + " # eps_delta")) return f;
    }
    return std::nullopt;
  }));
  auto mu0 = characters::mu(0);
  auto lambda_m1 = characters::lambda(-1);
  auto mu0_inverse = char_inverse_delta(mu0);
  auto mu0_lambda_m1 = convolve_delta(mu0, lambda_m1);
  out.push_back(simple_check(s, "mu0-delta-inverse", up_to(6),
                             [mu0_inverse, mu0_lambda_m1, lambda_m1, ed](const SimpleGraph& g) -> Failure {
                               if (auto f = expect_equal(mu0_inverse(g), lambda_m1(g), "mu_0^{#-1} != lambda_{-1}"))
                                 return f;
                               return expect_equal(mu0_lambda_m1(g), ed(g), "mu_0 # lambda_{-1} != eps_delta");
                             }));
  struct Factorization {
    Rational y;
    Character mu, lambda, mu_from, lambda_from;
  };
  std::vector<Factorization> facts;
  for (int y = -1; y <= 2; ++y) {
    auto m = characters::mu(y);
    auto l = characters::lambda(y);
    facts.push_back({Rational(y), m, l, convolve_delta(mu0, l), convolve_delta(lambda_m1, m)});
  }
  out.push_back(simple_check(s, "mu-lambda-factorization", up_to(6), [facts](const SimpleGraph& g) -> Failure {
    for (const auto& fct : facts) {
      if (auto f = expect_equal(fct.mu_from(g), fct.mu(g), "mu_0 # lambda_y != mu_y" + at(fct.y))) return f;
      if (auto f = expect_equal(fct.lambda_from(g), fct.lambda(g), "lambda_{-1} # mu_y != lambda_y" + at(fct.y)))
        return f;
    }
    return std::nullopt;
  }));
  std::vector<std::pair<Character, Character>> delta_inverses;
  for (const Character& c : {characters::mu(1), characters::lambda(1), characters::chromatic_at(3)}) {
    delta_inverses.emplace_back(c, convolve_delta(c, char_inverse_delta(c)));
  }
  out.push_back(simple_check(s, "delta-inverse-property", up_to(6), [delta_inverses, ed](const SimpleGraph& g) -> Failure {
    for (const auto& [c, conv] : delta_inverses) {
      if (auto f = expect_equal(conv(g), ed(g), c.name() + " # " + c.name() + "^{#-1} != eps_delta")) return f;
    }
    return std::nullopt;
  }));
  auto mu1 = characters::mu(1);
  auto alpha = characters::alpha();
  auto mu1_inv_S = char_inverse_Delta(mu1);
  auto mu1_inv_rec = char_inverse_Delta_recursive(mu1);
  auto mu1_alpha = convolve_Delta(mu1, alpha);
  out.push_back(simple_check(s, "alpha-Delta-inverse", up_to(6),
                             [alpha, mu1_inv_S, mu1_inv_rec, mu1_alpha, eD](const SimpleGraph& g) -> Failure {
                               Rational a = alpha(g);
                               if (auto f = expect_equal(mu1_inv_S(g), a, "mu_1 o S != alpha")) return f;
                               if (auto f = expect_equal(mu1_inv_rec(g), a, "recursive mu_1^{*-1} != alpha")) return f;
                               return expect_equal(mu1_alpha(g), eD(g), "mu_1 * alpha != eps_Delta");
                             }));
  std::vector<std::pair<Rational, std::pair<Character, Character>>> mu_inverses;
  for (int y = -1; y <= 2; ++y) {
    auto m = characters::mu(y);
    mu_inverses.push_back({Rational(y), {char_inverse_Delta(m), char_inverse_Delta_recursive(m)}});
  }
  out.push_back(simple_check(s, "mu-y-Delta-inverse", up_to(6), [mu_inverses](const SimpleGraph& g) -> Failure {
    BiPoly z = fk_polynomial(g);
    for (const auto& [y, inv] : mu_inverses) {
      Rational expected = z(Rational(-1), y);
      if (auto f = expect_equal(inv.first(g), expected, "mu_y o S != Z(-1,y)" + at(y))) return f;
      if (auto f = expect_equal(inv.second(g), expected, "recursive mu_y^{*-1} != Z(-1,y)" + at(y))) return f;
    }
    return std::nullopt;
  }));
  auto omu1 = characters::oriented_mu_1();
  auto osc = characters::mu_sc();
  auto oeD = characters::oriented_epsilon_Delta();
  auto omu1_sc = convolve_Delta(omu1, osc);
  auto omu1_inv = char_inverse_Delta_recursive(omu1);
  out.push_back(oriented_check(s, "mu-sc-Delta-inverse", up_to(4),
                               [osc, oeD, omu1_sc, omu1_inv](const OrientedGraph& g) -> Failure {
                                 if (auto f = expect_equal(omu1_sc(g), oeD(g), "mu_1 * mu_sc != eps_Delta")) return f;
                                 return expect_equal(omu1_inv(g), osc(g), "mu_1^{*-1} != mu_sc");
                               }));
  out.push_back(fixed_check(s, "multiplicativity", []() -> Failure {
    std::vector<SimpleGraph> pool = simple_isoclasses(4);
    std::vector<OrientedGraph> opool = oriented_isoclasses(3);
    std::vector<Character> chars{characters::epsilon_Delta(), characters::epsilon_delta(), characters::mu(0),
                                 characters::mu(1),           characters::mu(-1),           characters::mu(2),
                                 characters::lambda(-1),      characters::lambda(0),        characters::lambda(1),
                                 characters::lambda(2),       characters::alpha(),          characters::chromatic_at(2),
                                 characters::chromatic_at(-1), characters::counting_at(2, 3)};
    std::vector<OrientedCharacter> ochars{characters::oriented_epsilon_Delta(), characters::oriented_epsilon_delta(),
                                          characters::oriented_mu_1(), characters::mu_sc()};
    std::vector<PolyMorphism> polys{morphisms::phi_chr(), morphisms::phi0(), morphisms::zeta(2)};
    std::mt19937 rng(20240611U);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> opick(0, opool.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const SimpleGraph& a = pool[pick(rng)];
      const SimpleGraph& b = pool[pick(rng)];
      SimpleGraph ab = disjoint_union(a, b);
      for (const Character& c : chars) {
        if (c(ab) != c(a) * c(b)) return c.name() + " not multiplicative on " + to_string(a) + " and " + to_string(b);
      }
      for (const PolyMorphism& p : polys) {
        if (!(p(ab) == p(a) * p(b))) return p.name() + " not multiplicative on " + to_string(a) + " and " + to_string(b);
      }
      const OrientedGraph& oa = opool[opick(rng)];
      const OrientedGraph& ob = opool[opick(rng)];
      OrientedGraph oab = disjoint_union(oa, ob);
      for (const OrientedCharacter& c : ochars) {
        if (c(oab) != c(oa) * c(ob)) return c.name() + " not multiplicative on " + to_string(oa) + " and " + to_string(ob);
      }
    }
    return std::nullopt;
  }));
}

// --- specializations ---------------------------------------------------------

void add_specializations(std::vector<Check>& out) {
  const std::string s = "specializations";
  out.push_back(simple_check(s, "tutte-deletion-contraction", nullptr, [](const SimpleGraph& g) -> Failure {
    return expect_equal(tutte_deletion_contraction(Multigraph(g)), tutte_polynomial(g),
                        "deletion-contraction T != subset-expansion T");
  }));
  out.push_back(simple_check(s, "fk-tutte-conversions", nullptr, [](const SimpleGraph& g) -> Failure {
    BiPoly t = tutte_polynomial(g);
    BiPoly z = fk_polynomial(g);
    int cc = component_count(g);
    if (auto f = expect_equal(fk_from_tutte(t, g.order(), cc), z, "Z from T")) return f;
    return expect_equal(tutte_from_fk(z, g.order(), cc), t, "T from Z");
  }));
  out.push_back(simple_check(s, "fk-specializations", nullptr, [](const SimpleGraph& g) -> Failure {
    if (auto f = expect_equal(zeta(g, -1), chromatic_polynomial(g), "Z(X,-1) != phi_chr")) return f;
    if (auto f = expect_equal(zeta(g, 0), phi0(g), "Z(X,0) != X^|V|")) return f;
    BiPoly z = fk_polynomial(g);
    if (auto f = expect_true(z.degree_x() == g.order(), "deg_X Z != |V|")) return f;
    return expect_true(g.order() == 0 || z.lowest_degree_x() == component_count(g), "lowest X-degree of Z != cc");
  }));
  out.push_back(simple_check(s, "chromatic-from-tutte", nullptr, [](const SimpleGraph& g) -> Failure {
    int cc = component_count(g);
    BiPoly t = tutte_polynomial(g).substitute(BiPoly(1) - BiPoly::X(), BiPoly(0));
    BiPoly rhs = t * BiPoly::monomial(cc, 0, sign(g.order() + cc));
    return expect_equal(BiPoly::from_x(chromatic_polynomial(g)), rhs, "phi_chr != (-1)^{|V|+cc} X^cc T(1-X,0)");
  }));
  out.push_back(simple_check(s, "tutte-subgraph-counts", nullptr, [](const SimpleGraph& g) -> Failure {
    BiPoly t = tutte_polynomial(g);
    auto count = [&](SubgraphFamily f) { return Rational(static_cast<long>(count_subgraphs(g, f))); };
    if (auto f = expect_equal(t(1, 2), count(SubgraphFamily::kCovering), "T(1,2) != |C(G)|")) return f;
    if (auto f = expect_equal(t(1, 1), count(SubgraphFamily::kCoveringForest), "T(1,1) != |CF(G)|")) return f;
    if (auto f = expect_equal(t(2, 1), count(SubgraphFamily::kSpanningForest), "T(2,1) != |SF(G)|")) return f;
    return expect_equal(t(2, 2), count(SubgraphFamily::kSpanning), "T(2,2) != |S(G)| = 2^|E|");
  }));
  out.push_back(simple_check(s, "tutte-strong-orientations", nullptr, [](const SimpleGraph& g) -> Failure {
    BiPoly t = tutte_polynomial(g);
    Rational sc(static_cast<long>(count_strongly_connected_orientations(g)));
    int cc = component_count(g);
    if (cc <= 1) {
      if (auto f = expect_equal(t(0, 2), sc, "T(0,2) != |O_sc(G)|")) return f;
    }
    Rational z = fk_polynomial(g)(-1, 1);
    if (auto f = expect_equal(z, sign(cc) * t(0, 2), "Z(-1,1) != (-1)^cc T(0,2)")) return f;
    return expect_equal(z, sign(cc) * sc, "Z(-1,1) != alpha(G)");
  }));
  out.push_back(simple_check(s, "stanley-acyclic-orientations", nullptr, [](const SimpleGraph& g) -> Failure {
    Rational count(static_cast<long>(stanley_count(g)));
    if (auto f = expect_equal(chromatic_polynomial(g)(-1), sign(g.order()) * count, "phi_chr(-1) != (-1)^|V| |O_ac|"))
      return f;
    return expect_equal(count, Rational(static_cast<long>(acyclic_orientations_by_sources(g))),
                        "|O_ac| disagrees with the source recurrence");
  }));
  out.push_back(simple_check(s, "lambda-y-lemma", nullptr, [](const SimpleGraph& g) -> Failure {
    BiPoly t = tutte_polynomial(g);
    int r = g.order() - component_count(g);
    for (const Rational& y : {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 3), Rational(1),
                              Rational(2), Rational(5, 2)}) {
      Rational expected = pow(y, r) * t(1, Rational(1 + y));
      if (auto f = expect_equal(character_lambda_y(g, y), expected, "lambda_y != y^{|V|-cc} T(1,1+y)" + at(y))) return f;
    }
    return std::nullopt;
  }));
  out.push_back(simple_check(s, "chromatic-shape", nullptr, [](const SimpleGraph& g) -> Failure {
    UniPoly p = chromatic_polynomial(g);
    if (auto f = expect_true(p.degree() == g.order() && p.coeff(g.order()) == 1, "phi_chr not monic of degree |V|"))
      return f;
    for (const auto& [d, c] : p.terms()) {
      if (sign(g.order() - d) * c < 0) return "phi_chr coefficients do not alternate: " + p.to_string();
    }
    for (int x = 0; x <= 3; ++x) {
      if (auto f = expect_equal(p(x), Rational(proper_coloring_count(g, x)), "phi_chr(x) != proper colorings at x=" +
                                                                                std::to_string(x)))
        return f;
    }
    return std::nullopt;
  }));
  out.push_back(simple_check(s, "tutte-nonnegative", nullptr, [](const SimpleGraph& g) -> Failure {
    BiPoly t = tutte_polynomial(g);
    return expect_true(t.has_nonnegative_integer_coefficients(), "T has a negative or fractional coefficient: " +
                                                                     t.to_string());
  }));
}

// --- colorings --------------------------------------------------------------

void add_colorings(std::vector<Check>& out) {
  const std::string s = "colorings";
  out.push_back(simple_check(s, "pair-count-fk", up_to(5), [](const SimpleGraph& g) -> Failure {
    BiPoly z = fk_polynomial(g);
    for (int x = 0; x <= 3; ++x) {
      for (int y = -1; y <= 2; ++y) {
        Rational expected = z(x, y);
        Rational got(compatible_pair_count(g, x, y + 1));
        if (auto f = expect_equal(got, expected, "|PC_{x,y+1}| != Z(x,y) at x=" + std::to_string(x) + at(y))) return f;
      }
      if (auto f = expect_equal(compatible_pair_count(g, x, 0), proper_coloring_count(g, x),
                                "|PC_{x,0}| != proper colorings at x=" + std::to_string(x)))
        return f;
    }
    return std::nullopt;
  }));
  out.push_back(simple_check(s, "pair-signed-sum-fk", up_to(5), [](const SimpleGraph& g) -> Failure {
    BiPoly z = fk_polynomial(g);
    for (int x = 0; x <= 3; ++x) {
      for (int y = 1; y <= 3; ++y) {
        Rational got(compatible_pair_signed_sum(g, x, y));
        if (auto f = expect_equal(got, z(x, -y), "signed PC sum != Z(x,-y) at x=" + std::to_string(x) + at(y))) return f;
      }
    }
    return std::nullopt;
  }));
  out.push_back(simple_check(s, "pair-count-naive", up_to(3), [](const SimpleGraph& g) -> Failure {
    for (int x = 0; x <= 3; ++x) {
      for (int y = 0; y <= 3; ++y) {
        if (auto f = expect_equal(compatible_pair_count(g, x, y), compatible_pair_count_naive(g, x, y),
                                  "|PC| fast != naive at x=" + std::to_string(x) + at(y)))
          return f;
      }
    }
    return std::nullopt;
  }));
  out.push_back(simple_check(s, "opc-fk", edges_up_to(6), [](const SimpleGraph& g) -> Failure {
    BiPoly z = fk_polynomial(g);
    for (int x = 0; x <= 3; ++x) {
      for (int y = -1; y <= 2; ++y) {
        Rational got(opc_signed_sum(g, x, y, OpcVariant::kNonneg));
        if (auto f = expect_equal(got, z(-x, y), "OPC sum != Z(-x,y) at x=" + std::to_string(x) + at(y))) return f;
      }
      for (int y = 1; y <= 3; ++y) {
        Rational got(opc_signed_sum(g, x, y, OpcVariant::kNegative));
        if (auto f = expect_equal(got, z(-x, -y), "signed OPC sum != Z(-x,-y) at x=" + std::to_string(x) + at(y)))
          return f;
      }
    }
    return std::nullopt;
  }));
  out.push_back(simple_check(s, "opc-naive", [](int n, int m) { return n <= 4 && m <= 3; },
                             [](const SimpleGraph& g) -> Failure {
                               for (int x = 0; x <= 2; ++x) {
                                 for (int y = -1; y <= 1; ++y) {
                                   if (auto f = expect_equal(opc_signed_sum(g, x, y, OpcVariant::kNonneg),
                                                             opc_signed_sum_naive(g, x, y, OpcVariant::kNonneg),
                                                             "OPC fast != naive"))
                                     return f;
                                 }
                                 for (int y = 1; y <= 2; ++y) {
                                   if (auto f = expect_equal(opc_signed_sum(g, x, y, OpcVariant::kNegative),
                                                             opc_signed_sum_naive(g, x, y, OpcVariant::kNegative),
                                                             "signed OPC fast != naive"))
                                     return f;
                                 }
                               }
                               return std::nullopt;
                             }));
  out.push_back(simple_check(s, "tutte-from-colorings", [](int n, int m) { return n <= 5 && m <= 6; },
                             [](const SimpleGraph& g) -> Failure {
                               BiPoly t = tutte_polynomial(g);
                               struct Point {
                                 int x, y;
                                 Quadrant q;
                                 int tx, ty;
                               };
                               const Point points[] = {
                                   {2, 2, Quadrant::kPosPos, 2, 2},    {3, 2, Quadrant::kPosPos, 3, 2},
                                   {2, 3, Quadrant::kPosPos, 2, 3},    {0, 0, Quadrant::kNegNeg, 0, 0},
                                   {1, 0, Quadrant::kNegNeg, -1, 0},   {0, 1, Quadrant::kNegNeg, 0, -1},
                                   {1, 1, Quadrant::kNegNeg, -1, -1},  {0, 2, Quadrant::kNegX, 0, 2},
                                   {1, 2, Quadrant::kNegX, -1, 2},     {2, 3, Quadrant::kNegX, -2, 3},
                                   {2, 0, Quadrant::kNegY, 2, 0},      {2, 1, Quadrant::kNegY, 2, -1},
                                   {3, 1, Quadrant::kNegY, 3, -1},
                               };
                               for (const Point& p : points) {
                                 Rational got = tutte_negative_check(g, p.x, p.y, p.q);
                                 if (auto f = expect_equal(got, t(p.tx, p.ty),
                                                           "coloring formula != T(" + std::to_string(p.tx) + "," +
                                                               std::to_string(p.ty) + ")"))
                                   return f;
                               }
                               return std::nullopt;
                             }));
}

// --- orientations ------------------------------------------------------------

void add_orientations(std::vector<Check>& out) {
  const std::string s = "orientations";
  out.push_back(simple_check(s, "orientation-counts", nullptr, [](const SimpleGraph& g) -> Failure {
    std::int64_t all = 0;
    std::int64_t acyclic = 0;
    std::int64_t strong = 0;
    for_each_orientation(g, [&](const OrientedGraph& h) {
      ++all;
      acyclic += has_directed_cycle(h) ? 0 : 1;
      strong += components_strongly_connected(h) ? 1 : 0;
      if (!(h.underlying() == g)) all = -1;
    });
    if (auto f = expect_true(all == (std::int64_t{1} << g.size()), "|O(G)| != 2^|E| or an orientation lost an edge"))
      return f;
    if (auto f = expect_true(acyclic == count_acyclic_orientations(g), "acyclic orientation count")) return f;
    if (auto f = expect_true(strong == count_strongly_connected_orientations(g), "strong orientation count")) return f;
    return expect_true(g.size() == 0 || acyclic + strong <= all, "an orientation is both acyclic and strong");
  }));
  out.push_back(simple_check(s, "subgraph-families", nullptr, [](const SimpleGraph& g) -> Failure {
    int cc = component_count(g);
    std::int64_t spanning = 0, covering = 0, forests = 0, covering_forests = 0;
    for_each_subgraph(g, SubgraphFamily::kSpanning, [&](const SimpleGraph& h, EdgeSet) {
      ++spanning;
      bool cover = component_count(h) == cc;
      bool forest = nullity(h) == 0;
      covering += cover ? 1 : 0;
      forests += forest ? 1 : 0;
      covering_forests += (cover && forest) ? 1 : 0;
    });
    if (auto f = expect_true(spanning == (std::int64_t{1} << g.size()), "|S(G)| != 2^|E|")) return f;
    if (auto f = expect_true(covering == count_subgraphs(g, SubgraphFamily::kCovering), "|C(G)| mismatch")) return f;
    if (auto f = expect_true(forests == count_subgraphs(g, SubgraphFamily::kSpanningForest), "|SF(G)| mismatch")) return f;
    return expect_true(covering_forests == count_subgraphs(g, SubgraphFamily::kCoveringForest), "|CF(G)| mismatch");
  }));
  out.push_back(simple_check(s, "fk-antipode-identity", edges_up_to(9), [](const SimpleGraph& g) -> Failure {
    auto classes = signed_partial_orientation_classes(g);
    for (int y = -1; y <= 2; ++y) {
      UniPoly rhs;
      for (const auto& [mask, sgn] : classes) rhs += zeta(spanning_subgraph(g, mask), y) * Rational(static_cast<long>(sgn));
      if (auto f = expect_equal(zeta(g, y).compose_affine(-1, 0), rhs, "Z(-X,y) != sum over PO_tac" + at(Rational(y))))
        return f;
    }
    return std::nullopt;
  }));
  out.push_back(simple_check(s, "tutte-antipode-identity", edges_up_to(9), [](const SimpleGraph& g) -> Failure {
    int cc = component_count(g);
    BiPoly lhs = tutte_polynomial(g).substitute(BiPoly(2) - BiPoly::X(), BiPoly::Y());
    BiPoly rhs;
    for (const auto& [mask, sgn] : signed_partial_orientation_classes(g)) {
      SimpleGraph h = spanning_subgraph(g, mask);
      int d = component_count(h) - cc;
      Rational members = Rational(static_cast<long>(sgn)) * sign(component_count(h));
      rhs += members * (pow(BiPoly(1) - BiPoly::X(), d) * tutte_polynomial(h));
    }
    return expect_equal(lhs, rhs, "T(2-X,Y) != sum over PO_tac of (1-X)^{cc(H)-cc(G)} T_H");
  }));
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> all;
    add_axioms(all);
    add_antipode(all);
    add_morphisms(all);
    add_specializations(all);
    add_colorings(all);
    add_orientations(all);
    return all;
  }();
  return checks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms",          "antipode",  "morphisms",
                                              "specializations", "colorings", "orientations"};
  return names;
}

std::vector<Check> checks_for(const std::string& suite) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  std::vector<Check> out;
  for (const Check& c : registry()) {
    if (suite == "all" || c.suite == suite) out.push_back(c);
  }
  return out;
}

Check find_check(const std::string& name) {
  for (const Check& c : registry()) {
    if (c.name == name) return c;
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

namespace {

struct Outcome {
  enum Kind { kPass, kFail, kSkip } kind = kSkip;
  std::string detail;
};

template <class G, class P, class Emit>
void run_universe(const Check& check, const std::vector<G>& universe, const P& property, int jobs, Emit emit,
                  CheckResult& result) {
  std::vector<Outcome> outcomes(universe.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < universe.size(); i = next++) {
      const G& g = universe[i];
      Outcome& o = outcomes[i];
      if (check.scope && !check.scope(g.order(), g.size())) continue;
      try {
        Failure f = property(g);
        o.kind = f ? Outcome::kFail : Outcome::kPass;
        if (f) o.detail = *f;
      } catch (const ResourceCapExceeded&) {
        o.kind = Outcome::kSkip;
      } catch (const std::exception& e) {
        o.kind = Outcome::kFail;
        o.detail = std::string("exception: ") + e.what();
      }
    }
  };
  int threads = std::max(1, std::min<int>(jobs, static_cast<int>(universe.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (o.kind == Outcome::kSkip) {
      ++result.skipped;
      continue;
    }
    ++result.checked;
    if (o.kind == Outcome::kFail && result.status != Status::kFail) {
      result.status = Status::kFail;
      result.counterexample = emit(universe[i]);
      result.detail = o.detail;
    }
  }
}

}  // namespace

CheckResult run_check(const Check& check, const std::vector<SimpleGraph>& simple,
                      const std::vector<OrientedGraph>& oriented, int jobs) {
  CheckResult result;
  result.suite = check.suite;
  result.name = check.name;
  if (check.fixed) {
    result.checked = 1;
    try {
      if (Failure f = check.fixed()) {
        result.status = Status::kFail;
        result.detail = *f;
      }
    } catch (const ResourceCapExceeded& e) {
      result.checked = 0;
      result.skipped = 1;
      result.detail = e.what();
    } catch (const std::exception& e) {
      result.status = Status::kFail;
      result.detail = std::string("exception: ") + e.what();
    }
  } else if (check.simple) {
    run_universe(check, simple, check.simple, jobs, [](const SimpleGraph& g) { return emit_graph6(g); }, result);
  } else {
    run_universe(check, oriented, check.oriented, jobs, [](const OrientedGraph& g) { return emit_digraph6(g); }, result);
  }
  if (result.status != Status::kFail && result.checked == 0) result.status = Status::kSkipped;
  return result;
}

RunReport run_suite(const std::string& suite, const Options& options) {
  if (options.max_vertices < 1 || options.max_vertices > 7) throw std::out_of_range("max-vertices must be in 1..7");
  auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.suite = suite;
  report.options = options;
  std::vector<Check> checks = checks_for(suite);
  std::vector<SimpleGraph> simple = simple_isoclasses(options.max_vertices, options.max_edges);
  std::vector<OrientedGraph> oriented;
  bool needs_oriented = std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.oriented != nullptr; });
  if (needs_oriented) {
    oriented = oriented_isoclasses(std::min(options.max_vertices, options.oriented_max_vertices));
    if (options.max_edges >= 0) {
      std::erase_if(oriented, [&](const OrientedGraph& g) { return g.size() > options.max_edges; });
    }
  }
  for (const Check& c : checks) report.checks.push_back(run_check(c, simple, oriented, options.jobs));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const RunReport& report, bool timing) {
  std::ostringstream out;
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const CheckResult& c : report.checks) {
    out << to_string(c.status) << ' ' << c.suite << '/' << c.name << " checked=" << c.checked
        << " skipped=" << c.skipped;
    if (c.status == Status::kFail) {
      if (!c.counterexample.empty()) out << " counterexample=" << c.counterexample;
      out << " detail=" << c.detail;
    }
    out << '\n';
    switch (c.status) {
      case Status::kPass:
        ++passed;
        break;
      case Status::kFail:
        ++failed;
        break;
      case Status::kSkipped:
        ++skipped;
        break;
    }
  }
  out << "suite=" << report.suite << " max-vertices=" << report.options.max_vertices << " max-edges="
      << (report.options.max_edges < 0 ? std::string("none") : std::to_string(report.options.max_edges))
      << " passed=" << passed << " failed=" << failed << " skipped=" << skipped;
  if (timing) {
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << report.seconds;
    out << " seconds=" << secs.str();
  }
  out << '\n';
  return out.str();
}

}  // namespace grhopf::verify
