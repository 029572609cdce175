#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "grhopf/canonical.hpp"
#include "grhopf/graph.hpp"
#include "grhopf/poly.hpp"

namespace grhopf {

/// Which graph basis a formal sum lives in. OrientedAcyclic is the quotient
/// of the oriented algebra by the span of graphs with an oriented cycle:
/// any term with a cyclic factor is dropped on insertion.
enum class Flavor { kSimple, kOriented, kOrientedAcyclic };

std::string to_string(Flavor f);

template <class G>
constexpr Flavor default_flavor();
template <>
constexpr Flavor default_flavor<SimpleGraph>() { return Flavor::kSimple; }
template <>
constexpr Flavor default_flavor<OrientedGraph>() { return Flavor::kOriented; }

inline bool vanishes_in(Flavor, const SimpleGraph&) { return false; }
inline bool vanishes_in(Flavor f, const OrientedGraph& g) {
  return f == Flavor::kOrientedAcyclic && has_directed_cycle(g);
}

/// Formal rational combination of k-fold tensors of graph isoclasses. Arity 1
/// is an element of the graph algebra itself (see GraphSum).
template <class G>
class TensorSum {
 public:
  struct Term {
    std::vector<G> factors;  // canonical representatives
    Rational coeff;
  };

  explicit TensorSum(int arity = 1, Flavor flavor = default_flavor<G>())
      : arity_(arity), flavor_(flavor) {
    if (arity < 1) throw std::invalid_argument("tensor arity must be at least 1");
    if ((flavor == Flavor::kSimple) != std::is_same_v<G, SimpleGraph>) {
      throw std::invalid_argument("flavor " + to_string(flavor) + " does not match the graph type");
    }
  }

  /// The basis element g (arity 1).
  static TensorSum basis(const G& g, Flavor flavor = default_flavor<G>()) {
    TensorSum s(1, flavor);
    s.add({g}, 1);
    return s;
  }

  /// The unit 1 = empty graph (arity 1).
  static TensorSum unit(Flavor flavor = default_flavor<G>()) { return basis(G(0), flavor); }

  int arity() const { return arity_; }
  Flavor flavor() const { return flavor_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Terms ordered by the concatenated canonical keys.
  const std::map<std::string, Term>& terms() const { return terms_; }

  void add(const std::vector<G>& factors, const Rational& coeff) {
    if (static_cast<int>(factors.size()) != arity_) {
      throw std::invalid_argument("tensor factor count does not match arity");
    }
    if (coeff == 0) return;
    std::string key;
    std::vector<G> reps;
    reps.reserve(factors.size());
    for (const G& g : factors) {
      if (vanishes_in(flavor_, g)) return;
      Canonical<G> c = canonical_form(g);
      key += std::to_string(c.key.bytes.size());
      key += ':';
      key += c.key.bytes;
      reps.push_back(std::move(c.graph));
    }
    insert(std::move(key), std::move(reps), coeff);
  }

  Rational coefficient(const std::vector<G>& factors) const {
    TensorSum probe(arity_, flavor_);
    probe.add(factors, 1);
    if (probe.is_zero()) return 0;
    auto it = terms_.find(probe.terms_.begin()->first);
    return it == terms_.end() ? Rational(0) : it->second.coeff;
  }

  TensorSum& operator+=(const TensorSum& o) {
    check_compatible(o);
    for (const auto& [k, t] : o.terms_) insert(k, t.factors, t.coeff);
    return *this;
  }
  TensorSum& operator-=(const TensorSum& o) {
    check_compatible(o);
    for (const auto& [k, t] : o.terms_) insert(k, t.factors, -t.coeff);
    return *this;
  }
  TensorSum& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, t] : terms_) t.coeff *= c;
    return *this;
  }
  friend TensorSum operator+(TensorSum a, const TensorSum& b) { return a += b; }
  friend TensorSum operator-(TensorSum a, const TensorSum& b) { return a -= b; }
  friend TensorSum operator*(TensorSum a, const Rational& c) { return a *= c; }
  friend TensorSum operator*(const Rational& c, TensorSum a) { return a *= c; }

  bool operator==(const TensorSum& o) const {
    if (arity_ != o.arity_ || terms_.size() != o.terms_.size()) return false;
    for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b) {
      if (a->first != b->first || a->second.coeff != b->second.coeff) return false;
    }
    return true;
  }

 private:
  void check_compatible(const TensorSum& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("tensor arity mismatch");
    if (flavor_ != o.flavor_) throw std::invalid_argument("tensor flavor mismatch");
  }

  void insert(std::string key, std::vector<G> reps, const Rational& coeff) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), Term{std::move(reps), coeff});
      return;
    }
    it->second.coeff += coeff;
    if (it->second.coeff == 0) terms_.erase(it);
  }

  int arity_;
  Flavor flavor_;
  std::map<std::string, Term> terms_;
};

template <class G>
using GraphSum = TensorSum<G>;

/// Bilinear disjoint-union product of two arity-1 sums.
template <class G>
GraphSum<G> product(const GraphSum<G>& a, const GraphSum<G>& b) {
  if (a.arity() != 1 || b.arity() != 1) throw std::invalid_argument("product needs arity-1 sums");
  if (a.flavor() != b.flavor()) throw std::invalid_argument("product of different basis flavors");
  GraphSum<G> out(1, a.flavor());
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out.add({disjoint_union(ta.factors[0], tb.factors[0])}, ta.coeff * tb.coeff);
  return out;
}

/// Replaces factor `index` of every term by the arity-2 image f(factor):
/// (Id^index (x) f (x) Id^rest).
template <class G, class F>
TensorSum<G> expand_factor(const TensorSum<G>& t, int index, F&& f) {
  if (index < 0 || index >= t.arity()) throw std::out_of_range("tensor factor index");
  TensorSum<G> out(t.arity() + 1, t.flavor());
  for (const auto& [k, term] : t.terms()) {
    TensorSum<G> image = f(term.factors[index]);
    for (const auto& [ki, ti] : image.terms()) {
      std::vector<G> factors;
      factors.reserve(t.arity() + 1);
      for (int i = 0; i < index; ++i) factors.push_back(term.factors[i]);
      for (const G& g : ti.factors) factors.push_back(g);
      for (int i = index + 1; i < t.arity(); ++i) factors.push_back(term.factors[i]);
      out.add(factors, term.coeff * ti.coeff);
    }
  }
  return out;
}

/// Applies an arity-1-valued linear map to every factor: f (x) f (x) ... (x) f.
template <class H, class G, class F>
TensorSum<H> map_factors(const TensorSum<G>& t, Flavor target, F&& f) {
  TensorSum<H> out(t.arity(), target);
  for (const auto& [k, term] : t.terms()) {
    // Expand the product of the per-factor images.
    std::vector<std::pair<std::vector<H>, Rational>> partial{{{}, term.coeff}};
    for (const G& g : term.factors) {
      TensorSum<H> image = f(g);
      std::vector<std::pair<std::vector<H>, Rational>> next;
      for (const auto& [prefix, c] : partial) {
        for (const auto& [ki, ti] : image.terms()) {
          std::vector<H> grown = prefix;
          grown.push_back(ti.factors[0]);
          next.emplace_back(std::move(grown), c * ti.coeff);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [factors, c] : partial) out.add(factors, c);
  }
  return out;
}

/// Reorders factors: output factor i is input factor perm[i].
template <class G>
TensorSum<G> permute_factors(const TensorSum<G>& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.arity()) throw std::invalid_argument("permutation size");
  TensorSum<G> out(t.arity(), t.flavor());
  for (const auto& [k, term] : t.terms()) {
    std::vector<G> factors;
    for (int i : perm) factors.push_back(term.factors[i]);
    out.add(factors, term.coeff);
  }
  return out;
}

/// m_{1,3,24}: a (x) b (x) c (x) d  ->  a (x) c (x) bd.
template <class G>
TensorSum<G> multiply_1_3_24(const TensorSum<G>& t) {
  if (t.arity() != 4) throw std::invalid_argument("m_{1,3,24} needs a 4-fold tensor");
  TensorSum<G> out(3, t.flavor());
  for (const auto& [k, term] : t.terms()) {
    const auto& f = term.factors;
    out.add({f[0], f[2], disjoint_union(f[1], f[3])}, term.coeff);
  }
  return out;
}

/// Scalar-valued linear map (e.g. a counit) applied to one factor; the
/// arity drops by one.
template <class G, class F>
TensorSum<G> apply_scalar_to_factor(const TensorSum<G>& t, int index, F&& phi) {
  if (t.arity() < 2) throw std::invalid_argument("cannot drop the only factor");
  TensorSum<G> out(t.arity() - 1, t.flavor());
  for (const auto& [k, term] : t.terms()) {
    Rational c = phi(term.factors[index]);
    if (c == 0) continue;
    std::vector<G> factors;
    for (int i = 0; i < t.arity(); ++i) {
      if (i != index) factors.push_back(term.factors[i]);
    }
    out.add(factors, term.coeff * c);
  }
  return out;
}

}  // namespace grhopf
