#include "grhopf/poly.hpp"

#include <stdexcept>

namespace grhopf {

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

// "c", "X", "-X^2", "3/2*X" fragments joined with " + " / " - ".
void append_term(std::string& out, const Rational& c, const std::string& monomial) {
  Rational mag = abs(c);
  bool negative = sgn(c) < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += monomial;
  } else {
    out += mag.get_str() + "*" + monomial;
  }
}

std::string power(const std::string& var, int d) {
  if (d == 0) return "";
  if (d == 1) return var;
  return var + "^" + std::to_string(d);
}

}  // namespace

// --- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(const Rational& constant) { add_term(0, constant); }

UniPoly UniPoly::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw std::domain_error("negative degree");
  UniPoly p;
  p.add_term(degree, coeff);
  return p;
}

UniPoly UniPoly::falling_factorial(int n) {
  UniPoly p(1);
  for (int k = 0; k < n; ++k) p *= X() - UniPoly(k);
  return p;
}

Rational UniPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational UniPoly::operator()(const Rational& x) const {
  // Horner over the sparse map, highest degree first.
  Rational acc = 0;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= pow(x, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc *= pow(x, prev);
  return acc;
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
  UniPoly lin = UniPoly::monomial(1, a) + UniPoly(b);
  UniPoly out;
  for (const auto& [d, c] : terms_) out += c * pow(lin, d);
  return out;
}

void UniPoly::add_term(int degree, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  UniPoly out;
  for (const auto& [d1, c1] : terms_)
    for (const auto& [d2, c2] : o.terms_) out.add_term(d1 + d2, c1 * c2);
  *this = std::move(out);
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

UniPoly UniPoly::operator-() const { return *this * Rational(-1); }

std::string UniPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(out, it->second, power(var, it->first));
  }
  return out;
}

UniPoly pow(const UniPoly& p, int exponent) {
  if (exponent < 0) throw std::domain_error("negative polynomial power");
  UniPoly result(1);
  for (int i = 0; i < exponent; ++i) result *= p;
  return result;
}

// --- BiPoly ----------------------------------------------------------------

BiPoly::BiPoly(const Rational& constant) { add_term({0, 0}, constant); }

BiPoly BiPoly::monomial(int dx, int dy, const Rational& coeff) {
  if (dx < 0 || dy < 0) throw std::domain_error("negative degree");
  BiPoly p;
  p.add_term({dx, dy}, coeff);
  return p;
}

BiPoly BiPoly::from_x(const UniPoly& p) {
  BiPoly out;
  for (const auto& [d, c] : p.terms()) out.add_term({d, 0}, c);
  return out;
}

BiPoly BiPoly::from_y(const UniPoly& p) {
  BiPoly out;
  for (const auto& [d, c] : p.terms()) out.add_term({0, d}, c);
  return out;
}

Rational BiPoly::coeff(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BiPoly::lowest_degree_x() const { return terms_.empty() ? -1 : terms_.begin()->first.first; }

bool BiPoly::has_nonnegative_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (sgn(c) < 0 || c.get_den() != 1) return false;
  }
  return true;
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * pow(x, e.first) * pow(y, e.second);
  return acc;
}

UniPoly BiPoly::specialize_y(const Rational& y) const {
  UniPoly out;
  for (const auto& [e, c] : terms_) out += UniPoly::monomial(e.first, c * pow(y, e.second));
  return out;
}

UniPoly BiPoly::specialize_x(const Rational& x) const {
  UniPoly out;
  for (const auto& [e, c] : terms_) out += UniPoly::monomial(e.second, c * pow(x, e.first));
  return out;
}

BiPoly BiPoly::substitute(const BiPoly& px, const BiPoly& py) const {
  std::map<int, BiPoly> xpow{{0, BiPoly(1)}};
  std::map<int, BiPoly> ypow{{0, BiPoly(1)}};
  auto power_of = [](std::map<int, BiPoly>& cache, const BiPoly& base, int k) -> const BiPoly& {
    for (int i = cache.rbegin()->first + 1; i <= k; ++i) cache[i] = cache[i - 1] * base;
    return cache[k];
  };
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    out += c * (power_of(xpow, px, e.first) * power_of(ypow, py, e.second));
  }
  return out;
}

BiPoly BiPoly::divide_monomial(int dx, int dy) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.first < dx || e.second < dy) {
      throw std::domain_error("polynomial not divisible by X^" + std::to_string(dx) + " Y^" +
                              std::to_string(dy));
    }
    out.add_term({e.first - dx, e.second - dy}, c);
  }
  return out;
}

void BiPoly::add_term(Exponent e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  BiPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  *this = std::move(out);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BiPoly BiPoly::operator-() const { return *this * Rational(-1); }

std::string BiPoly::to_string(const std::string& x, const std::string& y) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono = power(x, it->first.first);
    std::string ypart = power(y, it->first.second);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    append_term(out, it->second, mono);
  }
  return out;
}

BiPoly pow(const BiPoly& p, int exponent) {
  if (exponent < 0) throw std::domain_error("negative polynomial power");
  BiPoly result(1);
  for (int i = 0; i < exponent; ++i) result *= p;
  return result;
}

}  // namespace grhopf
