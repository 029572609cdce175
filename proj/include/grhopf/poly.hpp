#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace grhopf {

using Rational = mpq_class;
using Integer = mpz_class;

Rational pow(const Rational& base, int exponent);
std::string to_string(const Rational& r);

/// Sparse univariate polynomial in X with exact rational coefficients.
/// Zero coefficients are never stored.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  UniPoly(int constant) : UniPoly(Rational(constant)) {}  // NOLINT

  static UniPoly X() { return monomial(1, 1); }
  static UniPoly monomial(int degree, const Rational& coeff);
  /// X(X-1)...(X-n+1).
  static UniPoly falling_factorial(int n);

  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  int lowest_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }
  Rational coeff(int degree) const;
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational operator()(const Rational& x) const;
  /// p(a*X + b).
  UniPoly compose_affine(const Rational& a, const Rational& b) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(UniPoly a, int c) { return a *= Rational(c); }
  friend UniPoly operator*(int c, UniPoly a) { return a *= Rational(c); }
  UniPoly operator-() const;
  bool operator==(const UniPoly&) const = default;

  std::string to_string(const std::string& var = "X") const;

 private:
  void add_term(int degree, const Rational& c);

  std::map<int, Rational> terms_;
};

/// Sparse polynomial in (X, Y) with exact rational coefficients; keys are
/// (X-degree, Y-degree).
class BiPoly {
 public:
  using Exponent = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  BiPoly(int constant) : BiPoly(Rational(constant)) {}  // NOLINT

  static BiPoly X() { return monomial(1, 0, 1); }
  static BiPoly Y() { return monomial(0, 1, 1); }
  static BiPoly monomial(int dx, int dy, const Rational& coeff);
  /// p(X) viewed in the first variable.
  static BiPoly from_x(const UniPoly& p);
  static BiPoly from_y(const UniPoly& p);

  Rational coeff(int dx, int dy) const;
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_x() const;
  int degree_y() const;
  int lowest_degree_x() const;
  bool has_nonnegative_integer_coefficients() const;

  Rational operator()(const Rational& x, const Rational& y) const;
  UniPoly specialize_y(const Rational& y) const;
  UniPoly specialize_x(const Rational& x) const;
  /// P(px(X,Y), py(X,Y)).
  BiPoly substitute(const BiPoly& px, const BiPoly& py) const;
  /// Exact division by X^dx Y^dy; throws std::domain_error if not exact.
  BiPoly divide_monomial(int dx, int dy) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(BiPoly a, int c) { return a *= Rational(c); }
  friend BiPoly operator*(int c, BiPoly a) { return a *= Rational(c); }
  BiPoly operator-() const;
  bool operator==(const BiPoly&) const = default;

  std::string to_string(const std::string& x = "X", const std::string& y = "Y") const;

 private:
  void add_term(Exponent e, const Rational& c);

  std::map<Exponent, Rational> terms_;
};

BiPoly pow(const BiPoly& p, int exponent);
UniPoly pow(const UniPoly& p, int exponent);

}  // namespace grhopf
