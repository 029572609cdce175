#pragma once

#include "grhopf/graph.hpp"
#include "grhopf/poly.hpp"

namespace grhopf {

/// Chromatic polynomial by deletion-contraction, memoized per isoclass.
UniPoly chromatic_polynomial(const SimpleGraph& g);

/// Z_G(X,Y) = sum over edge subsets F of X^{cc(G|F)} Y^{|F|}.
BiPoly fk_polynomial(const SimpleGraph& g);
/// S_G(X,Y) = sum over F of X^{r(G)-r(G|F)} Y^{n(G|F)}.
BiPoly rank_generating_polynomial(const SimpleGraph& g);
/// T_G(X,Y) = S_G(X-1, Y-1).
BiPoly tutte_polynomial(const SimpleGraph& g);

/// Classical deletion-contraction on a loopy multigraph: X T(G-e) for a
/// bridge, Y T(G-e) for a loop, T(G-e) + T(G/e) otherwise; 1 when edgeless.
BiPoly tutte_deletion_contraction(const Multigraph& g);

/// Z = X^cc Y^{|V|-cc} T(X/Y + 1, Y + 1). Throws std::domain_error when the
/// denominators do not clear.
BiPoly fk_from_tutte(const BiPoly& t, int n_vertices, int cc);
/// T(X,Y) = Z((X-1)(Y-1), Y-1) / ((X-1)^cc (Y-1)^{|V|}). Throws
/// std::domain_error when the division is not exact.
BiPoly tutte_from_fk(const BiPoly& z, int n_vertices, int cc);

/// Z_G(X, y).
UniPoly zeta(const SimpleGraph& g, const Rational& y);
/// X^|V|.
UniPoly phi0(const SimpleGraph& g);

/// (1+y)^|E|.
Rational character_mu_y(const SimpleGraph& g, const Rational& y);
/// Sum over covering graphs H of y^|E(H)|.
Rational character_lambda_y(const SimpleGraph& g, const Rational& y);

/// p(X1 + X2) with X1 as the first and X2 as the second variable.
BiPoly add_coproduct_eval(const UniPoly& p);

}  // namespace grhopf
