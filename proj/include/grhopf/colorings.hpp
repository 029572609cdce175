#pragma once

#include <vector>

#include "grhopf/graph.hpp"
#include "grhopf/poly.hpp"

namespace grhopf {

/// h[k] = number of vertex colorings in [x] with exactly k monochromatic
/// edges (x^|V| colorings in total).
std::vector<Integer> monochromatic_histogram(const SimpleGraph& g, int x);

/// Proper colorings with x colors.
Integer proper_coloring_count(const SimpleGraph& g, int x);

/// |PC_{x,y}|: vertex colors [x], edge values {0..y}, an edge nonzero exactly
/// when its ends share a color. Equals Z_G(x, y-1).
Integer compatible_pair_count(const SimpleGraph& g, int x, int y);
/// Same count by materializing every (c_V, c_E) pair.
Integer compatible_pair_count_naive(const SimpleGraph& g, int x, int y);

/// Sum over PC_{x,y-1} of (-1)^{#edges with nonzero value}; y >= 1. Equals
/// Z_G(x, -y).
Integer compatible_pair_signed_sum(const SimpleGraph& g, int x, int y);

enum class OpcVariant { kNonneg, kNegative };

/// kNonneg (y >= -1): sum over OPC_{x,y+1} of (-1)^{cc(gr0 H)} = Z_G(-x, y).
/// kNegative (y >= 1): sum over OPC_{x,y-1} of
/// (-1)^{cc(gr0 H) + #nonzero edges} = Z_G(-x, -y).
/// Throws std::out_of_range outside these ranges.
Integer opc_signed_sum(const SimpleGraph& g, int x, int y, OpcVariant variant);
/// Same sum by enumerating every triple (H, c_V, c_E).
Integer opc_signed_sum_naive(const SimpleGraph& g, int x, int y, OpcVariant variant);

/// Which sign pattern of (T's first argument, second argument).
enum class Quadrant {
  kPosPos,  ///< T(x, y),   x, y >= 2, from |PC|
  kNegNeg,  ///< T(-x, -y), x, y >= 0, from signed PC sums
  kNegX,    ///< T(-x, y),  x >= 0, y >= 2, from OPC sums
  kNegY,    ///< T(x, -y),  x >= 2, y >= 0, from signed OPC sums
};

/// Evaluates the Tutte polynomial at the quadrant's point purely from
/// coloring counts. x and y are the nonnegative magnitudes. Throws
/// std::domain_error on a zero denominator (x = 1 or y = 1 where excluded)
/// and std::out_of_range for other values outside the quadrant.
Rational tutte_negative_check(const SimpleGraph& g, int x, int y, Quadrant quadrant);

}  // namespace grhopf
