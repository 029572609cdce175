#include "grhopf/colorings.hpp"

#include <stdexcept>
#include <string>

#include "grhopf/enumeration.hpp"

namespace grhopf {

namespace {

void check_colors(int x) {
  if (x < 0) throw std::out_of_range("negative color count");
}

void histogram_dfs(const SimpleGraph& g, int x, int v, int mono, std::vector<int>& color,
                   std::vector<Integer>& hist) {
  if (v == g.order()) {
    hist[mono] += 1;
    return;
  }
  VertexSet earlier = g.neighbors(v) & (bit(v) - 1);
  for (int c = 0; c < x; ++c) {
    int extra = 0;
    for_each_bit(earlier, [&](int w) { extra += color[w] == c ? 1 : 0; });
    color[v] = c;
    histogram_dfs(g, x, v + 1, mono + extra, color, hist);
  }
}

Integer weighted(const std::vector<Integer>& hist, const Integer& weight) {
  Integer total = 0;
  Integer power = 1;
  for (const Integer& h : hist) {
    total += h * power;
    power *= weight;
  }
  return total;
}

Integer signed_one(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// Calls visit(vertex colors) for each of the x^n colorings.
template <class F>
void for_each_coloring(int n, int x, F&& visit) {
  if (n > 0 && x == 0) return;
  std::vector<int> color(n, 0);
  while (true) {
    visit(color);
    int i = n - 1;
    while (i >= 0 && color[i] == x - 1) color[i--] = 0;
    if (i < 0) return;
    ++color[i];
  }
}

}  // namespace

std::vector<Integer> monochromatic_histogram(const SimpleGraph& g, int x) {
  check_colors(x);
  std::vector<Integer> hist(static_cast<std::size_t>(g.size()) + 1, 0);
  std::vector<int> color(g.order(), 0);
  histogram_dfs(g, x, 0, 0, color, hist);
  return hist;
}

Integer proper_coloring_count(const SimpleGraph& g, int x) { return monochromatic_histogram(g, x)[0]; }

Integer compatible_pair_count(const SimpleGraph& g, int x, int y) {
  if (y < 0) throw std::out_of_range("edge-value range must be nonnegative");
  return weighted(monochromatic_histogram(g, x), Integer(y));
}

Integer compatible_pair_count_naive(const SimpleGraph& g, int x, int y) {
  check_colors(x);
  if (y < 0) throw std::out_of_range("edge-value range must be nonnegative");
  std::vector<Edge> edges = g.edges();
  Integer count = 0;
  for_each_coloring(g.order(), x, [&](const std::vector<int>& cv) {
    for_each_coloring(static_cast<int>(edges.size()), y + 1, [&](const std::vector<int>& ce) {
      bool ok = true;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        ok &= (ce[i] != 0) == (cv[edges[i].u] == cv[edges[i].v]);
      }
      if (ok) count += 1;
    });
  });
  return count;
}

Integer compatible_pair_signed_sum(const SimpleGraph& g, int x, int y) {
  if (y < 1) throw std::out_of_range("signed pair sum needs y >= 1");
  return weighted(monochromatic_histogram(g, x), Integer(1 - y));
}

Integer opc_signed_sum(const SimpleGraph& g, int x, int y, OpcVariant variant) {
  check_colors(x);
  if (variant == OpcVariant::kNonneg && y < -1) throw std::out_of_range("OPC sum needs y >= -1");
  if (variant == OpcVariant::kNegative && y < 1) throw std::out_of_range("signed OPC sum needs y >= 1");
  Integer total = 0;
  for (const auto& [mask, sign] : signed_partial_orientation_classes(g)) {
    SimpleGraph h = spanning_subgraph(g, mask);
    Integer inner = variant == OpcVariant::kNonneg ? compatible_pair_count(h, x, y + 1)
                                                   : compatible_pair_signed_sum(h, x, y);
    total += Integer(static_cast<long>(sign)) * inner;
  }
  return total;
}

Integer opc_signed_sum_naive(const SimpleGraph& g, int x, int y, OpcVariant variant) {
  check_colors(x);
  if (variant == OpcVariant::kNonneg && y < -1) throw std::out_of_range("OPC sum needs y >= -1");
  if (variant == OpcVariant::kNegative && y < 1) throw std::out_of_range("signed OPC sum needs y >= 1");
  int range = variant == OpcVariant::kNonneg ? y + 1 : y - 1;
  Integer total = 0;
  for (const MixedGraph& h : totally_acyclic_partial_orientations(g)) {
    SimpleGraph base = gr0(h);
    std::vector<Edge> edges = base.edges();
    int cc = component_count(base);
    for_each_coloring(g.order(), x, [&](const std::vector<int>& cv) {
      for_each_coloring(static_cast<int>(edges.size()), range + 1, [&](const std::vector<int>& ce) {
        int nonzero = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if ((ce[i] != 0) != (cv[edges[i].u] == cv[edges[i].v])) return;
          nonzero += ce[i] != 0 ? 1 : 0;
        }
        int exponent = cc + (variant == OpcVariant::kNegative ? nonzero : 0);
        total += signed_one(exponent);
      });
    });
  }
  return total;
}

Rational tutte_negative_check(const SimpleGraph& g, int x, int y, Quadrant quadrant) {
  int n = g.order();
  int cc = component_count(g);
  auto zero_denominator = [&]() {
    throw std::domain_error("division by zero at x=" + std::to_string(x) + ", y=" + std::to_string(y));
  };
  auto out_of_range = [&]() {
    throw std::out_of_range("point x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                            " outside the quadrant");
  };
  switch (quadrant) {
    case Quadrant::kPosPos: {
      if (x == 1 || y == 1) zero_denominator();
      if (x < 2 || y < 2) out_of_range();
      Rational num(compatible_pair_count(g, (x - 1) * (y - 1), y));
      return num / (pow(Rational(x - 1), cc) * pow(Rational(y - 1), n));
    }
    case Quadrant::kNegNeg: {
      if (x < 0 || y < 0) out_of_range();
      Rational num(compatible_pair_signed_sum(g, (1 + x) * (1 + y), y + 1));
      return Rational(signed_one(cc + n)) * num / (pow(Rational(x + 1), cc) * pow(Rational(y + 1), n));
    }
    case Quadrant::kNegX: {
      if (y == 1) zero_denominator();
      if (x < 0 || y < 2) out_of_range();
      Rational num(opc_signed_sum(g, (x + 1) * (y - 1), y - 1, OpcVariant::kNonneg));
      return Rational(signed_one(cc)) * num / (pow(Rational(x + 1), cc) * pow(Rational(y - 1), n));
    }
    case Quadrant::kNegY: {
      if (x == 1) zero_denominator();
      if (x < 2 || y < 0) out_of_range();
      Rational num(opc_signed_sum(g, (x - 1) * (y + 1), y + 1, OpcVariant::kNegative));
      return Rational(signed_one(n)) * num / (pow(Rational(x - 1), cc) * pow(Rational(y + 1), n));
    }
  }
  throw std::invalid_argument("unknown quadrant");
}

}  // namespace grhopf
