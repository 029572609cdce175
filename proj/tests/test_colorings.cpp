#include <doctest.h>

#include "grhopf/colorings.hpp"
#include "grhopf/invariants.hpp"
#include "helpers.hpp"

using namespace grhopf;
using namespace testing_helpers;

TEST_CASE("proper colorings") {
  CHECK(proper_coloring_count(K(3), 3) == 6);
  CHECK(proper_coloring_count(K(3), 2) == 0);
  CHECK(proper_coloring_count(SimpleGraph(3), 2) == 8);
  CHECK(proper_coloring_count(SimpleGraph(0), 0) == 1);
  CHECK(monochromatic_histogram(K(2), 2) == std::vector<Integer>{2, 2});
}

TEST_CASE("compatible pairs") {
  CHECK(compatible_pair_count(K(2), 2, 2) == 6);
  CHECK(compatible_pair_count_naive(K(2), 2, 2) == 6);
  CHECK(compatible_pair_count(K(3), 0, 2) == 0);
  CHECK(compatible_pair_count(SimpleGraph(3), 2, 5) == 8);
  CHECK(compatible_pair_count(K(3), 1, 2) == 8);
  CHECK_THROWS_AS(compatible_pair_count(K(2), 2, -1), std::out_of_range);
}

TEST_CASE("signed compatible pair sums") {
  CHECK(compatible_pair_signed_sum(K(2), 2, 2) == 0);
  CHECK(compatible_pair_signed_sum(SimpleGraph(3), 3, 2) == 27);
  CHECK(compatible_pair_signed_sum(K(3), 1, 1) == 0);
  CHECK(compatible_pair_signed_sum(K(3), 3, 1) == fk_polynomial(K(3))(3, -1));
  CHECK_THROWS_AS(compatible_pair_signed_sum(K(2), 2, 0), std::out_of_range);
}

TEST_CASE("oriented pair sums") {
  CHECK(opc_signed_sum(K(2), 1, 1, OpcVariant::kNonneg) == 0);
  CHECK(opc_signed_sum_naive(K(2), 1, 1, OpcVariant::kNonneg) == 0);
  CHECK(opc_signed_sum(point(), 2, 0, OpcVariant::kNonneg) == -2);
  CHECK(opc_signed_sum_naive(point(), 2, 0, OpcVariant::kNonneg) == -2);
  CHECK(opc_signed_sum(K(3), 1, 1, OpcVariant::kNegative) == -6);
  CHECK(opc_signed_sum_naive(K(3), 1, 1, OpcVariant::kNegative) == -6);
  CHECK(opc_signed_sum(K(3), 2, -1, OpcVariant::kNonneg) == fk_polynomial(K(3))(-2, -1));
  CHECK_THROWS_AS(opc_signed_sum(K(2), 1, -2, OpcVariant::kNonneg), std::out_of_range);
  CHECK_THROWS_AS(opc_signed_sum(K(2), 1, 0, OpcVariant::kNegative), std::out_of_range);
}

TEST_CASE("Tutte values from colorings") {
  CHECK(tutte_negative_check(K(3), 2, 2, Quadrant::kPosPos) == 8);
  CHECK(tutte_negative_check(SimpleGraph(4), 2, 2, Quadrant::kPosPos) == 1);
  BiPoly t2 = tutte_polynomial(K(2));
  CHECK(tutte_negative_check(K(2), 1, 2, Quadrant::kNegX) == t2(-1, 2));
  BiPoly t = tutte_polynomial(K(3));
  CHECK(tutte_negative_check(K(3), 2, 3, Quadrant::kNegNeg) == t(-2, -3));
  CHECK(tutte_negative_check(K(3), 3, 1, Quadrant::kNegY) == t(3, -1));
  CHECK_THROWS_AS(tutte_negative_check(K(3), 1, 2, Quadrant::kPosPos), std::domain_error);
  CHECK_THROWS_AS(tutte_negative_check(K(3), 2, 1, Quadrant::kNegX), std::domain_error);
  CHECK_THROWS_AS(tutte_negative_check(K(3), 1, 0, Quadrant::kNegY), std::domain_error);
  CHECK_THROWS_AS(tutte_negative_check(K(3), 0, 2, Quadrant::kPosPos), std::out_of_range);
  CHECK_THROWS_AS(tutte_negative_check(K(3), -1, 0, Quadrant::kNegNeg), std::out_of_range);
}
