#include <gtest/gtest.h>

#include "gwfloor/wallcross.hpp"

using namespace gwfloor;

TEST(Wallcross, PfisterElementExpansion) {
  auto p = pfister_element(1);
  auto expect = TildeElement::constant(UnivElement::unit() - UnivElement::sym2(), 1) -
                TildeElement::monomial(var_bit(1), UnivElement::unit() - UnivElement::sym2(), 1);
  EXPECT_EQ(p, expect);
  EXPECT_EQ(pfister_element(3).rank(), CheckedInt{0});
}

TEST(Wallcross, DefaultSweepSize) {
  // real patterns + 4 finite fields + closed
  EXPECT_EQ(default_sweep(2).size(), 4u + 4u * 4u + 1u);
}

TEST(Wallcross, DeltaRequiresSameS) {
  EXPECT_THROW(delta_count(3, {8, {1}}, {8, {1, 4}}), std::invalid_argument);
}

TEST(Wallcross, EveryShiftAtDegreeThree) {
  const int n = marked_points(3);
  for (int s = 1; 2 * s <= n; ++s)
    for (const auto& [a, b] : unit_shifts(n, s)) {
      auto r = wallcross_report(3, a, b);
      EXPECT_TRUE(r.passed()) << to_string(a) << "->" << to_string(b);
      EXPECT_TRUE(r.witness_terms_zero);
      EXPECT_EQ(r.coords.n1 + r.coords.n2, 0);
      EXPECT_EQ(r.coords.n1 % 2, 0);
    }
}

TEST(Wallcross, DeltaIsMultipleOfShiftedProduct) {
  const int n = marked_points(3);
  for (int s = 1; s <= 3; ++s)
    for (const auto& [a, b] : unit_shifts(n, s)) {
      auto r = wallcross_report(3, a, b);
      auto c = r.extraction.c_tilde;
      auto prod = shifted_product<CheckedInt>(proof_order(s), s);
      // the delta specialises like c * prod(x - 1) in every sweep entry
      for (const auto& e : default_sweep(s))
        EXPECT_EQ(specialize_field(r.delta, e.model, e.assign),
                  specialize_field(TildeElement::constant(c, s) * prod, e.model, e.assign));
    }
}

TEST(Wallcross, ReportAtDegreeTwo) {
  auto r = wallcross_report(2, {5, {1}}, {5, {2}});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.s, 1);
}

TEST(Residual, ShiftsAtDegreeThree) {
  const int n = marked_points(3);
  for (int s = 1; 2 * s <= n; ++s)
    for (const auto& [a, b] : unit_shifts(n, s)) {
      auto r = residual_report(3, a, b);
      EXPECT_TRUE(r.passed()) << to_string(a) << "->" << to_string(b);
      if (s >= 2) {
        EXPECT_EQ(r.transfer.size(), static_cast<std::size_t>(s));
      }
    }
}
