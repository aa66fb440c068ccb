#include <gtest/gtest.h>

#include <random>

#include "gwfloor/gw_rings.hpp"
#include "gwfloor/witt_springer.hpp"

using namespace gwfloor;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  UnivElement univ(int bound = 9) { return {integer(-bound, bound), integer(-bound, bound), integer(-bound, bound)}; }

  TildeElement tilde(int s, int max_terms = 6) {
    TildeElement t(s);
    const int terms = integer(0, max_terms);
    for (int i = 0; i < terms; ++i) {
      VarMask m = s == 0 ? 0 : static_cast<VarMask>(integer(0, (1 << s) - 1));
      t.add_term(m, univ());
    }
    return t;
  }

  Assignment assignment(int s) {
    Assignment a(static_cast<std::size_t>(s));
    for (auto& b : a) b = integer(0, 1);
    return a;
  }

  FieldModel model() {
    switch (integer(0, 5)) {
      case 0: return RealField{};
      case 1: return ClosedField{};
      case 2: return FiniteField(5);
      case 3: return FiniteField(7);
      case 4: return FiniteField(11);
      default: return FiniteField(13);
    }
  }

  DiagonalForm form(int s) {
    static const int units[] = {1, -1, 2, -2};
    DiagonalForm f;
    const int n = integer(0, 8);
    for (int i = 0; i < n; ++i)
      f.entries.push_back({units[integer(0, 3)], s == 0 ? 0u : static_cast<VarMask>(integer(0, (1 << s) - 1))});
    return f;
  }
};

std::vector<int> shuffled_order(Gen& g, int s) {
  std::vector<int> order(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(order.begin(), order.end(), g.rng);
  return order;
}

}  // namespace

TEST(Properties, CascadeReconstructs) {
  Gen g(20240601);
  for (int i = 0; i < 12000; ++i) {
    const int s = g.integer(0, 5);
    auto e = g.tilde(s, 10);
    auto c = cascade_decompose(e);
    ASSERT_EQ(cascade_reconstruct(c, s), e) << to_string(e);
    ASSERT_EQ(c.a_full, e.top_coefficient());
  }
}

TEST(Properties, CascadeReconstructsAnyOrder) {
  Gen g(7);
  for (int i = 0; i < 3000; ++i) {
    const int s = g.integer(1, 5);
    auto e = g.tilde(s, 10);
    auto c = cascade_decompose(e, shuffled_order(g, s));
    ASSERT_EQ(cascade_reconstruct(c, s), e);
  }
}

TEST(Properties, MultiplesOfShiftedProductHaveZeroWitnesses) {
  Gen g(99);
  for (int i = 0; i < 3000; ++i) {
    const int s = g.integer(1, 5);
    auto c = g.univ();
    auto e = TildeElement::constant(c, s) * shifted_product<CheckedInt>(proof_order(s), s);
    auto cas = cascade_decompose(e);
    ASSERT_EQ(cas.a_full, c);
    for (const auto& t : cas.terms) ASSERT_TRUE(t.is_zero());
  }
}

TEST(Properties, TildeRingAxioms) {
  Gen g(3);
  for (int i = 0; i < 3000; ++i) {
    const int s = g.integer(0, 4);
    auto a = g.tilde(s), b = g.tilde(s), c = g.tilde(s);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a - a, TildeElement(s));
    ASSERT_TRUE((a * b).well_formed());
  }
}

TEST(Properties, RankIsMultiplicative) {
  Gen g(5);
  for (int i = 0; i < 3000; ++i) {
    const int s = g.integer(0, 4);
    auto a = g.tilde(s), b = g.tilde(s);
    ASSERT_EQ((a * b).rank(), a.rank() * b.rank());
  }
}

TEST(Properties, DissolveIsRingHomomorphism) {
  Gen g(11);
  for (int i = 0; i < 3000; ++i) {
    const int s = g.integer(1, 5);
    const int j = g.integer(1, s);
    auto a = g.tilde(s), b = g.tilde(s);
    ASSERT_EQ((a * b).dissolve(j), a.dissolve(j) * b.dissolve(j));
    ASSERT_EQ((a + b).dissolve(j), a.dissolve(j) + b.dissolve(j));
  }
}

TEST(Properties, SpecializationIsRingHomomorphism) {
  Gen g(13);
  for (int i = 0; i < 4000; ++i) {
    const int s = g.integer(0, 4);
    auto a = g.tilde(s), b = g.tilde(s);
    auto model = g.model();
    auto as = g.assignment(s);
    ASSERT_EQ(specialize_field(a * b, model, as),
              field_mul(specialize_field(a, model, as), specialize_field(b, model, as)));
    ASSERT_EQ(specialize_field(a + b, model, as),
              field_add(specialize_field(a, model, as), specialize_field(b, model, as)));
  }
}

TEST(Properties, ResidualReductionIsRingHomomorphism) {
  Gen g(17);
  for (int i = 0; i < 3000; ++i) {
    const int s = g.integer(0, 4);
    auto a = g.tilde(s), b = g.tilde(s);
    ASSERT_EQ(residual_reduce(a * b), residual_reduce(a) * residual_reduce(b));
    ASSERT_EQ(residual_reduce(a + b), residual_reduce(a) + residual_reduce(b));
  }
}

TEST(Properties, SpringerSplitPreservesRank) {
  Gen g(19);
  for (int i = 0; i < 3000; ++i) {
    const int s = g.integer(1, 5);
    auto f = g.form(s);
    auto p = springer_split(f, g.integer(1, s));
    ASSERT_EQ(p.unit.rank() + p.uniformizer.rank(), f.rank());
  }
}

TEST(Properties, AnisotropyIsScaleInvariant) {
  Gen g(23);
  static const int units[] = {1, -1, 2, -2};
  for (int i = 0; i < 2000; ++i) {
    const int s = g.integer(0, 3);
    auto f = g.form(s);
    auto v = is_anisotropic(f);
    auto w = is_anisotropic(f.scaled({units[g.integer(0, 3)], 0}));
    if (v != Verdict::Unsupported && w != Verdict::Unsupported) {
      ASSERT_EQ(v, w);
    }
  }
}
