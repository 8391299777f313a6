#include <gtest/gtest.h>

#include <random>

#include "addcomb/error.hpp"
#include "addcomb/fixtures.hpp"
#include "addcomb/gamma.hpp"
#include "support.hpp"

namespace addcomb {
namespace {

using test::ints;
using test::nat1;
using test::words;

ExtNat nat(std::uint64_t v) { return ExtNat{v}; }

TEST(Gamma, SmallSetsAreTheirSize) {
  const auto z6 = Ambient::zmod(6);
  EXPECT_EQ(gamma_set(FinSet(z6)).value, nat(0));
  EXPECT_EQ(gamma_set(ints(z6, {4})).value, nat(1));
}

TEST(Gamma, Examples) {
  const auto g = gamma_set(ints(Ambient::zmod(6), {0, 2}));
  EXPECT_EQ(g.value, nat(3));
  EXPECT_EQ(g.witness, Element(0));
  EXPECT_EQ(gamma_set(nat1(Ambient::nat_lattice(1), {0, 3})).value, ExtNat::inf());
  const auto f = gamma_set(words(Ambient::free_monoid({"a", "b"}), {"a", "b"}));
  EXPECT_EQ(f.value, nat(0));
  EXPECT_FALSE(f.witness.has_value());
}

TEST(Gamma, WitnessIsSmallestMaximizer) {
  // In Z12 the shifts from 0 see orders {12, 3}; from 1: {12, 4}; from 4: {3, 4}.
  const auto g = gamma_set(ints(Ambient::zmod(12), {0, 1, 4}));
  EXPECT_EQ(g.value, nat(4));
  EXPECT_EQ(g.witness, Element(1));
}

TEST(Gamma, MatchesSupInfOracleOnCyclicGroups) {
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto a = Ambient::zmod(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const auto expected = test::oracle::gamma_mod(n, test::mask_to_vec(m));
      ASSERT_EQ(gamma_set(FinSet::from_mask(a, m)).value, nat(static_cast<std::uint64_t>(expected)))
          << "n=" << n << " mask=" << m;
    }
  }
}

TEST(Gamma, CacheReturnsSameValues) {
  const auto a = Ambient::zmod(9);
  GammaCache cache;
  for (std::uint64_t m = 0; m < 512; ++m) {
    const auto x = FinSet::from_mask(a, m);
    const auto first = gamma_set(x, kDefaultBudget, &cache);
    EXPECT_EQ(gamma_set(x, kDefaultBudget, &cache), first);
    EXPECT_EQ(gamma_set(x), first);
  }
}

TEST(GammaTuple, Examples) {
  const auto z5 = Ambient::zmod(5);
  const std::vector<FinSet> with_empty{FinSet(z5), ints(z5, {0, 1})};
  EXPECT_EQ(gamma_tuple(with_empty), nat(0));
  const std::vector<FinSet> pair{ints(z5, {0, 1}), ints(z5, {0, 2})};
  EXPECT_EQ(gamma_tuple(pair), nat(5));
  const std::vector<FinSet> singles{ints(z5, {1}), ints(z5, {3})};
  EXPECT_EQ(gamma_tuple(singles), nat(1));
}

TEST(GammaTuple, DominatesGammaOfSumsetInCyclicGroups) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto a = Ambient::zmod(n);
    GammaCache cache;
    for (std::uint64_t mx = 1; mx < (std::uint64_t{1} << n); ++mx)
      for (std::uint64_t my = 1; my < (std::uint64_t{1} << n); ++my) {
        const std::vector<FinSet> xy{FinSet::from_mask(a, mx), FinSet::from_mask(a, my)};
        ASSERT_GE(gamma_tuple(xy, kDefaultBudget, &cache),
                  gamma_set(sumset(xy[0], xy[1]), kDefaultBudget, &cache).value);
      }
  }
}

TEST(MinOrder, Examples) {
  const auto z6 = Ambient::zmod(6);
  EXPECT_EQ(min_order(ints(z6, {2, 3})), nat(2));
  EXPECT_EQ(min_order(ints(z6, {0, 5})), nat(1));
  EXPECT_EQ(min_order(ints(Ambient::zmod(5), {1})), nat(5));
  EXPECT_EQ(min_order(nat1(Ambient::nat_lattice(1), {2, 5})), ExtNat::inf());
  try {
    min_order(FinSet(z6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_set);
  }
}

TEST(InvariantTransform, Examples) {
  const auto z6 = Ambient::zmod(6);
  const auto t = invariant_transform(ints(z6, {0}), ints(z6, {1, 3}), Element(1));
  EXPECT_EQ(t.x0, ints(z6, {1}));
  EXPECT_EQ(t.y0, ints(z6, {0, 2}));
  EXPECT_EQ(t.gamma_y, nat(3));
  EXPECT_EQ(t.gamma_y0, nat(3));
  EXPECT_TRUE(t.holds());

  const auto x = ints(z6, {1, 2, 4}), y = ints(z6, {0, 5});
  const auto id = invariant_transform(x, y, Element(0));
  EXPECT_EQ(id.x0, x);
  EXPECT_EQ(id.y0, y);

  const auto z5 = Ambient::zmod(5);
  const auto u = invariant_transform(ints(z5, {0, 1}), ints(z5, {2, 3}), Element(2));
  EXPECT_EQ(u.sumset_before, 3u);
  EXPECT_EQ(u.sumset_after, 3u);
}

TEST(InvariantTransform, Errors) {
  const auto z6 = Ambient::zmod(6);
  try {
    invariant_transform(ints(z6, {0}), ints(z6, {1, 3}), Element(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_a_unit);
  }
  const auto n1 = Ambient::nat_lattice(1);
  EXPECT_THROW(invariant_transform(nat1(n1, {0}), nat1(n1, {0, 3}), Element(Element::Vector{3})),
               Error);
  const auto band = Ambient::cayley({{0, 0}, {1, 1}});
  try {
    invariant_transform(ints(band, {0}), ints(band, {0}), Element(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition_violated);
  }
}

// Unit-shift invariance checked from scratch: sizes and gammas of X - z and -z + X.
void check_shift_invariance(const FinSet& x, const Element& z) {
  const auto& a = x.ambient_ptr();
  const auto single = FinSet::singleton(a, z);
  const auto right = difference(Side::right, x, single);
  const auto left = difference(Side::left, x, single);
  ASSERT_EQ(right.size(), x.size());
  ASSERT_EQ(left.size(), x.size());
  const auto g = gamma_set(x).value;
  EXPECT_EQ(gamma_set(right).value, g);
  EXPECT_EQ(gamma_set(left).value, g);
}

TEST(InvariantTransform, UnitShiftInvarianceOnRandomSets) {
  std::mt19937_64 rng(33);
  const std::vector<AmbientPtr> finite = {
      Ambient::zmod(12), Ambient::zmod(17),
      Ambient::product({Ambient::zmod(2), Ambient::zmod(6)}), fixtures::s3(), fixtures::q8()};
  for (const auto& a : finite) {
    std::uniform_int_distribution<std::uint64_t> m(0, (std::uint64_t{1} << a->order()) - 1);
    std::uniform_int_distribution<std::size_t> e(0, a->order() - 1);
    for (int i = 0; i < 1000; ++i) check_shift_invariance(FinSet::from_mask(a, m(rng)), a->element_at(e(rng)));
  }
  // The only unit of N is 0; Z^2 has every element a unit.
  const auto z2 = Ambient::int_lattice(2);
  std::uniform_int_distribution<std::int64_t> c(-4, 4);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Element> xs;
    for (int k = 0; k < 4; ++k) xs.emplace_back(Element::Vector{c(rng), c(rng)});
    check_shift_invariance(FinSet(z2, xs), Element(Element::Vector{c(rng), c(rng)}));
  }
  const auto n1 = Ambient::nat_lattice(1);
  for (std::uint64_t mx = 0; mx < 256; ++mx) {
    std::vector<Element> xs;
    for (auto v : test::mask_to_vec(mx)) xs.emplace_back(Element::Vector{v});
    check_shift_invariance(FinSet(n1, xs), Element(Element::Vector{0}));
  }
}

TEST(InvariantTransform, AxiomsHoldIndependently) {
  const auto d4 = fixtures::d4();
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<std::uint64_t> m(1, 255);
  for (int i = 0; i < 500; ++i) {
    const auto x = FinSet::from_mask(d4, m(rng)), y = FinSet::from_mask(d4, m(rng));
    for (const auto& y0 : y) {
      const auto t = invariant_transform(x, y, y0);
      EXPECT_EQ(sumset(t.x0, t.y0).size(), sumset(x, y).size());
      EXPECT_EQ(t.x0.size(), x.size());
      EXPECT_EQ(t.y0.size(), y.size());
      EXPECT_EQ(gamma_set(t.x0).value, gamma_set(x).value);
      EXPECT_EQ(gamma_set(t.y0).value, gamma_set(y).value);
      EXPECT_TRUE(t.y0.contains(*d4->identity()));
    }
  }
}

TEST(Gamma, GroupsMayScanAllOfX) {
  // In a group X^x = X, so the sup-inf over all of X gives the same value.
  for (const auto& g : {fixtures::q8(), fixtures::d4()})
    for (std::uint64_t m = 0; m < 256; ++m) {
      const auto x = FinSet::from_mask(g, m);
      if (x.size() <= 1) continue;
      ExtNat best{0};
      for (const auto& x0 : x) {
        ExtNat worst = ExtNat::inf();
        for (const auto& u : x)
          if (u != x0) worst = std::min(worst, ord_elem(*g, *g->divide(Side::right, u, x0)));
        best = std::max(best, worst);
      }
      EXPECT_EQ(gamma_set(x).value, best);
    }
}

TEST(Normalize, Examples) {
  const auto z5 = Ambient::zmod(5);
  const auto n = normalize_pair(ints(z5, {0}), ints(z5, {1, 2}), 5);
  EXPECT_EQ(n.transform.shift, Element(1));
  EXPECT_TRUE(n.transform.y0.contains(Element(0)));
  EXPECT_TRUE(n.identity_in_y0);
  EXPECT_TRUE(n.orders_meet_kappa);
  EXPECT_EQ(n.threshold, nat(5));

  const auto any = normalize_pair(ints(z5, {0}), ints(z5, {3, 4}), 0);
  EXPECT_EQ(any.transform.shift, Element(3));

  const auto z6 = Ambient::zmod(6);
  const auto k2 = normalize_pair(ints(z6, {1}), ints(z6, {0, 2, 3}), 2);
  EXPECT_EQ(k2.transform.shift, Element(0));
  EXPECT_EQ(k2.threshold, nat(2));
}

TEST(Normalize, NoWitnessAboveGamma) {
  const auto z6 = Ambient::zmod(6);
  try {
    normalize_pair(ints(z6, {0}), ints(z6, {0, 3}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_witness);
  }
}

TEST(Normalize, PreservesCommutativityAndStructureFailure) {
  const auto s3 = fixtures::s3();
  for (std::uint64_t mx = 1; mx < 64; ++mx)
    for (std::uint64_t my = 1; my < 64; ++my) {
      const auto x = FinSet::from_mask(s3, mx), y = FinSet::from_mask(s3, my);
      if (y.size() < 2) continue;
      const auto n = normalize_pair(x, y, 0);
      EXPECT_TRUE(n.commutativity_preserved);
      EXPECT_TRUE(n.structure_failure_preserved);
    }
}

}  // namespace
}  // namespace addcomb
