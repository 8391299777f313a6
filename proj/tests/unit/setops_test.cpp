#include <gtest/gtest.h>

#include <random>

#include "addcomb/error.hpp"
#include "addcomb/fixtures.hpp"
#include "addcomb/setops.hpp"
#include "support.hpp"

namespace addcomb {
namespace {

using test::ints;
using test::nat1;
using test::residues;
using test::words;

TEST(FinSet, CanonicalOrderAndDeduplication) {
  const auto z6 = Ambient::zmod(6);
  const auto s = ints(z6, {5, 1, 5, 0});
  EXPECT_EQ(residues(s), (std::vector<std::int64_t>{0, 1, 5}));
  EXPECT_TRUE(s.has_bits());
  EXPECT_EQ(s.mask(), 0b100011u);
  EXPECT_EQ(FinSet::from_mask(z6, 0b100011), s);
  EXPECT_THROW(ints(z6, {6}), Error);
}

TEST(FinSet, AmbientMismatch) {
  const auto x = ints(Ambient::zmod(5), {0});
  const auto y = ints(Ambient::zmod(6), {0});
  try {
    sumset(x, y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ambient_mismatch);
  }
  // Structurally equal ambients built separately are the same ambient.
  EXPECT_NO_THROW(sumset(x, ints(Ambient::zmod(5), {1})));
}

TEST(Sumset, Examples) {
  const auto z5 = Ambient::zmod(5);
  EXPECT_EQ(sumset(ints(z5, {0, 1}), ints(z5, {0, 1})), ints(z5, {0, 1, 2}));
  EXPECT_TRUE(sumset(ints(z5, {0, 1}), FinSet(z5)).empty());
  const auto y = ints(z5, {1, 3, 4});
  EXPECT_EQ(sumset(ints(z5, {0}), y), y);
  const auto n1 = Ambient::nat_lattice(1);
  EXPECT_EQ(sumset(nat1(n1, {0}), nat1(n1, {2, 7})), nat1(n1, {2, 7}));
}

TEST(Sumset, IteratedExamples) {
  const auto z4 = Ambient::zmod(4);
  EXPECT_EQ(iterated_sumset(2, ints(z4, {0, 2})), ints(z4, {0, 2}));
  const auto x = ints(z4, {1, 3});
  EXPECT_EQ(iterated_sumset(1, x), x);
  const auto f = Ambient::free_monoid({"a", "b"});
  EXPECT_EQ(iterated_sumset(2, words(f, {"a"})), words(f, {"aa"}));
  EXPECT_THROW(iterated_sumset(0, x), Error);
}

TEST(Sumset, FreeMonoidIsNotCommutative) {
  const auto f = Ambient::free_monoid({"a", "b"});
  EXPECT_EQ(sumset(words(f, {"a"}), words(f, {"b", ""})), words(f, {"a", "ab"}));
  EXPECT_EQ(sumset(words(f, {"b", ""}), words(f, {"a"})), words(f, {"a", "ba"}));
}

TEST(Sumset, BitVectorMatchesNaiveOracleOnSmallCyclicGroups) {
  // Every pair for n <= 8, a seeded sample of pairs for 9 <= n <= 16.
  std::mt19937_64 rng(16);
  for (std::int64_t n = 1; n <= 16; ++n) {
    const auto a = Ambient::zmod(n);
    const std::uint64_t full = std::uint64_t{1} << n;
    auto check = [&](std::uint64_t mx, std::uint64_t my) {
      const auto x = FinSet::from_mask(a, mx), y = FinSet::from_mask(a, my);
      ASSERT_EQ(residues(sumset(x, y)),
                test::oracle::sumset_mod(n, test::mask_to_vec(mx), test::mask_to_vec(my)))
          << "n=" << n << " x=" << mx << " y=" << my;
    };
    if (n <= 8) {
      for (std::uint64_t mx = 0; mx < full; ++mx)
        for (std::uint64_t my = 0; my < full; ++my) check(mx, my);
    } else {
      std::uniform_int_distribution<std::uint64_t> d(0, full - 1);
      for (int i = 0; i < 3000; ++i) check(d(rng), d(rng));
    }
  }
}

TEST(Sumset, ProductIndexTableMatchesElementwiseAddition) {
  const auto p = Ambient::product({Ambient::zmod(2), Ambient::zmod(3), Ambient::zmod(2)});
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::uint64_t> d(0, (1u << 12) - 1);
  for (int i = 0; i < 300; ++i) {
    const auto x = FinSet::from_mask(p, d(rng)), y = FinSet::from_mask(p, d(rng));
    std::vector<Element> naive;
    for (const auto& u : x)
      for (const auto& v : y) naive.push_back(p->add(u, v));
    EXPECT_EQ(sumset(x, y), FinSet(p, naive));
  }
}

TEST(Sumset, DistributesOverUnion) {
  std::mt19937_64 rng(7);
  for (const auto& a : {Ambient::zmod(12), fixtures::s3(),
                        Ambient::product({Ambient::zmod(2), Ambient::zmod(4)})}) {
    std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << a->order()) - 1);
    for (int i = 0; i < 300; ++i) {
      const auto x = FinSet::from_mask(a, d(rng)), x2 = FinSet::from_mask(a, d(rng)),
                 y = FinSet::from_mask(a, d(rng));
      EXPECT_EQ(sumset(set_union(x, x2), y), set_union(sumset(x, y), sumset(x2, y)));
      EXPECT_EQ(sumset(y, set_union(x, x2)), set_union(sumset(y, x), sumset(y, x2)));
    }
  }
}

TEST(Difference, Examples) {
  const auto z6 = Ambient::zmod(6);
  EXPECT_EQ(difference(Side::right, ints(z6, {1}), ints(z6, {2})), ints(z6, {5}));
  const auto n1 = Ambient::nat_lattice(1);
  EXPECT_TRUE(difference(Side::right, nat1(n1, {3}), nat1(n1, {5})).empty());
  EXPECT_EQ(difference(Side::right, nat1(n1, {3, 9}), nat1(n1, {5})), nat1(n1, {4}));
}

TEST(Difference, MatchesDefinitionByCarrierScan) {
  // X - Y = {z : X meets z + Y}, checked on a non-abelian group for both sides.
  const auto s3 = fixtures::s3();
  for (std::uint64_t mx = 0; mx < 64; mx += 5)
    for (std::uint64_t my = 0; my < 64; my += 3) {
      const auto x = FinSet::from_mask(s3, mx), y = FinSet::from_mask(s3, my);
      std::vector<Element> right, left;
      for (std::size_t i = 0; i < 6; ++i) {
        const auto z = s3->element_at(i);
        bool r = false, l = false;
        for (const auto& v : y) {
          r = r || x.contains(s3->add(z, v));
          l = l || x.contains(s3->add(v, z));
        }
        if (r) right.push_back(z);
        if (l) left.push_back(z);
      }
      EXPECT_EQ(difference(Side::right, x, y), FinSet(s3, right));
      EXPECT_EQ(difference(Side::left, x, y), FinSet(s3, left));
    }
}

TEST(Difference, NonCancellativeCarrierScan) {
  // In the left-zero band z + y = z, so X - Y = X for nonempty Y.
  const auto band = Ambient::cayley({{0, 0}, {1, 1}});
  EXPECT_EQ(difference(Side::right, ints(band, {1}), ints(band, {0})), ints(band, {1}));
  EXPECT_EQ(difference(Side::left, ints(band, {1}), ints(band, {0, 1})), FinSet::carrier(band));
}

TEST(Generated, Examples) {
  const auto z6 = Ambient::zmod(6);
  const auto g = generated(ints(z6, {2}));
  EXPECT_TRUE(g.complete);
  EXPECT_EQ(g.closure, ints(z6, {0, 2, 4}));

  const auto n1 = Ambient::nat_lattice(1);
  const auto h = generated(nat1(n1, {1}), 10);
  EXPECT_FALSE(h.complete);
  EXPECT_EQ(h.closure, nat1(n1, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_EQ(h.budget_used, 10u);

  const auto z5 = Ambient::zmod(5);
  const auto s = generated_sym(ints(z5, {1}));
  EXPECT_TRUE(s.complete);
  EXPECT_EQ(s.closure, FinSet::carrier(z5));
}

TEST(Generated, SymAdjoinsInversesOfUnits) {
  const auto z = Ambient::int_lattice(1);
  const auto x = FinSet(z, {Element(Element::Vector{0})});
  EXPECT_TRUE(generated_sym(x).complete);
  const auto n1 = Ambient::nat_lattice(1);
  const auto g = generated_sym(nat1(n1, {0, 2}), 5);
  EXPECT_FALSE(g.complete);
}

TEST(Generated, ClosureIsClosed) {
  const auto d4 = fixtures::d4();
  for (std::uint64_t m = 1; m < 256; m += 7) {
    const auto g = generated(FinSet::from_mask(d4, m));
    ASSERT_TRUE(g.complete);
    EXPECT_EQ(sumset(g.closure, g.closure), g.closure);
  }
}

TEST(Order, Examples) {
  const auto z6 = Ambient::zmod(6);
  EXPECT_EQ(ord_elem(*z6, Element(2)), ExtNat{3});
  EXPECT_EQ(ord_elem(*z6, Element(0)), ExtNat{1});
  const auto n1 = Ambient::nat_lattice(1);
  EXPECT_EQ(ord_elem(*n1, Element(Element::Vector{1})), ExtNat::inf());
  EXPECT_EQ(ord_elem(*n1, Element(Element::Vector{0})), ExtNat{1});
  EXPECT_EQ(ord_set(ints(z6, {2, 3})), ExtNat{6});
  EXPECT_EQ(ord_set(nat1(n1, {0, 4})), ExtNat::inf());
}

TEST(Order, MatchesCountingOracle) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto a = Ambient::zmod(n);
    for (std::int64_t d = 0; d < n; ++d)
      EXPECT_EQ(ord_elem(*a, Element(d)), ExtNat{static_cast<std::uint64_t>(test::oracle::order_mod(n, d))});
  }
}

TEST(Order, BudgetExceededOnLongOrbit) {
  const auto a = Ambient::zmod(100);
  try {
    ord_elem(*a, Element(1), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::budget_exceeded);
  }
}

TEST(Center, S3Examples) {
  const auto s3 = fixtures::s3();
  EXPECT_EQ(center(ints(s3, {1})), ints(s3, {0, 1}));
  EXPECT_EQ(center(FinSet::carrier(s3)), ints(s3, {0}));
  EXPECT_EQ(center(ints(s3, {1}), ints(s3, {1, 2, 3})), ints(s3, {1}));
}

TEST(Units, Examples) {
  const auto z6 = Ambient::zmod(6);
  const auto x = ints(z6, {1, 4});
  EXPECT_EQ(units_of(x), x);
  const auto n1 = Ambient::nat_lattice(1);
  EXPECT_EQ(units_of(nat1(n1, {0, 3})), nat1(n1, {0}));
  const auto f = Ambient::free_monoid({"a", "b"});
  EXPECT_TRUE(units_of(words(f, {"a", "b"})).empty());
}

TEST(CommutativeGenerated, Examples) {
  const auto s3 = fixtures::s3();
  EXPECT_TRUE(is_commutative_generated(ints(s3, {0, 1})));
  EXPECT_FALSE(is_commutative_generated(ints(s3, {1, 2})));
  for (std::int64_t i = 0; i < 6; ++i) EXPECT_TRUE(is_commutative_generated(ints(s3, {i})));
}

TEST(CommutativeGenerated, AgreesWithDirectCheckOfGeneratedSubsemigroup) {
  for (const auto& g : {fixtures::s3(), fixtures::d4(), fixtures::q8()}) {
    const std::uint64_t full = std::uint64_t{1} << g->order();
    for (std::uint64_t m = 1; m < full; ++m) {
      const auto y = FinSet::from_mask(g, m);
      const auto closure = generated(y).closure;
      bool comm = true;
      for (const auto& u : closure)
        for (const auto& v : closure) comm = comm && g->add(u, v) == g->add(v, u);
      EXPECT_EQ(is_commutative_generated(y), comm) << g->name() << " mask " << m;
    }
  }
}

// Lemma-level properties from the set arithmetic.

TEST(SetLemmas, TranslationPreservesSize) {
  for (const auto& a : {Ambient::zmod(9), fixtures::q8()})
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a->order()); m += 11)
      for (std::size_t i = 0; i < a->order(); ++i) {
        const auto x = FinSet::from_mask(a, m);
        const auto z = a->element_at(i);
        EXPECT_EQ(translate(z, x).size(), x.size());
        EXPECT_EQ(translate(x, z).size(), x.size());
      }
}

TEST(SetLemmas, SumsetAtLeastLargerOperand) {
  const auto d4 = fixtures::d4();
  for (std::uint64_t mx = 1; mx < 256; mx += 3)
    for (std::uint64_t my = 1; my < 256; my += 5) {
      const auto x = FinSet::from_mask(d4, mx), y = FinSet::from_mask(d4, my);
      EXPECT_GE(sumset(x, y).size(), std::max(x.size(), y.size()));
    }
  const auto n2 = Ambient::nat_lattice(2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> c(0, 6);
  for (int i = 0; i < 200; ++i) {
    std::vector<Element> xs, ys;
    for (int k = 0; k < 4; ++k) {
      xs.emplace_back(Element::Vector{c(rng), c(rng)});
      ys.emplace_back(Element::Vector{c(rng), c(rng)});
    }
    const FinSet x(n2, xs), y(n2, ys);
    EXPECT_GE(sumset(x, y).size(), std::max(x.size(), y.size()));
  }
}

TEST(SetLemmas, FiniteOrderMultipleIsIdentity) {
  for (const auto& a : {Ambient::zmod(12), fixtures::s3(), fixtures::q8()})
    for (std::size_t i = 0; i < a->order(); ++i) {
      const auto z = a->element_at(i);
      const auto n = ord_elem(*a, z).value();
      EXPECT_EQ(iterated_sumset(n, FinSet::singleton(a, z)), FinSet::singleton(a, *a->identity()));
    }
}

TEST(SetLemmas, CentralUnitsAndCommutativeShift) {
  const auto d4 = fixtures::d4();
  for (std::uint64_t m = 1; m < 256; ++m) {
    const auto x = FinSet::from_mask(d4, m);
    const auto c = center(x);
    for (const auto& z : c) EXPECT_TRUE(c.contains(*d4->invert(z)));
    if (!is_commutative_generated(x)) continue;
    for (const auto& z : x)
      EXPECT_TRUE(is_commutative_generated(difference(Side::right, x, FinSet::singleton(d4, z))));
  }
}

TEST(SetLemmas, UnitsDistributeOverSumsets) {
  const auto n1 = Ambient::nat_lattice(1);
  for (std::uint64_t mx = 1; mx < 64; ++mx)
    for (std::uint64_t my = 1; my < 64; ++my) {
      std::vector<Element> xs, ys;
      for (auto v : test::mask_to_vec(mx)) xs.emplace_back(Element::Vector{v});
      for (auto v : test::mask_to_vec(my)) ys.emplace_back(Element::Vector{v});
      const FinSet x(n1, xs), y(n1, ys);
      EXPECT_EQ(sumset(units_of(x), units_of(y)), units_of(sumset(x, y)));
    }
  const auto q8 = fixtures::q8();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const auto x1 = q8->element_at(i), x2 = q8->element_at(j);
      EXPECT_EQ(q8->invert(q8->add(x1, x2)), q8->add(*q8->invert(x2), *q8->invert(x1)));
    }
}

}  // namespace
}  // namespace addcomb
