#include <gtest/gtest.h>

#include "cli/convert.hpp"
#include "ncquo/dense_poly.hpp"
#include "ncquo/division.hpp"
#include "ncquo/random.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace ncquo;
using ncquo::cli::to_flat;
using ncquo::cli::to_poly;

namespace {

using GPoly = DensePoly<GFpElement>;

GPoly gp(const PolyRing<PrimeField>& r, std::vector<std::uint32_t> c) {
  std::vector<GFpElement> v;
  for (auto x : c) v.emplace_back(x);
  return r.from_coeffs(std::move(v));
}

}  // namespace

TEST(DensePoly, Normalization) {
  const PolyRing<PrimeField> r(PrimeField(7));
  const auto p = gp(r, {1, 2, 0, 0});
  EXPECT_EQ(p.coeffs().size(), 2u);
  EXPECT_EQ(r.degree(p), 1u);
  EXPECT_EQ(r.prec(p), 2u);
  EXPECT_TRUE(r.is_zero(gp(r, {0, 0})));
  EXPECT_FALSE(r.degree(r.zero()).has_value());
  EXPECT_EQ(r.prec(r.zero()), 0u);
  EXPECT_THROW(r.leading(r.zero()), std::domain_error);
}

TEST(DensePoly, ProductExamples) {
  const PolyRing<PrimeField> r7(PrimeField(7));
  const auto u = gp(r7, {3, 1, 4});
  EXPECT_EQ(r7.mul(u, r7.one()), u);
  EXPECT_EQ(r7.mul(gp(r7, {1, 3}), gp(r7, {4, 2})), gp(r7, {4, 0, 6}));
  const PolyRing<PrimeField> r2(PrimeField(2));
  EXPECT_EQ(r2.mul(gp(r2, {1, 1}), gp(r2, {1, 1})), gp(r2, {1, 0, 1}));
  EXPECT_TRUE(r7.is_zero(r7.mul(u, r7.zero())));
}

TEST(DensePoly, ShiftExamples) {
  const PolyRing<PrimeField> r(PrimeField(7));
  const auto u = gp(r, {5, 1, 2, 3});
  EXPECT_EQ(r.shift(u, -2), gp(r, {2, 3}));
  EXPECT_EQ(r.shift(u, 0), u);
  EXPECT_EQ(r.shift(u, 2), gp(r, {0, 0, 5, 1, 2, 3}));
  EXPECT_TRUE(r.is_zero(r.shift(u, -4)));
  EXPECT_TRUE(r.is_zero(r.shift(r.zero(), 3)));
}

TEST(DensePoly, MulModExamples) {
  const PolyRing<PrimeField> r(PrimeField(7));
  EXPECT_TRUE(r.is_zero(r.mul_mod(gp(r, {1, 2}), gp(r, {3, 4}), 0, Orientation::Right)));
  EXPECT_EQ(r.mul_mod(gp(r, {1, 1}), gp(r, {1, 1}), 1, Orientation::Right), gp(r, {1}));
}

// Products agree with the schoolbook oracle across the Karatsuba threshold,
// with balanced and lopsided operands, in a non-commutative ring.
TEST(DensePoly, KaratsubaMatchesSchoolbookOracle) {
  gen::for_each_case([](auto c) {
    gen::Rng rng(7);
    for (std::size_t threshold : {2u, 3u, 16u}) {
      auto ring = c.ring;
      ring.set_karatsuba_threshold(threshold);
      for (int t = 0; t < 60; ++t) {
        const std::size_t da = gen::upto(rng, 0, 70), db = gen::upto(rng, 0, 70);
        const auto a = gen::poly(c.ref, da, rng, false), b = gen::poly(c.ref, db, rng, false);
        const auto got = ring.mul(to_poly(ring, a), to_poly(ring, b));
        ASSERT_EQ(to_flat(got), c.ref.mul(a, b)) << c.name << " threshold " << threshold << " degs " << da << "," << db;
      }
    }
  });
}

TEST(DensePoly, KaratsubaUsesFewerMultiplications) {
  const PrimeField f(127);
  PolyRing<PrimeField> fast(f);
  PolyRing<PrimeField> slow(f, PolyRing<PrimeField>::kNoKaratsuba);
  Rng rng(5);
  const auto a = random_poly(fast, 255, rng), b = random_poly(fast, 255, rng);
  auto count = [&](const PolyRing<PrimeField>& r) {
    const auto before = f.mul_count();
    const auto p = r.mul(a, b);
    return std::pair{f.mul_count() - before, p};
  };
  const auto [nk, pk] = count(fast);
  const auto [ns, ps] = count(slow);
  EXPECT_EQ(pk, ps);
  EXPECT_EQ(ns, 256u * 256u);
  EXPECT_LT(nk, ns / 3);
}

TEST(DensePoly, MultiplicationIsAssociative) {
  gen::for_each_case([](auto c) {
    gen::Rng rng(8);
    for (int t = 0; t < 30; ++t) {
      const auto a = to_poly(c.ring, gen::any_poly(c.ref, 40, rng));
      const auto b = to_poly(c.ring, gen::any_poly(c.ref, 40, rng));
      const auto d = to_poly(c.ring, gen::any_poly(c.ref, 40, rng));
      ASSERT_TRUE(c.ring.equal(c.ring.mul(c.ring.mul(a, b), d), c.ring.mul(a, c.ring.mul(b, d)))) << c.name;
    }
  });
}

TEST(DensePoly, OrientedProductSwapsOperands) {
  auto c = gen::matrix(2, 127);
  gen::Rng rng(9);
  const auto a = gen::poly(c.ref, 3, rng, false), b = gen::poly(c.ref, 4, rng, false);
  const auto pa = to_poly(c.ring, a), pb = to_poly(c.ring, b);
  EXPECT_EQ(to_flat(c.ring.mul(pa, pb, Orientation::Right)), c.ref.mul(a, b));
  EXPECT_EQ(to_flat(c.ring.mul(pa, pb, Orientation::Left)), c.ref.mul(b, a));
  EXPECT_NE(c.ref.mul(a, b), c.ref.mul(b, a));
}

TEST(DensePoly, MulModMatchesTruncatedFullProduct) {
  gen::for_each_case([](auto c) {
    gen::Rng rng(10);
    for (std::size_t threshold : {2u, 16u}) {
      auto ring = c.ring;
      ring.set_karatsuba_threshold(threshold);
      for (int t = 0; t < 80; ++t) {
        const auto a = to_poly(ring, gen::any_poly(c.ref, 40, rng));
        const auto b = to_poly(ring, gen::any_poly(c.ref, 40, rng));
        const std::size_t n = gen::upto(rng, 0, 90);
        for (auto o : {Orientation::Left, Orientation::Right}) {
          ASSERT_TRUE(ring.equal(ring.mul_mod(a, b, n, o), ring.truncate(ring.mul(a, b, o), n))) << c.name;
        }
      }
    }
  });
}

TEST(ShiftLaws, ShiftThenUnshiftIsIdentity) {
  gen::for_each_case([](auto c) {
    gen::Rng rng(11);
    for (int t = 0; t < 100; ++t) {
      const auto w = to_poly(c.ring, gen::any_poly(c.ref, 30, rng));
      const long n = static_cast<long>(gen::upto(rng, 0, 12));
      ASSERT_TRUE(c.ring.equal(c.ring.shift(c.ring.shift(w, n), -n), w));
    }
    const auto u = to_poly(c.ring, gen::poly(c.ref, 7, rng, false));
    ASSERT_TRUE(c.ring.equal(c.ring.shift(c.ring.shift(u, 5), -5), u));
  });
}

TEST(ShiftLaws, ShiftFactorsThroughProducts) {
  gen::for_each_case([](auto c) {
    const auto& r = c.ring;
    gen::Rng rng(12);
    for (int t = 0; t < 100; ++t) {
      const std::size_t h = gen::upto(rng, 0, 25), k = gen::upto(rng, 0, 25);
      const auto u = to_poly(r, gen::poly(c.ref, h, rng, false));
      const auto v = to_poly(r, gen::poly(c.ref, k, rng, false));
      const long m = static_cast<long>(gen::upto(rng, 0, 5));
      const long kk = static_cast<long>(k), hh = static_cast<long>(h);
      ASSERT_TRUE(r.equal(r.shift(r.mul(u, v), -kk - m), r.shift(r.mul(r.shift(u, -m), v), -kk))) << c.name;
      ASSERT_TRUE(r.equal(r.shift(r.mul(u, v), -hh - m), r.shift(r.mul(u, r.shift(v, -m)), -hh))) << c.name;
    }
  });
}

TEST(ClassicalDivision, Examples) {
  const PolyRing<PrimeField> r(PrimeField(7));
  const auto qr = classical_div(r, gp(r, {0, 0, 1}), gp(r, {1, 1}), Orientation::Right);
  EXPECT_EQ(qr.quotient, gp(r, {6, 1}));
  EXPECT_EQ(qr.remainder, gp(r, {1}));

  const auto u = gp(r, {3, 2});
  const auto small = classical_div(r, u, gp(r, {1, 0, 5}), Orientation::Left);
  EXPECT_TRUE(r.is_zero(small.quotient));
  EXPECT_EQ(small.remainder, u);

  EXPECT_THROW(classical_div(r, u, r.zero(), Orientation::Right), ZeroDivision);
}

TEST(ClassicalDivision, SingularLeadingCoefficientThrows) {
  auto c = gen::matrix(2, 127);
  const auto v = to_poly(c.ring, oracle::Poly{{1, 0, 0, 1}, {1, 1, 1, 1}});
  const auto u = to_poly(c.ring, oracle::Poly{{1, 0, 0, 1}, {0, 0, 0, 0}, {1, 2, 3, 4}});
  EXPECT_THROW(classical_div(c.ring, u, v, Orientation::Right), NotInvertible);
}

TEST(ClassicalDivision, IdentityAndOracleBothOrientations) {
  gen::for_each_case([](auto c) {
    const auto& r = c.ring;
    gen::Rng rng(13);
    for (int t = 0; t < 150; ++t) {
      const auto uo = gen::any_poly(c.ref, 30, rng);
      const auto vo = gen::poly(c.ref, gen::upto(rng, 0, 12), rng, true);
      const auto u = to_poly(r, uo), v = to_poly(r, vo);
      for (auto o : {Orientation::Left, Orientation::Right}) {
        const auto [q, rem] = classical_div(r, u, v, o);
        ASSERT_TRUE(r.equal(r.add(r.mul(q, v, o), rem), u)) << c.name;
        ASSERT_TRUE(r.is_zero(rem) || *r.degree(rem) < *r.degree(v)) << c.name;
        const auto [oq, orem] = c.ref.divide(uo, vo, o == Orientation::Left);
        ASSERT_EQ(to_flat(q), oq) << c.name;
        ASSERT_EQ(to_flat(rem), orem) << c.name;
      }
    }
  });
}

TEST(PseudoDivision, MonicMatchesClassical) {
  gen::for_each_case([](auto c) {
    const auto& r = c.ring;
    gen::Rng rng(14);
    for (int t = 0; t < 50; ++t) {
      auto vo = gen::poly(c.ref, gen::upto(rng, 1, 8), rng, false);
      vo.back() = c.ref.one();
      const auto u = to_poly(r, gen::any_poly(c.ref, 20, rng)), v = to_poly(r, vo);
      for (auto o : {Orientation::Left, Orientation::Right}) {
        const auto p = pseudo_div(r, u, v, o);
        const auto d = classical_div(r, u, v, o);
        ASSERT_TRUE(r.equal(p.quotient, d.quotient));
        ASSERT_TRUE(r.equal(p.remainder, d.remainder));
        ASSERT_TRUE(r.coefficient_ring().equal(p.multiplier, r.coefficient_ring().one()));
      }
    }
  });
}

TEST(PseudoDivision, ScalarExample) {
  const PolyRing<PrimeField> r(PrimeField(7));
  const auto u = gp(r, {0, 0, 1}), v = gp(r, {1, 2});
  const auto p = pseudo_div(r, u, v, Orientation::Right);
  EXPECT_EQ(p.multiplier, GFpElement{4});
  // 4x^2 = (2x + 6)(2x + 1) + 1
  EXPECT_EQ(p.quotient, gp(r, {6, 2}));
  EXPECT_EQ(p.remainder, gp(r, {1}));
  EXPECT_EQ(r.add(r.mul(p.quotient, v), p.remainder), r.scale_left(p.multiplier, u));
}

TEST(PseudoDivision, ScalarMatrixLeadingCoefficient) {
  auto c = gen::matrix(3, 127);
  const auto& r = c.ring;
  const auto& m = r.coefficient_ring();
  gen::Rng rng(15);
  for (int t = 0; t < 50; ++t) {
    auto vo = gen::poly(c.ref, gen::upto(rng, 1, 6), rng, false);
    const auto v0 = to_poly(r, vo);
    const auto v = r.add(r.truncate(v0, *r.degree(v0)), r.monomial(m.scalar(GFpElement{2}), *r.degree(v0)));
    const auto u = to_poly(r, gen::poly(c.ref, gen::upto(rng, 0, 20), rng, false));
    for (auto o : {Orientation::Left, Orientation::Right}) {
      const auto p = pseudo_div(r, u, v, o);
      const auto scaled = o == Orientation::Left ? r.scale_left(p.multiplier, u) : r.scale_right(u, p.multiplier);
      ASSERT_TRUE(r.equal(r.add(r.mul(p.quotient, v, o), p.remainder), scaled));
      ASSERT_TRUE(r.is_zero(p.remainder) || *r.degree(p.remainder) < *r.degree(v));
      const std::size_t expected_power = *r.degree(u) >= *r.degree(v) ? *r.degree(u) - *r.degree(v) + 1 : 0;
      auto power = m.one();
      for (std::size_t i = 0; i < expected_power; ++i) power = m.mul(power, m.scalar(GFpElement{2}));
      ASSERT_TRUE(m.equal(p.multiplier, power));
    }
  }
}

// y is central but not a unit in GF(127)[y].
TEST(PseudoDivision, SingularCentralLeadingCoefficient) {
  const PolyRing<PolyRing<PrimeField>> ry((PolyRing<PrimeField>(PrimeField(127))));
  const auto& cy = ry.coefficient_ring();
  auto y = [&](std::vector<std::uint32_t> cs) { return gp(cy, std::move(cs)); };
  const auto vy = ry.from_coeffs({y({1}), y({0, 1})});        // y*x + 1
  const auto uy = ry.from_coeffs({y({2}), y({}), y({0, 0, 1})});  // y^2 x^2 + 2
  for (auto o : {Orientation::Left, Orientation::Right}) {
    EXPECT_THROW(classical_div(ry, uy, vy, o), NotInvertible);
    const auto p = pseudo_div(ry, uy, vy, o);
    EXPECT_EQ(p.multiplier, y({0, 0, 1}));
    EXPECT_TRUE(ry.equal(ry.add(ry.mul(p.quotient, vy, o), p.remainder), ry.scale_left(p.multiplier, uy)));
    EXPECT_EQ(ry.degree(p.remainder), 0u);
  }
}

TEST(PseudoDivision, NonCentralLeadingCoefficientThrows) {
  auto c = gen::matrix(2, 127);
  const auto v = to_poly(c.ring, oracle::Poly{{0, 1, 0, 0}, {1, 0, 0, 2}});
  const auto u = to_poly(c.ring, oracle::Poly{{1, 0, 0, 1}, {0, 0, 0, 0}, {1, 0, 0, 1}});
  EXPECT_THROW(pseudo_div(c.ring, u, v, Orientation::Left), NotCentral);
}
