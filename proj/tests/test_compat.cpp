#include "sofic/approx/ambient.hpp"
#include "sofic/compat/compat.hpp"

#include <gtest/gtest.h>

#include <memory>

using namespace sofic;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

std::vector<StructuredPerm> structured_all(std::size_t n) {
  std::vector<StructuredPerm> out;
  for (const auto& p : all_permutations(n)) out.push_back(StructuredPerm::from(p));
  return out;
}

// Hamming distance of the coordinatewise action on [a] x [b], counted directly.
Rational product_hamming_oracle(const Permutation& s1, const Permutation& t1, const Permutation& s2, const Permutation& t2) {
  long moved = 0;
  const auto a = s1.degree(), b = t1.degree();
  for (std::uint32_t i = 0; i < a; ++i)
    for (std::uint32_t j = 0; j < b; ++j)
      if (s1(i) != s2(i) || t1(j) != t2(j)) ++moved;
  return Rational(BigInt(moved), BigInt(a * b));
}

}  // namespace

TEST(SoficProduct, FormulaMatchesDirectCount) {
  const SoficFamily fam;
  const auto s3 = all_permutations(3);
  const auto s4 = all_permutations(4);
  for (const auto& a1 : s3)
    for (const auto& a2 : s3)
      for (const auto& b1 : s4)
        for (const auto& b2 : s4) {
          const Rational x = hamming_distance(a1, a2);
          const Rational y = hamming_distance(b1, b2);
          const Rational d = hamming_distance(fam.product(StructuredPerm::from(a1), StructuredPerm::from(b1)),
                                              fam.product(StructuredPerm::from(a2), StructuredPerm::from(b2)));
          ASSERT_EQ(d, product_hamming_oracle(a1, b1, a2, b2));
          ASSERT_EQ(d, x + y - x * y);
        }
}

TEST(SoficProduct, ChecksPass) {
  const SoficFamily fam;
  const StructuredSymmetricGroup g3{StructuredPerm::identity(3)}, g4{StructuredPerm::identity(4)};
  const auto r = check_product_compatibility(fam, g3, g4, structured_all(3), structured_all(4));
  EXPECT_TRUE(r.pass) << r.to_json().dump(2);
  EXPECT_EQ(r.children.at(2).details["mode"], "exhaustive");
}

TEST(LinearProduct, BoundsOverGL2F2) {
  const Field f2 = Field::prime(2);
  const LinearFamily fam{f2};
  const GeneralLinearGroup gl{2, f2};
  const auto elems = general_linear_group(2, f2);
  ASSERT_EQ(elems.size(), 6u);
  const auto target = fam.product_group(gl, gl);
  const auto e = target.identity();
  for (const auto& a : elems)
    for (const auto& b : elems) {
      const Rational x = gl.distance(a, gl.identity());
      const Rational y = gl.distance(b, gl.identity());
      const Rational z = target.distance(fam.product(a, b), e);
      EXPECT_GE(z, std::max(x, y) / 4);
      EXPECT_LE(z, (2 * x + 2 * y - x * y) / 4);
    }
  const auto r = check_product_compatibility(fam, gl, gl, elems, elems);
  EXPECT_TRUE(r.pass) << r.to_json().dump(2);
  EXPECT_EQ(r.children.at(2).details["mode"], "exhaustive");
}

TEST(LinearProduct, HatHalvesRankDistance) {
  const Field f3 = Field::prime(3);
  const auto elems = general_linear_group(2, f3);
  for (const auto& a : elems)
    for (const auto& b : elems) ASSERT_EQ(rank_distance(hat(a), hat(b)), rank_distance(a, b) / 2);
}

TEST(LinearProduct, PlainTensorIsNotAProductMap) {
  const Field f3 = Field::prime(3);
  const LinearFamily broken{f3, false};
  const auto two = FieldMatrix::scalar(2, f3, 2);
  EXPECT_EQ(broken.product(two, two), FieldMatrix::identity(4, f3));
  const GeneralLinearGroup gl{2, f3};
  const auto r = check_product_compatibility(broken, gl, gl, {gl.identity(), two}, {gl.identity(), two});
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.children.at(0).pass);

  const LinearFamily fixed{f3};
  EXPECT_TRUE(check_product_compatibility(fixed, gl, gl, {gl.identity(), two}, {gl.identity(), two}).pass);
}

TEST(LinearProduct, TensorPseudoRankBound) {
  // The plain tensor product only controls distance up to scalars.
  const Field f3 = Field::prime(3);
  const auto elems = general_linear_group(2, f3);
  SplitMix64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const auto& a = elems[rng.below(elems.size())];
    const auto& b = elems[rng.below(elems.size())];
    const auto& c = elems[rng.below(elems.size())];
    const auto& d = elems[rng.below(elems.size())];
    const Rational lhs = pseudo_rank_distance(kronecker(a, b), kronecker(c, d));
    EXPECT_LE(lhs, pseudo_rank_distance(a, c) + pseudo_rank_distance(b, d));
  }
}

TEST(HyperlinearProduct, RandomUnitariesSatisfyBounds) {
  const HyperlinearFamily fam;
  const UnitaryGroup u2{2};
  SplitMix64 rng(11);
  std::vector<ComplexMatrix> left, right;
  left.push_back(u2.identity());
  right.push_back(u2.identity());
  for (int k = 0; k < 14; ++k) {
    left.push_back(random_unitary(2, rng));
    right.push_back(random_unitary(2, rng));
  }
  const auto r = check_product_compatibility(fam, u2, u2, left, right, 3, 0, 200);
  EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(HyperlinearProduct, HatBoundOnRandomPairs) {
  SplitMix64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_unitary(3, rng), b = random_unitary(3, rng);
    const double d = hs_distance(a, b);
    EXPECT_NEAR(hs_distance(complex_hat(a), complex_hat(b)), d / std::sqrt(2.0), 1e-9);
  }
}

TEST(WreathCompat, SoficImprimitivePasses) {
  const SoficFamily fam;
  const StructuredSymmetricGroup inner{StructuredPerm::identity(3)};
  const auto s3 = structured_all(3);
  const auto r = check_wreath_compatibility<SoficFamily>(
      fam, inner, 4, [&](SplitMix64& rng) { return s3[rng.below(s3.size())]; }, 500, 1);
  EXPECT_TRUE(r.pass) << format_text(r);
}

TEST(WreathCompat, ProductActionLayoutViolatesContinuity) {
  SoficFamily fam;
  fam.layout = WreathLayout::ProductAction;
  const StructuredSymmetricGroup inner{StructuredPerm::identity(3)};
  const auto s3 = structured_all(3);
  const auto r = check_wreath_compatibility<SoficFamily>(
      fam, inner, 8, [&](SplitMix64& rng) { return s3[rng.below(s3.size())]; }, 500, 1);
  EXPECT_FALSE(r.pass);
  std::map<std::string, bool> verdict;
  for (const auto& c : r.children) verdict[c.check] = c.pass;
  EXPECT_TRUE(verdict["conjugation_c"]);
  EXPECT_TRUE(verdict["base_homomorphism"]);
  EXPECT_TRUE(verdict["acting_homomorphism"]);
  EXPECT_FALSE(verdict["continuity_a"]);
  EXPECT_FALSE(verdict["acting_b"]);

  // One differing coordinate already moves almost every point of C^n.
  std::vector<StructuredPerm> g(4, inner.id), h(4, inner.id);
  h[0] = StructuredPerm::from(Permutation::from_cycles(3, {{1, 2, 3}}));
  EXPECT_EQ(hamming_distance(fam.base(g), fam.base(h)), 1);
  // A transposition of coordinates fixes only the diagonal-ish tuples.
  EXPECT_EQ(hamming_distance(fam.acting(inner, Permutation::from_cycles(4, {{1, 2}})), fam.acting(inner, Permutation::identity(4))),
            1 - q(1, 3));
}

TEST(WreathCompat, LinearPasses) {
  const Field f3 = Field::prime(3);
  const LinearFamily fam{f3};
  const GeneralLinearGroup inner{2, f3};
  const auto elems = general_linear_group(2, f3);
  const auto r = check_wreath_compatibility<LinearFamily>(
      fam, inner, 3, [&](SplitMix64& rng) { return elems[rng.below(elems.size())]; }, 200, 2);
  EXPECT_TRUE(r.pass) << format_text(r);
}

TEST(WreathCompat, HyperlinearPasses) {
  const HyperlinearFamily fam;
  const UnitaryGroup inner{2};
  const auto r = check_wreath_compatibility<HyperlinearFamily>(
      fam, inner, 4, [](SplitMix64& rng) { return random_unitary(2, rng); }, 200, 3);
  EXPECT_TRUE(r.pass) << format_text(r);
}

TEST(WreathCompat, WeakPasses) {
  const WeakFamily fam;
  auto z3 = std::make_shared<const FiniteMetricGroup>(FiniteMetricGroup::cyclic(3));
  const WeakGroup inner{WeakElement::table(z3, 0)};
  const auto r = check_wreath_compatibility<WeakFamily>(
      fam, inner, 4, [&](SplitMix64& rng) { return WeakElement::table(z3, static_cast<int>(rng.below(3))); }, 300, 4);
  EXPECT_TRUE(r.pass) << format_text(r);
}

TEST(WreathCompat, BaseMapAveragesCoordinates) {
  const SoficFamily fam;
  const StructuredSymmetricGroup inner{StructuredPerm::identity(4)};
  const auto s4 = structured_all(4);
  SplitMix64 rng(9);
  for (int k = 0; k < 100; ++k) {
    std::vector<StructuredPerm> g, h;
    Rational sum = 0;
    for (int x = 0; x < 5; ++x) {
      g.push_back(s4[rng.below(24)]);
      h.push_back(s4[rng.below(24)]);
      sum += hamming_distance(g.back(), h.back());
    }
    ASSERT_EQ(hamming_distance(fam.base(g), fam.base(h)), sum / 5);
  }
}

TEST(WreathCompat, ActingRankFormula) {
  // rk(psi(s) - I) = m (k - cyc(s)) for the linear acting map.
  const Field f5 = Field::prime(5);
  const LinearFamily fam{f5};
  for (std::size_t m = 1; m <= 3; ++m) {
    const GeneralLinearGroup inner{m, f5};
    for (const auto& s : all_permutations(4)) {
      const auto p = fam.acting(inner, s);
      ASSERT_EQ((p - FieldMatrix::identity(p.dim(), f5)).rank(), m * (4 - s.cycle_count()));
    }
  }
}

TEST(Transfer, ProductOfRegularRepresentations) {
  const CyclicGroup z6{6};
  const SoficFamily fam;
  const auto reg = regular_representation(z6);
  const auto lifted = reg.transform<StructuredSymmetricGroup>(StructuredSymmetricGroup{StructuredPerm::identity(6)},
                                                              [](const Permutation& p) { return StructuredPerm::from(p); });
  const auto both = transfer_multiplicativity(fam, lifted, lifted);
  const auto d = measure_defects(both);
  EXPECT_EQ(d.eps_max, 0);
  EXPECT_EQ(*d.c_min, 1);
}
