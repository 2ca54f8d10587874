#include "sofic/metric/field_matrix.hpp"
#include "sofic/metric/finite_metric_group.hpp"
#include "sofic/metric/json_io.hpp"
#include "sofic/metric/permutation.hpp"
#include "sofic/metric/structured_perm.hpp"
#include "sofic/metric/unitary.hpp"
#include "sofic/metric/weak_element.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sofic;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

// Rank oracle over F_p: n minus log_p of the kernel size, by enumerating vectors.
std::size_t brute_rank(const FieldMatrix& m) {
  const auto p = m.field().p;
  const auto n = m.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::size_t kernel = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<long> v(n);
    std::size_t c = code;
    for (auto& x : v) {
      x = static_cast<long>(c % p);
      c /= p;
    }
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += m.at(i, j).convert_to<long>() * v[j];
      zero = acc % static_cast<long>(p) == 0;
    }
    kernel += zero;
  }
  std::size_t dim = 0;
  while (kernel > 1) {
    kernel /= p;
    ++dim;
  }
  return n - dim;
}

}  // namespace

TEST(Hamming, SpecExamples) {
  const auto id3 = Permutation::identity(3);
  EXPECT_EQ(hamming_distance(id3, id3), 0);
  EXPECT_EQ(hamming_distance(Permutation::from_cycles(3, {{1, 2}}), id3), q(2, 3));
  EXPECT_EQ(hamming_distance(Permutation::from_cycles(3, {{1, 2, 3}}), Permutation::from_cycles(3, {{1, 3, 2}})), 1);
}

TEST(Hamming, RejectsDegreeMismatch) {
  EXPECT_THROW(hamming_distance(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST(Permutation, ValidationAndJson) {
  EXPECT_THROW(Permutation::from_one_based({1, 1, 2}), std::invalid_argument);
  const auto p = Permutation::from_cycles(4, {{1, 3}});
  nlohmann::json j = p;
  EXPECT_EQ(j.dump(), "[3,2,1,4]");
  EXPECT_EQ(j.get<Permutation>(), p);
}

TEST(CycleCount, SpecExamples) {
  EXPECT_EQ(Permutation::identity(4).cycle_count(), 4u);
  EXPECT_EQ(Permutation::from_cycles(4, {{1, 2}, {3, 4}}).cycle_count(), 2u);
  EXPECT_EQ(Permutation::from_cycles(4, {{1, 2, 3}}).cycle_count(), 2u);
  for (const auto& s : all_permutations(5)) EXPECT_GE(s.cycle_count() + s.support_size(), 5u);
}

TEST(RankDistance, SpecExamples) {
  const Field f3 = Field::prime(3);
  const auto i2 = FieldMatrix::identity(2, f3);
  EXPECT_EQ(rank_distance(i2, i2), 0);
  EXPECT_EQ(rank_distance(FieldMatrix::diagonal(f3, {1, 2}), i2), q(1, 2));
  EXPECT_EQ(rank_distance(FieldMatrix::diagonal(f3, {2, 2}), i2), 1);
  EXPECT_THROW(rank_distance(i2, FieldMatrix::identity(2, Field::prime(5))), std::invalid_argument);
}

TEST(RankDistance, MatchesKernelCountOracle) {
  const Field f3 = Field::prime(3);
  for (const auto& a : general_linear_group(2, f3)) {
    for (const auto& b : general_linear_group(2, f3)) {
      EXPECT_EQ(rank_distance(a, b), q(static_cast<long>(brute_rank(a - b)), 2));
    }
  }
}

TEST(RankDistance, RationalsAgreeWithPrimeFieldWhenPivotsAvoidP) {
  const std::vector<std::vector<std::int64_t>> rows = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  const auto mq = FieldMatrix::from_rows(Field::rationals(), rows);
  const auto m7 = FieldMatrix::from_rows(Field::prime(7), rows);
  EXPECT_EQ(rank_distance(mq, FieldMatrix::identity(3, Field::rationals())),
            rank_distance(m7, FieldMatrix::identity(3, Field::prime(7))));
  EXPECT_EQ(mq.determinant(), 18);
  EXPECT_EQ(mq * mq.inverse(), FieldMatrix::identity(3, Field::rationals()));
}

TEST(Field, RejectsLargeOrCompositeP) {
  EXPECT_THROW(Field::prime(4), std::invalid_argument);
  EXPECT_THROW(Field::prime(101), std::invalid_argument);
  EXPECT_NO_THROW(Field::prime(97));
}

TEST(HsDistance, SpecExamples) {
  const auto i2 = ComplexMatrix::Identity(2, 2);
  EXPECT_NEAR(hs_distance(i2, i2), 0.0, 1e-12);
  EXPECT_NEAR(hs_distance(complex_permutation_matrix(Permutation::from_cycles(2, {{1, 2}})), i2), std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(hs_distance(-i2, i2), 2.0, 1e-9);
}

TEST(HsDistance, RejectsNonUnitaryLiteral) {
  EXPECT_THROW(unitary_from_json(nlohmann::json{{"re", {{1, 1}, {0, 1}}}}), std::invalid_argument);
}

TEST(PermutationMatrix, Shape) {
  const auto swap = Permutation::from_cycles(2, {{1, 2}});
  const auto p = permutation_matrix(swap, Field::prime(3));
  EXPECT_EQ(p, FieldMatrix::from_rows(Field::prime(3), {{0, 1}, {1, 0}}));
  EXPECT_EQ(permutation_matrix(Permutation::identity(2), Field::prime(3)), FieldMatrix::identity(2, Field::prime(3)));
  // P(s)P(t) = P(st)
  for (const auto& s : all_permutations(3))
    for (const auto& t : all_permutations(3))
      EXPECT_EQ(permutation_matrix(s, Field::prime(2)) * permutation_matrix(t, Field::prime(2)),
                permutation_matrix(s * t, Field::prime(2)));
}

TEST(WeakWreath, SpecExamples) {
  auto z2 = std::make_shared<const FiniteMetricGroup>(FiniteMetricGroup::cyclic(2));
  auto el = [&](int a, int b, const Permutation& s) {
    return WeakElement::wreath({WeakElement::table(z2, a), WeakElement::table(z2, b)}, s);
  };
  const auto id2 = Permutation::identity(2);
  const auto sw = Permutation::from_cycles(2, {{1, 2}});
  EXPECT_EQ(weak_distance(el(0, 0, id2), el(0, 0, id2)), 0);
  EXPECT_EQ(weak_distance(el(1, 0, id2), el(0, 0, id2)), q(1, 2));
  EXPECT_EQ(weak_distance(el(0, 0, sw), el(0, 0, id2)), 1);
}

TEST(WeakWreath, TableIsBiinvariant) {
  auto z3 = std::make_shared<const FiniteMetricGroup>(FiniteMetricGroup::cyclic(3));
  const auto g = weak_wreath_table(z3, 2);
  EXPECT_EQ(g.size(), 18u);
  EXPECT_TRUE(check_biinvariant_metric(g).pass);
}

TEST(MetricTransform, SpecExamples) {
  EXPECT_EQ(amplify(q(1, 2)), q(3, 4));
  EXPECT_EQ(amplify(amplify(q(1, 2))), q(15, 16));
  const auto s3 = FiniteMetricGroup::symmetric_hamming(3);
  EXPECT_EQ(metric_transform_pow(s3, 0).metric(), s3.metric());
}

TEST(MetricTransform, PreservesAxiomsAndAmplifies) {
  for (const auto& base : {FiniteMetricGroup::symmetric_hamming(3), FiniteMetricGroup::symmetric_hamming(4),
                           weak_wreath_table(std::make_shared<const FiniteMetricGroup>(FiniteMetricGroup::cyclic(2)), 2)}) {
    for (unsigned n = 0; n <= 3; ++n) {
      const auto g = metric_transform_pow(base, n);
      EXPECT_TRUE(check_biinvariant_metric(g).pass) << "n=" << n;
      if (n == 1) {
        for (std::size_t k = 0; k < base.metric().size(); ++k) {
          EXPECT_LE(base.metric()[k], g.metric()[k]);
          EXPECT_LE(g.metric()[k], 2 * base.metric()[k]);
        }
      }
    }
  }
}

TEST(BiinvariantCheck, SpecExamples) {
  EXPECT_TRUE(check_biinvariant_metric(FiniteMetricGroup::cyclic(3)).pass);
  EXPECT_TRUE(check_biinvariant_metric(FiniteMetricGroup::symmetric_hamming(3)).pass);
  auto z3 = FiniteMetricGroup::cyclic(3);
  auto metric = z3.metric();
  metric[0 * 3 + 1] = q(1, 2);
  const FiniteMetricGroup broken(z3.table(), metric);
  const auto r = check_biinvariant_metric(broken);
  EXPECT_FALSE(r.pass);
  bool saw_symmetry = false;
  for (const auto& v : r.violations) saw_symmetry = saw_symmetry || v["axiom"] == "symmetry";
  EXPECT_TRUE(saw_symmetry);
}

TEST(BiinvariantCheck, SampledModeIsFlagged) {
  const auto r = check_biinvariant_metric(FiniteMetricGroup::symmetric_hamming(4), 10, 7, 500);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.approximate);
}

TEST(StructuredPerm, ClosedFormMatchesEnumeration) {
  SplitMix64 rng(11);
  const auto s3 = all_permutations(3);
  auto pick = [&](std::size_t n) {
    auto all = all_permutations(n);
    return StructuredPerm::from(all[rng.below(all.size())]);
  };
  for (int trial = 0; trial < 200; ++trial) {
    for (auto layout : {WreathLayout::ProductAction, WreathLayout::Imprimitive}) {
      std::vector<StructuredPerm> bases;
      for (int i = 0; i < 3; ++i) bases.push_back(pick(3));
      const auto w = StructuredPerm::wreath(bases, s3[rng.below(6)], layout);
      const auto p = StructuredPerm::product(w, pick(4));
      EXPECT_EQ(p.fixed_points(), fixed_points_by_enumeration(p));
      EXPECT_EQ(w.fixed_points(), fixed_points_by_enumeration(w));
    }
  }
}

TEST(StructuredPerm, NormalFormProductMatchesMaterialized) {
  SplitMix64 rng(5);
  const auto s3 = all_permutations(3);
  auto rand_wreath = [&](WreathLayout layout) {
    std::vector<StructuredPerm> bases;
    for (int i = 0; i < 3; ++i) bases.push_back(StructuredPerm::from(s3[rng.below(6)]));
    return StructuredPerm::wreath(bases, s3[rng.below(6)], layout);
  };
  for (int trial = 0; trial < 100; ++trial) {
    for (auto layout : {WreathLayout::ProductAction, WreathLayout::Imprimitive}) {
      const auto a = rand_wreath(layout);
      const auto b = rand_wreath(layout);
      EXPECT_EQ((a * b).materialize(), a.materialize() * b.materialize());
      EXPECT_EQ(a.inverse().materialize(), a.materialize().inverse());
      EXPECT_EQ(hamming_distance(a, b), hamming_distance(a.materialize(), b.materialize()));
    }
  }
}

TEST(StructuredPerm, ProductActionSwapDistance) {
  const auto psi = StructuredPerm::wreath({StructuredPerm::identity(2), StructuredPerm::identity(2)},
                                          Permutation::from_cycles(2, {{1, 2}}), WreathLayout::ProductAction);
  EXPECT_EQ(hamming_distance(psi, StructuredPerm::identity(4)), q(1, 2));
}

TEST(StructuredPerm, HugeCarrierStaysLazy) {
  std::vector<StructuredPerm> bases(8, StructuredPerm::from(Permutation::cyclic_shift(256, 1)));
  const auto w = StructuredPerm::wreath(bases, Permutation::identity(8), WreathLayout::ProductAction);
  EXPECT_EQ(w.carrier(), boost::multiprecision::pow(BigInt(256), 8));
  EXPECT_EQ(w.fixed_points(), 0);
  EXPECT_THROW(w.materialize(), CapExceeded);
  SplitMix64 rng(3);
  EXPECT_EQ(sampled_fixed_fraction(w, rng, 64), 0.0);
  const auto other_shape = StructuredPerm::product(StructuredPerm::from(Permutation::cyclic_shift(2, 1)),
                                                   StructuredPerm::identity(w.carrier() / 2));
  EXPECT_THROW(w.multiply(other_shape), CapExceeded);
}

TEST(JsonIo, MetricGroupRoundTrip) {
  const auto g = FiniteMetricGroup::symmetric_hamming(3);
  const auto back = metric_group_from_json(metric_group_to_json(g));
  EXPECT_EQ(back.metric(), g.metric());
  EXPECT_EQ(back.table(), g.table());
  const auto m = FieldMatrix::diagonal(Field::prime(5), {1, 4});
  EXPECT_EQ(field_matrix_from_json(nlohmann::json(m)), m);
  EXPECT_EQ(rational_from_json(rational_to_json(q(-3, 7))), q(-3, 7));
}
