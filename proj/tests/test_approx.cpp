#include "sofic/approx/ambient.hpp"
#include "sofic/approx/approximation.hpp"
#include "sofic/core/random.hpp"
#include "sofic/metric/finite_metric_group.hpp"

#include <gtest/gtest.h>

using namespace sofic;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

FiniteSubset<IntegerGroup> interval(long lo, long hi) {
  std::vector<long> xs;
  for (long k = lo; k <= hi; ++k) xs.push_back(k);
  return FiniteSubset<IntegerGroup>(xs);
}

ApproximationMap<IntegerGroup, SymmetricGroup> shifts(std::size_t n, FiniteSubset<IntegerGroup> f) {
  return {IntegerGroup{}, SymmetricGroup{n}, std::move(f), [n](long k) { return Permutation::cyclic_shift(n, k); }};
}

}  // namespace

TEST(Multiplicative, ExactShiftsHaveZeroDefect) {
  const auto phi = shifts(5, interval(-2, 2));
  const auto r = check_multiplicative(phi, q(1, 1000));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(rational_from_json(r.defect), 0);
}

TEST(Multiplicative, TruncatedShiftHasDefectOne) {
  for (std::size_t n : {3u, 5u, 8u}) {
    auto phi = shifts(n, interval(-1, 2)).with_value(2, Permutation::identity(n));
    const auto r = check_multiplicative(phi, q(1, 2));
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(rational_from_json(r.defect), 1);
    bool saw = false;
    for (const auto& v : r.violations) saw = saw || (v["g"] == 1 && v["h"] == 1 && rational_from_json(v["defect"]) == 1);
    EXPECT_TRUE(saw);
    EXPECT_EQ(measure_defects(phi).eps_max, 1);
  }
}

TEST(Separating, SpecExamples) {
  const CyclicGroup z3{3};
  const auto reg = regular_representation(z3);
  EXPECT_TRUE(check_separating(reg, q(9, 10)).pass);

  const ApproximationMap<CyclicGroup, SymmetricGroup> constant(z3, SymmetricGroup{3}, FiniteSubset<CyclicGroup>(z3.elements()),
                                                                [](long) { return Permutation::identity(3); });
  EXPECT_FALSE(check_separating(constant, q(1, 10)).pass);

  const CyclicGroup z2{2};
  const ApproximationMap<CyclicGroup, SymmetricGroup> transposition(
      z2, SymmetricGroup{3}, FiniteSubset<CyclicGroup>(z2.elements()),
      [](long g) { return g == 0 ? Permutation::identity(3) : Permutation::from_cycles(3, {{1, 2}}); });
  const auto r = check_separating(transposition, q(1, 2));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(rational_from_json(r.defect), q(2, 3));
}

TEST(Representation, RegularRepresentationsOfSmallGroups) {
  // Separation is exactly 1, so the strict clause passes for every c < 1.
  for (long n = 1; n <= 12; ++n) {
    const auto reg = regular_representation(CyclicGroup{n});
    EXPECT_TRUE(check_representation(reg, q(1, 1000), q(999, 1000)).pass);
    const auto d = measure_defects(reg);
    EXPECT_EQ(d.eps_max, 0);
    if (n > 1) EXPECT_EQ(*d.c_min, 1);
  }
  for (const auto& g : {AbelianGroup{{2, 2}}, AbelianGroup{{2, 3}}, AbelianGroup{{2, 2, 3}}}) {
    EXPECT_TRUE(check_representation(regular_representation(g), q(1, 1000), q(999, 1000)).pass);
  }
  EXPECT_TRUE(check_representation(regular_representation(SymmetricGroup{3}), q(1, 1000), q(999, 1000)).pass);
  const auto a4ish = FiniteMetricGroup::symmetric_hamming(3);
  EXPECT_TRUE(check_representation(regular_representation(a4ish), q(1, 1000), q(999, 1000)).pass);
  EXPECT_FALSE(check_separating(regular_representation(CyclicGroup{4}), q(1)).pass);
}

TEST(Representation, ConstantIdentityFailsSeparation) {
  const CyclicGroup z4{4};
  const ApproximationMap<CyclicGroup, SymmetricGroup> constant(z4, SymmetricGroup{4}, FiniteSubset<CyclicGroup>(z4.elements()),
                                                                [](long) { return Permutation::identity(4); });
  const auto r = check_representation(constant, q(1, 2), q(1, 2));
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.children[0].pass);
  EXPECT_TRUE(r.children[1].pass);
  EXPECT_FALSE(r.children[2].pass);
}

TEST(RegularRepresentation, SpecExamples) {
  EXPECT_EQ(regular_representation(CyclicGroup{2})(1), Permutation::from_cycles(2, {{1, 2}}));
  EXPECT_EQ(regular_representation(CyclicGroup{3})(1), Permutation::from_cycles(3, {{1, 2, 3}}));
  const AbelianGroup v4{{2, 2}};
  const auto reg = regular_representation(v4);
  for (const auto& g : {std::vector<long>{1, 0}, std::vector<long>{0, 1}}) EXPECT_EQ(reg(g).fixed_points(), 0u);
  EXPECT_THROW(regular_representation(CyclicGroup{100}, 50), CapExceeded);
}

TEST(MeasureDefects, ShiftBallOnZ8) {
  const auto d = measure_defects(shifts(8, interval(-3, 3)));
  EXPECT_EQ(d.eps_max, 0);
  EXPECT_EQ(*d.c_min, 1);
  EXPECT_TRUE(d.unital);
}

TEST(RepairUnital, AlreadyUnitalIsUnchanged) {
  const auto phi = regular_representation(CyclicGroup{4});
  const auto fixed = repair_unital(phi, q(1, 10), q(1));
  EXPECT_EQ(fixed.map.images(), phi.images());
  EXPECT_TRUE(fixed.report.pass);
}

TEST(RepairUnital, TranspositionAtIdentity) {
  const CyclicGroup z2{2};
  const auto t = Permutation::from_cycles(4, {{1, 2}});
  const auto g = Permutation::from_cycles(4, {{1, 3}, {2, 4}});
  const ApproximationMap<CyclicGroup, SymmetricGroup> phi(z2, SymmetricGroup{4}, FiniteSubset<CyclicGroup>(z2.elements()),
                                                          [&](long x) { return x == 0 ? t : g; });
  const Rational delta = q(51, 100);
  const auto fixed = repair_unital(phi, delta, q(1));
  EXPECT_TRUE(fixed.report.pass);
  EXPECT_EQ(fixed.map(0), Permutation::identity(4));
  EXPECT_GE(*measure_defects(fixed.map).c_min, 1 - delta);
}

TEST(RepairUnital, RejectsCollidingImages) {
  const CyclicGroup z2{2};
  const ApproximationMap<CyclicGroup, SymmetricGroup> phi(z2, SymmetricGroup{3}, FiniteSubset<CyclicGroup>(z2.elements()),
                                                          [](long) { return Permutation::identity(3); });
  EXPECT_THROW(repair_unital(phi, q(1, 2), q(1, 2)), PreconditionError);
}

TEST(RepairUnital, RandomizedSuiteOverSmallSymmetricGroups) {
  SplitMix64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const long m = 2 + static_cast<long>(rng.below(5));  // codomain Sym(m), m <= 6
    const CyclicGroup g{m};
    const auto reg = regular_representation(g);
    const auto perms = all_permutations(static_cast<std::size_t>(m));
    auto phi = reg.with_value(0, perms[rng.below(perms.size())]);
    if (rng.below(2) == 0) {
      const long k = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(m - 1)));
      phi = phi.with_value(k, perms[rng.below(perms.size())]);
    }
    const auto d = measure_defects(phi);
    const Rational delta = std::max(d.eps_max, phi.codomain().distance(phi(0), Permutation::identity(static_cast<std::size_t>(m)))) + q(1, 100);
    Rational c = 1;
    const auto& F = phi.domain();
    for (std::size_t i = 0; i < F.size(); ++i)
      for (std::size_t j = i + 1; j < F.size(); ++j) c = std::min(c, hamming_distance(phi(F[i]), phi(F[j])));
    if (c == 0) continue;
    const auto fixed = repair_unital(phi, delta, c);
    EXPECT_TRUE(fixed.report.pass) << fixed.report.to_json().dump();
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(Representation, MonotoneInParameters) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const long n = 3 + static_cast<long>(rng.below(4));
    auto phi = shifts(static_cast<std::size_t>(n), interval(-2, 2));
    phi = phi.with_value(2, Permutation::cyclic_shift(static_cast<std::size_t>(n), static_cast<long>(rng.below(3))));
    const Rational eps = q(1 + static_cast<long>(rng.below(10)), 10);
    const Rational c = q(static_cast<long>(rng.below(10)), 10);
    if (!check_representation(phi, eps, c).pass) continue;
    EXPECT_TRUE(check_representation(phi, eps + q(1, 10), c).pass);
    EXPECT_TRUE(check_representation(phi, eps, c / 2).pass);
  }
}
