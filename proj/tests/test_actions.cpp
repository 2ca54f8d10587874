#include "sofic/actions/actions.hpp"

#include <gtest/gtest.h>

using namespace sofic;

namespace {

FiniteSubset<IntegerGroup> interval(long lo, long hi) {
  std::vector<long> xs;
  for (long k = lo; k <= hi; ++k) xs.push_back(k);
  return FiniteSubset<IntegerGroup>(xs);
}

std::vector<long> range(long lo, long hi) {
  std::vector<long> xs;
  for (long k = lo; k <= hi; ++k) xs.push_back(k);
  return xs;
}

long mod(long a, long n) { return ((a % n) + n) % n; }

ActionFragment<IntegerGroup> shift_fragment(long lo, long hi, long radius = 1) {
  return {IntegerGroup{}, interval(-radius, radius), range(lo, hi), [](long g, long x) { return x + g; }, std::nullopt};
}

LEFActionWitness<CyclicGroup, IntegerGroup> shift_witness(long n, const std::vector<long>& points) {
  LEFActionWitness<CyclicGroup, IntegerGroup> w{CyclicGroup{n}, range(0, n - 1), [n](long q, long y) { return mod(y + q, n); },
                                                [n](long g) { return mod(g, n); }, {}, std::nullopt};
  for (long x : points) w.pi[x] = mod(x, n);
  return w;
}

std::map<std::string, bool> verdicts(const CheckReport& r) {
  std::map<std::string, bool> out;
  for (const auto& c : r.children) out[c.check] = c.pass;
  return out;
}

}  // namespace

TEST(LefWitness, FiniteGroupActingOnItself) {
  const CyclicGroup z5{5};
  ActionFragment<CyclicGroup> frag{z5, FiniteSubset<CyclicGroup>(z5.elements()), range(0, 4),
                                   [](long g, long x) { return (g + x) % 5; }, std::nullopt};
  LEFActionWitness<CyclicGroup, CyclicGroup> w{z5, range(0, 4), [](long q, long y) { return (q + y) % 5; }, [](long g) { return g; },
                                               {}, std::nullopt};
  for (long x = 0; x < 5; ++x) w.pi[x] = x;
  EXPECT_TRUE(check_lef_action_witness(frag, w).pass);
}

TEST(LefWitness, ShiftWindow) {
  const auto frag = shift_fragment(0, 4);
  EXPECT_TRUE(check_lef_action_witness(frag, shift_witness(8, frag.points)).pass);
  const auto r = check_lef_action_witness(frag, shift_witness(4, frag.points));
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(verdicts(r)["pi_injective"]);
  EXPECT_FALSE(r.children.at(3).violations.empty());
}

TEST(LefWitness, BrokenEquivarianceIsReported) {
  const auto frag = shift_fragment(0, 4);
  auto w = shift_witness(8, frag.points);
  w.pi[2] = 7;
  w.pi[4] = 2;
  const auto r = check_lef_action_witness(frag, w);
  EXPECT_FALSE(verdicts(r)["equivariance"]);
}

TEST(LefWitness, GraphAdjacency) {
  auto frag = shift_fragment(0, 3);
  frag.graph = Graph::line(0, 3);
  auto w = shift_witness(8, frag.points);
  w.y_graph = Graph(range(0, 7), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
  EXPECT_TRUE(check_lef_action_witness(frag, w).pass);
  w.y_graph = Graph(range(0, 7), {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(verdicts(check_lef_action_witness(frag, w))["adjacency"]);
}

TEST(OrbitApprox, FromShiftWitness) {
  const auto frag = shift_fragment(0, 4);
  const auto orbit = lef_to_orbit_approx(frag, shift_witness(8, frag.points));
  EXPECT_EQ(orbit.a_size(), 8u);
  EXPECT_EQ(orbit.s.size(), 8u);
  EXPECT_EQ(orbit.details["variant"], "subgroup-regular");
  const auto r = check_orbit_approximation<IntegerGroup>(orbit, Rational(1, 100), frag.act);
  EXPECT_TRUE(r.pass) << format_text(r);
  EXPECT_EQ(measure_defects(orbit.phi).eps_max, 0);

  auto broken = orbit;
  broken.pi[3][1] = broken.pi[3][0];
  EXPECT_FALSE(verdicts(check_orbit_approximation<IntegerGroup>(broken, Rational(1, 100), frag.act))["injective"]);
}

TEST(OrbitApprox, TrivialAndTwoPoint) {
  const CyclicGroup triv{1};
  ActionFragment<CyclicGroup> frag0{triv, FiniteSubset<CyclicGroup>({0}), {0}, [](long, long x) { return x; }, std::nullopt};
  LEFActionWitness<CyclicGroup, CyclicGroup> w0{triv, {0}, [](long, long y) { return y; }, [](long g) { return g; }, {{0, 0}}, std::nullopt};
  const auto o0 = lef_to_orbit_approx(frag0, w0);
  EXPECT_EQ(o0.a_size(), 1u);
  EXPECT_TRUE(check_orbit_approximation<CyclicGroup>(o0, Rational(1, 2), frag0.act).pass);

  const CyclicGroup z2{2};
  ActionFragment<CyclicGroup> frag{z2, FiniteSubset<CyclicGroup>({0, 1}), {0, 1}, [](long g, long x) { return (g + x) % 2; }, std::nullopt};
  LEFActionWitness<CyclicGroup, CyclicGroup> w{z2, {0, 1}, [](long q, long y) { return (q + y) % 2; }, [](long g) { return g; },
                                               {{0, 0}, {1, 1}}, std::nullopt};
  const auto o = lef_to_orbit_approx(frag, w);
  EXPECT_EQ(o.a_size(), 2u);
  EXPECT_TRUE(check_orbit_approximation<CyclicGroup>(o, Rational(1, 2), frag.act).pass);
}

TEST(RefineSupport, SpecExamples) {
  const IntegerGroup z;
  auto cyclic = [](long g) { return Permutation::cyclic_shift(10, g); };
  const ApproximationMap<IntegerGroup, SymmetricGroup> plus(z, SymmetricGroup{10}, FiniteSubset<IntegerGroup>({1}), cyclic);
  std::vector<std::uint32_t> s{0, 1, 2, 3, 4, 5, 6, 7, 8};
  const auto s0 = refine_support(plus, s, Rational(1, 4));
  ASSERT_EQ(Permutation::cyclic_shift(10, 1)(0), 1u);
  EXPECT_EQ(s0, (std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 7}));

  const ApproximationMap<IntegerGroup, SymmetricGroup> both(z, SymmetricGroup{10}, FiniteSubset<IntegerGroup>({-1, 1}), cyclic);
  EXPECT_EQ(refine_support(both, s, Rational(1, 2)), (std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_THROW(refine_support(both, s, Rational(1, 4)), PreconditionError);

  std::vector<std::uint32_t> all(10);
  std::iota(all.begin(), all.end(), 0u);
  EXPECT_EQ(refine_support(both, all, Rational(1, 10)), all);
}

TEST(RefineSupport, RandomizedPostconditions) {
  SplitMix64 rng(500);
  const CyclicGroup labels{1000};
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t a = 2 + rng.below(63);
    const std::size_t nf = 1 + rng.below(3);
    std::vector<long> names;
    for (std::size_t i = 0; i < nf; ++i) names.push_back(static_cast<long>(i + 1));
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < nf; ++i) {
      std::vector<std::uint32_t> img(a);
      std::iota(img.begin(), img.end(), 0u);
      for (std::size_t k = a; k > 1; --k) std::swap(img[k - 1], img[rng.below(k)]);
      perms.push_back(Permutation::from_images(img));
    }
    const ApproximationMap<CyclicGroup, SymmetricGroup> phi(labels, SymmetricGroup{a}, FiniteSubset<CyclicGroup>(names),
                                                            [&](long g) { return perms[static_cast<std::size_t>(g - 1)]; });
    const Rational eps(BigInt(1 + rng.below(9)), BigInt(10));
    // Smallest |S| meeting the precondition, then a random S of that size or larger.
    const Rational bound = (1 - eps / Rational(BigInt(nf + 1))) * Rational(BigInt(a));
    std::size_t need = static_cast<std::size_t>(boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound)) + 1;
    need = std::min(a, need + rng.below(a - need + 1));
    std::vector<std::uint32_t> order(a);
    std::iota(order.begin(), order.end(), 0u);
    for (std::size_t k = a; k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);
    std::vector<std::uint32_t> s(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(need));
    std::sort(s.begin(), s.end());
    ASSERT_GT(Rational(BigInt(s.size())), bound);

    const auto s0 = refine_support(phi, s, eps);
    ASSERT_GT(Rational(BigInt(s0.size())), (1 - eps) * Rational(BigInt(a)));
    for (auto x : s0)
      for (const auto& p : perms) ASSERT_TRUE(std::binary_search(s.begin(), s.end(), p(x)));
  }
}

TEST(Folner, LamplighterShift) {
  const LatticeGroup z1{1};
  const auto halo = Halo::direct_sum(2);
  const FiniteSubset<LatticeGroup> f({{-1}, {1}});
  const FiniteSubset<Halo> e({halo.identity(), halo.unit(0), halo.unit(1), halo.multiply(halo.unit(0), halo.unit(1))});
  const auto beta = [halo](const std::vector<long>& g, const HaloElement& h) {
    return halo.relabel(h, [&](long x) { return x + g[0]; });
  };
  const auto data = folner_automorphic_approx<Halo, Halo>(z1, f, e, Rational(1, 4), beta, halo, [](const HaloElement& h) { return h; });
  EXPECT_EQ(data.details["N"], 8);
  EXPECT_EQ(data.a_size(), 17u);
  EXPECT_EQ(data.s.size(), 15u);
  const auto r = check_automorphic_approximation<LatticeGroup, Halo, Halo>(data, Rational(1, 4), halo, beta);
  EXPECT_TRUE(r.pass) << format_text(r);
}

TEST(Folner, TwoDimensionsAndTrivialDelta) {
  const LatticeGroup z2{2};
  const CyclicGroup triv{1};
  const FiniteSubset<LatticeGroup> f({{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  const auto data = folner_automorphic_approx<CyclicGroup, CyclicGroup>(
      z2, f, FiniteSubset<CyclicGroup>({0}), Rational(1, 2), [](const std::vector<long>&, long h) { return h; }, triv,
      [](long h) { return h; });
  const auto r = check_automorphic_approximation<LatticeGroup, CyclicGroup, CyclicGroup>(
      data, Rational(1, 2), triv, [](const std::vector<long>&, long h) { return h; });
  EXPECT_TRUE(r.pass) << format_text(r);
  EXPECT_LT(measure_defects(data.phi).eps_max, Rational(1, 2));
}

TEST(Automorphic, BrokenPartialHomomorphism) {
  const LatticeGroup z1{1};
  const auto halo = Halo::direct_sum(2);
  const FiniteSubset<LatticeGroup> f({{-1}, {1}});
  const FiniteSubset<Halo> e({halo.identity(), halo.unit(0), halo.unit(1), halo.multiply(halo.unit(0), halo.unit(1))});
  const auto beta = [halo](const std::vector<long>& g, const HaloElement& h) {
    return halo.relabel(h, [&](long x) { return x + g[0]; });
  };
  auto data = folner_automorphic_approx<Halo, Halo>(z1, f, e, Rational(1, 4), beta, halo, [](const HaloElement& h) { return h; });
  const auto s = data.s.front();
  data.pi[s][e.index_of(halo.multiply(halo.unit(0), halo.unit(1)))] = halo.unit(5);
  const auto r = check_automorphic_approximation<LatticeGroup, Halo, Halo>(data, Rational(1, 4), halo, beta);
  EXPECT_FALSE(verdicts(r)["pi_partial_homomorphism"]);
}

TEST(Lift, SymAndDirectSumOverShift) {
  const auto frag = shift_fragment(0, 3);
  const auto orbit = lef_to_orbit_approx(frag, shift_witness(8, frag.points));
  for (const auto& halo : {Halo::sym(), Halo::direct_sum(2)}) {
    const auto ly = halo.elements_on(frag.points);
    const FiniteSubset<Halo> e(ly);
    const auto lifted = lift_orbit_to_automorphic(halo, orbit, e, halo);
    const auto beta = halo_action<IntegerGroup>(halo, frag.act);
    const auto r = check_automorphic_approximation<IntegerGroup, Halo, Halo>(lifted, Rational(1, 100), halo, beta);
    EXPECT_TRUE(r.pass) << format_text(r);
    EXPECT_EQ(lifted.s, orbit.s);
    EXPECT_EQ(lifted.phi.images(), orbit.phi.images());
    for (auto s : lifted.s)
      for (const auto& h : e) ASSERT_TRUE(halo.contains(lifted.pi_at(s, h), range(0, 7)));
  }
  EXPECT_THROW(lift_orbit_to_automorphic(Halo::sym(), orbit, FiniteSubset<Halo>({Halo::sym().transposition(0, 9)}), Halo::sym()),
               PreconditionError);
}

TEST(Lift, ThroughHaloGivesClefWitness) {
  const auto frag = shift_fragment(0, 4);
  const auto w = shift_witness(8, frag.points);
  for (const auto& halo : {Halo::sym(), Halo::direct_sum(2)}) {
    const auto clef = lef_lift_through_halo(halo, w);
    EXPECT_EQ(clef.k.points.size(), 8u);
    const FiniteSubset<Halo> e(halo.elements_on(range(0, 3)));
    const auto r = check_clef_witness(frag, halo, clef, e, 200, 3);
    EXPECT_TRUE(r.pass) << format_text(r);
  }
  EXPECT_EQ(lef_lift_through_halo(Halo::direct_sum(2), w).k.elements().size(), 256u);
}
