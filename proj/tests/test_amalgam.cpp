#include "sofic/amalgam/amalgam.hpp"
#include "sofic/amalgam/lef_embed.hpp"
#include "sofic/amalgam/scenarios.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sofic;

namespace {

const CheckReport& child(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.children)
    if (c.check == name) return c;
  for (const auto& c : r.children)
    if (!c.children.empty()) {
      try {
        return child(c, name);
      } catch (const std::out_of_range&) {
      }
    }
  throw std::out_of_range("no child " + name);
}

// (Z/2)^2 x| Z/2 with the top swapping coordinates.
SemidirectProduct<AbelianGroup, CyclicGroup> swap_product() {
  return {AbelianGroup{{2, 2}}, CyclicGroup{2}, [](const long& g, const std::vector<long>& k) {
            return g == 0 ? k : std::vector<long>{k[1], k[0]};
          }};
}

}  // namespace

TEST(FactorSets, LamplighterBall) {
  const Halo ds = Halo::direct_sum(2);
  const std::function<long(const long&, long)> shift = [](const long& g, long x) { return x + g; };
  const SemidirectProduct<Halo, CyclicGroup> sd{ds, CyclicGroup{0}, halo_action<CyclicGroup>(ds, shift)};
  const auto f = ball(sd, {sd.from_base(ds.unit(0)), sd.from_top(1)}, 2);
  const auto sets = derive_factor_sets(sd, f);
  EXPECT_EQ(sets.f2.elements(), (std::vector<long>{-2, -1, 0, 1, 2}));
  std::vector<HaloElement> f1{ds.identity()};
  for (long x = -3; x <= 3; ++x) f1.push_back(ds.unit(x));
  EXPECT_EQ(sets.f1.elements(), FiniteSubset<Halo>(f1).elements());
  EXPECT_EQ(sets.e.size(), 12u);
  for (const auto& h : sets.e) {
    const auto s = ds.support(h);
    for (long x : s) EXPECT_LE(std::abs(x), 5);
  }
}

TEST(SemidirectConditions, RegularRepresentationOfFiniteSemidirectProduct) {
  const auto sd = swap_product();
  std::vector<std::pair<std::vector<long>, long>> elems;
  for (const auto& k : sd.base.elements())
    for (long g = 0; g < 2; ++g) elems.push_back({k, g});
  std::sort(elems.begin(), elems.end());
  auto index = [&](const auto& x) { return static_cast<std::uint32_t>(std::find(elems.begin(), elems.end(), x) - elems.begin()); };
  std::function<Permutation(const std::pair<std::vector<long>, long>&)> sigma = [&](const auto& x) {
    std::vector<std::uint32_t> img;
    for (const auto& y : elems) img.push_back(index(sd.multiply(x, y)));
    return Permutation::from_images(img);
  };
  const FiniteSubset<AbelianGroup> f1(sd.base.elements());
  const FiniteSubset<CyclicGroup> f2({0, 1});
  const FiniteSubset<SemidirectProduct<AbelianGroup, CyclicGroup>> f(elems);
  const auto r = check_semidirect_conditions<AbelianGroup, CyclicGroup>(sd, SymmetricGroup{8}, sigma, f1, f2, Rational(1, 10), &f);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
  ASSERT_EQ(r.children.size(), 5u);
  for (const auto& c : r.children) EXPECT_EQ(c.defect, rational_to_json(0)) << c.check;

  // Dropping the top part keeps (i)-(iii) but breaks the twisted commutation.
  std::function<Permutation(const std::pair<std::vector<long>, long>&)> untwisted = [&](const auto& x) {
    return sigma({x.first, 0});
  };
  const auto bad = check_semidirect_conditions<AbelianGroup, CyclicGroup>(sd, SymmetricGroup{8}, untwisted, f1, f2, Rational(1, 10));
  EXPECT_FALSE(bad.pass);
  EXPECT_TRUE(child(bad, "i_base_multiplicative").pass);
  EXPECT_FALSE(child(bad, "iv_twisted_commutation").pass);
}

TEST(Budget, SoficAndHyperlinear) {
  const auto b = solve_budget(SoficFamily{}, Rational(1, 4));
  EXPECT_EQ(b.eps3, Rational(1, 8));
  EXPECT_EQ(b.eps2, Rational(1, 192));
  EXPECT_EQ(b.eps1, Rational(1, 192));
  const auto h = solve_budget(HyperlinearFamily{}, 0.25);
  EXPECT_DOUBLE_EQ(h.eps3, 0.125);
  EXPECT_DOUBLE_EQ(h.eps2, (0.125 / 6) * (0.125 / 6) / 10);
}

TEST(Amalgam, LamplighterShift) {
  ShiftAmalgamationConfig cfg;
  const auto out = run_shift_amalgamation(cfg);
  EXPECT_TRUE(out.report.pass) << out.report.to_json().dump(1);
  EXPECT_EQ(out.summary.at("A"), 8);
  EXPECT_EQ(out.summary.at("lambda_order"), 256);
  EXPECT_EQ(out.summary.at("carrier"), "16384");
  EXPECT_EQ(out.summary.at("unital"), true);
  EXPECT_EQ(rational_from_json(out.summary.at("defect")), 0);
  EXPECT_EQ(rational_from_json(out.summary.at("separation")), 1);
  EXPECT_EQ(rational_from_json(out.summary.at("c_target")), Rational(1, 2));
  EXPECT_TRUE(child(out.report, "conjugation_exactness").pass);
  EXPECT_TRUE(child(out.report, "product_transfer").pass);
}

TEST(Amalgam, ExactFiniteCase) {
  ShiftAmalgamationConfig cfg;
  cfg.gamma_order = 2;
  const auto out = run_shift_amalgamation(cfg);
  EXPECT_TRUE(out.report.pass) << out.report.to_json().dump(1);
  EXPECT_EQ(out.summary.at("F"), 4);
  EXPECT_EQ(out.summary.at("A"), 1);
  EXPECT_EQ(rational_from_json(out.summary.at("defect")), 0);
  EXPECT_GE(rational_from_json(out.summary.at("separation")), rational_from_json(out.summary.at("c_target")));
}

TEST(Amalgam, UntwistedPhiFailsCommutation) {
  ShiftAmalgamationConfig cfg;
  cfg.twist = false;
  const auto out = run_shift_amalgamation(cfg);
  EXPECT_FALSE(out.report.pass);
  EXPECT_FALSE(child(out.report, "iv_twisted_commutation").pass);
  EXPECT_TRUE(child(out.report, "i_base_multiplicative").pass);
}

TEST(Amalgam, WindowMustCoverF1) {
  ShiftAmalgamationConfig cfg;
  cfg.window = 2;
  const auto out = run_shift_amalgamation(cfg);
  EXPECT_FALSE(out.report.pass);
  EXPECT_FALSE(child(out.report, "window_covers_F1").pass);
}

TEST(Amalgam, InjectivityWindow) {
  EXPECT_EQ(injectivity_window(3, 8), (std::pair<long, long>{-3, 3}));
  EXPECT_EQ(injectivity_window(4, 8), (std::pair<long, long>{-3, 4}));
}

TEST(Amalgam, SmallQuotientBreaksSeparation) {
  // Z/2 cannot separate the translation by 2 from the identity.
  ShiftAmalgamationConfig cfg;
  cfg.n = 2;
  cfg.window = 0;
  cfg.radius = 1;
  const auto out = run_shift_amalgamation(cfg);
  EXPECT_FALSE(out.report.pass);
}

TEST(LefEmbed, SymmetricEnrichment) {
  const auto ok = run_symmetric_enrichment_embedding(8, 2, false);
  EXPECT_TRUE(ok.report.pass) << ok.report.to_json().dump(1);
  const auto bad = run_symmetric_enrichment_embedding(8, 2, true);
  EXPECT_FALSE(bad.report.pass);
  EXPECT_FALSE(child(bad.report, "injective").pass);
}

TEST(LefEmbed, GraphProductOnPath) {
  const auto out = run_graph_product_embedding(3, 2, 17, 8);
  EXPECT_TRUE(out.report.pass) << out.report.to_json().dump(1);
  for (const auto& [v, d] : out.summary.at("local_domains").items()) EXPECT_EQ(d, Json({-8, 8})) << v;
  EXPECT_THROW(run_graph_product_embedding(3, 2, 17, 4), PreconditionError);
}

TEST(LefEmbed, GraphProductIndependentOracle) {
  const Graph g = Graph::path(3);
  const GraphProductGroup src(g, 0), dst(g, 17);
  std::vector<GraphWord> gens;
  for (long v = 0; v < 3; ++v) gens.push_back(src.generator(v));
  const auto f = ball(src, gens, 2);
  const auto emb = graphproduct_lef_embed(src, f, dst, [](long, long x) { return std::optional<long>(x); });
  // Direct check: images of distinct elements differ after reduction in the target.
  std::set<GraphWord> images;
  for (const auto& w : f) images.insert(dst.canonical(emb.map(w)));
  EXPECT_EQ(images.size(), f.size());
  // A product whose middle syllables cancel: w = a b, w' = b^-1 c.
  const auto w = src.parse("0:1 1:1");
  const auto w2 = src.parse("1:-1 2:1");
  const auto ww = src.multiply(w, w2);
  ASSERT_TRUE(f.contains(w) && f.contains(w2) && f.contains(ww));
  EXPECT_EQ(dst.multiply(emb.map(w), emb.map(w2)), emb.map(ww));
  EXPECT_EQ(ww, src.canonical(src.parse("0:1 2:1")));
}

TEST(LefEmbed, CheckerFindsCollisions) {
  const CyclicGroup z{0}, z3{3};
  const FiniteSubset<CyclicGroup> f({-2, -1, 0, 1, 2});
  const auto r = check_injective_partial_hom<CyclicGroup, CyclicGroup>(z, z3, f, [&](const long& x) { return z3.reduce(x); });
  EXPECT_TRUE(r.children.at(0).pass);
  EXPECT_FALSE(r.children.at(1).pass);
  const auto s = check_injective_partial_hom<CyclicGroup, CyclicGroup>(z, CyclicGroup{0}, f, [](const long& x) { return x * x; });
  EXPECT_FALSE(s.children.at(0).pass);
}

TEST(Amalgam, LampshufflerShift) {
  ShiftAmalgamationConfig cfg;
  cfg.halo = HaloKind::Sym;
  cfg.window = 4;
  const auto out = run_shift_amalgamation(cfg);
  EXPECT_TRUE(out.report.pass) << out.report.to_json().dump(1);
  EXPECT_EQ(out.summary.at("lambda_order"), 40320);
  EXPECT_EQ(rational_from_json(out.summary.at("defect")), 0);
  EXPECT_EQ(rational_from_json(out.summary.at("separation")), 1);
}
