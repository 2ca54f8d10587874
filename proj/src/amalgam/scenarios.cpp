#include "sofic/amalgam/scenarios.hpp"

#include "sofic/amalgam/amalgam.hpp"
#include "sofic/amalgam/lef_embed.hpp"
#include "sofic/compat/family.hpp"

#include <set>

namespace sofic {

std::pair<long, long> injectivity_window(long window, long n) { return {std::max(-window, window - n + 1), window}; }

namespace {

Halo make_halo(HaloKind kind, long modulus) {
  switch (kind) {
    case HaloKind::Sym: return Halo::sym();
    case HaloKind::Alt: return Halo::alt();
    case HaloKind::DirectSum: return Halo::direct_sum(modulus);
    case HaloKind::GLf: return Halo::glf(modulus);
    case HaloKind::GraphProduct: break;
  }
  throw PreconditionError("shift amalgamation: graph-product halos need a graph, not Z");
}

HaloElement base_generator(const Halo& halo) {
  switch (halo.kind()) {
    case HaloKind::Sym: return halo.transposition(0, 1);
    case HaloKind::Alt: return halo.cycle({0, 1, 2});
    case HaloKind::DirectSum: return halo.unit(0);
    case HaloKind::GLf: return halo.transvection(0, 1, 1);
    case HaloKind::GraphProduct: break;
  }
  throw PreconditionError("shift amalgamation: unsupported halo");
}

std::vector<long> support_of(const Halo& halo, const FiniteSubset<Halo>& xs) {
  std::set<long> pts;
  for (const auto& h : xs) {
    const auto s = halo.support(h);
    pts.insert(s.begin(), s.end());
  }
  return {pts.begin(), pts.end()};
}

using ShiftProduct = SemidirectProduct<Halo, CyclicGroup>;

// Everything up to and including the orbit approximation.
struct ShiftSetup {
  Halo halo;
  ShiftProduct sd;
  FiniteSubset<ShiftProduct> f;
  FactorSets<Halo, CyclicGroup> sets;
  std::function<long(const long&, long)> alpha;
  std::vector<long> y;
  std::vector<long> window_points;
  std::optional<OrbitApproximation<CyclicGroup>> orbit;
};

ShiftSetup build_shift_setup(const ShiftAmalgamationConfig& cfg, ScenarioOutcome& out) {
  const bool trivial = cfg.gamma_order > 0;
  if (!trivial && cfg.n < 2) throw PreconditionError("shift amalgamation: n must be at least 2");
  const Halo halo = make_halo(cfg.halo, cfg.modulus);
  if (trivial && halo.kind() != HaloKind::DirectSum) throw PreconditionError("shift amalgamation: trivial action needs a direct sum halo");
  const CyclicGroup gamma{cfg.gamma_order};
  const std::function<long(const long&, long)> alpha = [trivial](const long& g, long x) { return trivial ? x : x + g; };
  const ShiftProduct sd{halo, gamma, halo_action<CyclicGroup>(halo, alpha)};
  auto f = ball(sd, {sd.from_base(base_generator(halo)), sd.from_top(1)}, cfg.radius);
  auto sets = derive_factor_sets(sd, f);
  const auto points = support_of(halo, sets.e);
  const auto f1_points = support_of(halo, sets.f1);
  out.summary["halo"] = halo.name();
  out.summary["F"] = f.size();
  out.summary["E_points"] = points;

  // Finite model of the action: Z/n translating itself, or the trivial action on {0}.
  const long n = trivial ? 1 : cfg.n;
  std::vector<long> y;
  for (long i = 0; i < n; ++i) y.push_back(i);
  const CyclicGroup q{trivial ? cfg.gamma_order : cfg.n};
  std::map<long, long> pi;
  for (long x : points) pi[x] = trivial ? 0 : CyclicGroup{n}.reduce(x);
  LEFActionWitness<CyclicGroup, CyclicGroup> witness{
      q, y, [n, trivial](const long& g, long p) { return trivial ? p : CyclicGroup{n}.reduce(p + g); },
      [q](const long& g) { return q.reduce(g); }, pi, std::nullopt};

  std::vector<long> window_points = f1_points;
  if (!trivial) {
    const auto [lo, hi] = injectivity_window(cfg.window, cfg.n);
    window_points.clear();
    for (long x = lo; x <= hi; ++x) window_points.push_back(x);
    out.summary["window"] = {lo, hi};
    CheckReport fits("window_covers_F1");
    for (long x : f1_points)
      if (x < lo || x > hi) fits.fail({{"x", x}});
    out.report.absorb(std::move(fits));
  }
  ActionFragment<CyclicGroup> window_frag{gamma, sets.f2, window_points, alpha, std::nullopt};
  auto window_witness = witness;
  window_witness.pi.clear();
  for (long x : window_points) window_witness.pi[x] = trivial ? 0 : CyclicGroup{n}.reduce(x);
  out.report.absorb(check_lef_action_witness(window_frag, window_witness));

  ShiftSetup setup{halo, sd, std::move(f), std::move(sets), alpha, y, window_points, std::nullopt};
  if (!out.report.pass) return setup;
  const ActionFragment<CyclicGroup> frag{gamma, setup.sets.f2, points, alpha, std::nullopt};
  setup.orbit = lef_to_orbit_approx(frag, witness);
  return setup;
}

}  // namespace

ScenarioOutcome run_shift_amalgamation(const ShiftAmalgamationConfig& cfg) {
  ScenarioOutcome out{CheckReport("shift_amalgamation"), Json::object(), std::nullopt};
  const auto setup = build_shift_setup(cfg, out);
  if (!setup.orbit) return out;
  const auto& [halo, sd, f, sets, alpha, y, window_points, orbit] = setup;
  const bool trivial = cfg.gamma_order > 0;
  const SoficFamily fam{cfg.layout};
  const auto budget = solve_budget(fam, cfg.eps);
  out.report.absorb(check_orbit_approximation(*orbit, budget.eps1, alpha, window_points));

  const auto automorphic = lift_orbit_to_automorphic(halo, *orbit, sets.e, halo);
  const HaloGroup lambda{halo, y, cfg.cap};
  std::vector<HaloElement> f3;
  for (auto s : automorphic.s)
    for (const auto& h : sets.e) f3.push_back(automorphic.pi_at(s, h));
  const auto regular = regular_representation(lambda, FiniteSubset<HaloGroup>(std::move(f3)), cfg.cap);
  const std::size_t lambda_order = regular.codomain().n;
  auto sigma_e = regular.transform<StructuredSymmetricGroup>(StructuredSymmetricGroup{StructuredPerm::identity(lambda_order)},
                                                             [](const Permutation& p) { return StructuredPerm::from(p); });

  const long top_n = trivial ? cfg.gamma_order : cfg.n;
  ApproximationMap<CyclicGroup, StructuredSymmetricGroup> theta(
      sd.top, StructuredSymmetricGroup{StructuredPerm::identity(top_n)}, sets.f2,
      [top_n](const long& g) { return StructuredPerm::from(Permutation::cyclic_shift(static_cast<std::size_t>(top_n), g)); });

  AmalgamationInput<SoficFamily, Halo, CyclicGroup, Halo, HaloGroup> input{
      fam, sd, f, cfg.eps, automorphic, std::move(sigma_e), std::move(theta), sets.f1, cfg.twist};
  auto result = amalgamate(input);
  out.report.absorb(std::move(result.report));
  out.summary.update(result.summary);
  out.summary["lambda_order"] = lambda_order;
  if (result.psi) out.summary["carrier"] = result.psi->codomain().id.carrier().str();
  if (result.psi && cfg.export_images) {
    ImageTable table;
    for (const auto& g : f) {
      table.elements.push_back(Json(g));
      table.images.push_back((*result.psi)(g).materialize(cfg.cap).images());
    }
    out.images = std::move(table);
  }
  return out;
}

ScenarioOutcome check_shift_lift_consistency(const ShiftAmalgamationConfig& cfg) {
  ScenarioOutcome out{CheckReport("lift_consistency"), Json::object(), std::nullopt};
  const auto setup = build_shift_setup(cfg, out);
  if (!setup.orbit) return out;
  const auto& orbit = *setup.orbit;
  const auto lifted = lift_orbit_to_automorphic(setup.halo, orbit, setup.sets.e, setup.halo);
  CheckReport same("preserves_A_S_eps");
  if (lifted.a_size() != orbit.a_size()) same.fail({{"clause", "A"}, {"orbit", orbit.a_size()}, {"lifted", lifted.a_size()}});
  if (lifted.s != orbit.s) same.fail({{"clause", "S"}});
  if (lifted.phi.images() != orbit.phi.images()) same.fail({{"clause", "phi"}});
  const auto before = measure_defects(orbit.phi).eps_max;
  const auto after = measure_defects(lifted.phi).eps_max;
  if (before != after) same.fail({{"clause", "eps"}, {"orbit", rational_to_json(before)}, {"lifted", rational_to_json(after)}});
  same.defect = rational_to_json(after);
  same.details["A"] = lifted.a_size();
  same.details["S"] = lifted.s.size();
  out.report.absorb(std::move(same));
  return out;
}

ScenarioOutcome run_symmetric_enrichment_embedding(long n, int radius, bool collapse) {
  ScenarioOutcome out{CheckReport("symmetric_enrichment_embedding"), Json::object(), std::nullopt};
  const Halo sym = Halo::sym();
  const CyclicGroup z{0};
  const std::function<long(const long&, long)> shift = [](const long& g, long x) { return x + g; };
  const SemidirectProduct<Halo, CyclicGroup> sd{sym, z, halo_action<CyclicGroup>(sym, shift)};
  const auto f = ball(sd, {sd.from_base(sym.transposition(0, 1)), sd.from_top(1)}, radius);

  std::vector<long> y;
  for (long i = 0; i < n; ++i) y.push_back(i);
  const long m = collapse ? 1 : n;
  const CyclicGroup q{m}, p{m};
  const CyclicGroup mod_n{n};
  const HaloGroup k{sym, y};
  auto emb = lef_semidirect_embed<Halo, CyclicGroup, HaloGroup, CyclicGroup, CyclicGroup>(
      sd, f, k, q,
      [sym, mod_n](const long& a, const HaloElement& h) { return sym.relabel(h, [&](long x) { return mod_n.reduce(x + a); }); },
      [q](const long& g) { return q.reduce(g); },
      [sym, mod_n](const HaloElement& h) { return sym.relabel(h, [&](long x) { return mod_n.reduce(x); }); }, p,
      [p](const long& g) { return p.reduce(g); });
  out.report.absorb(std::move(emb.report));
  out.summary["F"] = f.size();
  out.summary["target"] = "(Sym(" + std::to_string(n) + ") x| Z/" + std::to_string(m) + ") x Z/" + std::to_string(m);
  return out;
}

ScenarioOutcome run_graph_product_embedding(long vertices, int radius, long q, long range) {
  ScenarioOutcome out{CheckReport("graph_product_embedding"), Json::object(), std::nullopt};
  const Graph g = Graph::path(vertices);
  const GraphProductGroup source(g, 0), target(g, q);
  std::vector<GraphWord> gens;
  for (long v = 0; v < vertices; ++v) gens.push_back(source.generator(v));
  const auto f = ball(source, gens, radius);
  auto emb = graphproduct_lef_embed(source, f, target, [range](long, long value) -> std::optional<long> {
    if (value < -range || value > range) return std::nullopt;
    return value;
  });
  out.report.absorb(std::move(emb.report));
  out.summary["F"] = f.size();
  Json domains = Json::object();
  for (const auto& [v, d] : emb.local_domain) domains[g.name(v)] = {d.front(), d.back()};
  out.summary["local_domains"] = domains;
  return out;
}

}  // namespace sofic
