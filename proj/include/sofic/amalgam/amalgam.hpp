#pragma once

#include "sofic/actions/actions.hpp"
#include "sofic/approx/ambient.hpp"
#include "sofic/approx/approximation.hpp"
#include "sofic/compat/compat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace sofic {

/// F2 = {e} u tops of F and their inverses; F1 = beta(F2) applied to {e} u bases of F;
/// E = beta(F2) F1.
template <CanonicalGroup D, CanonicalGroup G>
struct FactorSets {
  FiniteSubset<D> f1;
  FiniteSubset<G> f2;
  FiniteSubset<D> e;
};

template <CanonicalGroup D, CanonicalGroup G>
FactorSets<D, G> derive_factor_sets(const SemidirectProduct<D, G>& sd, const FiniteSubset<SemidirectProduct<D, G>>& f) {
  std::vector<typename G::Element> tops{sd.top.identity()};
  for (const auto& x : f) {
    tops.push_back(x.second);
    tops.push_back(sd.top.inverse(x.second));
  }
  FiniteSubset<G> f2(std::move(tops));
  std::vector<typename D::Element> bases{sd.base.identity()};
  for (const auto& x : f)
    for (const auto& g : f2) bases.push_back(sd.act(g, x.first));
  FiniteSubset<D> f1(std::move(bases));
  std::vector<typename D::Element> e;
  for (const auto& g : f2)
    for (const auto& k : f1) e.push_back(sd.act(g, k));
  return {std::move(f1), f2, FiniteSubset<D>(std::move(e))};
}

/// The four local conditions at eps/6 on F1 and F2:
///   (i)   sigma(k1 k2, 1) ~ sigma(k1, 1) sigma(k2, 1)
///   (ii)  sigma(1, g1 g2) ~ sigma(1, g1) sigma(1, g2)
///   (iii) sigma(k, g) ~ sigma(k, 1) sigma(1, g)
///   (iv)  sigma(1, g) sigma(k, 1) ~ sigma(beta(g)k, 1) sigma(1, g)
/// plus, when `f` is given, direct (F, eps)-multiplicativity as a cross-check.
template <CanonicalGroup D, CanonicalGroup G, MetricGroup C>
CheckReport check_semidirect_conditions(const SemidirectProduct<D, G>& sd, const C& cod,
                                        const std::function<typename C::Element(const typename SemidirectProduct<D, G>::Element&)>& sigma,
                                        const FiniteSubset<D>& f1, const FiniteSubset<G>& f2, const typename C::Distance& eps,
                                        const FiniteSubset<SemidirectProduct<D, G>>* f = nullptr) {
  using Dist = typename C::Distance;
  using SDElement = typename SemidirectProduct<D, G>::Element;
  std::map<SDElement, typename C::Element> cache;
  auto s = [&](const SDElement& x) -> const typename C::Element& {
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, sigma(x)).first;
    return it->second;
  };
  const Dist bound = eps / 6;
  auto clause = [&](const char* name) {
    CheckReport r(name);
    r.details["bound"] = distance_json(bound);
    return r;
  };
  auto record = [&](CheckReport& r, std::optional<Dist>& worst, const Dist& d, Json witness) {
    if (!worst || d > *worst) {
      worst = d;
      r.worst_witness = witness;
    }
    if (!(d < bound)) r.fail(std::move(witness));
  };
  const auto ek = sd.base.identity();
  const auto eg = sd.top.identity();

  CheckReport c1 = clause("i_base_multiplicative");
  std::optional<Dist> w1;
  for (const auto& k1 : f1)
    for (const auto& k2 : f1) {
      const auto k = sd.base.multiply(k1, k2);
      if (!f1.contains(k)) continue;
      record(c1, w1, cod.distance(s({k, eg}), cod.multiply(s({k1, eg}), s({k2, eg}))), {{"k1", k1}, {"k2", k2}});
    }
  CheckReport c2 = clause("ii_top_multiplicative");
  std::optional<Dist> w2;
  for (const auto& g1 : f2)
    for (const auto& g2 : f2) {
      const auto g = sd.top.multiply(g1, g2);
      if (!f2.contains(g)) continue;
      record(c2, w2, cod.distance(s({ek, g}), cod.multiply(s({ek, g1}), s({ek, g2}))), {{"g1", g1}, {"g2", g2}});
    }
  CheckReport c3 = clause("iii_splitting");
  CheckReport c4 = clause("iv_twisted_commutation");
  std::optional<Dist> w3, w4;
  for (const auto& k : f1)
    for (const auto& g : f2) {
      record(c3, w3, cod.distance(s({k, g}), cod.multiply(s({k, eg}), s({ek, g}))), {{"k", k}, {"g", g}});
      const auto lhs = cod.multiply(s({ek, g}), s({k, eg}));
      const auto rhs = cod.multiply(s({sd.act(g, k), eg}), s({ek, g}));
      record(c4, w4, cod.distance(lhs, rhs), {{"k", k}, {"g", g}});
    }
  CheckReport report("semidirect_conditions");
  for (auto* c : {&c1, &c2, &c3, &c4}) {
    if (c->worst_witness.is_null()) c->defect = distance_json(Dist{});
  }
  if (w1) c1.defect = distance_json(*w1);
  if (w2) c2.defect = distance_json(*w2);
  if (w3) c3.defect = distance_json(*w3);
  if (w4) c4.defect = distance_json(*w4);
  report.absorb(std::move(c1));
  report.absorb(std::move(c2));
  report.absorb(std::move(c3));
  report.absorb(std::move(c4));
  if (f) {
    const bool conditions_hold = report.pass;
    CheckReport direct("direct_multiplicativity");
    direct.details["epsilon"] = distance_json(eps);
    std::optional<Dist> worst;
    for (const auto& x : *f)
      for (const auto& y : *f) {
        const auto xy = sd.multiply(x, y);
        if (!f->contains(xy)) continue;
        const auto d = cod.distance(s(xy), cod.multiply(s(x), s(y)));
        if (!worst || d > *worst) {
          worst = d;
          direct.worst_witness = {{"x", x}, {"y", y}};
        }
        // Only a contradiction when the four conditions held.
        if (conditions_hold && !(d < eps)) direct.fail({{"x", x}, {"y", y}, {"defect", distance_json(d)}});
      }
    direct.defect = distance_json(worst ? *worst : Dist{});
    report.absorb(std::move(direct));
  }
  return report;
}

/// Tolerances handed to the components so that the assembled map lands at eps.
template <class Dist>
struct AmalgamationBudget {
  Dist eps;   // target for Psi
  Dist eps3;  // Phi and theta
  Dist eps2;  // refinement of S
  Dist eps1;  // automorphic data and sigma_E

  Json to_json() const {
    return {{"eps", distance_json(eps)}, {"eps3", distance_json(eps3)}, {"eps2", distance_json(eps2)}, {"eps1", distance_json(eps1)}};
  }
};

template <class Family>
AmalgamationBudget<typename Family::Distance> solve_budget(const Family& fam, const typename Family::Distance& eps) {
  using Dist = typename Family::Distance;
  const Dist eps3 = fam.delta_product(eps);
  const Dist wr = fam.delta_wreath(eps3 / 6);
  const Dist eps2 = wr / 2;
  return {eps, eps3, eps2, std::min(eps2, wr)};
}

namespace detail {
inline Rational as_rational(const Rational& r) { return r; }
inline Rational as_rational(double x) { return Rational(x); }
}  // namespace detail

/// Inputs of the amalgamation. `automorphic` carries phi on F2 and pi_s on E;
/// `sigma_e` is defined on every pi_s(E); `theta` on F2. Elements of LS and L
/// coincide (LS is typically the finite group L(B)).
template <class Family, CanonicalGroup D, CanonicalGroup G, CanonicalGroup L, CanonicalGroup LS>
struct AmalgamationInput {
  Family family;
  SemidirectProduct<D, G> sd;
  FiniteSubset<SemidirectProduct<D, G>> f;
  typename Family::Distance eps;
  AutomorphicApproximation<G, D, L> automorphic;
  ApproximationMap<LS, typename Family::Group> sigma_e;
  ApproximationMap<G, typename Family::Group> theta;
  std::optional<FiniteSubset<D>> injective_on;  // where pi_s must be injective; F1 when unset
  bool twist = true;                            // false drops psi(phi(g)) from Phi
};

template <class Family, CanonicalGroup D, CanonicalGroup G>
struct AmalgamationResult {
  std::optional<ApproximationMap<SemidirectProduct<D, G>, typename Family::Group>> psi;
  CheckReport report{"amalgamation"};
  Json summary = Json::object();
};

/// Builds Phi(h, g) = tau(sigma^(h)) psi(phi(g)) with sigma^(h)_a = sigma_E(pi_a(h))
/// for a in S0 and e elsewhere, then Psi = Delta(Phi, theta o projection).
/// Psi passes when it is unital, (F, eps)-multiplicative and (F, c'')-separating
/// with c'' = mu min(c/2, c'), c and c' being the measured separations of
/// sigma_E and theta.
template <class Family, CanonicalGroup D, CanonicalGroup G, CanonicalGroup L, CanonicalGroup LS>
AmalgamationResult<Family, D, G> amalgamate(const AmalgamationInput<Family, D, G, L, LS>& in) {
  static_assert(std::is_same_v<typename L::Element, typename LS::Element>);
  using Dist = typename Family::Distance;
  using SD = SemidirectProduct<D, G>;
  using SDElement = typename SD::Element;
  using W = typename Family::Element;
  const auto& fam = in.family;
  const auto& sd = in.sd;
  AmalgamationResult<Family, D, G> out;
  auto& report = out.report;

  const auto sets = derive_factor_sets(sd, in.f);
  const auto budget = solve_budget(fam, in.eps);
  out.summary["F"] = in.f.size();
  out.summary["F1"] = sets.f1.size();
  out.summary["F2"] = sets.f2.size();
  out.summary["E"] = sets.e.size();
  out.summary["budget"] = budget.to_json();

  const auto& ad = in.automorphic;
  CheckReport coverage("component_coverage");
  for (const auto& h : sets.e)
    if (!ad.e.contains(h)) coverage.fail({{"clause", "E not covered by pi"}, {"h", h}});
  for (const auto& g : sets.f2) {
    if (!ad.phi.defined(g)) coverage.fail({{"clause", "phi undefined"}, {"g", g}});
    if (!in.theta.defined(g)) coverage.fail({{"clause", "theta undefined"}, {"g", g}});
  }
  const bool covered = coverage.pass;
  report.absorb(std::move(coverage));
  if (!covered) return out;

  const Rational eps1 = detail::as_rational(budget.eps1);
  report.absorb(check_automorphic_approximation(ad, eps1, sd.base, sd.act, in.injective_on ? in.injective_on : sets.f1));

  std::vector<std::uint32_t> s0;
  try {
    s0 = refine_support(ad.phi, ad.s, detail::as_rational(budget.eps2));
  } catch (const PreconditionError& err) {
    CheckReport r("refine_support");
    r.fail({{"error", err.what()}});
    report.absorb(std::move(r));
    return out;
  }
  const std::size_t na = ad.a_size();
  out.summary["A"] = na;
  out.summary["S"] = ad.s.size();
  out.summary["S0"] = s0.size();

  // sigma_E on its domain, and the separations c, c'.
  const auto sigma_defects = measure_defects(in.sigma_e);
  const auto theta_defects = measure_defects(in.theta);
  CheckReport sigma_check("sigma_E");
  sigma_check.details["eps_max"] = distance_json(sigma_defects.eps_max);
  if (!sigma_defects.unital) sigma_check.fail({{"clause", "unital"}});
  if (!(sigma_defects.eps_max < budget.eps1)) sigma_check.fail({{"clause", "multiplicative"}, {"witness", sigma_defects.worst_product}});
  CheckReport theta_check("theta");
  theta_check.details["eps_max"] = distance_json(theta_defects.eps_max);
  if (!theta_defects.unital) theta_check.fail({{"clause", "unital"}});
  if (!(theta_defects.eps_max < budget.eps3)) theta_check.fail({{"clause", "multiplicative"}, {"witness", theta_defects.worst_product}});
  const Dist one = 1;
  const Dist c = sigma_defects.c_min.value_or(one);
  const Dist c_prime = theta_defects.c_min.value_or(one);
  sigma_check.defect = distance_json(c);
  theta_check.defect = distance_json(c_prime);
  report.absorb(std::move(sigma_check));
  report.absorb(std::move(theta_check));

  const auto& inner = in.sigma_e.codomain();
  const auto inner_id = inner.identity();
  std::map<typename D::Element, std::vector<W>> sigma_hat_cache;
  auto sigma_hat = [&](const typename D::Element& h) -> const std::vector<W>& {
    auto it = sigma_hat_cache.find(h);
    if (it != sigma_hat_cache.end()) return it->second;
    std::vector<W> row(na, inner_id);
    for (auto a : s0) {
      const auto& ph = ad.pi_at(a, h);
      if (!in.sigma_e.defined(ph)) throw PreconditionError("amalgamate: pi_s(E) leaves the domain of sigma_E");
      row[a] = in.sigma_e(ph);
    }
    return sigma_hat_cache.emplace(h, std::move(row)).first->second;
  };

  CheckReport exact("conjugation_exactness");
  try {
    for (const auto& h : sets.f1)
      for (const auto& g : sets.f2) {
        const auto& p = ad.phi(g);
        const auto& lhs = sigma_hat(h);
        const auto& rhs = sigma_hat(sd.act(g, h));
        for (auto a : s0) {
          const auto b = p(a);
          if (!detail::in_sorted(s0, b)) continue;
          if (inner.distance(lhs[a], rhs[b]) != Dist{}) exact.fail({{"h", h}, {"g", g}, {"a", a}});
        }
      }
  } catch (const PreconditionError& err) {
    exact.fail({{"error", err.what()}});
    report.absorb(std::move(exact));
    return out;
  }
  report.absorb(std::move(exact));

  const auto wreath = fam.wreath_group(inner, na);
  auto phi_big = [&](const SDElement& x) {
    const auto base = fam.base(sigma_hat(x.first));
    if (!in.twist) return base;
    return wreath.multiply(base, fam.acting(inner, ad.phi(x.second)));
  };
  std::function<W(const SDElement&)> phi_fn = phi_big;
  report.absorb(check_semidirect_conditions<D, G>(sd, wreath, phi_fn, sets.f1, sets.f2, budget.eps3, &in.f));

  const auto product = fam.product_group(wreath, in.theta.codomain());
  ApproximationMap<SD, typename Family::Group> phi_map(sd, wreath, in.f, phi_big);
  ApproximationMap<SD, typename Family::Group> psi(sd, product, in.f,
                                                   [&](const SDElement& x) { return fam.product(phi_map(x), in.theta(x.second)); });
  const auto phi_defects = measure_defects(phi_map);
  Dist theta_on_f{};
  for (const auto& x : in.f)
    for (const auto& y : in.f) {
      const auto xy = sd.multiply(x, y);
      if (!in.f.contains(xy)) continue;
      const auto d = in.theta.codomain().distance(in.theta(xy.second), in.theta.codomain().multiply(in.theta(x.second), in.theta(y.second)));
      theta_on_f = std::max(theta_on_f, d);
    }
  const auto psi_defects = measure_defects(psi);

  CheckReport transfer("product_transfer");
  const Dist transfer_bound = fam.product_continuity(std::max(phi_defects.eps_max, theta_on_f));
  transfer.details["bound"] = distance_json(transfer_bound);
  transfer.defect = distance_json(psi_defects.eps_max);
  if (psi_defects.eps_max > transfer_bound) transfer.fail({{"witness", psi_defects.worst_product}});
  report.absorb(std::move(transfer));

  const Dist c_target = fam.mu() * std::min(Dist(c / 2), c_prime);
  CheckReport final_check("psi");
  final_check.details["eps"] = distance_json(in.eps);
  final_check.details["c_target"] = distance_json(c_target);
  if (!psi_defects.unital) final_check.fail({{"clause", "unital"}});
  if (!(psi_defects.eps_max < in.eps)) final_check.fail({{"clause", "multiplicative"}, {"witness", psi_defects.worst_product}});
  const Dist sep = psi_defects.c_min.value_or(one);
  if (sep < c_target) final_check.fail({{"clause", "separating"}, {"witness", psi_defects.worst_separation}});
  final_check.defect = distance_json(psi_defects.eps_max);
  final_check.worst_witness = psi_defects.worst_product;

  // Separation split by whether the top coordinate is trivial.
  std::optional<Dist> sep_top, sep_base;
  for (const auto& x : in.f) {
    if (x == sd.identity()) continue;
    const auto d = product.distance(psi(x), product.identity());
    auto& slot = x.second == sd.top.identity() ? sep_base : sep_top;
    if (!slot || d < *slot) slot = d;
  }
  final_check.details["separation_top_nontrivial"] = sep_top ? distance_json(*sep_top) : Json(nullptr);
  final_check.details["separation_top_trivial"] = sep_base ? distance_json(*sep_base) : Json(nullptr);
  report.absorb(std::move(final_check));

  out.summary["c"] = distance_json(c);
  out.summary["c_prime"] = distance_json(c_prime);
  out.summary["c_target"] = distance_json(c_target);
  out.summary["unital"] = psi_defects.unital;
  out.summary["defect"] = distance_json(psi_defects.eps_max);
  out.summary["separation"] = distance_json(sep);
  out.summary["phi_defect"] = distance_json(phi_defects.eps_max);
  out.summary["theta_defect_on_F"] = distance_json(theta_on_f);
  out.psi = std::move(psi);
  return out;
}

}  // namespace sofic
