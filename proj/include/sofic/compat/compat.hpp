#pragma once

#include "sofic/approx/approximation.hpp"
#include "sofic/compat/family.hpp"
#include "sofic/core/random.hpp"
#include "sofic/core/report.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace sofic {

namespace detail {

template <class D>
D from_rational(const Rational& r) {
  if constexpr (std::is_same_v<D, double>) {
    return to_double(r);
  } else {
    return r;
  }
}

template <class D>
bool within(const D& dist, double tolerance) {
  if constexpr (std::is_same_v<D, double>) {
    return dist <= tolerance;
  } else {
    return dist == 0;
  }
}

inline Permutation random_permutation(std::size_t n, SplitMix64& rng) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
  return Permutation::from_images(std::move(img));
}

}  // namespace detail

/// Product-map clauses over all pairs from `left` x `right`, reduced to
/// distances from the identity: (b) d(Delta(g,h), e) >= mu max(d(g,e), d(h,e))
/// and (a) d(Delta(g,h), e) <= continuity(max(...)). The homomorphism
/// property is checked on every pair of pairs when there are at most
/// `exhaustive_limit` of them, otherwise on `samples` seeded ones.
template <class Family>
CheckReport check_product_compatibility(const Family& fam, const typename Family::Group& gi, const typename Family::Group& gj,
                                        const std::vector<typename Family::Element>& left,
                                        const std::vector<typename Family::Element>& right, std::uint64_t seed = 0,
                                        std::size_t exhaustive_limit = 40000, std::size_t samples = 2000,
                                        double tolerance = 1e-9) {
  using D = typename Family::Distance;
  CheckReport report("product_compatibility:" + Family::name());
  const auto target = fam.product_group(gi, gj);
  const auto e = fam.product(gi.identity(), gj.identity());

  CheckReport lower("lower_bound_b");
  CheckReport upper("continuity_a");
  std::optional<D> worst_ratio_gap;
  for (std::size_t i = 0; i < left.size(); ++i) {
    const D x = gi.distance(left[i], gi.identity());
    for (std::size_t j = 0; j < right.size(); ++j) {
      const D y = gj.distance(right[j], gj.identity());
      const D z = target.distance(fam.product(left[i], right[j]), e);
      const D m = std::max(x, y);
      const D need = fam.mu() * m;
      bool low_ok;
      if constexpr (std::is_same_v<D, double>) {
        low_ok = z >= need - tolerance;
      } else {
        low_ok = z >= need;
      }
      if (!low_ok) lower.fail({{"i", i}, {"j", j}, {"distance", distance_json(z)}, {"required", distance_json(need)}});
      const D gap = z - need;
      if (!worst_ratio_gap || gap < *worst_ratio_gap) {
        worst_ratio_gap = gap;
        lower.worst_witness = {{"i", i}, {"j", j}};
      }
      bool up_ok;
      if constexpr (std::is_same_v<D, double>) {
        up_ok = z <= fam.product_continuity(m) + tolerance;
      } else {
        up_ok = z <= fam.product_continuity(m);
      }
      if (!up_ok) upper.fail({{"i", i}, {"j", j}, {"distance", distance_json(z)}, {"input", distance_json(m)}});
    }
  }
  if (worst_ratio_gap) lower.defect = distance_json(*worst_ratio_gap);
  lower.details["mu"] = distance_json(fam.mu());

  CheckReport hom("homomorphism");
  const std::size_t n_pairs = left.size() * right.size();
  auto check_pair = [&](std::size_t a, std::size_t b) {
    const auto& g1 = left[a / right.size()];
    const auto& h1 = right[a % right.size()];
    const auto& g2 = left[b / right.size()];
    const auto& h2 = right[b % right.size()];
    const auto lhs = fam.product(gi.multiply(g1, g2), gj.multiply(h1, h2));
    const auto rhs = target.multiply(fam.product(g1, h1), fam.product(g2, h2));
    if (!detail::within(target.distance(lhs, rhs), tolerance)) hom.fail({{"pair_a", a}, {"pair_b", b}});
  };
  if (n_pairs * n_pairs <= exhaustive_limit) {
    hom.details["mode"] = "exhaustive";
    for (std::size_t a = 0; a < n_pairs; ++a)
      for (std::size_t b = 0; b < n_pairs; ++b) check_pair(a, b);
  } else {
    hom.details["mode"] = "sampled";
    hom.details["seed"] = seed;
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) check_pair(rng.below(n_pairs), rng.below(n_pairs));
  }

  report.details["pairs"] = n_pairs;
  report.absorb(std::move(lower));
  report.absorb(std::move(upper));
  report.absorb(std::move(hom));
  return report;
}

/// Wreath-map clauses on `cases` seeded instances with n coordinates:
/// (c) psi(s) tau(g) psi(s)^-1 = tau((g_{s^-1(x)})_x); tau and psi multiplicative;
/// (a) continuity and separation with planted agreement sets; (b) for psi.
template <class Family>
CheckReport check_wreath_compatibility(const Family& fam, const typename Family::Group& inner, std::size_t n,
                                       const std::function<typename Family::Element(SplitMix64&)>& random_inner,
                                       std::size_t cases, std::uint64_t seed, double tolerance = 1e-9) {
  using D = typename Family::Distance;
  using E = typename Family::Element;
  CheckReport report("wreath_compatibility:" + Family::name());
  report.details["n"] = n;
  report.details["cases"] = cases;
  report.details["seed"] = seed;
  const auto outer = fam.wreath_group(inner, n);
  SplitMix64 rng(seed);

  CheckReport conj("conjugation_c"), base_hom("base_homomorphism"), act_hom("acting_homomorphism");
  CheckReport cont("continuity_a"), sep("separation_a"), act("acting_b");
  std::optional<D> conj_worst;

  auto leq = [&](const D& a, const D& b) {
    if constexpr (std::is_same_v<D, double>) {
      return a <= b + tolerance;
    } else {
      return a <= b;
    }
  };

  for (std::size_t k = 0; k < cases; ++k) {
    std::vector<E> g, h;
    for (std::size_t x = 0; x < n; ++x) {
      g.push_back(random_inner(rng));
      h.push_back(random_inner(rng));
    }
    const Permutation s1 = detail::random_permutation(n, rng);
    const Permutation s2 = detail::random_permutation(n, rng);

    std::vector<E> moved;
    const Permutation s1inv = s1.inverse();
    for (std::size_t x = 0; x < n; ++x) moved.push_back(g[s1inv(static_cast<std::uint32_t>(x))]);
    const E lhs = outer.multiply(outer.multiply(fam.acting(inner, s1), fam.base(g)), outer.inverse(fam.acting(inner, s1)));
    const D dc = outer.distance(lhs, fam.base(moved));
    if (!conj_worst || dc > *conj_worst) conj_worst = dc;
    if (!detail::within(dc, tolerance)) conj.fail({{"case", k}, {"defect", distance_json(dc)}});

    std::vector<E> gh;
    for (std::size_t x = 0; x < n; ++x) gh.push_back(inner.multiply(g[x], h[x]));
    if (!detail::within(outer.distance(fam.base(gh), outer.multiply(fam.base(g), fam.base(h))), tolerance)) {
      base_hom.fail({{"case", k}});
    }
    if (!detail::within(outer.distance(fam.acting(inner, s1 * s2), outer.multiply(fam.acting(inner, s1), fam.acting(inner, s2))),
                        tolerance)) {
      act_hom.fail({{"case", k}});
    }

    // Planted agreement set X of size at least one.
    const std::size_t size_x = 1 + rng.below(n);
    const Permutation order = detail::random_permutation(n, rng);
    std::vector<bool> in_x(n, false);
    for (std::size_t i = 0; i < size_x; ++i) in_x[order(static_cast<std::uint32_t>(i))] = true;
    const D outside = detail::from_rational<D>(Rational(BigInt(n - size_x), BigInt(n)));

    std::vector<E> near = h;
    D t = outside;
    for (std::size_t x = 0; x < n; ++x) {
      if (!in_x[x]) continue;
      near[x] = rng.below(2) == 0 ? g[x] : h[x];
      t = std::max(t, inner.distance(g[x], near[x]));
    }
    const D z = outer.distance(fam.base(g), fam.base(near));
    if (!leq(z, fam.wreath_continuity(t))) {
      cont.fail({{"case", k}, {"agreement", size_x}, {"input", distance_json(t)}, {"distance", distance_json(z)}});
    }

    std::optional<D> m;
    for (std::size_t x = 0; x < n; ++x) {
      if (in_x[x]) {
        const D dx = inner.distance(g[x], h[x]);
        if (!m || dx < *m) m = dx;
      }
    }
    if (m && *m > D{}) {
      const D zs = outer.distance(fam.base(g), fam.base(h));
      const D bound = (detail::from_rational<D>(Rational(1)) - fam.wreath_continuity(outside)) * *m;
      bool ok;
      if constexpr (std::is_same_v<D, double>) {
        ok = zs >= bound - tolerance;
      } else {
        ok = zs >= bound;
      }
      if (!ok) sep.fail({{"case", k}, {"agreement", size_x}, {"distance", distance_json(zs)}, {"required", distance_json(bound)}});
    }

    const D ts = detail::from_rational<D>(hamming_distance(s1, s2));
    const D zp = outer.distance(fam.acting(inner, s1), fam.acting(inner, s2));
    if (!leq(zp, fam.wreath_continuity(ts))) {
      act.fail({{"case", k}, {"hamming", distance_json(ts)}, {"distance", distance_json(zp)}});
    }
  }
  if (conj_worst) conj.defect = distance_json(*conj_worst);
  report.absorb(std::move(conj));
  report.absorb(std::move(base_hom));
  report.absorb(std::move(act_hom));
  report.absorb(std::move(cont));
  report.absorb(std::move(sep));
  report.absorb(std::move(act));
  return report;
}

/// Delta composed with phi_i x phi_j on their common domain.
template <class Family, CanonicalGroup Dom>
ApproximationMap<Dom, typename Family::Group> transfer_multiplicativity(const Family& fam,
                                                                       const ApproximationMap<Dom, typename Family::Group>& phi_i,
                                                                       const ApproximationMap<Dom, typename Family::Group>& phi_j) {
  if (phi_i.domain().elements() != phi_j.domain().elements()) {
    throw std::invalid_argument("transfer_multiplicativity: domains differ");
  }
  return ApproximationMap<Dom, typename Family::Group>(
      phi_i.ambient(), fam.product_group(phi_i.codomain(), phi_j.codomain()), phi_i.domain(),
      [&](const typename Dom::Element& x) { return fam.product(phi_i(x), phi_j(x)); });
}

}  // namespace sofic
