#pragma once

#include "sofic/approx/ambient.hpp"
#include "sofic/approx/approximation.hpp"
#include "sofic/halo/halo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace sofic {

/// F of a group acting on X, together with a finite piece Z of X.
template <CanonicalGroup G>
struct ActionFragment {
  using Element = typename G::Element;
  G group;
  FiniteSubset<G> f;
  std::vector<long> points;  // Z, sorted
  std::function<long(const Element&, long)> act;
  std::optional<Graph> graph;  // set when X is a graph; Z is then induced

  bool in_points(long x) const { return std::binary_search(points.begin(), points.end(), x); }
};

/// Finite model of a fragment: Q acting on Y, rho: F -> Q, pi: Z -> Y.
template <FiniteGroup Q, CanonicalGroup G>
struct LEFActionWitness {
  using QElement = typename Q::Element;
  Q q;
  std::vector<long> y;  // sorted
  std::function<long(const QElement&, long)> beta;
  std::function<QElement(const typename G::Element&)> rho;
  std::map<long, long> pi;
  std::optional<Graph> y_graph;
};

template <CanonicalGroup G>
struct OrbitApproximation {
  ApproximationMap<G, SymmetricGroup> phi;  // on A = {0, ..., |A|-1}
  std::vector<std::uint32_t> s;              // sorted subset of A
  std::vector<long> e;                       // E, sorted points of X
  std::vector<long> b;                       // B
  std::vector<std::vector<long>> pi;         // pi[a][i] = pi_a(e[i]); filled for a in S
  Json details = Json::object();

  std::size_t a_size() const { return phi.codomain().n; }
  long pi_at(std::uint32_t a, long x) const {
    const auto i = static_cast<std::size_t>(std::lower_bound(e.begin(), e.end(), x) - e.begin());
    return pi.at(a).at(i);
  }
};

template <CanonicalGroup G, CanonicalGroup D, Group L>
struct AutomorphicApproximation {
  ApproximationMap<G, SymmetricGroup> phi;
  std::vector<std::uint32_t> s;
  FiniteSubset<D> e;
  L lambda;
  std::vector<std::vector<typename L::Element>> pi;  // pi[a][i] = pi_a(e[i]); filled for a in S
  Json details = Json::object();

  std::size_t a_size() const { return phi.codomain().n; }
  const typename L::Element& pi_at(std::uint32_t a, const typename D::Element& h) const { return pi.at(a).at(e.index_of(h)); }
};

namespace detail {

inline bool in_sorted(const std::vector<std::uint32_t>& s, std::uint32_t a) { return std::binary_search(s.begin(), s.end(), a); }

inline CheckReport size_clause(std::size_t s, std::size_t a, const Rational& eps) {
  CheckReport r("support_size");
  r.details["S"] = s;
  r.details["A"] = a;
  if (!(Rational(BigInt(s)) > (1 - eps) * Rational(BigInt(a)))) r.fail({{"S", s}, {"A", a}});
  return r;
}

}  // namespace detail

/// All invariants of a LEF action witness. Pairs in Q x Q are checked
/// exhaustively up to `cap` of them.
template <FiniteGroup Q, CanonicalGroup G>
CheckReport check_lef_action_witness(const ActionFragment<G>& frag, const LEFActionWitness<Q, G>& w, std::size_t cap = 1u << 16) {
  CheckReport report("lef_action_witness");
  const auto& g = frag.group;
  auto in_y = [&](long y) { return std::binary_search(w.y.begin(), w.y.end(), y); };

  CheckReport fragment("fragment_action");
  for (const auto& a : frag.f)
    for (const auto& b : frag.f) {
      const auto ab = g.multiply(a, b);
      if (!frag.f.contains(ab)) continue;
      for (long x : frag.points) {
        const long bx = frag.act(b, x);
        if (!frag.in_points(bx) || !frag.in_points(frag.act(ab, x))) continue;
        if (frag.act(a, bx) != frag.act(ab, x)) fragment.fail({{"g", a}, {"h", b}, {"x", x}});
      }
    }

  CheckReport action("beta_is_action");
  const auto qs = w.q.elements();
  for (long y : w.y) {
    if (w.beta(w.q.identity(), y) != y) action.fail({{"clause", "identity"}, {"y", y}});
  }
  if (qs.size() * qs.size() <= cap) {
    for (const auto& a : qs)
      for (const auto& b : qs)
        for (long y : w.y) {
          const long by = w.beta(b, y);
          if (!in_y(by) || w.beta(a, by) != w.beta(w.q.multiply(a, b), y)) action.fail({{"p", a}, {"q", b}, {"y", y}});
        }
  } else {
    action.approximate = true;
    action.details["skipped_pairs"] = qs.size() * qs.size();
  }

  CheckReport rho("rho_partial_homomorphism");
  for (const auto& a : frag.f)
    for (const auto& b : frag.f) {
      const auto ab = g.multiply(a, b);
      if (frag.f.contains(ab) && w.rho(ab) != w.q.multiply(w.rho(a), w.rho(b))) rho.fail({{"g", a}, {"h", b}});
    }

  CheckReport inj("pi_injective");
  std::set<long> seen;
  for (long x : frag.points) {
    auto it = w.pi.find(x);
    if (it == w.pi.end() || !in_y(it->second)) {
      inj.fail({{"x", x}, {"clause", "defined in Y"}});
    } else if (!seen.insert(it->second).second) {
      inj.fail({{"x", x}, {"image", it->second}});
    }
  }

  CheckReport equiv("equivariance");
  for (const auto& a : frag.f)
    for (long x : frag.points) {
      const long ax = frag.act(a, x);
      if (!frag.in_points(ax) || !w.pi.count(x) || !w.pi.count(ax)) continue;
      if (w.pi.at(ax) != w.beta(w.rho(a), w.pi.at(x))) {
        equiv.fail({{"g", a}, {"x", x}, {"expected", w.beta(w.rho(a), w.pi.at(x))}, {"got", w.pi.at(ax)}});
      }
    }

  report.absorb(std::move(fragment));
  report.absorb(std::move(action));
  report.absorb(std::move(rho));
  report.absorb(std::move(inj));
  report.absorb(std::move(equiv));

  if (frag.graph || w.y_graph) {
    CheckReport adj("adjacency");
    if (!frag.graph || !w.y_graph) {
      adj.fail({{"clause", "both sides need a graph"}});
    } else {
      for (std::size_t i = 0; i < frag.points.size(); ++i)
        for (std::size_t j = i + 1; j < frag.points.size(); ++j) {
          const long u = frag.points[i], v = frag.points[j];
          if (!w.pi.count(u) || !w.pi.count(v)) continue;
          if (frag.graph->adjacent(u, v) != w.y_graph->adjacent(w.pi.at(u), w.pi.at(v))) adj.fail({{"x", u}, {"y", v}});
        }
    }
    report.absorb(std::move(adj));
  }
  return report;
}

/// Size of S, injectivity of the pi_s (on `injective_on` when given, else on
/// E), equivariance, and unital (F, eps)-multiplicativity of phi.
template <CanonicalGroup G>
CheckReport check_orbit_approximation(const OrbitApproximation<G>& d, const Rational& eps,
                                      const std::function<long(const typename G::Element&, long)>& alpha,
                                      const std::optional<std::vector<long>>& injective_on = std::nullopt) {
  CheckReport report("orbit_approximation");
  const auto& g = d.phi.ambient();
  report.absorb(detail::size_clause(d.s.size(), d.a_size(), eps));

  CheckReport inj("injective");
  const auto& inj_set = injective_on ? *injective_on : d.e;
  if (injective_on) inj.details["restricted_to"] = *injective_on;
  for (auto s : d.s) {
    std::map<long, long> seen;
    for (long x : inj_set) {
      const long y = d.pi_at(s, x);
      if (!std::binary_search(d.b.begin(), d.b.end(), y)) inj.fail({{"s", s}, {"x", x}, {"clause", "image in B"}});
      auto [it, fresh] = seen.insert({y, x});
      if (!fresh) inj.fail({{"s", s}, {"x", it->second}, {"x2", x}});
    }
  }

  CheckReport equiv("equivariance");
  for (const auto& a : d.phi.domain()) {
    const auto ainv = g.inverse(a);
    const auto& p = d.phi(a);
    for (auto s : d.s) {
      const auto t = p(s);
      if (!detail::in_sorted(d.s, t)) continue;
      for (long x : d.e) {
        const long y = alpha(ainv, x);
        if (!std::binary_search(d.e.begin(), d.e.end(), y)) continue;
        if (d.pi_at(t, x) != d.pi_at(s, y)) equiv.fail({{"g", a}, {"s", s}, {"x", x}});
      }
    }
  }
  report.absorb(std::move(inj));
  report.absorb(std::move(equiv));
  report.absorb(check_unital(d.phi));
  report.absorb(check_multiplicative(d.phi, eps));
  if (!d.details.empty()) report.details = d.details;
  return report;
}

/// S0 = S meet phi(g)^-1(S) over g in F. Requires |S| > (1 - eps/(|F|+1))|A|.
template <CanonicalGroup G>
std::vector<std::uint32_t> refine_support(const ApproximationMap<G, SymmetricGroup>& phi, const std::vector<std::uint32_t>& s,
                                          const Rational& eps) {
  const std::size_t a = phi.codomain().n;
  const Rational bound = (1 - eps / Rational(BigInt(phi.domain().size() + 1))) * Rational(BigInt(a));
  if (!(Rational(BigInt(s.size())) > bound)) {
    throw PreconditionError("refine_support: |S| = " + std::to_string(s.size()) + " is not above (1 - eps/(|F|+1))|A| = " +
                            to_string(bound));
  }
  std::vector<std::uint32_t> out;
  for (auto x : s) {
    bool keep = true;
    for (const auto& p : phi.images()) keep = keep && detail::in_sorted(s, p(x));
    if (keep) out.push_back(x);
  }
  return out;
}

/// Left translation on the subgroup of Sym(Y) generated by beta(rho(F)),
/// with S = A and pi_a(x) = a^-1(pi(x)). Throws CapExceeded past `cap`.
template <FiniteGroup Q, CanonicalGroup G>
OrbitApproximation<G> lef_to_orbit_approx(const ActionFragment<G>& frag, const LEFActionWitness<Q, G>& w, std::size_t cap = 1u << 16) {
  const std::size_t ny = w.y.size();
  auto index_y = [&](long y) {
    auto it = std::lower_bound(w.y.begin(), w.y.end(), y);
    if (it == w.y.end() || *it != y) throw std::invalid_argument("lef_to_orbit: beta leaves Y");
    return static_cast<std::uint32_t>(it - w.y.begin());
  };
  auto hat = [&](const typename Q::Element& q) {
    std::vector<std::uint32_t> img(ny);
    for (std::size_t i = 0; i < ny; ++i) img[i] = index_y(w.beta(q, w.y[i]));
    return Permutation::from_images(std::move(img));
  };
  std::vector<Permutation> gens;
  for (const auto& g : frag.f) gens.push_back(hat(w.rho(g)));

  std::set<Permutation> group{Permutation::identity(ny)};
  std::vector<Permutation> frontier{Permutation::identity(ny)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& a : frontier)
      for (const auto& s : gens) {
        auto b = s * a;
        if (group.insert(b).second) {
          if (group.size() > cap) throw CapExceeded("lef_to_orbit: generated subgroup exceeds cap");
          next.push_back(std::move(b));
        }
      }
    frontier = std::move(next);
  }
  const std::vector<Permutation> elems(group.begin(), group.end());
  auto index_a = [&](const Permutation& p) {
    return static_cast<std::uint32_t>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };

  ApproximationMap<G, SymmetricGroup> phi(frag.group, SymmetricGroup{elems.size()}, frag.f, [&](const typename G::Element& g) {
    const auto p = hat(w.rho(g));
    std::vector<std::uint32_t> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) img[i] = index_a(p * elems[i]);
    return Permutation::from_images(std::move(img));
  });

  OrbitApproximation<G> out{std::move(phi), {}, frag.points, w.y, {}, Json::object()};
  for (std::uint32_t a = 0; a < elems.size(); ++a) {
    out.s.push_back(a);
    const auto inv = elems[a].inverse();
    std::vector<long> row;
    for (long x : frag.points) row.push_back(w.y[inv(index_y(w.pi.at(x)))]);
    out.pi.push_back(std::move(row));
  }
  out.details["variant"] = "subgroup-regular";
  out.details["A"] = elems.size();
  return out;
}

/// Partial homomorphism and injectivity of each pi_s (injectivity on
/// `injective_on` when given), equivariance pi_{phi(g)s}(h) = pi_s(beta(g)^-1[h]),
/// size of S, and unital (F, eps)-multiplicativity of phi.
template <CanonicalGroup G, CanonicalGroup D, CanonicalGroup L>
CheckReport check_automorphic_approximation(
    const AutomorphicApproximation<G, D, L>& d, const Rational& eps, const D& delta,
    const std::function<typename D::Element(const typename G::Element&, const typename D::Element&)>& beta,
    const std::optional<FiniteSubset<D>>& injective_on = std::nullopt) {
  CheckReport report("automorphic_approximation");
  const auto& g = d.phi.ambient();
  report.absorb(detail::size_clause(d.s.size(), d.a_size(), eps));

  CheckReport hom("pi_partial_homomorphism");
  CheckReport inj("pi_injective");
  if (injective_on) inj.details["restricted_to_size"] = injective_on->size();
  for (auto s : d.s) {
    for (const auto& h1 : d.e)
      for (const auto& h2 : d.e) {
        const auto h = delta.multiply(h1, h2);
        if (!d.e.contains(h)) continue;
        if (d.pi_at(s, h) != d.lambda.multiply(d.pi_at(s, h1), d.pi_at(s, h2))) hom.fail({{"s", s}, {"h1", h1}, {"h2", h2}});
      }
    std::map<typename L::Element, typename D::Element> seen;
    for (const auto& h : injective_on ? injective_on->elements() : d.e.elements()) {
      auto [it, fresh] = seen.insert({d.pi_at(s, h), h});
      if (!fresh) inj.fail({{"s", s}, {"h1", it->second}, {"h2", h}});
    }
  }

  CheckReport equiv("equivariance");
  for (const auto& a : d.phi.domain()) {
    const auto ainv = g.inverse(a);
    const auto& p = d.phi(a);
    for (auto s : d.s) {
      const auto t = p(s);
      if (!detail::in_sorted(d.s, t)) continue;
      for (const auto& h : d.e) {
        const auto k = beta(ainv, h);
        if (!d.e.contains(k)) continue;
        if (d.pi_at(t, h) != d.pi_at(s, k)) equiv.fail({{"g", a}, {"s", s}, {"h", h}});
      }
    }
  }
  report.absorb(std::move(hom));
  report.absorb(std::move(inj));
  report.absorb(std::move(equiv));
  report.absorb(check_unital(d.phi));
  report.absorb(check_multiplicative(d.phi, eps));
  if (!d.details.empty()) report.details = d.details;
  return report;
}

/// Følner-box approximation for Z^d acting on D through beta. A = [-N, N]^d
/// with the least N meeting max_g |gA \ A| < eps|A| / (2|F|); phi(g) is
/// translation where it stays in A, completed lexicographically; S is the set
/// of points whose F-translates stay in A; pi_s = psi o beta(s)^-1 on E.
template <CanonicalGroup D, CanonicalGroup L>
AutomorphicApproximation<LatticeGroup, D, L> folner_automorphic_approx(
    const LatticeGroup& z, const FiniteSubset<LatticeGroup>& f, const FiniteSubset<D>& e, const Rational& eps,
    const std::function<typename D::Element(const std::vector<long>&, const typename D::Element&)>& beta, const L& lambda,
    const std::function<typename L::Element(const typename D::Element&)>& psi, std::size_t cap = 1u << 16) {
  const std::size_t dim = z.d;
  const Rational target = eps / Rational(BigInt(2 * f.size()));
  long n = 0;
  BigInt size;
  for (;; ++n) {
    size = 1;
    for (std::size_t i = 0; i < dim; ++i) size *= 2 * n + 1;
    if (size > cap) throw CapExceeded("folner box exceeds cap");
    Rational worst = 0;
    for (const auto& g : f) {
      BigInt inside = 1;
      for (std::size_t i = 0; i < dim; ++i) inside *= std::max(0L, 2 * n + 1 - std::abs(g.at(i)));
      worst = std::max(worst, Rational(size - inside, size));
    }
    if (worst < target) break;
  }
  const long side = 2 * n + 1;
  const std::size_t count = static_cast<std::size_t>(size);
  auto point = [&](std::size_t idx) {
    std::vector<long> p(dim);
    for (std::size_t i = dim; i-- > 0;) {
      p[i] = static_cast<long>(idx % static_cast<std::size_t>(side)) - n;
      idx /= static_cast<std::size_t>(side);
    }
    return p;
  };
  auto index = [&](const std::vector<long>& p) -> std::optional<std::uint32_t> {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (p[i] < -n || p[i] > n) return std::nullopt;
      idx = idx * static_cast<std::size_t>(side) + static_cast<std::size_t>(p[i] + n);
    }
    return static_cast<std::uint32_t>(idx);
  };

  ApproximationMap<LatticeGroup, SymmetricGroup> phi(z, SymmetricGroup{count}, f, [&](const std::vector<long>& g) {
    std::vector<std::uint32_t> img(count, 0);
    std::vector<bool> hit(count, false), set(count, false);
    for (std::size_t a = 0; a < count; ++a) {
      if (auto t = index(z.multiply(point(a), g))) {
        img[a] = *t;
        hit[*t] = true;
        set[a] = true;
      }
    }
    std::size_t next = 0;
    for (std::size_t a = 0; a < count; ++a) {
      if (set[a]) continue;
      while (hit[next]) ++next;
      img[a] = static_cast<std::uint32_t>(next);
      hit[next] = true;
    }
    return Permutation::from_images(std::move(img));
  });

  AutomorphicApproximation<LatticeGroup, D, L> out{std::move(phi), {}, e, lambda, std::vector<std::vector<typename L::Element>>(count),
                                                   Json::object()};
  for (std::uint32_t a = 0; a < count; ++a) {
    const auto p = point(a);
    bool inside = true;
    for (const auto& g : f) inside = inside && index(z.multiply(p, g)).has_value();
    if (!inside) continue;
    out.s.push_back(a);
    const auto pinv = z.inverse(p);
    for (const auto& h : e) out.pi[a].push_back(psi(beta(pinv, h)));
  }
  out.details["N"] = n;
  out.details["A"] = count;
  out.details["S"] = out.s.size();
  return out;
}

/// Point action of a group pushed to a halo: beta(g)[h] = relabel(h, alpha(g)).
template <CanonicalGroup G>
std::function<HaloElement(const typename G::Element&, const HaloElement&)> halo_action(
    const Halo& halo, const std::function<long(const typename G::Element&, long)>& alpha) {
  return [halo, alpha](const typename G::Element& g, const HaloElement& h) {
    return halo.relabel(h, [&](long x) { return alpha(g, x); });
  };
}

/// Same A, phi and S; Lambda = L(B) and pi^_s the monomorphism induced by pi_s.
/// Every element of E must be supported on the orbit data's points.
template <CanonicalGroup G>
AutomorphicApproximation<G, Halo, Halo> lift_orbit_to_automorphic(const Halo& halo, const OrbitApproximation<G>& orbit,
                                                                  const FiniteSubset<Halo>& e, const Halo& lambda) {
  for (const auto& h : e) {
    const auto supp = halo.support(h);
    if (!std::includes(orbit.e.begin(), orbit.e.end(), supp.begin(), supp.end())) {
      throw PreconditionError("lift_orbit_to_automorphic: element supported outside the orbit data's points");
    }
  }
  AutomorphicApproximation<G, Halo, Halo> out{orbit.phi, orbit.s, e, lambda,
                                              std::vector<std::vector<HaloElement>>(orbit.a_size()), orbit.details};
  for (auto s : orbit.s)
    for (const auto& h : e) out.pi[s].push_back(halo.relabel(h, [&](long x) { return orbit.pi_at(s, x); }, &lambda));
  out.details["lifted_through"] = halo.name();
  return out;
}

/// Definition data of a C-LEF action: K = L(Y), Q acting on K through its
/// action on Y, rho from the witness, and pi^ = L(pi) on L(Z).
template <FiniteGroup Q, CanonicalGroup G>
struct CLEFWitness {
  using QElement = typename Q::Element;
  Q q;
  HaloGroup k;
  std::function<HaloElement(const QElement&, const HaloElement&)> gamma;
  std::function<QElement(const typename G::Element&)> rho;
  std::function<HaloElement(const HaloElement&)> pi_hat;
};

template <FiniteGroup Q, CanonicalGroup G>
CLEFWitness<Q, G> lef_lift_through_halo(const Halo& halo, const LEFActionWitness<Q, G>& w) {
  const auto beta = w.beta;
  const auto pi = w.pi;
  return CLEFWitness<Q, G>{
      w.q, HaloGroup{halo, w.y},
      [halo, beta](const typename Q::Element& q, const HaloElement& h) {
        return halo.relabel(h, [&](long x) { return beta(q, x); });
      },
      w.rho,
      [halo, pi](const HaloElement& h) {
        return halo.relabel(h, [&](long x) {
          auto it = pi.find(x);
          if (it == pi.end()) throw PreconditionError("pi^: element supported outside Z");
          return it->second;
        });
      }};
}

/// gamma is an action by automorphisms (on `samples` seeded elements of K),
/// rho a partial homomorphism on F, pi^ an injective partial homomorphism on
/// E, and pi^(alpha^(g)h) = gamma(rho(g)) pi^(h) whenever alpha^(g)h is in E.
template <FiniteGroup Q, CanonicalGroup G>
CheckReport check_clef_witness(const ActionFragment<G>& frag, const Halo& halo, const CLEFWitness<Q, G>& w,
                               const FiniteSubset<Halo>& e, std::size_t samples, std::uint64_t seed) {
  CheckReport report("clef_witness");
  SplitMix64 rng(seed);
  const auto qs = w.q.elements();
  CheckReport gamma("gamma_by_automorphisms");
  gamma.approximate = true;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& p = qs[rng.below(qs.size())];
    const auto& q = qs[rng.below(qs.size())];
    const auto a = halo.random_element(w.k.points, rng);
    const auto b = halo.random_element(w.k.points, rng);
    if (w.gamma(p, halo.multiply(a, b)) != halo.multiply(w.gamma(p, a), w.gamma(p, b))) gamma.fail({{"q", p}, {"clause", "hom"}});
    if (w.gamma(w.q.multiply(p, q), a) != w.gamma(p, w.gamma(q, a))) gamma.fail({{"p", p}, {"q", q}, {"clause", "action"}});
    if (!halo.contains(w.gamma(p, a), w.k.points)) gamma.fail({{"q", p}, {"clause", "preserves K"}});
  }

  CheckReport rho("rho_partial_homomorphism");
  for (const auto& a : frag.f)
    for (const auto& b : frag.f) {
      const auto ab = frag.group.multiply(a, b);
      if (frag.f.contains(ab) && w.rho(ab) != w.q.multiply(w.rho(a), w.rho(b))) rho.fail({{"g", a}, {"h", b}});
    }

  CheckReport pi("pi_injective_partial_homomorphism");
  std::map<HaloElement, HaloElement> seen;
  for (const auto& h1 : e) {
    const auto img = w.pi_hat(h1);
    auto [it, fresh] = seen.insert({img, h1});
    if (!fresh) pi.fail({{"h1", it->second}, {"h2", h1}, {"clause", "injective"}});
    for (const auto& h2 : e) {
      const auto h = halo.multiply(h1, h2);
      if (e.contains(h) && w.pi_hat(h) != halo.multiply(img, w.pi_hat(h2))) pi.fail({{"h1", h1}, {"h2", h2}});
    }
  }

  CheckReport equiv("equivariance");
  const auto alpha_hat = halo_action<G>(halo, frag.act);
  for (const auto& g : frag.f)
    for (const auto& h : e) {
      HaloElement moved;
      try {
        moved = alpha_hat(g, h);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (!e.contains(moved)) continue;
      if (w.pi_hat(moved) != w.gamma(w.rho(g), w.pi_hat(h))) equiv.fail({{"g", g}, {"h", h}});
    }
  report.absorb(std::move(gamma));
  report.absorb(std::move(rho));
  report.absorb(std::move(pi));
  report.absorb(std::move(equiv));
  return report;
}

}  // namespace sofic
