#pragma once

#include "sofic/core/group.hpp"
#include "sofic/core/report.hpp"
#include "sofic/metric/permutation.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sofic {

/// A map F -> G from a finite subset of an ambient group into a metric group.
template <CanonicalGroup Dom, MetricGroup Cod>
class ApproximationMap {
 public:
  using DomainElement = typename Dom::Element;
  using CodomainElement = typename Cod::Element;
  using Distance = typename Cod::Distance;

  ApproximationMap(Dom dom, Cod cod, FiniteSubset<Dom> f, const std::function<CodomainElement(const DomainElement&)>& assign)
      : dom_(std::move(dom)), cod_(std::move(cod)), f_(std::move(f)) {
    images_.reserve(f_.size());
    for (const auto& x : f_) images_.push_back(assign(x));
  }

  const Dom& ambient() const { return dom_; }
  const Cod& codomain() const { return cod_; }
  const FiniteSubset<Dom>& domain() const { return f_; }
  const std::vector<CodomainElement>& images() const { return images_; }

  bool defined(const DomainElement& x) const { return f_.contains(x); }
  const CodomainElement& operator()(const DomainElement& x) const {
    if (!f_.contains(x)) throw std::out_of_range("approximation map evaluated outside its domain");
    return images_[f_.index_of(x)];
  }

  ApproximationMap with_value(const DomainElement& x, CodomainElement v) const {
    ApproximationMap copy = *this;
    copy.images_.at(f_.index_of(x)) = std::move(v);
    return copy;
  }

  /// Same domain, images pushed through `f` into another metric group.
  template <MetricGroup Cod2>
  ApproximationMap<Dom, Cod2> transform(Cod2 cod2, const std::function<typename Cod2::Element(const CodomainElement&)>& f) const {
    return ApproximationMap<Dom, Cod2>(dom_, std::move(cod2), f_, [&](const DomainElement& x) { return f((*this)(x)); });
  }

 private:
  Dom dom_;
  Cod cod_;
  FiniteSubset<Dom> f_;
  std::vector<CodomainElement> images_;
};

template <class D>
struct Defects {
  D eps_max{};                 // max d(phi(gh), phi(g)phi(h)) over g, h, gh in F
  std::optional<D> c_min;      // min d(phi(g), e) over e != g in F
  bool unital = true;          // phi(e) = e whenever e in F
  Json worst_product;          // [g, h] realizing eps_max
  Json worst_separation;       // g realizing c_min
  std::size_t product_pairs = 0;
};

template <CanonicalGroup Dom, MetricGroup Cod>
Defects<typename Cod::Distance> measure_defects(const ApproximationMap<Dom, Cod>& phi) {
  Defects<typename Cod::Distance> d;
  const auto& amb = phi.ambient();
  const auto& cod = phi.codomain();
  const auto e = amb.identity();
  const auto& F = phi.domain();
  for (const auto& g : F) {
    for (const auto& h : F) {
      const auto gh = amb.multiply(g, h);
      if (!F.contains(gh)) continue;
      ++d.product_pairs;
      const auto dist = cod.distance(phi(gh), cod.multiply(phi(g), phi(h)));
      if (d.worst_product.is_null() || dist > d.eps_max) {
        d.eps_max = dist;
        d.worst_product = Json::array({Json(g), Json(h)});
      }
    }
    if (g == e) {
      d.unital = cod.distance(phi(g), cod.identity()) == 0;
    } else {
      const auto sep = cod.distance(phi(g), cod.identity());
      if (!d.c_min || sep < *d.c_min) {
        d.c_min = sep;
        d.worst_separation = Json(g);
      }
    }
  }
  return d;
}

/// d(phi(gh), phi(g)phi(h)) < eps for all g, h, gh in F.
template <CanonicalGroup Dom, MetricGroup Cod>
CheckReport check_multiplicative(const ApproximationMap<Dom, Cod>& phi, const typename Cod::Distance& eps) {
  CheckReport r("multiplicative");
  const auto& amb = phi.ambient();
  const auto& cod = phi.codomain();
  const auto& F = phi.domain();
  std::optional<typename Cod::Distance> worst;
  for (const auto& g : F) {
    for (const auto& h : F) {
      const auto gh = amb.multiply(g, h);
      if (!F.contains(gh)) continue;
      const auto dist = cod.distance(phi(gh), cod.multiply(phi(g), phi(h)));
      if (!worst || dist > *worst) {
        worst = dist;
        r.worst_witness = Json::array({Json(g), Json(h)});
      }
      if (!(dist < eps)) r.fail({{"g", g}, {"h", h}, {"defect", distance_json(dist)}});
    }
  }
  r.defect = worst ? distance_json(*worst) : distance_json(typename Cod::Distance{});
  r.details["epsilon"] = distance_json(eps);
  return r;
}

/// d(phi(g), e) > c for all e != g in F.
template <CanonicalGroup Dom, MetricGroup Cod>
CheckReport check_separating(const ApproximationMap<Dom, Cod>& phi, const typename Cod::Distance& c) {
  CheckReport r("separating");
  const auto& cod = phi.codomain();
  const auto e = phi.ambient().identity();
  std::optional<typename Cod::Distance> worst;
  for (const auto& g : phi.domain()) {
    if (g == e) continue;
    const auto sep = cod.distance(phi(g), cod.identity());
    if (!worst || sep < *worst) {
      worst = sep;
      r.worst_witness = Json(g);
    }
    if (!(sep > c)) r.fail({{"g", g}, {"separation", distance_json(sep)}});
  }
  if (worst) r.defect = distance_json(*worst);
  r.details["c"] = distance_json(c);
  return r;
}

template <CanonicalGroup Dom, MetricGroup Cod>
CheckReport check_unital(const ApproximationMap<Dom, Cod>& phi) {
  CheckReport r("unital");
  const auto e = phi.ambient().identity();
  if (phi.defined(e)) {
    const auto dist = phi.codomain().distance(phi(e), phi.codomain().identity());
    r.defect = distance_json(dist);
    if (dist != typename Cod::Distance{}) r.fail(Json(e));
  }
  return r;
}

/// Unital, (F, eps)-multiplicative and (F, c)-separating.
template <CanonicalGroup Dom, MetricGroup Cod>
CheckReport check_representation(const ApproximationMap<Dom, Cod>& phi, const typename Cod::Distance& eps,
                                 const typename Cod::Distance& c) {
  CheckReport r("representation");
  r.absorb(check_unital(phi));
  r.absorb(check_multiplicative(phi, eps));
  r.absorb(check_separating(phi, c));
  return r;
}

template <CanonicalGroup Dom, MetricGroup Cod>
struct RepairResult {
  ApproximationMap<Dom, Cod> map;
  CheckReport report;
};

/// Sets phi(e) = e after checking the hypotheses: e in F, phi (F, delta)-multiplicative,
/// d(phi(e), e) < delta and d(phi(g), phi(h)) >= c for distinct g, h in F.
/// The result is verified to be a (F, 2 delta, c - delta)-representation.
template <CanonicalGroup Dom, MetricGroup Cod>
RepairResult<Dom, Cod> repair_unital(const ApproximationMap<Dom, Cod>& phi, const typename Cod::Distance& delta,
                                     const typename Cod::Distance& c) {
  const auto& cod = phi.codomain();
  const auto e = phi.ambient().identity();
  if (!phi.defined(e)) throw PreconditionError("repair_unital: identity not in the domain");
  if (!check_multiplicative(phi, delta).pass) throw PreconditionError("repair_unital: map is not (F, delta)-multiplicative");
  if (!(cod.distance(phi(e), cod.identity()) < delta)) throw PreconditionError("repair_unital: d(phi(e), e) >= delta");
  const auto& F = phi.domain();
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      if (cod.distance(phi(F[i]), phi(F[j])) < c) {
        throw PreconditionError("repair_unital: images of " + Json(F[i]).dump() + " and " + Json(F[j]).dump() +
                                " are closer than c");
      }
    }
  auto repaired = phi.with_value(e, cod.identity());
  CheckReport report = check_representation(repaired, delta + delta, c - delta);
  report.check = "repair_unital";
  return {std::move(repaired), std::move(report)};
}

/// Left translations by the elements of `f`, as permutations of the whole group.
template <FiniteGroup G>
ApproximationMap<G, SymmetricGroup> regular_representation(const G& g, const FiniteSubset<G>& f, std::size_t cap = 1u << 20) {
  auto elems = g.elements();
  std::sort(elems.begin(), elems.end());
  if (elems.size() > cap) throw CapExceeded("regular representation: group order exceeds cap");
  auto index = [&](const typename G::Element& x) {
    return static_cast<std::uint32_t>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
  };
  return ApproximationMap<G, SymmetricGroup>(g, SymmetricGroup{elems.size()}, f, [&](const typename G::Element& x) {
    std::vector<std::uint32_t> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) img[i] = index(g.multiply(x, elems[i]));
    return Permutation::from_images(std::move(img));
  });
}

/// Left translation action of a finite group on itself, on the whole group.
template <FiniteGroup G>
ApproximationMap<G, SymmetricGroup> regular_representation(const G& g, std::size_t cap = 1u << 20) {
  return regular_representation(g, FiniteSubset<G>(g.elements()), cap);
}

}  // namespace sofic
