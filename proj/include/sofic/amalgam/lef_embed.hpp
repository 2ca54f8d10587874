#pragma once

#include "sofic/approx/ambient.hpp"
#include "sofic/core/report.hpp"
#include "sofic/halo/graph_word.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace sofic {

/// phi(xy) = phi(x) phi(y) whenever x, y, xy are in F, and phi injective on F.
template <CanonicalGroup Dom, CanonicalGroup Cod>
CheckReport check_injective_partial_hom(const Dom& dom, const Cod& cod, const FiniteSubset<Dom>& f,
                                        const std::function<typename Cod::Element(const typename Dom::Element&)>& phi) {
  CheckReport report("injective_partial_homomorphism");
  std::map<typename Dom::Element, typename Cod::Element> image;
  for (const auto& x : f) image.emplace(x, phi(x));
  CheckReport hom("partial_homomorphism");
  std::size_t pairs = 0;
  for (const auto& x : f)
    for (const auto& y : f) {
      const auto xy = dom.multiply(x, y);
      if (!f.contains(xy)) continue;
      ++pairs;
      if (image.at(xy) != cod.multiply(image.at(x), image.at(y))) hom.fail({{"x", x}, {"y", y}});
    }
  hom.details["pairs"] = pairs;
  CheckReport inj("injective");
  std::map<typename Cod::Element, typename Dom::Element> seen;
  for (const auto& [x, y] : image) {
    auto [it, fresh] = seen.emplace(y, x);
    if (!fresh) inj.fail({{"x1", it->second}, {"x2", x}});
  }
  report.absorb(std::move(hom));
  report.absorb(std::move(inj));
  return report;
}

/// Delta x| Gamma into (K x|_gamma Q) x P by (h, g) -> ((pi^(h), rho(g)), phi(g)).
template <CanonicalGroup D, CanonicalGroup G, CanonicalGroup K, CanonicalGroup Q, CanonicalGroup P>
struct SemidirectEmbedding {
  using Target = DirectProduct<SemidirectProduct<K, Q>, P>;
  Target target;
  std::function<typename Target::Element(const typename SemidirectProduct<D, G>::Element&)> map;
  CheckReport report;
};

template <CanonicalGroup D, CanonicalGroup G, CanonicalGroup K, CanonicalGroup Q, CanonicalGroup P>
SemidirectEmbedding<D, G, K, Q, P> lef_semidirect_embed(
    const SemidirectProduct<D, G>& sd, const FiniteSubset<SemidirectProduct<D, G>>& f, const K& k, const Q& q,
    const std::function<typename K::Element(const typename Q::Element&, const typename K::Element&)>& gamma,
    const std::function<typename Q::Element(const typename G::Element&)>& rho,
    const std::function<typename K::Element(const typename D::Element&)>& pi_hat, const P& p,
    const std::function<typename P::Element(const typename G::Element&)>& phi) {
  using Emb = SemidirectEmbedding<D, G, K, Q, P>;
  typename Emb::Target target{SemidirectProduct<K, Q>{k, q, gamma}, p};
  auto map = [rho, pi_hat, phi](const typename SemidirectProduct<D, G>::Element& x) {
    return typename Emb::Target::Element{{pi_hat(x.first), rho(x.second)}, phi(x.second)};
  };
  CheckReport report = check_injective_partial_hom<SemidirectProduct<D, G>, typename Emb::Target>(sd, target, f, map);
  report.check = "lef_semidirect_embedding";
  report.details["F"] = f.size();
  return Emb{std::move(target), map, std::move(report)};
}

/// Graph product P(H, X) into P(Q, X) through local maps phi_v defined on
/// F_v' = products of at most 2L syllable values at v, where L is the longest
/// reduced word of F. The local maps must be injective partial homomorphisms
/// on F_v'; the induced map is checked on F.
struct GraphProductEmbedding {
  GraphProductGroup target;
  std::map<long, std::vector<long>> local_domain;
  std::function<GraphWord(const GraphWord&)> map;
  CheckReport report;
};

using LocalMap = std::function<std::optional<long>(long vertex, long value)>;

GraphProductEmbedding graphproduct_lef_embed(const GraphProductGroup& source, const FiniteSubset<GraphProductGroup>& f,
                                             const GraphProductGroup& target, const LocalMap& local);

}  // namespace sofic
