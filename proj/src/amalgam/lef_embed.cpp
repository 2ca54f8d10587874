#include "sofic/amalgam/lef_embed.hpp"

#include <algorithm>
#include <set>

namespace sofic {

GraphProductEmbedding graphproduct_lef_embed(const GraphProductGroup& source, const FiniteSubset<GraphProductGroup>& f,
                                             const GraphProductGroup& target, const LocalMap& local) {
  if (!(source.graph() == target.graph())) throw PreconditionError("graphproduct_lef_embed: source and target graphs differ");
  std::size_t longest = 0;
  std::map<long, std::set<long>> values;
  for (const auto& w : f) {
    const auto r = source.reduce(w);
    longest = std::max(longest, r.length());
    for (const auto& s : r.syllables) values[s.vertex].insert(s.value);
  }

  GraphProductEmbedding out{target, {}, {}, CheckReport("graph_product_embedding")};
  CheckReport locals("local_embeddings");
  for (const auto& [v, vs] : values) {
    std::set<long> reach{0};
    for (std::size_t step = 0; step < 2 * longest; ++step) {
      std::set<long> next = reach;
      for (long a : reach)
        for (long b : vs) next.insert(source.normalize(a + b));
      reach = std::move(next);
    }
    std::map<long, long> img;
    for (long a : reach) {
      const auto y = local(v, a);
      if (!y) {
        throw PreconditionError("graphproduct_lef_embed: local map at vertex " + source.graph().name(v) + " undefined on " +
                                std::to_string(a));
      }
      img[a] = target.normalize(*y);
    }
    std::map<long, long> seen;
    for (const auto& [a, y] : img) {
      auto [it, fresh] = seen.emplace(y, a);
      if (!fresh) locals.fail({{"vertex", v}, {"clause", "injective"}, {"a", it->second}, {"b", a}});
      for (const auto& [b, z] : img) {
        const long ab = source.normalize(a + b);
        auto jt = img.find(ab);
        if (jt != img.end() && jt->second != target.normalize(y + z)) {
          locals.fail({{"vertex", v}, {"clause", "homomorphism"}, {"a", a}, {"b", b}});
        }
      }
    }
    out.local_domain[v] = std::vector<long>(reach.begin(), reach.end());
  }
  locals.details["L"] = longest;
  out.report.absorb(std::move(locals));

  const auto domain = out.local_domain;
  out.map = [source, target, domain, local](const GraphWord& w) {
    GraphWord img;
    for (const auto& s : source.reduce(w).syllables) {
      const auto& d = domain.at(s.vertex);
      if (!std::binary_search(d.begin(), d.end(), s.value)) throw PreconditionError("graph product embedding: syllable outside F_v'");
      img.syllables.push_back({s.vertex, target.normalize(*local(s.vertex, s.value))});
    }
    return target.canonical(img);
  };
  auto on_f = check_injective_partial_hom<GraphProductGroup, GraphProductGroup>(source, target, f, out.map);
  out.report.absorb(std::move(on_f));
  out.report.details["L"] = longest;
  out.report.details["F"] = f.size();
  return out;
}

}  // namespace sofic
