#pragma once

#include "sofic/core/random.hpp"
#include "sofic/halo/graph.hpp"

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sofic {

struct Syllable {
  long vertex;
  long value;
  auto operator<=>(const Syllable&) const = default;
};

struct GraphWord {
  std::vector<Syllable> syllables;
  std::size_t length() const { return syllables.size(); }
  bool empty() const { return syllables.empty(); }
  auto operator<=>(const GraphWord&) const = default;
};

/// Graph product of cyclic vertex groups: Z/q at every vertex, or Z when q == 0.
/// Elements are kept in canonical form, so `==` is group equality.
class GraphProductGroup {
 public:
  using Element = GraphWord;

  GraphProductGroup(Graph graph, long q);

  const Graph& graph() const { return graph_; }
  long vertex_order() const { return q_; }
  long normalize(long value) const;

  /// Left-to-right reduction: each syllable merges into the nearest earlier
  /// syllable on its vertex that it can be shuffled next to.
  GraphWord reduce(const GraphWord& w) const;
  /// Reduction applying the available merges in random order and at random
  /// positions.
  GraphWord reduce_random(const GraphWord& w, SplitMix64& rng) const;
  bool is_reduced(const GraphWord& w) const;
  /// Greedy representative of a reduced word's shuffle class: repeatedly take
  /// the least vertex among syllables that can be shuffled to the front.
  GraphWord shuffle_normal_form(const GraphWord& reduced) const;
  GraphWord canonical(const GraphWord& w) const { return shuffle_normal_form(reduce(w)); }
  bool equal(const GraphWord& a, const GraphWord& b) const { return canonical(a) == canonical(b); }

  Element identity() const { return {}; }
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element generator(long vertex, long value = 1) const;
  /// Vertices of the reduced word, sorted.
  std::vector<long> support(const GraphWord& w) const;

  /// Every element, by closure under the vertex generators; throws CapExceeded.
  std::vector<Element> elements(std::uint64_t cap = 1u << 16) const;

  /// Whitespace-separated `v:k` syllables, vertex by name.
  GraphWord parse(const std::string& text) const;
  std::string format(const GraphWord& w) const;

 private:
  void check(const GraphWord& w) const;
  Graph graph_;
  long q_;
};

std::string format_word(const GraphWord& w);
void to_json(nlohmann::json& j, const GraphWord& w);

}  // namespace sofic
