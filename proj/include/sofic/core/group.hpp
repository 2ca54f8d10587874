#pragma once

#include <algorithm>
#include <concepts>
#include <vector>

namespace sofic {

template <class G>
concept Group = requires(const G& g, const typename G::Element& a) {
  typename G::Element;
  { g.identity() } -> std::convertible_to<typename G::Element>;
  { g.multiply(a, a) } -> std::convertible_to<typename G::Element>;
  { g.inverse(a) } -> std::convertible_to<typename G::Element>;
};

/// Elements have a canonical form, so `==` is group equality and `<` orders them.
template <class G>
concept CanonicalGroup = Group<G> && std::totally_ordered<typename G::Element>;

template <class G>
concept FiniteGroup = CanonicalGroup<G> && requires(const G& g) {
  { g.elements() } -> std::convertible_to<std::vector<typename G::Element>>;
};

template <class G>
concept MetricGroup = Group<G> && requires(const G& g, const typename G::Element& a) {
  typename G::Distance;
  { g.distance(a, a) } -> std::convertible_to<typename G::Distance>;
};

/// Sorted, duplicate-free list of ambient elements.
template <CanonicalGroup G>
class FiniteSubset {
 public:
  using Element = typename G::Element;

  FiniteSubset() = default;
  explicit FiniteSubset(std::vector<Element> xs) : xs_(std::move(xs)) {
    std::sort(xs_.begin(), xs_.end());
    xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
  }

  bool contains(const Element& x) const { return std::binary_search(xs_.begin(), xs_.end(), x); }
  std::size_t index_of(const Element& x) const {
    return static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
  }
  std::size_t size() const { return xs_.size(); }
  bool empty() const { return xs_.empty(); }
  const Element& operator[](std::size_t i) const { return xs_[i]; }
  auto begin() const { return xs_.begin(); }
  auto end() const { return xs_.end(); }
  const std::vector<Element>& elements() const { return xs_; }

  void insert(const Element& x) {
    auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
    if (it == xs_.end() || *it != x) xs_.insert(it, x);
  }

 private:
  std::vector<Element> xs_;
};

/// Products of words of length <= radius in the given generators and their inverses.
template <CanonicalGroup G>
FiniteSubset<G> ball(const G& g, const std::vector<typename G::Element>& gens, int radius) {
  std::vector<typename G::Element> step;
  for (const auto& s : gens) {
    step.push_back(s);
    step.push_back(g.inverse(s));
  }
  FiniteSubset<G> result({g.identity()});
  std::vector<typename G::Element> frontier{g.identity()};
  for (int r = 0; r < radius; ++r) {
    std::vector<typename G::Element> next;
    for (const auto& x : frontier) {
      for (const auto& s : step) {
        auto y = g.multiply(x, s);
        if (!result.contains(y)) {
          result.insert(y);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace sofic
