#include "sofic/metric/weak_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace sofic {

WeakElement WeakElement::table(std::shared_ptr<const FiniteMetricGroup> g, int value) {
  if (value < 0 || static_cast<std::size_t>(value) >= g->size()) throw std::invalid_argument("table element out of range");
  return WeakElement(Table{std::move(g), value});
}

WeakElement WeakElement::pair(const WeakElement& a, const WeakElement& b) {
  return WeakElement(Pair{std::make_shared<const WeakElement>(a), std::make_shared<const WeakElement>(b)});
}

WeakElement WeakElement::wreath(std::vector<WeakElement> bases, Permutation top) {
  if (bases.size() != top.degree() || bases.empty()) throw std::invalid_argument("wreath element needs one base per coordinate");
  return WeakElement(Wreath{std::move(bases), std::move(top)});
}

WeakElement WeakElement::operator*(const WeakElement& o) const {
  if (auto* a = std::get_if<Table>(node_.get())) {
    auto* b = std::get_if<Table>(o.node_.get());
    if (!b || a->group != b->group) throw std::invalid_argument("weak product: shape mismatch");
    return table(a->group, a->group->multiply(a->value, b->value));
  }
  if (auto* a = std::get_if<Pair>(node_.get())) {
    auto* b = std::get_if<Pair>(o.node_.get());
    if (!b) throw std::invalid_argument("weak product: shape mismatch");
    return pair(*a->first * *b->first, *a->second * *b->second);
  }
  const auto& a = std::get<Wreath>(*node_);
  auto* b = std::get_if<Wreath>(o.node_.get());
  if (!b || b->bases.size() != a.bases.size()) throw std::invalid_argument("weak product: shape mismatch");
  std::vector<WeakElement> bases;
  bases.reserve(a.bases.size());
  for (std::size_t i = 0; i < a.bases.size(); ++i) bases.push_back(a.bases[b->top(static_cast<std::uint32_t>(i))] * b->bases[i]);
  return wreath(std::move(bases), a.top * b->top);
}

WeakElement WeakElement::inverse() const {
  if (auto* a = std::get_if<Table>(node_.get())) return table(a->group, a->group->inverse(a->value));
  if (auto* a = std::get_if<Pair>(node_.get())) return pair(a->first->inverse(), a->second->inverse());
  const auto& a = std::get<Wreath>(*node_);
  const Permutation sinv = a.top.inverse();
  std::vector<WeakElement> bases;
  for (std::size_t i = 0; i < a.bases.size(); ++i) bases.push_back(a.bases[sinv(static_cast<std::uint32_t>(i))].inverse());
  return wreath(std::move(bases), sinv);
}

WeakElement WeakElement::identity_like() const {
  if (auto* a = std::get_if<Table>(node_.get())) return table(a->group, a->group->identity());
  if (auto* a = std::get_if<Pair>(node_.get())) return pair(a->first->identity_like(), a->second->identity_like());
  const auto& a = std::get<Wreath>(*node_);
  std::vector<WeakElement> bases;
  for (const auto& b : a.bases) bases.push_back(b.identity_like());
  return wreath(std::move(bases), Permutation::identity(a.top.degree()));
}

bool WeakElement::operator==(const WeakElement& o) const {
  if (auto* a = std::get_if<Table>(node_.get())) {
    auto* b = std::get_if<Table>(o.node_.get());
    return b && a->group == b->group && a->value == b->value;
  }
  if (auto* a = std::get_if<Pair>(node_.get())) {
    auto* b = std::get_if<Pair>(o.node_.get());
    return b && *a->first == *b->first && *a->second == *b->second;
  }
  const auto& a = std::get<Wreath>(*node_);
  auto* b = std::get_if<Wreath>(o.node_.get());
  return b && a.top == b->top && a.bases == b->bases;
}

Rational weak_distance(const WeakElement& a, const WeakElement& b) {
  if (auto* x = std::get_if<WeakElement::Table>(&a.node())) {
    auto* y = std::get_if<WeakElement::Table>(&b.node());
    if (!y || x->group != y->group) throw std::invalid_argument("weak distance: shape mismatch");
    return x->group->distance(x->value, y->value);
  }
  if (auto* x = std::get_if<WeakElement::Pair>(&a.node())) {
    auto* y = std::get_if<WeakElement::Pair>(&b.node());
    if (!y) throw std::invalid_argument("weak distance: shape mismatch");
    return std::max(weak_distance(*x->first, *y->first), weak_distance(*x->second, *y->second));
  }
  const auto& x = std::get<WeakElement::Wreath>(a.node());
  auto* y = std::get_if<WeakElement::Wreath>(&b.node());
  if (!y || y->bases.size() != x.bases.size()) throw std::invalid_argument("weak distance: shape mismatch");
  const auto n = static_cast<long>(x.bases.size());
  Rational agree_sum = 0;
  for (std::uint32_t i = 0; i < x.bases.size(); ++i) {
    if (x.top(i) == y->top(i)) agree_sum += weak_distance(x.bases[i], y->bases[i]);
  }
  return hamming_distance(x.top, y->top) + agree_sum / n;
}

FiniteMetricGroup weak_wreath_table(const std::shared_ptr<const FiniteMetricGroup>& g, std::size_t n) {
  std::vector<WeakElement> elems;
  const auto perms = all_permutations(n);
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < n; ++i) tuples *= g->size();
  for (const auto& s : perms) {
    for (std::size_t code = 0; code < tuples; ++code) {
      std::vector<WeakElement> bases;
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        bases.push_back(WeakElement::table(g, static_cast<int>(c % g->size())));
        c /= g->size();
      }
      elems.push_back(WeakElement::wreath(std::move(bases), s));
    }
  }
  auto label = [](const WeakElement& e) {
    const auto& w = std::get<WeakElement::Wreath>(e.node());
    nlohmann::json base = nlohmann::json::array();
    for (const auto& b : w.bases) base.push_back(std::get<WeakElement::Table>(b.node()).value);
    return nlohmann::json{{"base", base}, {"top", w.top}}.dump();
  };
  return FiniteMetricGroup::from_elements<WeakElement>(
      elems, [](const WeakElement& a, const WeakElement& b) { return a * b; }, weak_distance, label);
}

}  // namespace sofic
