#pragma once

#include "sofic/metric/finite_metric_group.hpp"
#include "sofic/metric/permutation.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace sofic {

/// Element of a finite metric group built from tables by pairing (max metric)
/// and wreathing with Sym(n) (the d' metric). Wreath elements ((g_i), sigma)
/// multiply as (g, s)(h, t) = (g_{t(i)} h_i, s t).
class WeakElement {
 public:
  struct Table {
    std::shared_ptr<const FiniteMetricGroup> group;
    int value;
  };
  struct Pair {
    std::shared_ptr<const WeakElement> first, second;
  };
  struct Wreath {
    std::vector<WeakElement> bases;
    Permutation top;
  };
  using Node = std::variant<Table, Pair, Wreath>;

  static WeakElement table(std::shared_ptr<const FiniteMetricGroup> g, int value);
  static WeakElement pair(const WeakElement& a, const WeakElement& b);
  static WeakElement wreath(std::vector<WeakElement> bases, Permutation top);

  const Node& node() const { return *node_; }

  WeakElement operator*(const WeakElement& o) const;
  WeakElement inverse() const;
  /// Identity of the same shape.
  WeakElement identity_like() const;

  bool operator==(const WeakElement& o) const;

 private:
  explicit WeakElement(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

/// Table metric, max over pairs, or d'((g,s),(h,t)) = d_n(s,t) + (1/n) sum_{s(i)=t(i)} d(g_i,h_i).
Rational weak_distance(const WeakElement& a, const WeakElement& b);

/// G wr Sym(n) with the d' metric as an explicit table, for exhaustive checks.
FiniteMetricGroup weak_wreath_table(const std::shared_ptr<const FiniteMetricGroup>& g, std::size_t n);

struct WeakGroup {
  using Element = WeakElement;
  using Distance = Rational;
  WeakElement id;

  Element identity() const { return id; }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  Distance distance(const Element& a, const Element& b) const { return weak_distance(a, b); }
};

}  // namespace sofic
