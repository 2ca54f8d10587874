#pragma once

#include "sofic/core/group.hpp"

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sofic {

/// Z/n written additively, elements in [0, n); n == 0 stands for Z itself.
struct CyclicGroup {
  using Element = long;
  long n;

  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return reduce(a + b); }
  Element inverse(Element a) const { return reduce(-a); }
  Element reduce(long a) const { return n == 0 ? a : ((a % n) + n) % n; }
  std::vector<Element> elements() const {
    if (n == 0) throw std::logic_error("Z has no finite element list");
    std::vector<Element> out;
    for (long i = 0; i < n; ++i) out.push_back(i);
    return out;
  }
};

struct IntegerGroup {
  using Element = long;
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return a + b; }
  Element inverse(Element a) const { return -a; }
};

/// Z^d with coordinate vectors.
struct LatticeGroup {
  using Element = std::vector<long>;
  std::size_t d;

  Element identity() const { return Element(d, 0); }
  Element multiply(const Element& a, const Element& b) const {
    Element r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = a[i] + b[i];
    return r;
  }
  Element inverse(const Element& a) const {
    Element r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = -a[i];
    return r;
  }
};

/// Z/n_1 x ... x Z/n_k.
struct AbelianGroup {
  using Element = std::vector<long>;
  std::vector<long> orders;

  Element identity() const { return Element(orders.size(), 0); }
  Element multiply(const Element& a, const Element& b) const {
    Element r(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) r[i] = (a[i] + b[i]) % orders[i];
    return r;
  }
  Element inverse(const Element& a) const {
    Element r(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) r[i] = (orders[i] - a[i]) % orders[i];
    return r;
  }
  std::vector<Element> elements() const {
    std::vector<Element> out{identity()};
    for (std::size_t i = orders.size(); i-- > 0;) {
      std::vector<Element> next;
      for (const auto& e : out)
        for (long v = 0; v < orders[i]; ++v) {
          auto x = e;
          x[i] = v;
          next.push_back(std::move(x));
        }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// G1 x G2 with componentwise operations.
template <CanonicalGroup G1, CanonicalGroup G2>
struct DirectProduct {
  using Element = std::pair<typename G1::Element, typename G2::Element>;
  G1 first;
  G2 second;

  Element identity() const { return {first.identity(), second.identity()}; }
  Element multiply(const Element& a, const Element& b) const {
    return {first.multiply(a.first, b.first), second.multiply(a.second, b.second)};
  }
  Element inverse(const Element& a) const { return {first.inverse(a.first), second.inverse(a.second)}; }
};

/// K x| G with (k1, g1)(k2, g2) = (k1 act(g1)[k2], g1 g2).
template <CanonicalGroup K, CanonicalGroup G>
struct SemidirectProduct {
  using BaseElement = typename K::Element;
  using TopElement = typename G::Element;
  using Element = std::pair<BaseElement, TopElement>;
  using Action = std::function<BaseElement(const TopElement&, const BaseElement&)>;

  K base;
  G top;
  Action act;

  Element identity() const { return {base.identity(), top.identity()}; }
  Element multiply(const Element& a, const Element& b) const {
    return {base.multiply(a.first, act(a.second, b.first)), top.multiply(a.second, b.second)};
  }
  Element inverse(const Element& a) const {
    const auto ginv = top.inverse(a.second);
    return {act(ginv, base.inverse(a.first)), ginv};
  }
  Element from_base(const BaseElement& k) const { return {k, top.identity()}; }
  Element from_top(const TopElement& g) const { return {base.identity(), g}; }
};

}  // namespace sofic
