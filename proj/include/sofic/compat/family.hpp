#pragma once

#include "sofic/metric/field_matrix.hpp"
#include "sofic/metric/structured_perm.hpp"
#include "sofic/metric/unitary.hpp"
#include "sofic/metric/weak_element.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace sofic {

// Each family bundles the product map Delta, the base map tau and the acting
// map psi together with its declared constants. The continuity moduli are
// stated through their inverses: `*_continuity(t)` is the largest epsilon whose
// delta(epsilon) does not exceed t, so clause (a) at every epsilon is
// equivalent to "observed distance <= *_continuity(observed input distance)".

struct SoficFamily {
  using Group = StructuredSymmetricGroup;
  using Element = StructuredPerm;
  using Distance = Rational;

  WreathLayout layout = WreathLayout::Imprimitive;

  static std::string name() { return "sofic"; }
  Rational mu() const { return 1; }

  Element product(const Element& a, const Element& b) const { return StructuredPerm::product(a, b); }
  Group product_group(const Group& a, const Group& b) const { return {product(a.id, b.id)}; }

  Element base(const std::vector<Element>& gs) const {
    return StructuredPerm::wreath(gs, Permutation::identity(gs.size()), layout);
  }
  Element acting(const Group& inner, const Permutation& s) const {
    return StructuredPerm::wreath(std::vector<Element>(s.degree(), inner.id), s, layout);
  }
  Group wreath_group(const Group& inner, std::size_t n) const { return {acting(inner, Permutation::identity(n))}; }
  Element from_permutation(const Permutation& p) const { return StructuredPerm::from(p); }
  Group symmetric(std::size_t n) const { return {StructuredPerm::identity(n)}; }

  Distance delta_product(const Distance& eps) const { return eps / 2; }
  Distance delta_wreath(const Distance& eps) const { return eps / 2; }
  Distance product_continuity(const Distance& t) const { return 2 * t; }
  Distance wreath_continuity(const Distance& t) const { return 2 * t; }
};

struct LinearFamily {
  using Group = GeneralLinearGroup;
  using Element = FieldMatrix;
  using Distance = Rational;

  Field field;
  bool use_hat = true;  // false gives the plain tensor product, which is not a product map

  static std::string name() { return "linear"; }
  Rational mu() const { return Rational(1, 4); }

  Element product(const Element& a, const Element& b) const { return use_hat ? kronecker(hat(a), hat(b)) : kronecker(a, b); }
  Group product_group(const Group& a, const Group& b) const {
    return {use_hat ? 4 * a.dim * b.dim : a.dim * b.dim, field};
  }
  Element base(const std::vector<Element>& gs) const { return block_diagonal(gs); }
  Element acting(const Group& inner, const Permutation& s) const {
    return kronecker(permutation_matrix(s, field), FieldMatrix::identity(inner.dim, field));
  }
  Group wreath_group(const Group& inner, std::size_t n) const { return {inner.dim * n, field}; }
  Element from_permutation(const Permutation& p) const { return permutation_matrix(p, field); }
  Group symmetric(std::size_t n) const { return {n, field}; }

  Distance delta_product(const Distance& eps) const { return eps; }
  Distance delta_wreath(const Distance& eps) const { return eps / 2; }
  Distance product_continuity(const Distance& t) const { return t; }
  Distance wreath_continuity(const Distance& t) const { return 2 * t; }
};

struct HyperlinearFamily {
  using Group = UnitaryGroup;
  using Element = ComplexMatrix;
  using Distance = double;

  static std::string name() { return "hyperlinear"; }
  double mu() const { return 0.25; }

  Element product(const Element& a, const Element& b) const { return complex_kronecker(complex_hat(a), complex_hat(b)); }
  Group product_group(const Group& a, const Group& b) const { return {4 * a.dim * b.dim}; }
  Element base(const std::vector<Element>& gs) const { return complex_block_diagonal(gs); }
  Element acting(const Group& inner, const Permutation& s) const {
    return complex_kronecker(complex_permutation_matrix(s), inner.identity());
  }
  Group wreath_group(const Group& inner, std::size_t n) const { return {inner.dim * n}; }
  Element from_permutation(const Permutation& p) const { return complex_permutation_matrix(p); }
  Group symmetric(std::size_t n) const { return {n}; }

  Distance delta_product(double eps) const { return eps / 2; }
  Distance delta_wreath(double eps) const { return eps * eps / 5; }
  Distance product_continuity(double t) const { return 2 * t; }
  Distance wreath_continuity(double t) const { return std::sqrt(5 * t); }
};

struct WeakFamily {
  using Group = WeakGroup;
  using Element = WeakElement;
  using Distance = Rational;

  static std::string name() { return "weak"; }
  Rational mu() const { return 1; }

  Element product(const Element& a, const Element& b) const { return WeakElement::pair(a, b); }
  Group product_group(const Group& a, const Group& b) const { return {product(a.id, b.id)}; }
  Element base(const std::vector<Element>& gs) const { return WeakElement::wreath(gs, Permutation::identity(gs.size())); }
  Element acting(const Group& inner, const Permutation& s) const {
    return WeakElement::wreath(std::vector<Element>(s.degree(), inner.id), s);
  }
  Group wreath_group(const Group& inner, std::size_t n) const { return {acting(inner, Permutation::identity(n))}; }

  Distance delta_product(const Distance& eps) const { return eps; }
  Distance delta_wreath(const Distance& eps) const { return eps / 2; }
  Distance product_continuity(const Distance& t) const { return t; }
  Distance wreath_continuity(const Distance& t) const { return 2 * t; }
};

}  // namespace sofic
