#pragma once

#include "sofic/core/random.hpp"
#include "sofic/core/rational.hpp"
#include "sofic/metric/permutation.hpp"

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

namespace sofic {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

/// How a wreath element ((g_i), sigma) acts.
///  - ProductAction: on C^n, coordinate i gets g_i and moves to slot sigma(i).
///  - Imprimitive: on n copies of C, (i, a) -> (sigma(i), g_i(a)).
enum class WreathLayout { ProductAction, Imprimitive };

/// Permutation of a possibly huge carrier, kept as a composition tree.
/// Products of like-shaped nodes stay in normal form; fixed points are counted
/// in closed form, so distances never need the carrier enumerated.
class StructuredPerm {
 public:
  struct Identity {
    BigInt carrier;
  };
  struct Explicit {
    Permutation perm;
  };
  struct Product {
    std::shared_ptr<const StructuredPerm> left, right;
  };
  struct Wreath {
    std::vector<StructuredPerm> bases;
    Permutation top;
    WreathLayout layout;
  };
  using Node = std::variant<Identity, Explicit, Product, Wreath>;

  StructuredPerm() : StructuredPerm(Identity{1}) {}
  static StructuredPerm identity(const BigInt& carrier) { return StructuredPerm(Identity{carrier}); }
  static StructuredPerm from(Permutation p);
  /// Acts on left.carrier x right.carrier by (a, b) -> (left a, right b).
  static StructuredPerm product(const StructuredPerm& left, const StructuredPerm& right);
  static StructuredPerm wreath(std::vector<StructuredPerm> bases, Permutation top, WreathLayout layout);

  const Node& node() const { return *node_; }
  const BigInt& carrier() const { return carrier_; }

  /// Exact fixed-point count from the tree structure.
  BigInt fixed_points() const;
  bool is_identity() const { return fixed_points() == carrier_; }

  /// Normal-form product; falls back to an explicit array when the shapes
  /// differ and the carrier is at most `cap`, else throws CapExceeded.
  StructuredPerm multiply(const StructuredPerm& other, std::uint64_t cap = kDefaultCap) const;
  StructuredPerm operator*(const StructuredPerm& other) const { return multiply(other); }
  StructuredPerm inverse() const;

  std::uint64_t apply(std::uint64_t x) const;
  BigInt apply(const BigInt& x) const;

  Permutation materialize(std::uint64_t cap = kDefaultCap) const;

 private:
  explicit StructuredPerm(Node n);
  std::shared_ptr<const Node> node_;
  BigInt carrier_;
};

/// 1 - fix(a b^-1)/N, exact via closed-form counting.
Rational hamming_distance(const StructuredPerm& a, const StructuredPerm& b);

/// Fixed points by walking the carrier; cross-check for the closed form.
BigInt fixed_points_by_enumeration(const StructuredPerm& p, std::uint64_t cap = kDefaultCap);

/// Seeded estimate of fix(p)/N from `samples` uniform points.
double sampled_fixed_fraction(const StructuredPerm& p, SplitMix64& rng, std::size_t samples);

/// Sym(carrier) in structured form; the stored element fixes the identity's shape.
struct StructuredSymmetricGroup {
  using Element = StructuredPerm;
  using Distance = Rational;
  StructuredPerm id;

  Element identity() const { return id; }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  Distance distance(const Element& a, const Element& b) const { return hamming_distance(a, b); }
};

}  // namespace sofic
