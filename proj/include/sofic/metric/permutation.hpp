#pragma once

#include "sofic/core/rational.hpp"

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sofic {

/// Explicit permutation of {0..n-1}. Composition `a * b` applies b first.
/// The JSON and cycle-notation interfaces are 1-based.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t n);
  /// Validates that `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<std::uint32_t> images);
  static Permutation from_one_based(const std::vector<std::int64_t>& images);
  /// Product of 1-based cycles, e.g. from_cycles(4, {{1,2},{3,4}}).
  static Permutation from_cycles(std::size_t n, std::initializer_list<std::vector<std::uint32_t>> cycles);
  static Permutation cyclic_shift(std::size_t n, std::int64_t k);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  std::size_t fixed_points() const;
  std::size_t support_size() const { return degree() - fixed_points(); }
  std::size_t cycle_count() const;
  bool is_identity() const { return fixed_points() == degree(); }
  /// +1 for even, -1 for odd.
  int sign() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  std::vector<std::uint32_t> images_;
};

/// 1 - fix(a b^-1)/n, exact.
Rational hamming_distance(const Permutation& a, const Permutation& b);

/// All permutations of degree n in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(std::size_t n);

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);

/// Sym(n) with the normalized Hamming metric.
struct SymmetricGroup {
  using Element = Permutation;
  using Distance = Rational;
  std::size_t n;

  Element identity() const { return Permutation::identity(n); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  Distance distance(const Element& a, const Element& b) const { return hamming_distance(a, b); }
  std::vector<Element> elements() const { return all_permutations(n); }
};

}  // namespace sofic
