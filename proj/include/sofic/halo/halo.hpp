#pragma once

#include "sofic/core/random.hpp"
#include "sofic/core/report.hpp"
#include "sofic/halo/graph_word.hpp"
#include "sofic/metric/permutation.hpp"

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace sofic {

enum class HaloKind { Sym, Alt, DirectSum, GraphProduct, GLf };

std::string to_string(HaloKind k);
HaloKind halo_kind_from_string(const std::string& s);

/// Finitely supported permutation; only moved points are stored.
struct FinitaryPerm {
  std::map<long, long> moved;
  auto operator<=>(const FinitaryPerm&) const = default;
};

/// Finitely supported function to Z/q; only nonzero values are stored.
struct FinitarySum {
  std::map<long, long> values;
  auto operator<=>(const FinitarySum&) const = default;
};

/// Invertible matrix over Z/m on a finite support, identity elsewhere.
/// Kept trimmed: no support index whose row and column are both standard.
struct FinitaryLinear {
  std::vector<long> support;
  std::vector<long> entries;  // row-major, support.size()^2
  auto operator<=>(const FinitaryLinear&) const = default;
};

using HaloElement = std::variant<FinitaryPerm, FinitarySum, GraphWord, FinitaryLinear>;

void to_json(nlohmann::json& j, const HaloElement& e);

/// A halo functor evaluated on a space X: L(X) with the subgroups L(Y) given
/// by support. Set kinds accept any integer point; the graph-product kind lives
/// on its graph. Elements are canonical, so the halo is a CanonicalGroup.
class Halo {
 public:
  using Element = HaloElement;

  static Halo sym();
  static Halo alt();
  static Halo direct_sum(long q);
  static Halo graph_product(Graph g, long q);
  static Halo glf(long m);

  HaloKind kind() const { return kind_; }
  /// q for direct sums and graph products, m for glf, 0 otherwise.
  long modulus() const { return modulus_; }
  const GraphProductGroup& words() const;
  std::string name() const;

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;

  std::vector<long> support(const Element& a) const;
  /// a in L(Y): support inside Y (sorted), plus the parity test for alt.
  bool contains(const Element& a, const std::vector<long>& y) const;
  /// Image under the monomorphism induced by a point map, which must be
  /// injective on the support (and an induced embedding for graph products,
  /// into `target`'s graph when given).
  Element relabel(const Element& a, const std::function<long(long)>& f, const Halo* target = nullptr) const;

  /// L(Y) listed in sorted order; throws CapExceeded.
  std::vector<Element> elements_on(const std::vector<long>& y, std::uint64_t cap = 1u << 16) const;
  std::vector<Element> generators(const std::vector<long>& y) const;
  Element random_element(const std::vector<long>& y, SplitMix64& rng) const;

  Element transposition(long a, long b) const;
  Element cycle(const std::vector<long>& points) const;
  /// sigma on points labels[0..n-1].
  Element from_permutation(const Permutation& p, const std::vector<long>& labels) const;
  Element unit(long x, long value = 1) const;
  Element syllable(long v, long value = 1) const;
  /// E_{x,y}(r): identity plus r at (x, y).
  Element transvection(long x, long y, long r) const;
  /// D_x(lambda): lambda at (x, x).
  Element dilation(long x, long lambda) const;
  /// Entry (x, y) of a glf element.
  long matrix_entry(const Element& a, long x, long y) const;

  bool operator==(const Halo& o) const;

 private:
  Halo(HaloKind k, long modulus, std::shared_ptr<const GraphProductGroup> words)
      : kind_(k), modulus_(modulus), words_(std::move(words)) {}
  const Element& check_kind(const Element& a) const;
  HaloKind kind_;
  long modulus_;
  std::shared_ptr<const GraphProductGroup> words_;
};

/// L(Y) for a finite Y as an enumerable group.
struct HaloGroup {
  using Element = HaloElement;
  Halo halo;
  std::vector<long> points;
  std::uint64_t cap = 1u << 16;

  Element identity() const { return halo.identity(); }
  Element multiply(const Element& a, const Element& b) const { return halo.multiply(a, b); }
  Element inverse(const Element& a) const { return halo.inverse(a); }
  std::vector<Element> elements() const { return halo.elements_on(points, cap); }
};

/// Halo axioms on a finite X by exhaustive or sampled membership tests:
/// L(empty) trivial, induced maps injective and functorial, L(X) generated by
/// the listed generators, L(Y) meet L(Z) = L(Y meet Z), and support
/// equivariance under automorphisms of X.
CheckReport check_halo_axioms(const Halo& halo, const std::vector<long>& x, std::size_t samples, std::uint64_t seed,
                              std::uint64_t cap = 1u << 16);

}  // namespace sofic
