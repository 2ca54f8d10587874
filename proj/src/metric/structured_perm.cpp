#include "sofic/metric/structured_perm.hpp"

#include "sofic/core/report.hpp"

#include <stdexcept>

namespace sofic {

namespace {

BigInt carrier_of(const StructuredPerm::Node& n) {
  return std::visit(
      [](const auto& x) -> BigInt {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, StructuredPerm::Identity>) {
          return x.carrier;
        } else if constexpr (std::is_same_v<T, StructuredPerm::Explicit>) {
          return BigInt(x.perm.degree());
        } else if constexpr (std::is_same_v<T, StructuredPerm::Product>) {
          return x.left->carrier() * x.right->carrier();
        } else {
          const BigInt c = x.bases.front().carrier();
          const auto n = x.bases.size();
          if (x.layout == WreathLayout::Imprimitive) return c * n;
          return boost::multiprecision::pow(c, static_cast<unsigned>(n));
        }
      },
      n);
}

template <class I>
I to_index(const BigInt& b) {
  if constexpr (std::is_same_v<I, BigInt>) {
    return b;
  } else {
    return b.convert_to<I>();
  }
}

template <class I>
std::uint32_t as_u32(const I& x) {
  if constexpr (std::is_same_v<I, BigInt>) {
    return x.template convert_to<std::uint32_t>();
  } else {
    return static_cast<std::uint32_t>(x);
  }
}

template <class I>
I apply_impl(const StructuredPerm& p, I x) {
  return std::visit(
      [&](const auto& n) -> I {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, StructuredPerm::Identity>) {
          return x;
        } else if constexpr (std::is_same_v<T, StructuredPerm::Explicit>) {
          return I(n.perm(as_u32(x)));
        } else if constexpr (std::is_same_v<T, StructuredPerm::Product>) {
          const I r = to_index<I>(n.right->carrier());
          const I a = x / r;
          const I b = x % r;
          return apply_impl<I>(*n.left, a) * r + apply_impl<I>(*n.right, b);
        } else {
          const I c = to_index<I>(n.bases.front().carrier());
          const auto k = n.bases.size();
          if (n.layout == WreathLayout::Imprimitive) {
            const I slot = x / c;
            const auto i = as_u32(slot);
            return I(n.top(i)) * c + apply_impl<I>(n.bases[i], I(x % c));
          }
          std::vector<I> digits(k), out(k);
          I rest = x;
          for (std::size_t i = 0; i < k; ++i) {
            digits[i] = rest % c;
            rest /= c;
          }
          for (std::size_t i = 0; i < k; ++i) {
            out[n.top(static_cast<std::uint32_t>(i))] = apply_impl<I>(n.bases[i], digits[i]);
          }
          I result = 0;
          for (std::size_t i = k; i-- > 0;) result = result * c + out[i];
          return result;
        }
      },
      p.node());
}

bool same_shape(const StructuredPerm::Wreath& a, const StructuredPerm::Wreath& b) {
  return a.layout == b.layout && a.bases.size() == b.bases.size() &&
         a.bases.front().carrier() == b.bases.front().carrier();
}

}  // namespace

StructuredPerm::StructuredPerm(Node n) : node_(std::make_shared<const Node>(std::move(n))) {
  carrier_ = carrier_of(*node_);
}

StructuredPerm StructuredPerm::from(Permutation p) { return StructuredPerm(Explicit{std::move(p)}); }

StructuredPerm StructuredPerm::product(const StructuredPerm& left, const StructuredPerm& right) {
  return StructuredPerm(Product{std::make_shared<const StructuredPerm>(left), std::make_shared<const StructuredPerm>(right)});
}

StructuredPerm StructuredPerm::wreath(std::vector<StructuredPerm> bases, Permutation top, WreathLayout layout) {
  if (bases.empty() || bases.size() != top.degree()) {
    throw std::invalid_argument("wreath node needs one base per coordinate of the top permutation");
  }
  for (const auto& b : bases) {
    if (b.carrier() != bases.front().carrier()) throw std::invalid_argument("wreath bases must share a carrier");
  }
  return StructuredPerm(Wreath{std::move(bases), std::move(top), layout});
}

BigInt StructuredPerm::fixed_points() const {
  return std::visit(
      [&](const auto& n) -> BigInt {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Identity>) {
          return n.carrier;
        } else if constexpr (std::is_same_v<T, Explicit>) {
          return BigInt(n.perm.fixed_points());
        } else if constexpr (std::is_same_v<T, Product>) {
          return n.left->fixed_points() * n.right->fixed_points();
        } else {
          const auto k = n.bases.size();
          if (n.layout == WreathLayout::Imprimitive) {
            BigInt total = 0;
            for (std::size_t i = 0; i < k; ++i) {
              if (n.top(static_cast<std::uint32_t>(i)) == i) total += n.bases[i].fixed_points();
            }
            return total;
          }
          // A point is fixed iff each cycle's first coordinate is fixed by the
          // composite of the bases met around that cycle.
          BigInt total = 1;
          std::vector<bool> seen(k, false);
          for (std::size_t i = 0; i < k; ++i) {
            if (seen[i]) continue;
            StructuredPerm around = n.bases[i];
            seen[i] = true;
            for (auto j = n.top(static_cast<std::uint32_t>(i)); j != i; j = n.top(j)) {
              around = n.bases[j].multiply(around);
              seen[j] = true;
            }
            total *= around.fixed_points();
            if (total == 0) break;
          }
          return total;
        }
      },
      *node_);
}

StructuredPerm StructuredPerm::multiply(const StructuredPerm& other, std::uint64_t cap) const {
  if (carrier_ != other.carrier_) throw std::invalid_argument("structured product: carrier mismatch");
  if (std::holds_alternative<Identity>(*node_)) return other;
  if (std::holds_alternative<Identity>(*other.node_)) return *this;
  if (auto* a = std::get_if<Explicit>(node_.get())) {
    if (auto* b = std::get_if<Explicit>(other.node_.get())) return from(a->perm * b->perm);
  }
  if (auto* a = std::get_if<Product>(node_.get())) {
    if (auto* b = std::get_if<Product>(other.node_.get())) {
      if (a->left->carrier() == b->left->carrier()) {
        return product(a->left->multiply(*b->left, cap), a->right->multiply(*b->right, cap));
      }
    }
  }
  if (auto* a = std::get_if<Wreath>(node_.get())) {
    if (auto* b = std::get_if<Wreath>(other.node_.get()); b && same_shape(*a, *b)) {
      // (g, s)(h, t) = (g_{t(i)} h_i, s t)
      std::vector<StructuredPerm> bases;
      bases.reserve(a->bases.size());
      for (std::size_t i = 0; i < a->bases.size(); ++i) {
        bases.push_back(a->bases[b->top(static_cast<std::uint32_t>(i))].multiply(b->bases[i], cap));
      }
      return wreath(std::move(bases), a->top * b->top, a->layout);
    }
  }
  if (carrier_ > cap) {
    throw CapExceeded("structured product of unlike shapes on " + carrier_.str() + " points exceeds cap");
  }
  return from(materialize(cap) * other.materialize(cap));
}

StructuredPerm StructuredPerm::inverse() const {
  return std::visit(
      [&](const auto& n) -> StructuredPerm {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Identity>) {
          return *this;
        } else if constexpr (std::is_same_v<T, Explicit>) {
          return from(n.perm.inverse());
        } else if constexpr (std::is_same_v<T, Product>) {
          return product(n.left->inverse(), n.right->inverse());
        } else {
          // (g, s)^-1 = ((g_{s^-1(i)})^-1, s^-1)
          const Permutation sinv = n.top.inverse();
          std::vector<StructuredPerm> bases;
          bases.reserve(n.bases.size());
          for (std::size_t i = 0; i < n.bases.size(); ++i) {
            bases.push_back(n.bases[sinv(static_cast<std::uint32_t>(i))].inverse());
          }
          return wreath(std::move(bases), sinv, n.layout);
        }
      },
      *node_);
}

std::uint64_t StructuredPerm::apply(std::uint64_t x) const {
  if (carrier_ > BigInt(std::numeric_limits<std::uint64_t>::max())) return apply(BigInt(x)).convert_to<std::uint64_t>();
  return apply_impl<std::uint64_t>(*this, x);
}

BigInt StructuredPerm::apply(const BigInt& x) const { return apply_impl<BigInt>(*this, x); }

Permutation StructuredPerm::materialize(std::uint64_t cap) const {
  if (auto* e = std::get_if<Explicit>(node_.get())) return e->perm;
  if (carrier_ > cap) throw CapExceeded("cannot materialize a permutation of " + carrier_.str() + " points");
  const auto n = carrier_.convert_to<std::uint64_t>();
  std::vector<std::uint32_t> img(n);
  for (std::uint64_t x = 0; x < n; ++x) img[x] = static_cast<std::uint32_t>(apply(x));
  return Permutation::from_images(std::move(img));
}

Rational hamming_distance(const StructuredPerm& a, const StructuredPerm& b) {
  if (a.carrier() != b.carrier()) throw std::invalid_argument("hamming_distance: carrier mismatch");
  const StructuredPerm q = a.multiply(b.inverse());
  return Rational(1) - Rational(q.fixed_points(), a.carrier());
}

BigInt fixed_points_by_enumeration(const StructuredPerm& p, std::uint64_t cap) {
  if (p.carrier() > cap) throw CapExceeded("carrier of " + p.carrier().str() + " points exceeds enumeration cap");
  const auto n = p.carrier().convert_to<std::uint64_t>();
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < n; ++x) count += p.apply(x) == x;
  return BigInt(count);
}

double sampled_fixed_fraction(const StructuredPerm& p, SplitMix64& rng, std::size_t samples) {
  if (samples == 0) return 0.0;
  const BigInt& n = p.carrier();
  const auto words = msb(n) / 64 + 2;
  std::size_t fixed = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    BigInt r = 0;
    for (std::size_t w = 0; w < words; ++w) r = (r << 64) | BigInt(rng());
    r %= n;
    fixed += p.apply(r) == r;
  }
  return static_cast<double>(fixed) / static_cast<double>(samples);
}

}  // namespace sofic
