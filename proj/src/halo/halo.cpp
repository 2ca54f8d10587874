#include "sofic/halo/halo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sofic {

std::string to_string(HaloKind k) {
  switch (k) {
    case HaloKind::Sym: return "sym";
    case HaloKind::Alt: return "alt";
    case HaloKind::DirectSum: return "directsum";
    case HaloKind::GraphProduct: return "graphproduct";
    case HaloKind::GLf: return "glf";
  }
  return "?";
}

HaloKind halo_kind_from_string(const std::string& s) {
  for (auto k : {HaloKind::Sym, HaloKind::Alt, HaloKind::DirectSum, HaloKind::GraphProduct, HaloKind::GLf})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown halo kind " + s);
}

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

long inverse_mod(long a, long m) {
  long g = m, x = 0, r = mod(a, m), y = 1;
  while (r != 0) {
    const long t = g / r;
    std::tie(g, r) = std::make_pair(r, g - t * r);
    std::tie(x, y) = std::make_pair(y, x - t * y);
  }
  if (g != 1) throw std::invalid_argument("not a unit mod " + std::to_string(m));
  return mod(x, m);
}

std::vector<long> union_sorted(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

bool is_subset(const std::vector<long>& a, const std::vector<long>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<long> sorted_unique(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Dense form of a glf element on a superset u of its support.
std::vector<long> dense(const FinitaryLinear& a, const std::vector<long>& u) {
  const std::size_t k = u.size(), s = a.support.size();
  std::vector<long> m(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) m[i * k + i] = 1;
  std::vector<std::size_t> pos(s);
  for (std::size_t i = 0; i < s; ++i) pos[i] = static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), a.support[i]) - u.begin());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) m[pos[i] * k + pos[j]] = a.entries[i * s + j];
  return m;
}

FinitaryLinear trimmed(std::vector<long> support, std::vector<long> entries, long m) {
  for (auto& e : entries) e = mod(e, m);
  for (;;) {
    const std::size_t k = support.size();
    std::size_t drop = k;
    for (std::size_t i = 0; i < k && drop == k; ++i) {
      bool standard = true;
      for (std::size_t j = 0; j < k && standard; ++j) {
        const long want = i == j ? 1 % m : 0;
        standard = entries[i * k + j] == want && entries[j * k + i] == want;
      }
      if (standard) drop = i;
    }
    if (drop == k) break;
    std::vector<long> next;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != drop && j != drop) next.push_back(entries[i * k + j]);
    support.erase(support.begin() + static_cast<std::ptrdiff_t>(drop));
    entries = std::move(next);
  }
  return {std::move(support), std::move(entries)};
}

// Inverse over Z/m by row reduction with Euclidean pivoting; throws when singular.
std::vector<long> invert_mod(std::vector<long> a, std::size_t k, long m) {
  std::vector<long> inv(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = 1 % m;
  auto row_op = [&](std::size_t dst, std::size_t src, long t) {  // row dst -= t row src
    for (std::size_t j = 0; j < k; ++j) {
      a[dst * k + j] = mod(a[dst * k + j] - t * a[src * k + j], m);
      inv[dst * k + j] = mod(inv[dst * k + j] - t * inv[src * k + j], m);
    }
  };
  auto swap_rows = [&](std::size_t r, std::size_t s) {
    for (std::size_t j = 0; j < k; ++j) {
      std::swap(a[r * k + j], a[s * k + j]);
      std::swap(inv[r * k + j], inv[s * k + j]);
    }
  };
  for (std::size_t c = 0; c < k; ++c) {
    for (;;) {
      std::size_t piv = k;
      for (std::size_t r = c; r < k; ++r)
        if (a[r * k + c] != 0 && (piv == k || a[r * k + c] < a[piv * k + c])) piv = r;
      if (piv == k) throw std::invalid_argument("matrix is not invertible mod " + std::to_string(m));
      if (piv != c) swap_rows(piv, c);
      bool done = true;
      for (std::size_t r = c + 1; r < k; ++r) {
        if (a[r * k + c] != 0) {
          row_op(r, c, a[r * k + c] / a[c * k + c]);
          if (a[r * k + c] != 0) done = false;
        }
      }
      if (done) break;
    }
    const long u = inverse_mod(a[c * k + c], m);
    for (std::size_t j = 0; j < k; ++j) {
      a[c * k + j] = mod(a[c * k + j] * u, m);
      inv[c * k + j] = mod(inv[c * k + j] * u, m);
    }
    for (std::size_t r = 0; r < k; ++r)
      if (r != c && a[r * k + c] != 0) row_op(r, c, a[r * k + c]);
  }
  return inv;
}

int finitary_sign(const FinitaryPerm& p) {
  std::set<long> seen;
  int sign = 1;
  for (auto [x, y] : p.moved) {
    if (seen.count(x)) continue;
    long len = 0, cur = x;
    do {
      seen.insert(cur);
      cur = p.moved.at(cur);
      ++len;
    } while (cur != x);
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

long apply_perm(const FinitaryPerm& p, long x) {
  auto it = p.moved.find(x);
  return it == p.moved.end() ? x : it->second;
}

}  // namespace

void to_json(nlohmann::json& j, const HaloElement& e) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FinitaryPerm>) {
          j = {{"perm", v.moved}};
        } else if constexpr (std::is_same_v<T, FinitarySum>) {
          j = {{"sum", v.values}};
        } else if constexpr (std::is_same_v<T, GraphWord>) {
          j = format_word(v);
        } else {
          j = {{"support", v.support}, {"matrix", v.entries}};
        }
      },
      e);
}

Halo Halo::sym() { return Halo(HaloKind::Sym, 0, nullptr); }
Halo Halo::alt() { return Halo(HaloKind::Alt, 0, nullptr); }
Halo Halo::direct_sum(long q) {
  if (q < 2) throw std::invalid_argument("direct sum needs Z/q with q >= 2");
  return Halo(HaloKind::DirectSum, q, nullptr);
}
Halo Halo::graph_product(Graph g, long q) {
  return Halo(HaloKind::GraphProduct, q, std::make_shared<const GraphProductGroup>(std::move(g), q));
}
Halo Halo::glf(long m) {
  if (m < 2 || m > 16) throw std::invalid_argument("glf needs Z/m with 2 <= m <= 16");
  return Halo(HaloKind::GLf, m, nullptr);
}

const GraphProductGroup& Halo::words() const {
  if (!words_) throw std::logic_error("halo has no graph");
  return *words_;
}

std::string Halo::name() const {
  switch (kind_) {
    case HaloKind::Sym: return "sym";
    case HaloKind::Alt: return "alt";
    case HaloKind::DirectSum: return "directsum(Z/" + std::to_string(modulus_) + ")";
    case HaloKind::GraphProduct:
      return "graphproduct(" + (modulus_ == 0 ? std::string("Z") : "Z/" + std::to_string(modulus_)) + ")";
    case HaloKind::GLf: return "glf(Z/" + std::to_string(modulus_) + ")";
  }
  return "?";
}

bool Halo::operator==(const Halo& o) const {
  if (kind_ != o.kind_ || modulus_ != o.modulus_) return false;
  return !words_ || words_->graph() == o.words_->graph();
}

HaloElement Halo::identity() const {
  switch (kind_) {
    case HaloKind::Sym:
    case HaloKind::Alt: return FinitaryPerm{};
    case HaloKind::DirectSum: return FinitarySum{};
    case HaloKind::GraphProduct: return GraphWord{};
    case HaloKind::GLf: return FinitaryLinear{};
  }
  return FinitaryPerm{};
}

const HaloElement& Halo::check_kind(const HaloElement& a) const {
  const std::size_t want = kind_ == HaloKind::Sym || kind_ == HaloKind::Alt ? 0
                           : kind_ == HaloKind::DirectSum                  ? 1
                           : kind_ == HaloKind::GraphProduct               ? 2
                                                                           : 3;
  if (a.index() != want) throw std::invalid_argument("element does not belong to halo " + name());
  return a;
}

HaloElement Halo::multiply(const HaloElement& a0, const HaloElement& b0) const {
  check_kind(a0);
  check_kind(b0);
  switch (kind_) {
    case HaloKind::Sym:
    case HaloKind::Alt: {
      const auto& a = std::get<FinitaryPerm>(a0);
      const auto& b = std::get<FinitaryPerm>(b0);
      FinitaryPerm r;
      std::set<long> pts;
      for (auto [x, y] : a.moved) pts.insert(x);
      for (auto [x, y] : b.moved) pts.insert(x);
      for (long x : pts) {
        const long y = apply_perm(a, apply_perm(b, x));
        if (y != x) r.moved[x] = y;
      }
      return r;
    }
    case HaloKind::DirectSum: {
      FinitarySum r = std::get<FinitarySum>(a0);
      for (auto [x, v] : std::get<FinitarySum>(b0).values) {
        const long s = mod(r.values[x] + v, modulus_);
        if (s == 0) {
          r.values.erase(x);
        } else {
          r.values[x] = s;
        }
      }
      return r;
    }
    case HaloKind::GraphProduct: return words_->multiply(std::get<GraphWord>(a0), std::get<GraphWord>(b0));
    case HaloKind::GLf: {
      const auto& a = std::get<FinitaryLinear>(a0);
      const auto& b = std::get<FinitaryLinear>(b0);
      const auto u = union_sorted(a.support, b.support);
      const std::size_t k = u.size();
      const auto da = dense(a, u), db = dense(b, u);
      std::vector<long> c(k * k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) {
          if (da[i * k + l] == 0) continue;
          for (std::size_t j = 0; j < k; ++j) c[i * k + j] = (c[i * k + j] + da[i * k + l] * db[l * k + j]) % modulus_;
        }
      return trimmed(u, std::move(c), modulus_);
    }
  }
  return a0;
}

HaloElement Halo::inverse(const HaloElement& a0) const {
  check_kind(a0);
  switch (kind_) {
    case HaloKind::Sym:
    case HaloKind::Alt: {
      FinitaryPerm r;
      for (auto [x, y] : std::get<FinitaryPerm>(a0).moved) r.moved[y] = x;
      return r;
    }
    case HaloKind::DirectSum: {
      FinitarySum r;
      for (auto [x, v] : std::get<FinitarySum>(a0).values) r.values[x] = mod(-v, modulus_);
      return r;
    }
    case HaloKind::GraphProduct: return words_->inverse(std::get<GraphWord>(a0));
    case HaloKind::GLf: {
      const auto& a = std::get<FinitaryLinear>(a0);
      return trimmed(a.support, invert_mod(a.entries, a.support.size(), modulus_), modulus_);
    }
  }
  return a0;
}

std::vector<long> Halo::support(const HaloElement& a0) const {
  check_kind(a0);
  std::vector<long> out;
  switch (kind_) {
    case HaloKind::Sym:
    case HaloKind::Alt:
      for (auto [x, y] : std::get<FinitaryPerm>(a0).moved) out.push_back(x);
      return out;
    case HaloKind::DirectSum:
      for (auto [x, v] : std::get<FinitarySum>(a0).values) out.push_back(x);
      return out;
    case HaloKind::GraphProduct: return words_->support(std::get<GraphWord>(a0));
    case HaloKind::GLf: return std::get<FinitaryLinear>(a0).support;
  }
  return out;
}

bool Halo::contains(const HaloElement& a, const std::vector<long>& y) const {
  if (!is_subset(support(a), sorted_unique(y))) return false;
  if (kind_ == HaloKind::Alt) return finitary_sign(std::get<FinitaryPerm>(a)) == 1;
  return true;
}

HaloElement Halo::relabel(const HaloElement& a0, const std::function<long(long)>& f, const Halo* target) const {
  check_kind(a0);
  const auto supp = support(a0);
  std::set<long> images;
  for (long x : supp)
    if (!images.insert(f(x)).second) throw std::invalid_argument("relabel: point map is not injective on the support");
  switch (kind_) {
    case HaloKind::Sym:
    case HaloKind::Alt: {
      FinitaryPerm r;
      for (auto [x, y] : std::get<FinitaryPerm>(a0).moved) r.moved[f(x)] = f(y);
      return r;
    }
    case HaloKind::DirectSum: {
      FinitarySum r;
      for (auto [x, v] : std::get<FinitarySum>(a0).values) r.values[f(x)] = v;
      return r;
    }
    case HaloKind::GraphProduct: {
      const Halo& dst = target ? *target : *this;
      if (dst.kind_ != HaloKind::GraphProduct || dst.modulus_ != modulus_) {
        throw std::invalid_argument("relabel: target is not a matching graph product");
      }
      if (!words_->graph().is_induced_embedding(supp, dst.words_->graph(), f)) {
        throw std::invalid_argument("relabel: point map is not an induced-subgraph embedding");
      }
      GraphWord w = std::get<GraphWord>(a0);
      for (auto& s : w.syllables) s.vertex = f(s.vertex);
      return dst.words_->canonical(w);
    }
    case HaloKind::GLf: {
      const auto& a = std::get<FinitaryLinear>(a0);
      const std::size_t k = a.support.size();
      std::vector<std::size_t> order(k);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return f(a.support[i]) < f(a.support[j]); });
      std::vector<long> supp2(k), entries(k * k);
      for (std::size_t i = 0; i < k; ++i) {
        supp2[i] = f(a.support[order[i]]);
        for (std::size_t j = 0; j < k; ++j) entries[i * k + j] = a.entries[order[i] * k + order[j]];
      }
      return FinitaryLinear{std::move(supp2), std::move(entries)};
    }
  }
  return a0;
}

std::vector<HaloElement> Halo::elements_on(const std::vector<long>& y0, std::uint64_t cap) const {
  const auto y = sorted_unique(y0);
  std::vector<HaloElement> out;
  auto guard = [&](double count) {
    if (count > static_cast<double>(cap)) throw CapExceeded("halo object L(Y) exceeds cap on |Y| = " + std::to_string(y.size()));
  };
  switch (kind_) {
    case HaloKind::Sym:
    case HaloKind::Alt: {
      double fact = 1;
      for (std::size_t i = 2; i <= y.size(); ++i) fact *= static_cast<double>(i);
      guard(fact);
      for (const auto& p : all_permutations(y.size()))
        if (kind_ == HaloKind::Sym || p.sign() == 1) out.push_back(from_permutation(p, y));
      break;
    }
    case HaloKind::DirectSum: {
      guard(std::pow(static_cast<double>(modulus_), static_cast<double>(y.size())));
      out.push_back(FinitarySum{});
      for (long x : y) {
        std::vector<HaloElement> next;
        for (const auto& e : out)
          for (long v = 0; v < modulus_; ++v) {
            FinitarySum s = std::get<FinitarySum>(e);
            if (v != 0) s.values[x] = v;
            next.push_back(s);
          }
        out = std::move(next);
      }
      break;
    }
    case HaloKind::GraphProduct: {
      const GraphProductGroup sub(words_->graph().induced(y), modulus_);
      for (auto& w : sub.elements(cap)) out.push_back(words_->canonical(w));
      break;
    }
    case HaloKind::GLf: {
      const std::size_t k = y.size();
      guard(std::pow(static_cast<double>(modulus_), static_cast<double>(k * k)));
      std::vector<long> entries(k * k, 0);
      for (;;) {
        try {
          invert_mod(entries, k, modulus_);
          out.push_back(trimmed(y, entries, modulus_));
        } catch (const std::invalid_argument&) {
        }
        std::size_t i = 0;
        while (i < entries.size() && ++entries[i] == modulus_) entries[i++] = 0;
        if (i == entries.size()) break;
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HaloElement> Halo::generators(const std::vector<long>& y0) const {
  const auto y = sorted_unique(y0);
  std::vector<HaloElement> out;
  switch (kind_) {
    case HaloKind::Sym:
      for (std::size_t i = 0; i + 1 < y.size(); ++i) out.push_back(transposition(y[i], y[i + 1]));
      break;
    case HaloKind::Alt:
      for (std::size_t i = 0; i + 2 < y.size(); ++i) out.push_back(cycle({y[i], y[i + 1], y[i + 2]}));
      break;
    case HaloKind::DirectSum:
      for (long x : y) out.push_back(unit(x));
      break;
    case HaloKind::GraphProduct:
      for (long x : y) out.push_back(syllable(x));
      break;
    case HaloKind::GLf:
      for (long a : y)
        for (long b : y)
          if (a != b) out.push_back(transvection(a, b, 1));
      for (long a : y)
        for (long l = 2; l < modulus_; ++l)
          if (std::gcd(l, modulus_) == 1) out.push_back(dilation(a, l));
      break;
  }
  return out;
}

HaloElement Halo::random_element(const std::vector<long>& y0, SplitMix64& rng) const {
  const auto y = sorted_unique(y0);
  switch (kind_) {
    case HaloKind::Sym:
    case HaloKind::Alt: {
      std::vector<std::uint32_t> img(y.size());
      std::iota(img.begin(), img.end(), 0u);
      for (std::size_t i = img.size(); i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
      auto p = Permutation::from_images(img);
      if (kind_ == HaloKind::Alt && p.sign() == -1) p = Permutation::from_cycles(y.size(), {{1, 2}}) * p;
      return from_permutation(p, y);
    }
    case HaloKind::DirectSum: {
      FinitarySum s;
      for (long x : y) {
        const long v = static_cast<long>(rng.below(static_cast<std::uint64_t>(modulus_)));
        if (v != 0) s.values[x] = v;
      }
      return s;
    }
    case HaloKind::GraphProduct: {
      if (y.empty()) return identity();
      GraphWord w;
      const std::size_t len = rng.below(9);
      const long span = modulus_ == 0 ? 5 : modulus_;
      for (std::size_t i = 0; i < len; ++i) {
        long v = static_cast<long>(rng.below(static_cast<std::uint64_t>(span)));
        if (modulus_ == 0) v -= 2;
        w.syllables.push_back({y[rng.below(y.size())], v});
      }
      return words_->canonical(w);
    }
    case HaloKind::GLf: {
      const auto gens = generators(y);
      HaloElement r = identity();
      if (gens.empty()) return r;
      for (std::size_t i = 0; i < 2 * y.size() + 4; ++i) r = multiply(r, gens[rng.below(gens.size())]);
      return r;
    }
  }
  return identity();
}

HaloElement Halo::transposition(long a, long b) const { return cycle({a, b}); }

HaloElement Halo::cycle(const std::vector<long>& pts) const {
  if (kind_ != HaloKind::Sym && kind_ != HaloKind::Alt) throw std::invalid_argument("cycle needs a permutation halo");
  if (std::set<long>(pts.begin(), pts.end()).size() != pts.size()) throw std::invalid_argument("cycle with repeated points");
  FinitaryPerm p;
  if (pts.size() < 2) return p;
  for (std::size_t i = 0; i < pts.size(); ++i) p.moved[pts[i]] = pts[(i + 1) % pts.size()];
  if (kind_ == HaloKind::Alt && finitary_sign(p) != 1) throw std::invalid_argument("odd cycle is not in the alternating halo");
  return p;
}

HaloElement Halo::from_permutation(const Permutation& p, const std::vector<long>& labels) const {
  if (kind_ != HaloKind::Sym && kind_ != HaloKind::Alt) throw std::invalid_argument("from_permutation needs a permutation halo");
  if (labels.size() != p.degree()) throw std::invalid_argument("from_permutation: label count mismatch");
  FinitaryPerm r;
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    if (p(i) != i) r.moved[labels[i]] = labels[p(i)];
  return r;
}

HaloElement Halo::unit(long x, long value) const {
  if (kind_ != HaloKind::DirectSum) throw std::invalid_argument("unit needs a direct-sum halo");
  FinitarySum s;
  if (mod(value, modulus_) != 0) s.values[x] = mod(value, modulus_);
  return s;
}

HaloElement Halo::syllable(long v, long value) const {
  if (kind_ != HaloKind::GraphProduct) throw std::invalid_argument("syllable needs a graph-product halo");
  return words_->generator(v, value);
}

HaloElement Halo::transvection(long x, long y, long r) const {
  if (kind_ != HaloKind::GLf) throw std::invalid_argument("transvection needs a glf halo");
  if (x == y) throw std::invalid_argument("transvection needs distinct points");
  const std::vector<long> supp = sorted_unique({x, y});
  std::vector<long> e{1, 0, 0, 1};
  e[x < y ? 1 : 2] = r;
  return trimmed(supp, e, modulus_);
}

HaloElement Halo::dilation(long x, long lambda) const {
  if (kind_ != HaloKind::GLf) throw std::invalid_argument("dilation needs a glf halo");
  inverse_mod(lambda, modulus_);
  return trimmed({x}, {lambda}, modulus_);
}

long Halo::matrix_entry(const HaloElement& a0, long x, long y) const {
  const auto& a = std::get<FinitaryLinear>(check_kind(a0));
  auto ix = std::lower_bound(a.support.begin(), a.support.end(), x);
  auto iy = std::lower_bound(a.support.begin(), a.support.end(), y);
  const bool hx = ix != a.support.end() && *ix == x, hy = iy != a.support.end() && *iy == y;
  if (!hx || !hy) return x == y ? 1 : 0;
  const std::size_t k = a.support.size();
  return a.entries[static_cast<std::size_t>(ix - a.support.begin()) * k + static_cast<std::size_t>(iy - a.support.begin())];
}

CheckReport check_halo_axioms(const Halo& halo, const std::vector<long>& x0, std::size_t samples, std::uint64_t seed,
                              std::uint64_t cap) {
  const auto x = sorted_unique(x0);
  CheckReport report("halo_axioms:" + halo.name());
  report.approximate = true;
  report.details["points"] = x.size();
  report.details["samples"] = samples;
  report.details["seed"] = seed;
  SplitMix64 rng(seed);
  const HaloElement e = halo.identity();

  CheckReport empty("empty_object_trivial");
  const auto l_empty = halo.elements_on({}, cap);
  if (l_empty.size() != 1 || l_empty[0] != e) empty.fail({{"order", l_empty.size()}});

  CheckReport gen("finite_generation");
  try {
    const auto all = halo.elements_on(x, cap);
    std::set<HaloElement> closure{e};
    std::vector<HaloElement> frontier{e};
    const auto gens = halo.generators(x);
    while (!frontier.empty()) {
      std::vector<HaloElement> next;
      for (const auto& a : frontier)
        for (const auto& g : gens) {
          auto b = halo.multiply(a, g);
          if (closure.insert(b).second) next.push_back(std::move(b));
        }
      frontier = std::move(next);
    }
    gen.details["order"] = all.size();
    if (closure != std::set<HaloElement>(all.begin(), all.end())) {
      gen.fail({{"generated", closure.size()}, {"order", all.size()}});
    }
  } catch (const CapExceeded& ex) {
    gen.details["skipped"] = ex.what();
  }

  // Point bijections of X that the functor must accept.
  std::vector<std::map<long, long>> autos;
  if (halo.kind() == HaloKind::GraphProduct) {
    try {
      autos = halo.words().graph().induced(x).automorphisms();
    } catch (const CapExceeded&) {
    }
  }
  auto random_bijection = [&]() {
    std::map<long, long> m;
    if (halo.kind() == HaloKind::GraphProduct) {
      if (autos.empty()) {
        for (long p : x) m[p] = p;
      } else {
        m = autos[rng.below(autos.size())];
      }
      return m;
    }
    std::vector<long> img = x;
    for (std::size_t i = img.size(); i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
    for (std::size_t i = 0; i < x.size(); ++i) m[x[i]] = img[i];
    return m;
  };
  auto random_subset = [&]() {
    std::vector<long> y;
    for (long p : x)
      if (rng.below(2) == 0) y.push_back(p);
    return y;
  };
  auto as_fn = [](const std::map<long, long>& m) { return [&m](long p) { return m.at(p); }; };

  CheckReport mono("induced_monomorphism");
  CheckReport func("functoriality");
  CheckReport monot("monotonicity");
  CheckReport inter("intersection");
  CheckReport equiv("support_equivariance");
  inter.approximate = true;
  inter.details["method"] = "support membership on sampled elements";
  for (std::size_t s = 0; s < samples; ++s) {
    const auto y = random_subset();
    const auto z = random_subset();
    std::vector<long> yz;
    std::set_intersection(y.begin(), y.end(), z.begin(), z.end(), std::back_inserter(yz));
    std::vector<long> yuz = union_sorted(y, z);
    const auto a = halo.random_element(y, rng);
    const auto b = halo.random_element(y, rng);
    const auto f = random_bijection();
    const auto g = random_bijection();

    const auto fa = halo.relabel(a, as_fn(f));
    if (halo.relabel(halo.multiply(a, b), as_fn(f)) != halo.multiply(fa, halo.relabel(b, as_fn(f)))) {
      mono.fail({{"sample", s}, {"clause", "homomorphism"}});
    }
    if ((fa == e) != (a == e)) mono.fail({{"sample", s}, {"clause", "injective"}});

    if (halo.relabel(a, [](long p) { return p; }) != a) func.fail({{"sample", s}, {"clause", "identity"}});
    std::map<long, long> gf;
    for (auto [p, q] : f) gf[p] = g.at(q);
    if (halo.relabel(fa, as_fn(g)) != halo.relabel(a, as_fn(gf))) func.fail({{"sample", s}, {"clause", "composition"}});

    if (!halo.contains(a, y) || !halo.contains(a, yuz)) monot.fail({{"sample", s}, {"element", a}});

    const auto c = halo.random_element(yz, rng);
    if (!halo.contains(c, y) || !halo.contains(c, z)) inter.fail({{"sample", s}, {"element", c}, {"clause", "L(Y meet Z) in both"}});
    if ((halo.contains(a, y) && halo.contains(a, z)) != halo.contains(a, yz)) {
      inter.fail({{"sample", s}, {"element", a}, {"clause", "L(Y) meet L(Z) in L(Y meet Z)"}});
    }

    std::vector<long> moved;
    for (long p : halo.support(a)) moved.push_back(f.at(p));
    if (halo.support(fa) != sorted_unique(moved)) equiv.fail({{"sample", s}, {"element", a}});
  }
  report.absorb(std::move(empty));
  report.absorb(std::move(gen));
  report.absorb(std::move(mono));
  report.absorb(std::move(func));
  report.absorb(std::move(monot));
  report.absorb(std::move(inter));
  report.absorb(std::move(equiv));
  return report;
}

}  // namespace sofic
