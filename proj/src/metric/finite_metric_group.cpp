#include "sofic/metric/finite_metric_group.hpp"

#include <stdexcept>

namespace sofic {

FiniteMetricGroup::FiniteMetricGroup(std::vector<int> table, std::vector<Rational> metric, std::vector<std::string> labels)
    : table_(std::move(table)), metric_(std::move(metric)), labels_(std::move(labels)) {
  std::size_t n = 0;
  while (n * n < table_.size()) ++n;
  if (n == 0 || n * n != table_.size()) throw std::invalid_argument("multiplication table must be n*n");
  if (metric_.size() != table_.size()) throw std::invalid_argument("metric table must be n*n");
  if (!labels_.empty() && labels_.size() != n) throw std::invalid_argument("label count mismatch");
  n_ = n;
  for (int x : table_) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) throw std::invalid_argument("multiplication table entry out of range");
  }
  identity_ = -1;
  for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = table_[e * n + x] == static_cast<int>(x) && table_[x * n + e] == static_cast<int>(x);
    }
    if (ok) identity_ = static_cast<int>(e);
  }
  if (identity_ < 0) throw std::invalid_argument("multiplication table has no identity");
  inverse_.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table_[x * n + y] == identity_ && table_[y * n + x] == identity_) inverse_[x] = static_cast<int>(y);
    }
    if (inverse_[x] < 0) throw std::invalid_argument("element " + std::to_string(x) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto ab = static_cast<std::size_t>(table_[a * n + b]);
        const auto bc = static_cast<std::size_t>(table_[b * n + c]);
        if (table_[ab * n + c] != table_[a * n + bc]) throw std::invalid_argument("multiplication table is not associative");
      }
}

FiniteMetricGroup FiniteMetricGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<int> table(nn * nn);
  std::vector<Rational> metric(nn * nn);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
      metric[static_cast<std::size_t>(a * n + b)] = a == b ? 0 : 1;
    }
  return FiniteMetricGroup(std::move(table), std::move(metric));
}

FiniteMetricGroup FiniteMetricGroup::symmetric_hamming(std::size_t k) {
  const auto perms = all_permutations(k);
  return from_elements<Permutation>(
      perms, [](const Permutation& a, const Permutation& b) { return a * b; },
      [](const Permutation& a, const Permutation& b) { return hamming_distance(a, b); },
      [](const Permutation& p) { return nlohmann::json(p).dump(); });
}

std::vector<int> FiniteMetricGroup::elements() const {
  std::vector<int> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<int>(i);
  return out;
}

std::string FiniteMetricGroup::label(int a) const {
  if (labels_.empty()) return std::to_string(a);
  return labels_[static_cast<std::size_t>(a)];
}

FiniteMetricGroup FiniteMetricGroup::with_metric(const std::function<Rational(const Rational&)>& f) const {
  std::vector<Rational> m;
  m.reserve(metric_.size());
  for (const auto& d : metric_) m.push_back(f(d));
  return FiniteMetricGroup(table_, std::move(m), labels_);
}

FiniteMetricGroup FiniteMetricGroup::discrete() const {
  std::vector<Rational> m(metric_.size());
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) m[a * n_ + b] = a == b ? 0 : 1;
  return FiniteMetricGroup(table_, std::move(m), labels_);
}

Rational amplify(const Rational& x) { return 2 * x - x * x; }

FiniteMetricGroup metric_transform_pow(const FiniteMetricGroup& g, unsigned n) {
  return g.with_metric([n](const Rational& d) {
    Rational x = d;
    for (unsigned i = 0; i < n; ++i) x = amplify(x);
    return x;
  });
}

namespace {

void check_triple(const FiniteMetricGroup& g, int x, int y, int z, CheckReport& r) {
  const Rational& dxy = g.distance(x, y);
  auto witness = [&](const char* axiom) {
    return Json{{"axiom", axiom}, {"x", g.label(x)}, {"y", g.label(y)}, {"z", g.label(z)}};
  };
  if (z == x) {
    if (dxy < 0 || dxy > 1) r.fail(witness("range"));
    if (x == y && dxy != 0) r.fail(witness("identity"));
    if (x != y && dxy == 0) r.fail(witness("indiscernibles"));
    if (dxy != g.distance(y, x)) r.fail(witness("symmetry"));
  }
  if (g.distance(x, z) > dxy + g.distance(y, z)) r.fail(witness("triangle"));
  if (g.distance(g.multiply(z, x), g.multiply(z, y)) != dxy) r.fail(witness("left-invariance"));
  if (g.distance(g.multiply(x, z), g.multiply(y, z)) != dxy) r.fail(witness("right-invariance"));
}

}  // namespace

CheckReport check_biinvariant_metric(const FiniteMetricGroup& g, std::size_t cap, std::uint64_t seed, std::size_t samples) {
  CheckReport r("biinvariant_metric");
  const auto n = static_cast<int>(g.size());
  r.details["order"] = g.size();
  if (g.size() <= cap) {
    r.details["mode"] = "exhaustive";
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) check_triple(g, x, y, z, r);
    r.details["triples"] = g.size() * g.size() * g.size();
  } else {
    r.details["mode"] = "sampled";
    r.details["seed"] = seed;
    r.details["triples"] = samples;
    r.approximate = true;
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto x = static_cast<int>(rng.below(g.size()));
      const auto y = static_cast<int>(rng.below(g.size()));
      const auto z = static_cast<int>(rng.below(g.size()));
      check_triple(g, x, y, z, r);
      check_triple(g, x, y, x, r);
    }
  }
  if (!r.violations.empty()) r.worst_witness = r.violations.front();
  return r;
}

}  // namespace sofic
