#pragma once

#include "sofic/core/random.hpp"
#include "sofic/core/rational.hpp"
#include "sofic/core/report.hpp"
#include "sofic/metric/permutation.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sofic {

/// A finite group given by its multiplication table, with a metric table.
/// Elements are indices 0..n-1. The metric is not validated on construction;
/// use check_biinvariant_metric for that.
class FiniteMetricGroup {
 public:
  using Element = int;
  using Distance = Rational;

  /// Validates closure, identity, inverses and associativity of the table.
  FiniteMetricGroup(std::vector<int> table, std::vector<Rational> metric, std::vector<std::string> labels = {});

  /// Builds the table from any enumerable group with a distance function.
  template <class E>
  static FiniteMetricGroup from_elements(const std::vector<E>& elems, const std::function<E(const E&, const E&)>& mul,
                                         const std::function<Rational(const E&, const E&)>& dist,
                                         const std::function<std::string(const E&)>& label = {});

  static FiniteMetricGroup cyclic(int n);
  static FiniteMetricGroup symmetric_hamming(std::size_t k);

  std::size_t size() const { return n_; }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const Rational& distance(int a, int b) const { return metric_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  std::vector<int> elements() const;
  std::string label(int a) const;

  const std::vector<int>& table() const { return table_; }
  const std::vector<Rational>& metric() const { return metric_; }

  /// Same group with every distance replaced by f(d).
  FiniteMetricGroup with_metric(const std::function<Rational(const Rational&)>& f) const;
  /// Same group with the discrete metric.
  FiniteMetricGroup discrete() const;

 private:
  std::size_t n_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<Rational> metric_;
  std::vector<std::string> labels_;
  int identity_ = 0;
};

template <class E>
FiniteMetricGroup FiniteMetricGroup::from_elements(const std::vector<E>& elems,
                                                   const std::function<E(const E&, const E&)>& mul,
                                                   const std::function<Rational(const E&, const E&)>& dist,
                                                   const std::function<std::string(const E&)>& label) {
  const std::size_t n = elems.size();
  auto index_of = [&](const E& x) -> int {
    for (std::size_t i = 0; i < n; ++i) {
      if (elems[i] == x) return static_cast<int>(i);
    }
    throw std::invalid_argument("element list is not closed under multiplication");
  };
  std::vector<int> table(n * n);
  std::vector<Rational> metric(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = index_of(mul(elems[i], elems[j]));
      metric[i * n + j] = dist(elems[i], elems[j]);
    }
  }
  std::vector<std::string> labels;
  if (label) {
    for (const auto& e : elems) labels.push_back(label(e));
  }
  return FiniteMetricGroup(std::move(table), std::move(metric), std::move(labels));
}

/// f(x) = 2x - x^2.
Rational amplify(const Rational& x);
/// f^n applied entrywise to the metric.
FiniteMetricGroup metric_transform_pow(const FiniteMetricGroup& g, unsigned n);

/// Metric axioms, range [0,1] and two-sided invariance. Exhaustive over all
/// triples when |G| <= cap, otherwise `samples` seeded triples (flagged approximate).
CheckReport check_biinvariant_metric(const FiniteMetricGroup& g, std::size_t cap = 200, std::uint64_t seed = 0,
                                     std::size_t samples = 20000);

}  // namespace sofic
