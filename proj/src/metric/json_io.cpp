#include "sofic/metric/json_io.hpp"

#include <stdexcept>

namespace sofic {

nlohmann::json metric_group_to_json(const FiniteMetricGroup& g) {
  const auto n = g.size();
  nlohmann::json table = nlohmann::json::array(), metric = nlohmann::json::array(), labels = nlohmann::json::array();
  for (std::size_t a = 0; a < n; ++a) {
    nlohmann::json trow = nlohmann::json::array(), mrow = nlohmann::json::array();
    for (std::size_t b = 0; b < n; ++b) {
      trow.push_back(g.multiply(static_cast<int>(a), static_cast<int>(b)));
      mrow.push_back(rational_to_json(g.distance(static_cast<int>(a), static_cast<int>(b))));
    }
    table.push_back(std::move(trow));
    metric.push_back(std::move(mrow));
    labels.push_back(g.label(static_cast<int>(a)));
  }
  return {{"table", table}, {"metric", metric}, {"labels", labels}};
}

FiniteMetricGroup metric_group_from_json(const nlohmann::json& j) {
  const auto& table = j.at("table");
  const auto& metric = j.at("metric");
  const auto n = table.size();
  if (metric.size() != n) throw std::invalid_argument("metric and table sizes differ");
  std::vector<int> t;
  std::vector<Rational> m;
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n || metric[a].size() != n) throw std::invalid_argument("tables must be square");
    for (std::size_t b = 0; b < n; ++b) {
      t.push_back(table[a][b].get<int>());
      m.push_back(rational_from_json(metric[a][b]));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return FiniteMetricGroup(std::move(t), std::move(m), std::move(labels));
}

nlohmann::json unitary_to_json(const ComplexMatrix& u) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array(), c = nlohmann::json::array();
    for (Eigen::Index k = 0; k < u.cols(); ++k) {
      r.push_back(u(i, k).real());
      c.push_back(u(i, k).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return {{"re", re}, {"im", im}};
}

ComplexMatrix unitary_from_json(const nlohmann::json& j) {
  const auto& re = j.at("re");
  const auto n = static_cast<Eigen::Index>(re.size());
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(re[i].size()) != n) throw std::invalid_argument("unitary must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      const double im = j.contains("im") ? j["im"][i][k].get<double>() : 0.0;
      u(i, k) = {re[i][k].get<double>(), im};
    }
  }
  require_unitary(u);
  return u;
}

}  // namespace sofic
