#pragma once

#include "sofic/metric/finite_metric_group.hpp"
#include "sofic/metric/unitary.hpp"

#include <json.hpp>

namespace sofic {

/// {"table": [[int]], "metric": [[rational]], "labels": [string]?}, 0-based indices.
nlohmann::json metric_group_to_json(const FiniteMetricGroup& g);
FiniteMetricGroup metric_group_from_json(const nlohmann::json& j);

/// {"re": [[double]], "im": [[double]]}; the imaginary part may be omitted.
nlohmann::json unitary_to_json(const ComplexMatrix& u);
ComplexMatrix unitary_from_json(const nlohmann::json& j);

}  // namespace sofic
