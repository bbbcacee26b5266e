#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mgfix/axioms.hpp"
#include "mgfix/contraction.hpp"
#include "mgfix/picard.hpp"

namespace mgfix {

// JSON views of the report types. Points are emitted as plain decimal
// values, distances as log-domain values. Key order is fixed, so equal
// inputs serialize to byte-identical text.

nlohmann::ordered_json to_json(const Interval& interval);
nlohmann::ordered_json to_json(const AxiomReport& report);
nlohmann::ordered_json to_json(const CertificateReport& report);
nlohmann::ordered_json to_json(const PicardTrace& trace);
nlohmann::ordered_json to_json(const FixedPointResult& result);

/// One row per iterate: index,value,step_log,in_ball. step_log is
/// ln G(x_j, x_{j+1}, x_{j+1}) and is empty on the final row.
std::string trace_csv(const PicardTrace& trace);

}  // namespace mgfix
