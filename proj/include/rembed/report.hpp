#pragma once

#include <string>

#include <json.hpp>

#include "rembed/analytics.hpp"
#include "rembed/enumeration.hpp"
#include "rembed/process.hpp"

namespace rembed {

/// %.12g rendering used for every real in reports.
std::string format_real(double x);

// JSON documents; object keys come out sorted, so output is canonical.
nlohmann::json to_json(const ExactStats& stats);
nlohmann::json to_json(const McEstimate& est, const std::string& graph_id = {});
nlohmann::json to_json(const BoundsReport& report);
nlohmann::json to_json(const ProcessTrace& trace);
nlohmann::json to_json(const AuditSummary& summary, const std::string& graph_id, std::uint64_t trials,
                       std::uint64_t seed);

// CSV with a versioned `#` header line naming the fixed column order.
std::string to_csv(const ExactStats& stats);
std::string to_csv(const McEstimate& est, const std::string& graph_id = {});
std::string to_csv(const BoundsReport& report);

std::string to_table(const ExactStats& stats);
std::string to_table(const McEstimate& est, const std::string& graph_id = {});
std::string to_table(const BoundsReport& report);
std::string to_table(const AuditSummary& summary, const std::string& graph_id);
std::string to_csv(const AuditSummary& summary, const std::string& graph_id);

}  // namespace rembed
