/// @file report.hpp
/// @brief Serialization of rate and estimate reports: JSON, CSV summaries,
///        and gnuplot-compatible two-column plot data.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hjlab/estimators.hpp"
#include "hjlab/rates.hpp"

namespace hjlab {

nlohmann::json to_json(const RateReport& r);
nlohmann::json to_json(const EstimateReport& r);
nlohmann::json to_json(const std::vector<EstimateReport>& rs);

/// CSV with columns (param, error, included) plus a fitted-order trailer row.
std::string rate_csv(const RateReport& r);

/// CSV with columns (time, measured, bound, margin, pass).
std::string estimates_csv(const std::vector<EstimateReport>& rs);

/// Two-column text (log10 param, log10 error) with a gnuplot header comment.
std::string plot_data(const RateReport& r);

/// Write content to path, creating parent directories as needed.
void write_file(const std::string& path, const std::string& content);

}  // namespace hjlab
