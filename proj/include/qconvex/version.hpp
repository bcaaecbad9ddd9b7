#pragma once

#include <string_view>

namespace qconvex {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kScenarioSchema = "qconvex.scenario/1";
inline constexpr std::string_view kReportSchema = "qconvex.report/1";
inline constexpr std::string_view kSweepSchema = "qconvex.sweep/1";
inline constexpr std::string_view kScanSchema = "qconvex.scan/1";

}  // namespace qconvex
