#pragma once

#include <string>

#include <json.hpp>

#include "toric/betti.hpp"
#include "toric/fan.hpp"

namespace toric {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

/// Machine-readable analysis bundle: fan summary, singularity census,
/// H/IH/HI tables, link analyses, invariant-check outcomes.
nlohmann::json build_report(const Fan& fan, const BPolicy& policy);

/// Side-by-side H~(IX) | IH | H table plus census summary.
std::string render_text(const nlohmann::json& report);

std::string render_json(const nlohmann::json& report);

}  // namespace toric
