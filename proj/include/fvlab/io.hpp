#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fvlab/limits.hpp"

namespace fvlab {

/// %.17g; nan and inf spelled "nan", "inf", "-inf".
std::string format_double(double v);

/// Rows joined with ',' and terminated by '\n'.
std::string csv_text(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

/// Non-finite numbers become null.
nlohmann::json number_or_null(double v);

/// {tag, value (Finite only), slope, residual}.
nlohmann::json verdict_json(const LimitVerdict& v);

std::string trace_csv(const VariationTrace& t);

/// Writes text exactly as given.  Throws Error when the file cannot be opened.
void write_file(const std::string& path, const std::string& text);

/// Two-space indented dump followed by '\n'; keys are sorted.
std::string json_text(const nlohmann::json& j);

}  // namespace fvlab
