#pragma once

#include "horoct/identity.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace horoct {

enum class ReportFormat { json, csv, markdown_summary };

// "json" | "csv" | "markdown-summary"; UsageError otherwise.
ReportFormat parse_format(std::string_view name);

// Renders verdicts exactly as received. Byte-identical output for identical
// verdict sequences; rationals in canonical "num/den" form throughout.
std::string render_report(const std::vector<Verdict>& verdicts, ReportFormat format);

} // namespace horoct
