#pragma once

#include <string>
#include <vector>

#include "genpos/checks.hpp"
#include "genpos/explorer.hpp"

namespace genpos {

inline constexpr int kReportSchema = 1;

// runtime_ms is only written when `timing` is set, so default reports are
// byte-identical between runs.
Json to_json(const CheckReport& r, bool timing = false);
Json checks_document(const std::vector<CheckReport>& reports, bool timing = false);
std::string checks_markdown(const std::vector<CheckReport>& reports);

Json to_json(const ExplorerReport& r);
std::string explorer_markdown(const ExplorerReport& r);

}  // namespace genpos
