#include "genpos/report.hpp"

#include <sstream>

namespace genpos {
namespace {

std::string cell(const Json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

Json pair_json(const PairRecord& p) {
  return {{"index", p.index}, {"G", p.g}, {"H", p.h}, {"values", p.values}};
}

}  // namespace

Json to_json(const CheckReport& r, bool timing) {
  Json j;
  j["claim_id"] = r.claim_id;
  j["statement"] = r.statement;
  j["params"] = r.params;
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  if (timing) j["runtime_ms"] = r.runtime_ms;
  Json inst = Json::array();
  for (const auto& i : r.instances)
    inst.push_back({{"instance", i.label},
                    {"expected", i.expected},
                    {"computed", i.computed},
                    {"verdict", i.pass ? "PASS" : "FAIL"}});
  j["instances"] = std::move(inst);
  return j;
}

Json checks_document(const std::vector<CheckReport>& reports, bool timing) {
  int passed = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    passed += r.pass;
    list.push_back(to_json(r, timing));
  }
  Json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "checks";
  doc["summary"] = {{"total", reports.size()}, {"passed", passed}, {"failed", static_cast<int>(reports.size()) - passed}};
  doc["reports"] = std::move(list);
  return doc;
}

std::string checks_markdown(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "| claim | verdict | expected | computed | params |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& r : reports)
    os << "| " << r.claim_id << " | " << (r.pass ? "PASS" : "FAIL") << " | " << cell(r.expected) << " | "
       << cell(r.computed) << " | " << cell(r.params) << " |\n";
  bool header = false;
  for (const auto& r : reports)
    for (const auto& i : r.instances) {
      if (i.pass) continue;
      if (!header) {
        os << "\n| failing instance | claim | expected | computed |\n|---|---|---|---|\n";
        header = true;
      }
      os << "| " << cell(i.label) << " | " << r.claim_id << " | " << cell(i.expected) << " | " << cell(i.computed)
         << " |\n";
    }
  return os.str();
}

Json to_json(const ExplorerReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = "explore";
  j["problem"] = std::string(to_string(r.problem));
  j["G"] = r.g_source;
  j["H"] = r.h_source;
  j["total_pairs"] = r.total_pairs;
  j["start"] = r.start;
  j["examined"] = r.examined;
  j["skipped"] = r.skipped;
  j["next_cursor"] = r.next_cursor;
  j["complete"] = r.complete;
  j["table"] = r.table;
  Json v = Json::array(), c = Json::array();
  for (const auto& p : r.violations) v.push_back(pair_json(p));
  for (const auto& p : r.counterexamples) c.push_back(pair_json(p));
  j["violations"] = std::move(v);
  j["counterexamples"] = std::move(c);
  return j;
}

std::string explorer_markdown(const ExplorerReport& r) {
  std::ostringstream os;
  os << "**" << to_string(r.problem) << "** over " << r.g_source << " x " << r.h_source << ": " << r.examined
     << " pairs examined, " << r.skipped << " skipped" << (r.complete ? "" : ", incomplete (resume at " +
                                                                             std::to_string(r.next_cursor) + ")")
     << "\n\n| outcome | count |\n|---|---|\n";
  for (const auto& [k, v] : r.table.items()) os << "| " << k << " | " << v.dump() << " |\n";
  auto list = [&](const char* title, const std::vector<PairRecord>& recs) {
    if (recs.empty()) return;
    os << "\n| " << title << " | G | H | values |\n|---|---|---|---|\n";
    for (const auto& p : recs) os << "| " << p.index << " | " << cell(p.g) << " | " << cell(p.h) << " | " << cell(p.values) << " |\n";
  };
  list("violation", r.violations);
  list("counterexample", r.counterexamples);
  return os.str();
}

}  // namespace genpos
