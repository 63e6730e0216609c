#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace genpos {

using Json = nlohmann::ordered_json;

/// Size caps for the verification registry. Instances above a cap are
/// skipped and counted, never truncated silently.
struct Budget {
  int exhaustive_n = 6;
  int max_factor_n = 7;
  int max_product_n = 64;
  /// Random order-7 graphs added to the exhaustive characterization sweep.
  int sampled_n7 = 40;
  std::uint64_t seed = 1;
};

struct InstanceResult {
  std::string label;
  Json expected;
  Json computed;
  bool pass = false;
};

/// expected/computed count instances; the verdict is exact equality.
/// `instances` lists every instance for parametric claims and only the
/// failures for exhaustive sweeps.
struct CheckReport {
  std::string claim_id;
  std::string statement;
  Json params = Json::object();
  Json expected;
  Json computed;
  bool pass = false;
  double runtime_ms = 0;
  std::vector<InstanceResult> instances;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
  std::string parameters;
};

/// Every claim id in registry order.
const std::vector<ClaimInfo>& claim_registry();

/// Expands '*' globs against the registry, keeping registry order. A pattern
/// matching nothing throws UnknownClaimId.
std::vector<std::string> select_claims(const std::vector<std::string>& patterns);

CheckReport run_check(const std::string& id, const Budget& budget);

/// Runs the selected claims on up to `jobs` threads; the result order is the
/// registry order whatever the completion order.
std::vector<CheckReport> run_checks(const std::vector<std::string>& patterns, const Budget& budget, int jobs = 1);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace genpos
