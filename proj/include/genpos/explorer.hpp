#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "genpos/checks.hpp"
#include "genpos/graph.hpp"

namespace genpos {

struct CatalogEntry {
  Graph graph;
  std::string provenance;
};

/// Connected graphs only; disconnected input is dropped and counted.
struct Catalog {
  std::string source;
  std::vector<CatalogEntry> graphs;
  int rejected = 0;
};

Catalog make_catalog(std::string source, const std::vector<Graph>& graphs);

/// Builtin names: "connected:N" or "connected:A-B" (all connected graphs of
/// those orders), "path:A-B", "cycle:A-B", "complete:A-B", "star:A-B"
/// (leaf counts). Anything else is read as a file: graph6 lines, or edge
/// lists when the first meaningful line starts with "n".
Catalog load_catalog(const std::string& source);

enum class Problem {
  /// gp(G x H) = omega((G x H)_SR) only when diam(G x H) = 2?
  DirectDichotomy,
  /// gp(G ⊠ H) = gp(G) gp(H)?
  StrongMultiplicative,
};

/// "problem-1" / "problem-2"; throws InvalidParameter.
Problem parse_problem(std::string_view name);
std::string_view to_string(Problem p);

struct ExploreBudget {
  /// Pairs to examine in this run; negative means no limit.
  std::int64_t max_pairs = -1;
  /// Resume cursor: index of the first pair, pairs numbered g-major.
  std::int64_t start = 0;
  int max_product_n = 64;
};

struct PairRecord {
  std::int64_t index = 0;
  std::string g;
  std::string h;
  Json values;
};

struct ExplorerReport {
  Problem problem = Problem::StrongMultiplicative;
  std::string g_source;
  std::string h_source;
  std::int64_t total_pairs = 0;
  std::int64_t start = 0;
  std::int64_t examined = 0;
  std::int64_t skipped = 0;
  /// First pair not examined; equals total_pairs when complete.
  std::int64_t next_cursor = 0;
  bool complete = true;
  /// Outcome label -> count, e.g. "equal", "strict".
  Json table = Json::object();
  /// Instances contradicting a proven bound (expected to stay empty).
  std::vector<PairRecord> violations;
  /// Instances answering the open question in the negative.
  std::vector<PairRecord> counterexamples;
};

/// Sweeps catalog_g x catalog_h in catalog order. Running out of max_pairs
/// is not an error: the report is marked incomplete with next_cursor set.
ExplorerReport explore_conjecture(Problem problem, const Catalog& g, const Catalog& h, const ExploreBudget& budget);

}  // namespace genpos
