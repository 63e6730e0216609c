#include <cstdio>
#include <fstream>
#include <string>

#include "genpos/checks.hpp"
#include "genpos/explorer.hpp"
#include "genpos/families.hpp"
#include "genpos/io.hpp"
#include "genpos/report.hpp"
#include "support.hpp"

using namespace genpos;

TEST_CASE("claim selection") {
  const auto& reg = claim_registry();
  CHECK(reg.size() == 25);
  CHECK(select_claims({"*"}).size() == reg.size());
  const auto explorer = select_claims({"explorer-*"});
  CHECK(explorer == std::vector<std::string>{"explorer-problem-1", "explorer-problem-2"});
  // registry order, duplicates collapsed
  const auto two = select_claims({"eq-1-strong-grid", "thm-3.1-lower-bound", "thm-3.1-*"});
  REQUIRE(two.size() == 3);
  CHECK(two[0] == "thm-3.1-lower-bound");
  CHECK(two[2] == "eq-1-strong-grid");
  CHECK_CODE(select_claims({"no-such-id"}), ErrorCode::UnknownClaimId);
  CHECK_CODE(run_check("no-such-id", Budget{}), ErrorCode::UnknownClaimId);
}

TEST_CASE("a passing claim reports counts and instances") {
  const CheckReport r = run_check("eq-1-strong-grid", Budget{});
  CHECK(r.pass);
  CHECK(r.expected == r.computed);
  CHECK_FALSE(r.instances.empty());
  for (const auto& i : r.instances) CHECK(i.pass);
}

TEST_CASE("reports are deterministic across thread counts and runs") {
  Budget b;
  b.exhaustive_n = 5;
  const std::vector<std::string> pats = {"thm-3.1-*", "prop-*", "realization", "eq-1-strong-grid"};
  const std::string one = checks_document(run_checks(pats, b, 1)).dump(2);
  const std::string four = checks_document(run_checks(pats, b, 4)).dump(2);
  const std::string again = checks_document(run_checks(pats, b, 4)).dump(2);
  CHECK(one == four);
  CHECK(four == again);
  CHECK(one.find("runtime_ms") == std::string::npos);
  const auto reports = run_checks({"realization"}, b, 1);
  CHECK(checks_document(reports, true)["reports"][0].contains("runtime_ms"));
  const std::string md = checks_markdown(reports);
  CHECK(md.find("realization") != std::string::npos);
  CHECK(md.find("PASS") != std::string::npos);
}

TEST_CASE("explorer on empty catalogs is complete") {
  const Catalog empty = make_catalog("empty", {});
  const ExplorerReport r = explore_conjecture(Problem::StrongMultiplicative, empty, empty, {});
  CHECK(r.complete);
  CHECK(r.total_pairs == 0);
  CHECK(r.examined == 0);
  CHECK(r.next_cursor == 0);
  CHECK(r.violations.empty());
}

TEST_CASE("explorer drops disconnected graphs") {
  const Catalog c = make_catalog("mixed", {family::path(3), Graph(2), family::cycle(4)});
  CHECK(c.graphs.size() == 2);
  CHECK(c.rejected == 1);
}

TEST_CASE("explorer resumes where a bounded run stopped") {
  const Catalog g = load_catalog("connected:1-4");
  const Catalog h = load_catalog("connected:1-4");
  ExploreBudget all;
  const ExplorerReport full = explore_conjecture(Problem::StrongMultiplicative, g, h, all);
  CHECK(full.complete);
  CHECK(full.total_pairs == static_cast<std::int64_t>(g.graphs.size() * h.graphs.size()));
  CHECK(full.violations.empty());

  ExploreBudget first;
  first.max_pairs = 20;
  const ExplorerReport a = explore_conjecture(Problem::StrongMultiplicative, g, h, first);
  CHECK_FALSE(a.complete);
  CHECK(a.examined + a.skipped == 20);
  CHECK(a.next_cursor == 20);
  ExploreBudget rest;
  rest.start = a.next_cursor;
  const ExplorerReport b = explore_conjecture(Problem::StrongMultiplicative, g, h, rest);
  CHECK(b.complete);
  CHECK(b.next_cursor == full.total_pairs);
  CHECK(a.examined + b.examined == full.examined);
  for (const auto& [k, v] : full.table.items()) {
    const int lhs = a.table.value(k, 0) + b.table.value(k, 0);
    CHECK(lhs == v.get<int>());
  }
  CHECK(to_json(full)["complete"] == true);
  CHECK(explorer_markdown(full).find("equal") != std::string::npos);
}

TEST_CASE("catalog files and names") {
  const std::string path = "genpos_test_catalog.g6";
  {
    std::ofstream out(path);
    out << emit_graph6(family::petersen()) << "\n" << emit_graph6(Graph(3)) << "\n";
  }
  const Catalog c = load_catalog(path);
  CHECK(c.graphs.size() == 1);
  CHECK(c.rejected == 1);
  std::remove(path.c_str());
  CHECK(load_catalog("cycle:3-5").graphs.size() == 3);
  CHECK(load_catalog("connected:5").graphs.size() == 21);
  CHECK_CODE(load_catalog("cycle:5-3"), ErrorCode::InvalidParameter);
  CHECK_CODE(load_catalog("definitely/not/a/file"), ErrorCode::InvalidParameter);
}

TEST_CASE("problem names") {
  CHECK(parse_problem("problem-1") == Problem::DirectDichotomy);
  CHECK(parse_problem("problem-2") == Problem::StrongMultiplicative);
  CHECK(to_string(Problem::DirectDichotomy) == "problem-1");
  CHECK_CODE(parse_problem("problem-3"), ErrorCode::InvalidParameter);
}
