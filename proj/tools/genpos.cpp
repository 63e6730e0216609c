#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "genpos/checks.hpp"
#include "genpos/explorer.hpp"
#include "genpos/families.hpp"
#include "genpos/gp.hpp"
#include "genpos/io.hpp"
#include "genpos/products.hpp"
#include "genpos/report.hpp"
#include "genpos/strong_resolving.hpp"

using namespace genpos;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitIncomplete = 3;

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidParameter, "bad integer '" + tok + "' in family arguments");
    }
  }
  return out;
}

// name[:a,b,...]; a bare name takes its single size from --n.
Graph build_family(const std::string& spec, int n, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<int> a = colon == std::string::npos ? std::vector<int>{} : int_list(spec.substr(colon + 1));
  if (a.empty() && n > 0) a.push_back(n);
  auto need = [&](std::size_t k) {
    if (a.size() != k)
      throw Error(ErrorCode::InvalidParameter,
                  "family '" + name + "' takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
  };
  if (name == "petersen") return family::petersen();
  if (name == "path") return need(1), family::path(a[0]);
  if (name == "cycle") return need(1), family::cycle(a[0]);
  if (name == "complete") return need(1), family::complete(a[0]);
  if (name == "edgeless") return need(1), family::edgeless(a[0]);
  if (name == "star") return need(1), family::star(a[0]);
  if (name == "complete_bipartite") return need(2), family::complete_bipartite(a[0], a[1]);
  if (name == "multipartite") return family::complete_multipartite(a);
  if (name == "tree_T") return need(1), family::tree_T(family::TreeTSpec::minimal(a[0]));
  if (name == "realization") return need(2), family::realization_gadget(a[0], a[1]);
  if (name == "clique_gadget") return need(2), family::rooted_clique_gadget(a[0], a[1]).graph;
  if (name == "random_tree") return need(1), family::random_tree(a[0], seed);
  throw Error(ErrorCode::InvalidParameter, "unknown family '" + name + "'");
}

GraphFormat parse_format(const std::string& s) { return s == "edgelist" ? GraphFormat::EdgeList : GraphFormat::Graph6; }

struct Input {
  std::string family;
  int n = 0;
  bool stdin_ = false;
  std::string file;
  std::string format = "graph6";

  void attach(CLI::App* app) {
    app->add_option("--family", family, "Named graph, e.g. petersen, path:5, complete_bipartite:2,3");
    app->add_option("--n", n, "Size for a bare --family name");
    app->add_flag("--stdin", stdin_, "Read graphs from standard input");
    app->add_option("--in", file, "Read graphs from a file");
    app->add_option("--format", format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  }
};

struct Global {
  std::uint64_t seed = 1;
  int max_n = 40;
};

std::vector<Graph> read_inputs(const Input& in, const Global& gl) {
  std::vector<Graph> out;
  if (!in.family.empty()) {
    out.push_back(build_family(in.family, in.n, gl.seed));
  } else if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw Error(ErrorCode::InvalidParameter, "cannot open '" + in.file + "'");
    out = read_graphs(f, parse_format(in.format));
  } else if (in.stdin_) {
    out = read_graphs(std::cin, parse_format(in.format));
  } else {
    throw CLI::ValidationError("input", "give --family, --in or --stdin");
  }
  for (const auto& g : out)
    if (g.order() > gl.max_n)
      throw Error(ErrorCode::TooLarge, "graph of order " + std::to_string(g.order()) + " exceeds --max-n " +
                                           std::to_string(gl.max_n));
  return out;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidParameter, "cannot write '" + path + "'");
  f << text;
}

std::string value_line(const char* key, int value, const VertexSet& w, bool json) {
  if (json) return Json{{"schema", kReportSchema}, {key, value}, {"witness", w.members()}}.dump() + "\n";
  return std::to_string(value) + " " + to_string(w) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"General position sets, strong resolving graphs and graph products"};
  app.require_subcommand(1);
  Global gl;
  if (const char* env = std::getenv("GENPOS_MAX_N")) {
    try {
      gl.max_n = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: GENPOS_MAX_N is not an integer\n";
      return kExitError;
    }
  }
  app.add_option("--seed", gl.seed, "Seed for random families and sampled checks");
  app.add_option("--max-n", gl.max_n, "Largest accepted input order (default GENPOS_MAX_N or 40)");

  bool json = false;
  std::string out_path;
  std::string emit_fmt = "graph6";
  auto json_opts = [&](CLI::App* s) {
    s->add_flag("--json", json, "Machine-readable output");
    s->add_option("--out", out_path, "Write to a file instead of stdout");
  };
  auto emit_opt = [&](CLI::App* s) {
    s->add_option("--emit", emit_fmt, "Output graph format")->check(CLI::IsMember({"graph6", "edgelist"}));
    s->add_option("--out", out_path, "Write to a file instead of stdout");
  };

  Input in;
  int rc = 0;

  auto* gp_cmd = app.add_subcommand("gp", "General position number and a lexicographically least gp-set");
  in.attach(gp_cmd);
  json_opts(gp_cmd);
  gp_cmd->callback([&] {
    std::string text;
    for (const auto& g : read_inputs(in, gl)) {
      const GpResult r = gp_number(g);
      text += value_line("gp", r.value, r.witness, json);
    }
    write_out(out_path, text);
  });

  auto* srg_cmd = app.add_subcommand("srg", "Strong resolving graph");
  in.attach(srg_cmd);
  emit_opt(srg_cmd);
  srg_cmd->callback([&] {
    std::string text;
    for (const auto& g : read_inputs(in, gl)) text += emit(strong_resolving_graph(g), parse_format(emit_fmt));
    write_out(out_path, text);
  });

  for (const char* name : {"omega", "alpha", "eta"}) {
    auto* s = app.add_subcommand(name, std::string(name == std::string("omega")   ? "Clique number"
                                                   : name == std::string("alpha") ? "Independence number"
                                                                                  : "Largest induced union of >= 2 cliques"));
    in.attach(s);
    json_opts(s);
    s->callback([&, name] {
      std::string text;
      for (const auto& g : read_inputs(in, gl)) {
        const std::string which = name;
        const CliqueResult r = which == "omega" ? clique_number(g) : which == "alpha" ? independence_number(g) : eta(g);
        text += value_line(name, r.value, r.witness, json);
      }
      write_out(out_path, text);
    });
  }

  std::string op = "strong", lhs, rhs;
  int root = 0;
  auto* product_cmd = app.add_subcommand("product", "Build a graph product");
  product_cmd->add_option("--op", op, "Product")
      ->check(CLI::IsMember({"strong", "direct", "lexicographic", "corona", "rooted"}));
  product_cmd->add_option("--lhs", lhs, "Left factor (family spec)")->required();
  product_cmd->add_option("--rhs", rhs, "Right factor or gadget (family spec)")->required();
  product_cmd->add_option("--root", root, "Gadget root for --op rooted");
  emit_opt(product_cmd);
  product_cmd->callback([&] {
    const Graph g = build_family(lhs, 0, gl.seed), h = build_family(rhs, 0, gl.seed);
    ProductGraph p;
    if (op == "strong") p = strong_product(g, h);
    else if (op == "direct") p = direct_product(g, h);
    else if (op == "lexicographic") p = lexicographic_product(g, h);
    else if (op == "corona") p = corona(g, h);
    else p = rooted_product({g, h, root});
    write_out(out_path, emit(p.graph, parse_format(emit_fmt)));
  });

  int connected_n = 0;
  auto* gen_cmd = app.add_subcommand("generate", "Emit a named graph or all connected graphs of an order");
  gen_cmd->add_option("--family", in.family, "Named graph");
  gen_cmd->add_option("--n", in.n, "Size for a bare --family name");
  gen_cmd->add_option("--connected", connected_n, "All connected graphs of this order (1..6)");
  emit_opt(gen_cmd);
  gen_cmd->callback([&] {
    std::string text;
    if (connected_n > 0) {
      for (const auto& g : enumerate_connected_graphs(connected_n)) text += emit(g, parse_format(emit_fmt));
    } else if (!in.family.empty()) {
      text = emit(build_family(in.family, in.n, gl.seed), parse_format(emit_fmt));
    } else {
      throw CLI::ValidationError("generate", "give --family or --connected");
    }
    write_out(out_path, text);
  });

  std::vector<std::string> claims;
  Budget budget;
  int jobs = 1;
  bool markdown = false, timing = false, list = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the claim registry");
  verify_cmd->add_option("claims", claims, "Claim ids, '*' globs allowed (default: all)");
  verify_cmd->add_option("--jobs", jobs, "Claims run in parallel");
  verify_cmd->add_option("--exhaustive-n", budget.exhaustive_n, "Largest order of exhaustive sweeps");
  verify_cmd->add_option("--max-factor-n", budget.max_factor_n, "Largest product factor order");
  verify_cmd->add_option("--max-product-n", budget.max_product_n, "Largest product order");
  verify_cmd->add_option("--sampled-n7", budget.sampled_n7, "Random order-7 graphs in the characterization sweep");
  verify_cmd->add_flag("--md", markdown, "Markdown table instead of JSON");
  verify_cmd->add_flag("--timing", timing, "Include runtime_ms in JSON");
  verify_cmd->add_flag("--list", list, "List claim ids and exit");
  verify_cmd->add_option("--out", out_path, "Write to a file instead of stdout");
  verify_cmd->callback([&] {
    if (list) {
      std::string text;
      for (const auto& c : claim_registry()) text += c.id + "\t" + c.statement + "\n";
      write_out(out_path, text);
      return;
    }
    budget.seed = gl.seed;
    if (claims.empty()) claims = {"*"};
    const auto reports = run_checks(claims, budget, jobs);
    write_out(out_path, markdown ? checks_markdown(reports) : checks_document(reports, timing).dump(2) + "\n");
    if (!all_pass(reports)) rc = kExitFail;
  });

  std::string problem, g_cat, h_cat;
  ExploreBudget eb;
  auto* explore_cmd = app.add_subcommand("explore", "Sweep catalog pairs for an open question");
  explore_cmd->add_option("problem", problem, "problem-1 (direct) or problem-2 (strong)")
      ->required()
      ->check(CLI::IsMember({"problem-1", "problem-2"}));
  explore_cmd->add_option("--catalog-g", g_cat, "Catalog for G: connected:A-B, path:A-B, ... or a file")->required();
  explore_cmd->add_option("--catalog-h", h_cat, "Catalog for H (default: same as --catalog-g)");
  explore_cmd->add_option("--max-pairs", eb.max_pairs, "Stop after this many pairs");
  explore_cmd->add_option("--resume", eb.start, "Start at this pair index");
  explore_cmd->add_option("--max-product-n", eb.max_product_n, "Skip larger products");
  explore_cmd->add_flag("--md", markdown, "Markdown instead of JSON");
  explore_cmd->add_option("--out", out_path, "Write to a file instead of stdout");
  explore_cmd->callback([&] {
    const Catalog cg = load_catalog(g_cat);
    const Catalog ch = h_cat.empty() ? cg : load_catalog(h_cat);
    const ExplorerReport r = explore_conjecture(parse_problem(problem), cg, ch, eb);
    write_out(out_path, markdown ? explorer_markdown(r) : to_json(r).dump(2) + "\n");
    if (!r.complete) {
      std::cerr << "budget exceeded: resume with --resume " << r.next_cursor << "\n";
      rc = kExitIncomplete;
    }
  });

  auto* convert_cmd = app.add_subcommand("convert", "Translate between graph6 and edge lists");
  in.attach(convert_cmd);
  emit_opt(convert_cmd);
  convert_cmd->callback([&] {
    std::string text;
    for (const auto& g : read_inputs(in, gl)) text += emit(g, parse_format(emit_fmt));
    write_out(out_path, text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return rc;
}
