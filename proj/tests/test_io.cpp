#include <random>
#include <sstream>

#include "genpos/families.hpp"
#include "genpos/io.hpp"
#include "genpos/products.hpp"
#include "genpos/strong_resolving.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace genpos;

// Reference strings produced by an independent graph6 encoder.
TEST_CASE("graph6 matches reference encodings") {
  CHECK(emit_graph6(family::petersen()) == "IheA@GUAo");
  CHECK(emit_graph6(strong_resolving_graph(family::path(5))) == "D?_");
  CHECK(emit_graph6(family::complete(1)) == "@");
  CHECK(emit_graph6(Graph(0)) == "?");
  CHECK(emit_graph6(family::complete(4)) == "C~");
  CHECK(emit_graph6(strong_product(family::path(3), family::cycle(5)).graph) == "NhfNJcxfGK_x?x?[_fG");
  const std::string path70 =
      "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@"
      "?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G??"
      "?????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_????????"
      "?G?????????@??????????C??????????G??????????G??????????C??????????@???????????G";
  CHECK(emit_graph6(family::path(70)) == path70);
  CHECK(parse_graph6(path70) == family::path(70));
}

TEST_CASE("D?{ is the star centred at 4") {
  const Graph g = parse_graph6("D?{");
  CHECK(g.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(emit_graph6(g) == "D?{");
  CHECK(parse_graph6(">>graph6<<D?{\r\n") == g);
}

TEST_CASE("graph6 round-trips enumerator output and random graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) CHECK(parse_graph6(emit_graph6(g)) == g);
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 41);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const std::string s = emit_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(emit_graph6(parse_graph6(s)) == s);
  }
  const Graph big = oracle::random_graph(100, 0.1, rng);
  CHECK(parse_graph6(emit_graph6(big)) == big);
}

TEST_CASE("graph6 errors") {
  CHECK_CODE(parse_graph6(""), ErrorCode::MalformedHeader);
  CHECK_CODE(parse_graph6("\n"), ErrorCode::MalformedHeader);
  CHECK_CODE(parse_graph6("D?"), ErrorCode::MalformedHeader);
  CHECK_CODE(parse_graph6("D\x01{"), ErrorCode::MalformedHeader);
  CHECK_CODE(parse_graph6("~??"), ErrorCode::MalformedHeader);
  CHECK_CODE(parse_graph6("D?{?"), ErrorCode::TrailingBits);
  // P_2 is "A_"; "A`" sets a padding bit
  CHECK(parse_graph6("A_") == family::path(2));
  CHECK_CODE(parse_graph6("A`"), ErrorCode::TrailingBits);
}

TEST_CASE("edge lists") {
  CHECK(parse_edgelist("n 3\n0 1\n1 2") == family::path(3));
  CHECK(parse_edgelist("# comment\n\nn 3\n0 1\n1 0\n1 2\n").size() == 2);
  CHECK(parse_edgelist("n 0\n").order() == 0);
  CHECK_CODE(parse_edgelist("n 3\n1 1\n"), ErrorCode::SelfLoop);
  CHECK_CODE(parse_edgelist("n 3\n0 3\n"), ErrorCode::VertexOutOfRange);
  CHECK_CODE(parse_edgelist("n 3\n0 -1\n"), ErrorCode::VertexOutOfRange);
  CHECK_CODE(parse_edgelist("n 3\n0 x\n"), ErrorCode::BadToken);
  CHECK_CODE(parse_edgelist("n 3\n0 1 2\n"), ErrorCode::BadToken);
  CHECK_CODE(parse_edgelist("0 1\n"), ErrorCode::BadToken);
  CHECK_CODE(parse_edgelist(""), ErrorCode::BadToken);
  const Graph p = family::petersen();
  CHECK(parse_edgelist(emit_edgelist(p)) == p);
  CHECK(emit_edgelist(family::path(3)) == "n 3\n0 1\n1 2\n");
}

TEST_CASE("streams of graphs") {
  std::istringstream g6("D?{\n\nC~\n");
  const auto a = read_graphs(g6, GraphFormat::Graph6);
  REQUIRE(a.size() == 2);
  CHECK(a[1] == family::complete(4));
  std::istringstream el("# two graphs\nn 2\n0 1\nn 3\n0 2\n");
  const auto b = read_graphs(el, GraphFormat::EdgeList);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == family::path(2));
  CHECK(b[1].edges() == std::vector<Edge>{{0, 2}});
  std::istringstream bad("0 1\nn 2\n");
  CHECK_CODE(read_graphs(bad, GraphFormat::EdgeList), ErrorCode::BadToken);
  CHECK(emit(family::path(2), GraphFormat::Graph6) == "A_\n");
}
