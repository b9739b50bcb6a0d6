#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "specdev/generators.hpp"
#include "specdev/graph6.hpp"

using namespace specdev;

TEST_CASE("decoding hand-checked strings") {
  // 'B' = 3 vertices; '_' = 32 = 100000b sets the first pair bit, edge {0,1}
  const Graph b = from_graph6("B_");
  CHECK(b.vertex_count() == 3);
  CHECK(b.edge_count() == 1);
  CHECK(b.adjacent(0, 1));

  const Graph empty3 = from_graph6("B?");
  CHECK(empty3.vertex_count() == 3);
  CHECK(empty3.edge_count() == 0);

  const Graph triangle = from_graph6("Bw");
  CHECK(triangle.edge_count() == 3);

  // 'D' = 5 vertices; "Qc" decodes to edges {0,2},{1,3},{0,4},{3,4}
  const Graph g = from_graph6("DQc");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(1, 3));
  CHECK(g.adjacent(0, 4));
  CHECK(g.adjacent(3, 4));
}

TEST_CASE("encoding hand-checked strings") {
  CHECK(to_graph6(make_star(5)) == "Ds_");
  CHECK(to_graph6(make_complete(3)) == "Bw");
  CHECK(to_graph6(Graph::from_edge_mask(3, 0)) == "B?");
  CHECK(to_graph6(make_complete(1)) == "@");
}

TEST_CASE("optional header and trailing newline") {
  const Graph g = from_graph6(">>graph6<<Ds_");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(from_graph6("Ds_\n").edge_count() == 4);
  CHECK(from_graph6("Ds_\r\n").edge_count() == 4);
}

TEST_CASE("malformed input names the byte offset") {
  CHECK_THROWS_AS(from_graph6(""), Graph6ParseError);
  CHECK_THROWS_AS(from_graph6("B"), Graph6ParseError);      // truncated
  CHECK_THROWS_AS(from_graph6("B_x"), Graph6ParseError);    // trailing bytes
  CHECK_THROWS_AS(from_graph6("B "), Graph6ParseError);     // byte below 63
  CHECK_THROWS_AS(from_graph6("Ba"), Graph6ParseError);     // nonzero padding
  CHECK_THROWS_AS(from_graph6("?"), Graph6ParseError);      // n = 0

  try {
    from_graph6("B_x");
    FAIL("expected throw");
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset == 2);
    CHECK(std::string(e.what()).find("byte offset 2") != std::string::npos);
  }
}

TEST_CASE("round-trip across sizes including the long-form boundary") {
  for (int n : {1, 2, 5, 30, 62, 63, 64, 100, 200}) {
    const Graph g = make_gnp(n, 0.3, 50 + n);
    const Graph back = from_graph6(to_graph6(g));
    CHECK(back == g);
  }
  // long form uses the '~' prefix
  CHECK(to_graph6(make_path(63))[0] == '~');
  CHECK(to_graph6(make_path(62))[0] != '~');
}

TEST_CASE("round-trip on random graphs") {
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(mix64(i) % 40);
    const Graph g = make_gnp(n, 0.25 + 0.5 * counter_uniform01(3, i), 800 + i);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("edge list text format") {
  std::stringstream ss("4 3\n0 1\n1 2\n2 3\n");
  const Graph g = read_edge_list_text(ss);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);

  std::stringstream out;
  write_edge_list_text(g, out);
  std::stringstream back(out.str());
  CHECK(read_edge_list_text(back) == g);

  std::stringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(read_edge_list_text(loop), std::invalid_argument);
  std::stringstream bad("junk\n");
  CHECK_THROWS_AS(read_edge_list_text(bad), std::invalid_argument);
  std::stringstream short_list("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list_text(short_list), std::invalid_argument);
}
