#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <set>

#include "netspread/generators.hpp"
#include "netspread/graph.hpp"
#include "oracles.hpp"

using namespace netspread;

namespace {

std::set<std::pair<std::string, std::string>> label_edges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) out.emplace(std::minmax(g.label(u), g.label(v)));
  return out;
}

}  // namespace

TEST_CASE("parse_edge_list builds dense ids in order of appearance") {
  SUBCASE("empty input") {
    const Graph g = parse_edge_list("");
    CHECK(g.node_count() == 0);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("two edges") {
    const Graph g = parse_edge_list("1 2\n2 3");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "1");
    CHECK(g.find_label("3") == NodeId{2});
  }
  SUBCASE("duplicates and self-loops") {
    const Graph g = parse_edge_list("1 2\n2 1\n1 1");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("comments, blank lines and tabs") {
    const Graph g = parse_edge_list("# header\n\nalice\tbob  # trailing\n  bob carol\n");
    CHECK(g.node_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
  }
}

TEST_CASE("malformed lines report their line number") {
  try {
    (void)parse_edge_list("1 2\n3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS((void)parse_edge_list("1 2 3"), ParseError);
}

TEST_CASE("from_edges rejects out-of-range endpoints") {
  const std::vector<Edge> bad{{0, 5}};
  CHECK_THROWS_AS((void)Graph::from_edges(3, bad), std::out_of_range);
}

TEST_CASE("degree and histogram") {
  CHECK(degree(oracle::triangle(), 1) == 2);
  CHECK(degree(oracle::star5(), 0) == 4);
  CHECK(degree(oracle::make(1, {}), 0) == 0);
  CHECK_THROWS((void)degree(oracle::triangle(), 3));

  CHECK(degree_histogram(oracle::triangle()).counts == std::map<std::size_t, std::uint64_t>{{2, 3}});
  const auto star = degree_histogram(oracle::star5());
  CHECK(star.counts == std::map<std::size_t, std::uint64_t>{{1, 4}, {4, 1}});
  CHECK(star.n == 5);
  CHECK(degree_histogram(Graph{}).empty());
}

TEST_CASE("local clustering examples") {
  for (NodeId v = 0; v < 4; ++v) CHECK(local_clustering(oracle::complete(4), v).coefficient == 1.0);
  const auto center = local_clustering(oracle::star5(), 0);
  CHECK(center.neighbor_edges == 0);
  CHECK(center.coefficient == 0.0);

  const auto a = local_clustering(oracle::triangle_plus_pendant(), 0);
  CHECK(a.degree == 3);
  CHECK(a.neighbor_edges == 1);
  CHECK(a.coefficient == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS((void)local_clustering(oracle::triangle(), 7));
}

TEST_CASE("average clustering examples") {
  CHECK(average_clustering(oracle::triangle()) == 1.0);
  CHECK(average_clustering(oracle::path3()) == 0.0);
  CHECK(average_clustering(oracle::triangle_plus_pendant()) == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
  CHECK_THROWS((void)average_clustering(Graph{}));
}

TEST_CASE("average clustering agrees with brute-force triangle enumeration") {
  Rng rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = oracle::random_small(rng);
    REQUIRE(oracle::average_clustering_matches(g, average_clustering(g)));
    const auto exact = oracle::local_clustering(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const auto c = local_clustering(g, v);
      CHECK(c.neighbor_edges == exact[v].num);
      CHECK(c.coefficient >= 0.0);
      CHECK(c.coefficient <= 1.0);
    }
  }
}

TEST_CASE("bfs distances") {
  const auto k4 = bfs_distances(oracle::complete(4), 2);
  for (NodeId v = 0; v < 4; ++v) CHECK(*k4[v] == (v == 2 ? 0u : 1u));

  const auto p = bfs_distances(oracle::path3(), 0);
  CHECK(*p[0] == 0);
  CHECK(*p[1] == 1);
  CHECK(*p[2] == 2);

  const auto d = bfs_distances(oracle::make(4, {{0, 1}, {2, 3}}), 0);
  CHECK(d[1].has_value());
  CHECK_FALSE(d[2].has_value());
  CHECK_FALSE(d[3].has_value());
  CHECK_THROWS((void)bfs_distances(oracle::path3(), 3));
}

TEST_CASE("average path length examples") {
  const auto k5 = average_path_length(oracle::complete(5));
  CHECK(k5.mean == 1.0);
  CHECK(k5.reachable_fraction == 1.0);
  CHECK(k5.exact);

  const auto p = average_path_length(oracle::path3());
  CHECK(p.mean == doctest::Approx(4.0 / 3.0));
  CHECK(p.reachable_fraction == 1.0);

  const auto two = average_path_length(oracle::make(4, {{0, 1}, {2, 3}}));
  CHECK(two.mean == 1.0);
  CHECK(two.reachable_fraction == doctest::Approx(1.0 / 3.0));

  CHECK_THROWS((void)average_path_length(oracle::make(3, {})));
  CHECK_THROWS((void)average_path_length(oracle::make(1, {})));
}

TEST_CASE("sampled path length is within 10% of exact") {
  const Graph g = gen_erdos_renyi_mean_degree(1000, 8.0, 3);
  const auto exact = average_path_length(g);
  const auto sampled = average_path_length(g, 200, 17);
  CHECK_FALSE(sampled.exact);
  CHECK(sampled.sources == 200);
  CHECK(std::abs(sampled.mean - exact.mean) <= 0.1 * exact.mean);
  // Same seed, same estimate.
  CHECK(average_path_length(g, 200, 17).mean == sampled.mean);
}

TEST_CASE("connected components") {
  const auto tri = connected_components(oracle::triangle());
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].size() == 3);
  const auto two = connected_components(oracle::make(4, {{0, 1}, {2, 3}}));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == std::vector<NodeId>{0, 1});
  CHECK(two[1] == std::vector<NodeId>{2, 3});
  CHECK(connected_components(Graph{}).empty());
}

TEST_CASE("induced subgraph") {
  const std::vector<NodeId> three{0, 1, 3};
  const auto tri = induced_subgraph(oracle::complete(4), three);
  CHECK(tri.graph.node_count() == 3);
  CHECK(tri.graph.edge_count() == 3);
  CHECK(tri.parent_id == three);
  CHECK(tri.graph.label(2) == "3");

  CHECK(induced_subgraph(oracle::triangle(), std::vector<NodeId>{}).graph.node_count() == 0);

  const auto ends = induced_subgraph(oracle::path3(), std::vector<NodeId>{0, 2});
  CHECK(ends.graph.node_count() == 2);
  CHECK(ends.graph.edge_count() == 0);

  CHECK_THROWS_AS((void)induced_subgraph(oracle::path3(), std::vector<NodeId>{9}), std::out_of_range);
}

TEST_CASE("serialization round trip keeps labels and structure") {
  const Graph g = parse_edge_list("x y\ny z\nz x\nw x\n");
  const std::string text = serialize_edge_list(g);
  CHECK(text == "x y\nx z\nx w\ny z\n");
  CHECK(parse_edge_list(text) == g);

  // Dense ids may be reassigned on reparse; labels and edges by label survive.
  const Graph ba = gen_barabasi_albert(300, 2, 9);
  CHECK(label_edges(parse_edge_list(serialize_edge_list(ba))) == label_edges(ba));

  const auto path = std::filesystem::temp_directory_path() / "netspread_graph_roundtrip.txt";
  write_edge_list(ba, path);
  CHECK(label_edges(read_edge_list(path)) == label_edges(ba));
  std::filesystem::remove(path);
  CHECK_THROWS((void)read_edge_list(path));
}
