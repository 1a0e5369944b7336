#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "rembed/generators.hpp"
#include "rembed/multigraph.hpp"

using namespace rembed;

namespace {

MultiGraph from(int n, std::vector<EdgeEntry> e) { return MultiGraph::from_edge_list(n, e); }

}  // namespace

TEST_CASE("from_edge_list builds the dipole") {
  auto g = from(2, {{0, 1, 5}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 5);
  CHECK(g.dart_count() == 10);
  CHECK(g.degree(0) == 5);
  CHECK(g.degree(1) == 5);
  CHECK(g.mu() == 5);
  CHECK(g.mu_at(0) == 5);
  CHECK(g.multiplicity(1, 0) == 5);
}

TEST_CASE("a loop contributes two to the degree") {
  auto g = from(1, {{0, 0, 1}});
  CHECK(g.degree(0) == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.mu() == 1);
  CHECK(g.has_loops());
  CHECK_FALSE(g.is_simple());
  const Edge& e = g.edge(0);
  CHECK(e.is_loop());
  CHECK(e.dart_a != e.dart_b);
  CHECK(g.vertex_of(e.dart_a) == 0);
  CHECK(g.vertex_of(e.dart_b) == 0);
  CHECK(g.multiplicity(0, 0) == 1);
}

TEST_CASE("triangle") {
  auto g = from(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  for (Vertex v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.mu() == 1);
  CHECK(g.is_simple());
  CHECK(components(g).size() == 1);
  CHECK(cut_edges(g).empty());
}

TEST_CASE("duplicate entries are summed at their first position") {
  auto g = from(3, {{0, 1, 2}, {1, 2, 1}, {1, 0, 3}});
  CHECK(g.multiplicity(0, 1) == 5);
  CHECK(g.edge_count() == 6);
  // Edges 0..4 are the merged {1,2} pair, edge 5 is {2,3}.
  for (EdgeId e = 0; e < 5; ++e) CHECK(g.edge(e).pair() == VertexPair{0, 1});
  CHECK(g.edge(5).pair() == VertexPair{1, 2});
  CHECK(g.mu_at(2) == 1);
  CHECK(g.mu_at(1) == 5);
}

TEST_CASE("dart ids are grouped by vertex in edge order") {
  auto g = from(3, {{0, 1, 1}, {1, 1, 1}, {1, 2, 1}});
  // vertex 0: dart 0; vertex 1: edge0, loop (2 darts), edge2; vertex 2: one dart
  auto d1 = g.darts_at(1);
  REQUIRE(d1.size() == 4);
  CHECK(d1[0] == 1);
  CHECK(d1[3] == 4);
  CHECK(g.edge(1).dart_a == 2);
  CHECK(g.edge(1).dart_b == 3);
  CHECK(g.partner(2) == 3);
  CHECK(g.edge_of(4) == 2);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(from(2, {{0, 2, 1}}), std::out_of_range);
  CHECK_THROWS_AS(from(2, {{0, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(from(2, {{0, 1, -3}}), std::invalid_argument);
  CHECK_THROWS_AS(from(3, {{0, 1, 1}}), std::invalid_argument);  // vertex 3 isolated
  CHECK_THROWS_AS(from(0, {}), std::invalid_argument);
  auto g = from(2, {{0, 1, 1}});
  CHECK_THROWS_AS(g.degree(2), std::out_of_range);
  CHECK_THROWS_AS(g.degree(-1), std::out_of_range);
}

TEST_CASE("components") {
  auto two_loops = from(2, {{0, 0, 1}, {1, 1, 1}});
  CHECK(components(two_loops).size() == 2);
  CHECK(components(dipole_chain(3, 5)).size() == 1);
  auto label = component_labels(two_loops);
  CHECK(label[0] != label[1]);
}

TEST_CASE("cut edges ignore parallel copies") {
  CHECK(cut_edges(dipole(3)).empty());
  CHECK(cut_edges(dipole(1)) == std::vector<EdgeId>{0});
  CHECK(cut_edges(path(5)).size() == 4);
  CHECK(cut_edges(cycle(5)).empty());
  CHECK(cut_edges(bouquet(2)).empty());
}

TEST_CASE("degree sum and multiplicity sum invariants on random multigraphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<EdgeEntry> entries;
    for (Vertex v = 0; v < n; ++v) {
      entries.push_back({v, static_cast<Vertex>(rng() % n), 1 + static_cast<int>(rng() % 3)});
    }
    const int extra = static_cast<int>(rng() % 5);
    for (int k = 0; k < extra; ++k) {
      entries.push_back({static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n), 1});
    }
    auto g = MultiGraph::from_edge_list(n, entries);

    int degree_sum = 0;
    std::vector<int> hits(g.dart_count(), 0);
    for (Vertex v = 0; v < n; ++v) {
      degree_sum += g.degree(v);
      for (DartId d : g.darts_at(v)) {
        ++hits[d];
        CHECK(g.vertex_of(d) == v);
      }
    }
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

    int mu_sum = 0, mu = 0;
    for (const auto& [p, m] : g.mu_pairs()) {
      mu_sum += m;
      mu = std::max(mu, m);
    }
    CHECK(mu_sum == g.edge_count());
    CHECK(mu == g.mu());
    for (const auto& e : g.edges()) {
      CHECK(g.partner(e.dart_a) == e.dart_b);
      CHECK(g.mu_at(e.u) >= g.multiplicity(e.u, e.v));
    }

    // Canonical text round trip reproduces the same numbering.
    auto again = parse_graph(format_graph(g));
    CHECK(format_graph(again) == format_graph(g));
    auto canon = g.canonical_entries();
    auto from_canon = MultiGraph::from_edge_list(n, canon);
    for (DartId d = 0; d < g.dart_count(); ++d) CHECK(again.vertex_of(d) == from_canon.vertex_of(d));
  }
}

TEST_CASE("text format") {
  auto g = parse_graph("# a dipole with a loop\n2 2\n\n1 2 3\n# inline comment line\n2 2 1\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.multiplicity(0, 1) == 3);
  CHECK(g.multiplicity(1, 1) == 1);
  CHECK(format_graph(g) == "2 2\n1 2 3\n2 2 1\n");

  // Writer sorts canonically regardless of input order.
  CHECK(format_graph(parse_graph("3 2\n3 2 1\n2 1 1\n")) == "3 2\n1 2 1\n2 3 1\n");

  CHECK_THROWS_AS(parse_graph(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("2 2\n1 2 1\n"), std::invalid_argument);        // missing line
  CHECK_THROWS_AS(parse_graph("2 1\n1 3 1\n"), std::invalid_argument);        // out of range
  CHECK_THROWS_AS(parse_graph("2 1\n1 2 0\n"), std::invalid_argument);        // zero multiplicity
  CHECK_THROWS_AS(parse_graph("2 1\n1 2 1\n1 2 1\n"), std::invalid_argument); // trailing line
  CHECK_THROWS_AS(parse_graph("2 1\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("3 1\n1 2 1\n"), std::invalid_argument);        // isolated vertex
}
