#include <doctest.h>

#include "rembed/generators.hpp"
#include "rembed/rotation.hpp"

using namespace rembed;

TEST_CASE("dipole") {
  CHECK(dipole(1).edge_count() == 1);
  auto g = dipole(5);
  CHECK(g.degree(0) == 5);
  CHECK(g.degree(1) == 5);
  CHECK(rotation_count(dipole(3)) == 4);
  CHECK_THROWS_AS(dipole(0), std::invalid_argument);
}

TEST_CASE("dipole_chain") {
  CHECK(format_graph(dipole_chain(1, 4)) == format_graph(dipole(4)));
  auto fig = dipole_chain(3, 5);
  CHECK(fig.vertex_count() == 6);
  CHECK(fig.edge_count() == 17);
  auto g = dipole_chain(2, 2);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(2) == 3);
  CHECK(g.degree(3) == 2);
  for (int k = 1; k <= 5; ++k) {
    for (int mu = 2; mu <= 4; ++mu) CHECK(cut_edges(dipole_chain(k, mu)).size() == static_cast<std::size_t>(k - 1));
  }
  CHECK_THROWS_AS(dipole_chain(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(dipole_chain(2, 0), std::invalid_argument);
}

TEST_CASE("triangle_chain") {
  CHECK(format_graph(triangle_chain(1)) == format_graph(cycle(3)));
  auto g = triangle_chain(2);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 7);
  std::vector<int> deg;
  for (Vertex v = 0; v < 6; ++v) deg.push_back(g.degree(v));
  CHECK(deg == std::vector<int>{2, 2, 3, 3, 2, 2});
  CHECK(rotation_count(g) == 4);
  for (int k = 2; k <= 5; ++k) {
    auto t = triangle_chain(k);
    CHECK(t.is_simple());
    CHECK(t.max_degree() == 3);
    CHECK(cut_edges(t).size() == static_cast<std::size_t>(k - 1));
  }
  CHECK_THROWS_AS(triangle_chain(0), std::invalid_argument);
}

TEST_CASE("bouquet, complete, cycle, path") {
  CHECK(bouquet(1).degree(0) == 2);
  CHECK(rotation_count(bouquet(2)) == 6);
  CHECK(rotation_count(bouquet(3)) == 120);
  CHECK(format_graph(cycle(3)) == format_graph(complete_graph(3)));
  CHECK(rotation_count(complete_graph(4)) == 16);
  CHECK(path(5).edge_count() == 4);
  CHECK_THROWS_AS(bouquet(0), std::invalid_argument);
  CHECK_THROWS_AS(complete_graph(1), std::invalid_argument);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(path(1), std::invalid_argument);
}

TEST_CASE("generate specs") {
  CHECK(format_graph(generate("dipole:mu=3")) == format_graph(dipole(3)));
  CHECK(format_graph(generate("dipole-chain:k=3,mu=5")) == format_graph(dipole_chain(3, 5)));
  CHECK(format_graph(generate("triangle-chain:k=2")) == format_graph(triangle_chain(2)));
  CHECK(format_graph(generate("bouquet:loops=2")) == format_graph(bouquet(2)));
  CHECK(format_graph(generate("complete:n=5")) == format_graph(complete_graph(5)));
  CHECK_THROWS_AS(generate("dipole"), std::invalid_argument);
  CHECK_THROWS_AS(generate("dipole:mu=x"), std::invalid_argument);
  CHECK_THROWS_AS(generate("dipole:mu"), std::invalid_argument);
  CHECK_THROWS_AS(generate("petersen:n=10"), std::invalid_argument);
}

TEST_CASE("corpus graphs are valid") {
  auto corpus = standard_corpus();
  CHECK(corpus.size() == 6 + 6 + 2 + 2 + 3 + 7 + 6);
  for (const auto& [name, g] : corpus) {
    int degree_sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.degree(v) > 0);
      degree_sum += g.degree(v);
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}
