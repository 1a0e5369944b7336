#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "rembed/enumeration.hpp"
#include "rembed/generators.hpp"
#include "rembed/rotation.hpp"

using namespace rembed;

TEST_CASE("trace_faces on forced embeddings") {
  auto d2 = dipole(2);
  auto c = trace_faces(RotationSystem::identity(d2));
  CHECK(c.face_count == 2);
  CHECK(c.total_genus == 0);
  CHECK(c.face_lengths == std::vector<int>{2, 2});

  auto loop = bouquet(1);
  auto cl = trace_faces(RotationSystem::identity(loop));
  CHECK(cl.face_count == 2);
  CHECK(cl.total_genus == 0);
}

TEST_CASE("trees have one face under every rotation") {
  // A star with a path arm, so some vertex has degree 3.
  std::vector<EdgeEntry> e{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}};
  auto g = MultiGraph::from_edge_list(5, e);
  for_each_rotation(g, [](const RotationSystem& rot) {
    auto c = trace_faces(rot);
    CHECK(c.face_count == 1);
    CHECK(c.total_genus == 0);
    CHECK(c.face_lengths == std::vector<int>{8});
  });
  for (int n = 2; n <= 6; ++n) {
    auto p = path(n);
    CHECK(trace_faces(RotationSystem::identity(p)).face_count == 1);
  }
}

TEST_CASE("genus_from_counts") {
  CHECK(genus_from_counts(2, 3, 3) == 0);
  CHECK(genus_from_counts(2, 3, 1) == 1);
  CHECK(genus_from_counts(1, 2, 1) == 1);
  CHECK_THROWS_AS(genus_from_counts(2, 3, 2), std::logic_error);
  CHECK_THROWS_AS(genus_from_counts(3, 3, 3), std::logic_error);
}

TEST_CASE("bouquet of two loops: the interleaved rotation is toroidal") {
  auto g = bouquet(2);
  // loop A = darts 0,1; loop B = darts 2,3. Interleaving 0 2 1 3 gives one face.
  auto rot = RotationSystem::from_cyclic_orders(g, {{0, 2, 1, 3}});
  auto c = trace_faces(rot);
  CHECK(c.face_count == 1);
  CHECK(c.total_genus == 1);
  CHECK(genus_from_counts(1, 2, c.face_count) == 1);
}

TEST_CASE("face census invariants across all rotations of the corpus") {
  for (const auto& [name, g] : standard_corpus()) {
    if (rotation_count(g) > 2000) continue;
    CAPTURE(name);
    for_each_rotation(g, [&](const RotationSystem& rot) {
      auto c = trace_faces(rot);
      int len = 0;
      for (int l : c.face_lengths) len += l;
      CHECK(len == 2 * g.edge_count());
      for (int genus : c.genus_per_component) CHECK(genus >= 0);
      std::vector<char> scratch;
      CHECK(count_faces(g, rot.permutation(), scratch) == c.face_count);
    });
  }
}

TEST_CASE("genus is reported per component") {
  std::vector<EdgeEntry> e{{0, 0, 2}, {1, 2, 3}};
  auto g = MultiGraph::from_edge_list(3, e);
  auto rot = RotationSystem::from_cyclic_orders(g, {{0, 2, 1, 3}, {4, 5, 6}, {7, 8, 9}});
  auto c = trace_faces(rot);
  REQUIRE(c.genus_per_component.size() == 2);
  CHECK(c.genus_per_component[0] == 1);
  CHECK(c.total_genus == c.genus_per_component[0] + c.genus_per_component[1]);
}

TEST_CASE("rotation_count matches brute-force cyclic order counting") {
  CHECK(rotation_count(dipole(3)) == 4);
  CHECK(rotation_count(cycle(3)) == 1);
  CHECK(rotation_count(complete_graph(4)) == 16);
  CHECK(rotation_count(triangle_chain(2)) == 4);
  CHECK(rotation_count(bouquet(2)) == 6);
  CHECK(rotation_count(bouquet(3)) == 120);
  for (const auto& [name, g] : standard_corpus()) {
    if (g.max_degree() > 7) continue;
    CAPTURE(name);
    CHECK(rotation_count(g) == oracle::cyclic_order_count(g));
  }
  // (7!)^2 overflows nothing here but bigger graphs must not wrap around.
  CHECK(rotation_count(dipole(30)) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("RotationSystem validation") {
  auto g = dipole(3);
  CHECK_THROWS_AS(RotationSystem(g, {1, 2, 0, 3, 4, 5}), std::invalid_argument);  // vertex 2 fixed points
  CHECK_THROWS_AS(RotationSystem(g, {1, 0, 2, 4, 5, 3}), std::invalid_argument);  // two cycles at vertex 1
  CHECK_THROWS_AS(RotationSystem(g, {3, 4, 5, 0, 1, 2}), std::invalid_argument);  // crosses vertices
  CHECK_THROWS_AS(RotationSystem(g, {1, 2}), std::invalid_argument);
  CHECK_NOTHROW(RotationSystem(g, {2, 0, 1, 4, 5, 3}));
}

TEST_CASE("rotation serialization") {
  auto g = dipole(3);
  auto rot = RotationSystem::from_cyclic_orders(g, {{1, 0, 2}, {3, 5, 4}});
  CHECK(format_rotation(rot) == "1: 0 2 1\n2: 3 5 4\n");
  CHECK(parse_rotation(g, format_rotation(rot)) == rot);
  CHECK_THROWS_AS(parse_rotation(g, "1: 0 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rotation(g, "1: 0 1 3\n2: 2 4 5\n"), std::invalid_argument);
}

TEST_CASE("uniform_random_rotation") {
  Rng rng(11);
  auto tri = cycle(3);
  for (int i = 0; i < 20; ++i) CHECK(uniform_random_rotation(tri, rng) == RotationSystem::identity(tri));

  // Empirical F distribution vs the exact one, TV < 0.02 over 1e5 draws.
  for (const char* spec : {"dipole:mu=3", "complete:n=4", "bouquet:loops=2", "dipole-chain:k=2,mu=3"}) {
    CAPTURE(spec);
    auto g = generate(spec);
    auto exact = oracle::face_distribution(g);
    const int draws = 100000;
    std::map<int, int> hist;
    std::vector<char> scratch;
    for (int i = 0; i < draws; ++i) {
      auto rot = uniform_random_rotation(g, rng);
      ++hist[count_faces(g, rot.permutation(), scratch)];
    }
    double tv = 0;
    std::map<int, double> keys;
    for (auto [f, c] : exact.faces) keys[f] += 0;
    for (auto [f, c] : hist) keys[f] += 0;
    for (auto& [f, unused] : keys) {
      double p = exact.faces.count(f) ? double(exact.faces.at(f)) / exact.total : 0.0;
      double q = hist.count(f) ? double(hist.at(f)) / draws : 0.0;
      tv += std::abs(p - q);
    }
    CHECK(tv / 2 < 0.02);
  }

  // Every rotation system of dipole(3) shows up with frequency near 1/4.
  auto g = dipole(3);
  std::map<std::uint64_t, int> per;
  for (int i = 0; i < 40000; ++i) ++per[rotation_index(uniform_random_rotation(g, rng))];
  REQUIRE(per.size() == 4);
  for (auto [idx, c] : per) CHECK(std::abs(c / 40000.0 - 0.25) < 0.01);
}
