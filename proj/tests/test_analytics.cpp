#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "rembed/analytics.hpp"
#include "rembed/enumeration.hpp"
#include "rembed/generators.hpp"

using namespace rembed;

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(2) == Rational(3, 2));
  // direct summation: 1 + 1/2 + 1/3 + 1/4 = 12/12 + 6/12 + 4/12 + 3/12
  CHECK(harmonic(4) == Rational(25, 12));
  CHECK(harmonic(5) == Rational(137, 60));
  CHECK_THROWS_AS(harmonic(-1), std::invalid_argument);
}

TEST_CASE("dipole closed form") {
  CHECK(dipole_expected_faces(1) == 1);
  CHECK(dipole_expected_faces(3) == 2);
  CHECK(dipole_expected_faces(4) == Rational(7, 3));
  CHECK_THROWS_AS(dipole_expected_faces(0), std::invalid_argument);
  // Dipoles: closed form below 2 + 2 H_mu for mu up to 50.
  for (int mu = 1; mu <= 50; ++mu) {
    CAPTURE(mu);
    CHECK(dipole_expected_faces(mu) <= 2 + 2 * harmonic(mu));
    CHECK(bound_main(dipole(mu)) == 2 + 2 * harmonic(mu));
  }
}

TEST_CASE("bound formulas") {
  CHECK(bound_main(cycle(3)) == 6);
  CHECK(bound_main(dipole(3)) == Rational(17, 3));
  CHECK(bound_main(complete_graph(4)) == 8);

  CHECK(bound_corollary(complete_graph(4)) == 8);
  CHECK(bound_corollary(dipole(2)) == 5);
  CHECK(bound_corollary(dipole_chain(3, 5)) == Rational(197, 10));

  CHECK(bound_simple(3) == doctest::Approx(4.934802200544679));
  CHECK(bound_simple(1) == doctest::Approx(1.6449340668482264));
  CHECK(bound_stahl(3) == doctest::Approx(3.295836866004329));
  CHECK(bound_stahl(10) == doctest::Approx(23.02585092994046));
  CHECK_THROWS_AS(bound_stahl(1), std::invalid_argument);
  // pi^2/6 ~ 1.6449 exceeds ln 5 ~ 1.6094; the n ln n bound is weaker only from n = 6.
  CHECK(bound_simple(5) > bound_stahl(5));
  for (int n = 6; n <= 100; ++n) CHECK(bound_simple(n) < bound_stahl(n));

  CHECK(lower_bound_cycles(1, 3, 2) == 2);
  CHECK(lower_bound_cycles(0, 3, 2) == 0);
  CHECK(lower_bound_cycles(2, 3, 3) == Rational(1, 2));
  CHECK_THROWS_AS(lower_bound_cycles(1, 3, 1), std::invalid_argument);

  CHECK(bound_star(3) == Rational(11, 6) + 1);
}

TEST_CASE("exact E[F] sits below bound_main and bound_corollary") {
  for (const auto& [name, g] : standard_corpus()) {
    CAPTURE(name);
    auto e = exact_face_stats(g).expected_faces;
    CHECK(e <= bound_main(g));
    CHECK(bound_main(g) <= bound_corollary(g));
    if (g.is_simple()) CHECK(to_double(e) < bound_simple(g.vertex_count()));
  }
}

TEST_CASE("dipole chains: each cut edge merges two faces") {
  // E[F] of a k-chain is k E[F](dipole) - (k - 1), so it grows linearly in k
  // with slope E[F](dipole) - 1 = Theta(H_mu).
  for (int k = 1; k <= 3; ++k) {
    for (int mu = 1; mu <= 3; ++mu) {
      CAPTURE(k);
      CAPTURE(mu);
      auto g = dipole_chain(k, mu);
      auto e = exact_face_stats(g).expected_faces;
      CHECK(e == k * dipole_expected_faces(mu) - (k - 1));
      CHECK(e >= k * (harmonic(mu - 1) - 1) + 1);
      CHECK(e <= bound_main(g));
    }
  }
}

TEST_CASE("Monte Carlo estimate") {
  auto tri = cycle(3);
  auto t = monte_carlo_expected_faces(tri, 50, 123, Strategy::greedy);
  CHECK(t.mean == 2.0);
  CHECK(t.std_error == 0.0);
  CHECK(t.ci_lo == 2.0);

  auto d3 = dipole(3);
  auto est = monte_carlo_expected_faces(d3, 100000, kDefaultSeed, Strategy::random, 4);
  CHECK(std::abs(est.mean - 2.0) <= 3 * est.std_error);
  CHECK(est.ci_hi - est.ci_lo == doctest::Approx(2 * 1.96 * est.std_error));

  // Deterministic and independent of the worker count.
  auto again = monte_carlo_expected_faces(d3, 100000, kDefaultSeed, Strategy::random, 1);
  CHECK(again.mean == est.mean);
  CHECK(again.std_error == est.std_error);

  auto chain = dipole_chain(2, 3);
  auto c = monte_carlo_expected_faces(chain, 40000, 9, Strategy::greedy, 4);
  CHECK(c.ci_lo <= 3.0);
  CHECK(c.ci_hi >= 3.0);

  CHECK_THROWS_AS(monte_carlo_expected_faces(tri, 0, 1, Strategy::fixed), std::invalid_argument);
}

TEST_CASE("bounds_report") {
  auto d3 = dipole(3);
  auto r = bounds_report(d3, exact_face_stats(d3).expected_faces);
  CHECK_FALSE(r.hard_violation());
  for (const auto& b : r.bounds) CHECK(b.satisfied);
  REQUIRE(r.find("dipole") != nullptr);
  CHECK(r.find("simple") == nullptr);
  CHECK(r.find("main")->exact == Rational(17, 3));

  auto k4 = complete_graph(4);
  auto rk = bounds_report(k4, Rational(9, 4));
  CHECK(rk.find("main")->satisfied);
  CHECK(rk.find("simple")->satisfied);
  CHECK(rk.find("stahl") != nullptr);
  CHECK(rk.find("dipole") == nullptr);

  auto tri = cycle(3);
  auto rt = bounds_report(tri, Rational(2), CycleData{1, 3, 2});
  REQUIRE(rt.find("cycles") != nullptr);
  CHECK(rt.find("cycles")->exact == Rational(2));
  CHECK(rt.find("cycles")->satisfied);

  // An exact value above the main bound is a hard violation.
  auto bad = bounds_report(tri, Rational(7));
  CHECK_FALSE(bad.find("main")->satisfied);
  CHECK(bad.hard_violation());

  // A Monte Carlo value is only flagged beyond three standard errors, never hard.
  McEstimate mc;
  mc.mean = 6.2;
  mc.std_error = 0.1;
  auto soft = bounds_report(tri, mc);
  CHECK(soft.find("main")->satisfied);
  mc.mean = 6.5;
  auto flagged = bounds_report(tri, mc);
  CHECK_FALSE(flagged.find("main")->satisfied);
  CHECK_FALSE(flagged.hard_violation());

  // Loops and parallel edges keep the simple-graph bounds out.
  CHECK(bounds_report(bouquet(1), Rational(2)).find("simple") == nullptr);
  CHECK(bounds_report(dipole(5), Rational(29, 12)).find("stahl") == nullptr);
}

TEST_CASE("star bound is informational") {
  std::vector<EdgeEntry> e{{0, 1, 2}, {0, 2, 1}};
  auto g = MultiGraph::from_edge_list(3, e);
  CHECK(is_parallel_star(g));
  CHECK_FALSE(is_dipole(g));
  auto r = bounds_report(g, exact_face_stats(g).expected_faces);
  REQUIRE(r.find("star") != nullptr);
  CHECK_FALSE(r.find("star")->hard);
  CHECK(r.find("star")->exact == bound_star(3));
  CHECK_FALSE(is_parallel_star(bouquet(2)));
  CHECK(is_dipole(dipole(4)));
}
