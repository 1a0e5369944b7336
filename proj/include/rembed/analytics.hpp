#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rembed/multigraph.hpp"
#include "rembed/process.hpp"
#include "rembed/rational.hpp"

namespace rembed {

/// H_m = 1 + 1/2 + ... + 1/m, with H_0 = 0.
Rational harmonic(int m);

/// Exact expected face count of the mu-edge dipole: H_{mu-1} + 1/ceil(mu/2).
Rational dipole_expected_faces(int mu);

/// n + sum_i H_{mu_i}.
Rational bound_main(const MultiGraph& g);
/// n (H_mu + 1).
Rational bound_corollary(const MultiGraph& g);
/// pi^2 n / 6, the strict upper bound for simple graphs.
double bound_simple(int n);
/// n ln n for simple graphs; throws for n < 2.
double bound_stahl(int n);
/// 2|C| / (d - 1)^l for a set C of cycles of length at most l in a graph of
/// maximum degree d. Exact; throws for d < 2 or l < 1.
Rational lower_bound_cycles(long long cycle_count, int max_len, int max_degree);
/// H_mu + 3/mu, for a vertex incident with all mu edges.
Rational bound_star(int mu);

/// Exactly two vertices joined by parallel edges, no loops.
bool is_dipole(const MultiGraph& g);
/// Some vertex is an endpoint of every edge and there are no loops.
bool is_parallel_star(const MultiGraph& g);

struct McEstimate {
  double mean = 0;
  double std_error = 0;
  double ci_lo = 0;
  double ci_hi = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::fixed;
};

/// Mean face count over `trials` runs of the process; run i draws from
/// run_stream(seed, i), so the result is bit-identical for any `jobs`.
McEstimate monte_carlo_expected_faces(const MultiGraph& g, std::uint64_t trials, std::uint64_t seed,
                                      Strategy strategy, int jobs = 1);

struct CycleData {
  long long count = 0;
  int max_len = 0;
  int max_degree = 0;
};

struct BoundCheck {
  enum class Kind { upper, strict_upper, lower, equality, info };

  std::string name;
  Kind kind = Kind::upper;
  std::optional<Rational> exact;  // set when the bound is rational
  double value = 0;
  bool satisfied = true;
  bool hard = false;  // violation is a failed theorem, not just a flag
};

struct BoundsReport {
  std::string graph_id;
  int n = 0;
  int edges = 0;
  int mu = 0;
  std::vector<int> mu_at;
  std::optional<Rational> exact_value;
  std::optional<McEstimate> estimate;
  std::vector<BoundCheck> bounds;

  bool hard_violation() const;
  const BoundCheck* find(const std::string& name) const;
};

/*
  Every applicable bound for g, compared with an exact E[F] (rational
  comparison where the bound is rational) or with a Monte Carlo estimate
  (violation flagged only beyond three standard errors).

  main and corollary always apply; simple and stahl need a simple graph
  (stahl also n >= 2); dipole only for dipoles; star for loopless graphs
  with a vertex on every edge; cycles only when cycle data is given.
*/
BoundsReport bounds_report(const MultiGraph& g, const Rational& exact,
                           const std::optional<CycleData>& cycles = std::nullopt,
                           std::string graph_id = {});
BoundsReport bounds_report(const MultiGraph& g, const McEstimate& estimate,
                           const std::optional<CycleData>& cycles = std::nullopt,
                           std::string graph_id = {});

}  // namespace rembed
