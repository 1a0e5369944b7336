#include "rembed/analytics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rembed/parallel.hpp"

namespace rembed {

Rational harmonic(int m) {
  if (m < 0) throw std::invalid_argument("harmonic number of a negative index");
  Rational h = 0;
  for (int k = 1; k <= m; ++k) h += Rational(1, k);
  return h;
}

Rational dipole_expected_faces(int mu) {
  if (mu < 1) throw std::invalid_argument("dipole needs mu >= 1");
  return harmonic(mu - 1) + Rational(1, (mu + 1) / 2);
}

Rational bound_main(const MultiGraph& g) {
  Rational b = g.vertex_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v) b += harmonic(g.mu_at(v));
  return b;
}

Rational bound_corollary(const MultiGraph& g) { return g.vertex_count() * (harmonic(g.mu()) + 1); }

double bound_simple(int n) { return std::numbers::pi * std::numbers::pi / 6.0 * n; }

double bound_stahl(int n) {
  if (n < 2) throw std::invalid_argument("n log n bound needs n >= 2");
  return n * std::log(static_cast<double>(n));
}

Rational lower_bound_cycles(long long cycle_count, int max_len, int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("cycle lower bound needs max degree >= 2");
  if (max_len < 1) throw std::invalid_argument("cycle lower bound needs cycle length >= 1");
  if (cycle_count < 0) throw std::invalid_argument("cycle count must be non-negative");
  BigInt den = boost::multiprecision::pow(BigInt(max_degree - 1), static_cast<unsigned>(max_len));
  return Rational(BigInt(2 * cycle_count), den);
}

Rational bound_star(int mu) {
  if (mu < 1) throw std::invalid_argument("star bound needs mu >= 1");
  return harmonic(mu) + Rational(3, mu);
}

bool is_dipole(const MultiGraph& g) {
  return g.vertex_count() == 2 && g.mu_pairs().size() == 1 && !g.has_loops();
}

bool is_parallel_star(const MultiGraph& g) {
  if (g.has_loops()) return false;
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    if (g.degree(c) == g.edge_count()) return true;
  }
  return false;
}

McEstimate monte_carlo_expected_faces(const MultiGraph& g, std::uint64_t trials, std::uint64_t seed,
                                      Strategy strategy, int jobs) {
  if (trials < 1) throw std::invalid_argument("Monte Carlo needs at least one trial");
  const int workers = static_cast<int>(std::min<std::uint64_t>(resolve_jobs(jobs), trials));
  // Integer sums merge exactly, so the result is independent of the split.
  std::vector<std::uint64_t> sums(workers, 0), squares(workers, 0);
  parallel_chunks(trials, workers, [&](std::uint64_t w, std::uint64_t begin, std::uint64_t end) {
    std::uint64_t s = 0, q = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      Rng rng = run_stream(seed, i);
      auto f = static_cast<std::uint64_t>(sample_embedding(g, strategy, rng).final_faces);
      s += f;
      q += f * f;
    }
    sums[w] = s;
    squares[w] = q;
  });

  BigInt sum = 0, sumsq = 0;
  for (int w = 0; w < workers; ++w) {
    sum += sums[w];
    sumsq += squares[w];
  }
  McEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.strategy = strategy;
  est.mean = to_double(Rational(sum, BigInt(trials)));
  if (trials > 1) {
    BigInt t = trials;
    Rational var(t * sumsq - sum * sum, t * (t - 1));
    est.std_error = std::sqrt(to_double(var) / static_cast<double>(trials));
  }
  est.ci_lo = est.mean - 1.96 * est.std_error;
  est.ci_hi = est.mean + 1.96 * est.std_error;
  return est;
}

bool BoundsReport::hard_violation() const {
  for (const auto& b : bounds) {
    if (b.hard && !b.satisfied) return true;
  }
  return false;
}

const BoundCheck* BoundsReport::find(const std::string& name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

namespace {

// Either an exact value or an estimate; comparisons per kind.
struct Observed {
  std::optional<Rational> exact;
  std::optional<McEstimate> mc;

  bool check(BoundCheck::Kind kind, const std::optional<Rational>& exact_bound, double bound) const {
    using K = BoundCheck::Kind;
    if (exact) {
      if (exact_bound) {
        switch (kind) {
          case K::upper:
          case K::info: return *exact <= *exact_bound;
          case K::strict_upper: return *exact < *exact_bound;
          case K::lower: return *exact >= *exact_bound;
          case K::equality: return *exact == *exact_bound;
        }
      }
      double e = to_double(*exact);
      switch (kind) {
        case K::upper:
        case K::info: return e <= bound;
        case K::strict_upper: return e < bound;
        case K::lower: return e >= bound;
        case K::equality: return e == bound;
      }
    }
    const double margin = 3.0 * mc->std_error;
    switch (kind) {
      case K::upper:
      case K::info:
      case K::strict_upper: return mc->mean - margin <= bound;
      case K::lower: return mc->mean + margin >= bound;
      case K::equality: return std::abs(mc->mean - bound) <= margin;
    }
    return false;
  }
};

BoundsReport build_report(const MultiGraph& g, const Observed& obs, const std::optional<CycleData>& cycles,
                          std::string graph_id) {
  using K = BoundCheck::Kind;
  BoundsReport r;
  r.graph_id = std::move(graph_id);
  r.n = g.vertex_count();
  r.edges = g.edge_count();
  r.mu = g.mu();
  for (Vertex v = 0; v < g.vertex_count(); ++v) r.mu_at.push_back(g.mu_at(v));
  r.exact_value = obs.exact;
  r.estimate = obs.mc;

  const bool exact = obs.exact.has_value();
  auto add_rational = [&](std::string name, K kind, Rational value, bool theorem) {
    BoundCheck b{std::move(name), kind, value, to_double(value), true, theorem && exact};
    b.satisfied = obs.check(kind, b.exact, b.value);
    r.bounds.push_back(std::move(b));
  };
  auto add_real = [&](std::string name, K kind, double value, bool theorem) {
    BoundCheck b{std::move(name), kind, std::nullopt, value, true, theorem && exact};
    b.satisfied = obs.check(kind, std::nullopt, value);
    r.bounds.push_back(std::move(b));
  };

  add_rational("main", K::upper, bound_main(g), true);
  add_rational("corollary", K::upper, bound_corollary(g), true);
  if (g.is_simple()) {
    add_real("simple", K::strict_upper, bound_simple(g.vertex_count()), true);
    if (g.vertex_count() >= 2) add_real("stahl", K::upper, bound_stahl(g.vertex_count()), false);
  }
  if (is_dipole(g)) add_rational("dipole", K::equality, dipole_expected_faces(g.edge_count()), false);
  if (is_parallel_star(g)) add_rational("star", K::info, bound_star(g.edge_count()), false);
  if (cycles) {
    add_rational("cycles", K::lower,
                 lower_bound_cycles(cycles->count, cycles->max_len, cycles->max_degree), false);
  }
  return r;
}

}  // namespace

BoundsReport bounds_report(const MultiGraph& g, const Rational& exact, const std::optional<CycleData>& cycles,
                           std::string graph_id) {
  return build_report(g, Observed{exact, std::nullopt}, cycles, std::move(graph_id));
}

BoundsReport bounds_report(const MultiGraph& g, const McEstimate& estimate,
                           const std::optional<CycleData>& cycles, std::string graph_id) {
  return build_report(g, Observed{std::nullopt, estimate}, cycles, std::move(graph_id));
}

}  // namespace rembed
