#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rembed/multigraph.hpp"
#include "rembed/rng.hpp"
#include "rembed/rotation.hpp"

namespace rembed {

enum class Strategy { fixed, random, greedy };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view name);
inline constexpr std::array<Strategy, 3> kAllStrategies{Strategy::fixed, Strategy::random,
                                                        Strategy::greedy};

/*
  State of the incremental pairing process.

  Every vertex starts with deg(v) unlabelled darts in a fixed cyclic order
  (the graph's own dart numbering, so a "dart" here is a position in that
  order). Processing an edge pairs one unlabelled dart at each endpoint and
  assigns the edge's graph darts to those positions.

  Partial walks follow d -> sigma(alpha(d)). The walk anchored at unlabelled
  dart b starts at sigma(b) and runs until it reaches an unlabelled dart, its
  end. Each unlabelled dart anchors exactly one walk and ends exactly one, so
  there are always as many partial walks as unlabelled darts.
*/
class ProcessState {
 public:
  explicit ProcessState(const MultiGraph& g);
  explicit ProcessState(MultiGraph&&) = delete;

  const MultiGraph& graph() const { return *graph_; }
  int processed() const { return processed_; }
  bool complete() const { return processed_ == graph_->edge_count(); }
  int walk_count() const { return unlabelled_total_; }
  int closed_faces() const { return closed_faces_; }

  /// D_v.
  int unlabelled_at(Vertex v) const { return static_cast<int>(unlabelled_[v].size()); }
  std::span<const DartId> unlabelled_darts(Vertex v) const { return unlabelled_[v]; }
  bool is_labelled(DartId d) const { return paired_[d] >= 0; }
  /// The dart d was paired with, or -1.
  DartId paired_with(DartId d) const { return paired_[d]; }
  /// Graph dart placed at position d, or -1.
  DartId assigned_dart(DartId d) const { return assigned_[d]; }

  DartId walk_end(DartId anchor) const { return end_of_anchor_[anchor]; }
  DartId walk_anchor(DartId end) const { return anchor_of_end_[end]; }

  /// mu_ij of unprocessed edges.
  int remaining(VertexPair p) const;
  /// Pairs with at least one unprocessed edge, ascending.
  std::vector<VertexPair> open_pairs() const;
  /// Smallest unprocessed edge id of the pair.
  EdgeId next_edge_of(VertexPair p) const;

  /// Faces that processing this pair can close, summed over all placements
  /// of the edge (a placement closing two faces counts twice).
  int closable_faces(VertexPair p) const;

  /// Pairs dart `at_u` with `at_v` as edge e (at_u at e.u). Returns the number
  /// of faces closed (0, 1 or 2).
  int process_edge(EdgeId e, DartId at_u, DartId at_v);
  /// As process_edge on the pair's smallest unprocessed edge; at_lo is at p.lo.
  int process_pair(VertexPair p, DartId at_lo, DartId at_hi);

  /// The rotation system the placements define. Requires complete().
  RotationSystem final_rotation() const;

  /// Recomputes the walk structure by brute force and compares; throws
  /// std::logic_error describing the first mismatch.
  void check_invariants() const;

 private:
  int pair_slot(VertexPair p) const;
  void unlabel_remove(DartId d);

  const MultiGraph* graph_;
  std::vector<DartId> sigma_;          // fixed initial cyclic order
  std::vector<DartId> paired_;         // partial alpha, -1 when unlabelled
  std::vector<DartId> assigned_;       // graph dart at each position
  std::vector<DartId> end_of_anchor_;  // -1 for labelled darts
  std::vector<DartId> anchor_of_end_;
  std::vector<std::vector<DartId>> unlabelled_;
  std::vector<int> unlabelled_pos_;
  std::vector<VertexPair> pairs_;
  std::map<VertexPair, int> pair_index_;
  std::vector<std::vector<EdgeId>> pending_;  // unprocessed edges per pair, ascending
  std::vector<char> edge_done_;
  int unlabelled_total_ = 0;
  int closed_faces_ = 0;
  int processed_ = 0;
};

/// Uniform placement: one of D_i * D_j ordered choices, or D_i * (D_i - 1)
/// ordered pairs of distinct darts for a loop. First dart is at p.lo.
std::pair<DartId, DartId> random_dart_choice(const ProcessState& state, VertexPair p, Rng& rng);

/// Open pair minimising closable_faces / mu_ij; ties go to the smallest pair.
VertexPair greedy_next_edge(const ProcessState& state);

/// min over open pairs of closable_faces - 2 mu_ij. Non-positive whenever
/// some pair admits at most 2 mu_ij closable faces.
int lemma_two_slack(const ProcessState& state);

struct ProcessTrace {
  Strategy strategy = Strategy::fixed;
  std::uint64_t seed = 0;
  std::vector<EdgeId> edge_order;
  std::vector<std::pair<DartId, DartId>> placements;  // darts at (u, v) of each edge
  std::vector<int> closures_per_edge;
  RotationSystem final_rotation;
  int final_faces = 0;
};

/// Hooks called around each processing step.
class StepObserver {
 public:
  virtual ~StepObserver() = default;
  virtual void before_step(const ProcessState& state, VertexPair chosen) = 0;
  virtual void after_step(const ProcessState& state, VertexPair chosen, int closures) = 0;
};

/// Runs the process to completion. `seed` is recorded in the trace only.
ProcessTrace sample_embedding(const MultiGraph& g, Strategy strategy, Rng& rng,
                              std::uint64_t seed = 0, StepObserver* observer = nullptr);

/// Per-check pass/fail counters of an instrumented run.
struct AuditCounts {
  static constexpr std::array<std::string_view, 7> kNames{
      "walk_count",   "walk_drop",      "dart_bookkeeping", "structure",
      "lemma2_witness", "greedy_ratio", "closure_sum"};
  std::array<std::uint64_t, kNames.size()> passed{};
  std::array<std::uint64_t, kNames.size()> failed{};

  void merge(const AuditCounts& other);
  std::uint64_t total_failed() const;
};

struct RunAudit {
  ProcessTrace trace;
  AuditCounts counts;
  std::vector<std::string> failures;
};

/*
  Runs the process while checking at every step: the walk count equals
  2|E| - 2k; it drops by exactly two; D and mu decrease as they should (D by
  two at a loop); the incremental walk structure matches a brute-force
  recomputation; some open pair has closable <= 2 mu (and, for greedy, the
  chosen pair does); and the closures sum to the traced face count.
*/
RunAudit audit_run(const MultiGraph& g, Strategy strategy, Rng& rng, std::uint64_t seed = 0);

struct StrategyAudit {
  Strategy strategy = Strategy::fixed;
  std::uint64_t runs = 0;
  AuditCounts counts;
};

struct AuditWitness {
  Strategy strategy = Strategy::fixed;
  std::uint64_t run = 0;
  std::vector<std::string> failures;
  ProcessTrace trace;
};

struct AuditSummary {
  std::vector<StrategyAudit> strategies;
  std::optional<AuditWitness> witness;  // failing run with the smallest index, if any

  bool ok() const { return !witness.has_value(); }
};

/// audit_run over `trials` runs per strategy. Run i of strategy s draws from
/// run_stream(run_seed(seed, s), i); results do not depend on `jobs`.
AuditSummary audit_many(const MultiGraph& g, std::span<const Strategy> strategies, std::uint64_t trials,
                        std::uint64_t seed, int jobs = 1);

}  // namespace rembed
