#include "rembed/process.hpp"

#include <algorithm>
#include <stdexcept>

#include "rembed/parallel.hpp"

namespace rembed {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::fixed: return "fixed";
    case Strategy::random: return "random";
    case Strategy::greedy: return "greedy";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (name == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "' (fixed|random|greedy)");
}

namespace {

std::vector<DartId> identity_sigma(const MultiGraph& g) {
  auto rot = RotationSystem::identity(g);
  return {rot.permutation().begin(), rot.permutation().end()};
}

}  // namespace

ProcessState::ProcessState(const MultiGraph& g)
    : graph_(&g),
      sigma_(identity_sigma(g)),
      paired_(g.dart_count(), -1),
      assigned_(g.dart_count(), -1),
      end_of_anchor_(g.dart_count()),
      anchor_of_end_(g.dart_count()),
      unlabelled_(g.vertex_count()),
      unlabelled_pos_(g.dart_count()),
      edge_done_(g.edge_count(), 0),
      unlabelled_total_(g.dart_count()) {
  // Initially the walk anchored at b is the single corner between b and sigma(b).
  for (DartId b = 0; b < g.dart_count(); ++b) {
    end_of_anchor_[b] = sigma_[b];
    anchor_of_end_[sigma_[b]] = b;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (DartId d : g.darts_at(v)) {
      unlabelled_pos_[d] = static_cast<int>(unlabelled_[v].size());
      unlabelled_[v].push_back(d);
    }
  }
  for (const auto& [p, m] : g.mu_pairs()) {
    pair_index_[p] = static_cast<int>(pairs_.size());
    pairs_.push_back(p);
    pending_.emplace_back();
  }
  for (const auto& e : g.edges()) {
    pending_[pair_index_.at(e.pair())].push_back(e.id);
  }
}

int ProcessState::pair_slot(VertexPair p) const {
  auto it = pair_index_.find(p);
  return it == pair_index_.end() ? -1 : it->second;
}

int ProcessState::remaining(VertexPair p) const {
  int s = pair_slot(p);
  return s < 0 ? 0 : static_cast<int>(pending_[s].size());
}

std::vector<VertexPair> ProcessState::open_pairs() const {
  std::vector<VertexPair> out;
  for (std::size_t s = 0; s < pairs_.size(); ++s) {
    if (!pending_[s].empty()) out.push_back(pairs_[s]);
  }
  return out;
}

EdgeId ProcessState::next_edge_of(VertexPair p) const {
  int s = pair_slot(p);
  if (s < 0 || pending_[s].empty()) {
    throw std::invalid_argument("no unprocessed edge between " + std::to_string(p.lo + 1) + " and " +
                                std::to_string(p.hi + 1));
  }
  return pending_[s].front();
}

int ProcessState::closable_faces(VertexPair p) const {
  if (remaining(p) == 0) {
    throw std::invalid_argument("closable_faces: pair has no unprocessed edge");
  }
  const MultiGraph& g = *graph_;
  auto self_walks = [&](Vertex v) {
    int s = 0;
    for (DartId a : unlabelled_[v]) s += (anchor_of_end_[a] == a);
    return s;
  };

  int count = 0;
  if (!p.is_loop()) {
    // A walk ending at a (at one endpoint) and anchored at b (at the other)
    // closes under exactly the placement {a, b}.
    for (Vertex v : {p.lo, p.hi}) {
      Vertex w = v == p.lo ? p.hi : p.lo;
      for (DartId a : unlabelled_[v]) {
        if (g.vertex_of(anchor_of_end_[a]) == w) ++count;
      }
    }
    // Two single-dart walks joined by the new edge close one face.
    count += self_walks(p.lo) * self_walks(p.hi);
  } else {
    for (DartId a : unlabelled_[p.lo]) {
      DartId x = anchor_of_end_[a];
      if (x != a && g.vertex_of(x) == p.lo) ++count;
    }
    int s = self_walks(p.lo);
    count += s * (s - 1) / 2;
  }
  return count;
}

void ProcessState::unlabel_remove(DartId d) {
  auto& list = unlabelled_[graph_->vertex_of(d)];
  int pos = unlabelled_pos_[d];
  DartId last = list.back();
  list[pos] = last;
  unlabelled_pos_[last] = pos;
  list.pop_back();
  unlabelled_pos_[d] = -1;
}

int ProcessState::process_edge(EdgeId e, DartId at_u, DartId at_v) {
  const MultiGraph& g = *graph_;
  if (e < 0 || e >= g.edge_count() || edge_done_[e]) {
    throw std::invalid_argument("edge " + std::to_string(e) + " is invalid or already processed");
  }
  const Edge& edge = g.edge(e);
  for (DartId d : {at_u, at_v}) {
    if (d < 0 || d >= g.dart_count()) throw std::invalid_argument("dart id out of range");
    if (paired_[d] >= 0) throw std::invalid_argument("dart " + std::to_string(d) + " is already labelled");
  }
  if (g.vertex_of(at_u) != edge.u || g.vertex_of(at_v) != edge.v) {
    throw std::invalid_argument("dart is not at the edge's endpoint");
  }
  if (at_u == at_v) throw std::invalid_argument("a loop needs two distinct darts");

  const DartId a = at_u;
  const DartId b = at_v;
  auto other = [&](DartId q) { return q == a ? b : a; };
  auto touched = [&](DartId q) { return q == a || q == b; };

  // After pairing, the end a leads into the walk anchored at b and vice versa.
  std::array<char, 2> visited{0, 0};  // anchors a, b reached from outside
  auto mark = [&](DartId anchor) { visited[anchor == a ? 0 : 1] = 1; };
  auto resolve = [&](DartId anchor) {
    DartId q = end_of_anchor_[anchor];
    for (int guard = 0; touched(q); ++guard) {
      if (guard > 2) throw std::logic_error("walk splice did not terminate");
      DartId next_anchor = other(q);
      mark(next_anchor);
      q = end_of_anchor_[next_anchor];
    }
    return q;
  };

  std::array<std::pair<DartId, DartId>, 2> merged{};
  int merged_count = 0;
  for (DartId x : {anchor_of_end_[a], anchor_of_end_[b]}) {
    if (!touched(x)) merged[merged_count++] = {x, resolve(x)};
  }

  // Whatever is not reachable from an outside anchor forms closed cycles.
  int closures = 0;
  for (DartId s : {a, b}) {
    if (visited[s == a ? 0 : 1]) continue;
    ++closures;
    DartId anchor = s;
    do {
      mark(anchor);
      DartId q = end_of_anchor_[anchor];
      if (!touched(q)) throw std::logic_error("unreached anchor leads outside the spliced darts");
      anchor = other(q);
    } while (anchor != s);
  }

  for (DartId d : {a, b}) {
    end_of_anchor_[d] = -1;
    anchor_of_end_[d] = -1;
    unlabel_remove(d);
  }
  for (int k = 0; k < merged_count; ++k) {
    end_of_anchor_[merged[k].first] = merged[k].second;
    anchor_of_end_[merged[k].second] = merged[k].first;
  }

  paired_[a] = b;
  paired_[b] = a;
  assigned_[a] = edge.dart_a;
  assigned_[b] = edge.dart_b;
  unlabelled_total_ -= 2;
  closed_faces_ += closures;
  ++processed_;
  edge_done_[e] = 1;
  auto& pend = pending_[pair_index_.at(edge.pair())];
  pend.erase(std::find(pend.begin(), pend.end(), e));
  return closures;
}

int ProcessState::process_pair(VertexPair p, DartId at_lo, DartId at_hi) {
  return process_edge(next_edge_of(p), at_lo, at_hi);
}

RotationSystem ProcessState::final_rotation() const {
  if (!complete()) throw std::logic_error("final_rotation on an incomplete process");
  std::vector<DartId> sigma(graph_->dart_count());
  for (DartId d = 0; d < graph_->dart_count(); ++d) {
    sigma[assigned_[d]] = assigned_[sigma_[d]];
  }
  return RotationSystem(*graph_, std::move(sigma));
}

void ProcessState::check_invariants() const {
  const MultiGraph& g = *graph_;
  const int darts = g.dart_count();
  auto fail = [](const std::string& what) { throw std::logic_error("process state: " + what); };

  int unlabelled = 0;
  for (DartId d = 0; d < darts; ++d) {
    if (paired_[d] < 0) {
      ++unlabelled;
      continue;
    }
    if (paired_[d] == d || paired_[paired_[d]] != d) fail("pairing is not a fixed-point-free involution");
  }
  if (unlabelled != unlabelled_total_) fail("unlabelled dart count drifted");
  if (unlabelled != 2 * (g.edge_count() - processed_)) fail("walk count is not 2|E| - 2k");

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int labelled = 0;
    for (DartId d : g.darts_at(v)) labelled += paired_[d] >= 0;
    if (unlabelled_at(v) != g.degree(v) - labelled) fail("D_v mismatch at vertex " + std::to_string(v + 1));
  }
  int pending_total = 0;
  for (const auto& pend : pending_) pending_total += static_cast<int>(pend.size());
  if (pending_total != g.edge_count() - processed_) fail("sum of remaining multiplicities is not |E| - k");

  // Walk ends from scratch.
  std::vector<char> on_walk(darts, 0);
  for (DartId b = 0; b < darts; ++b) {
    if (paired_[b] >= 0) continue;
    DartId x = sigma_[b];
    for (int steps = 0; paired_[x] >= 0; ++steps) {
      if (steps > darts) fail("walk does not terminate");
      on_walk[x] = 1;
      x = sigma_[paired_[x]];
    }
    if (end_of_anchor_[b] != x) {
      fail("walk anchored at " + std::to_string(b) + " ends at " + std::to_string(x) + ", stored " +
           std::to_string(end_of_anchor_[b]));
    }
    if (anchor_of_end_[x] != b) fail("inverse walk map out of sync at " + std::to_string(x));
  }

  // Labelled darts off every partial walk lie on closed faces.
  int closed = 0;
  std::vector<char> seen(darts, 0);
  for (DartId s = 0; s < darts; ++s) {
    if (paired_[s] < 0 || on_walk[s] || seen[s]) continue;
    ++closed;
    DartId x = s;
    do {
      if (paired_[x] < 0 || on_walk[x]) fail("closed face touches a partial walk");
      seen[x] = 1;
      x = sigma_[paired_[x]];
    } while (x != s);
  }
  if (closed != closed_faces_) {
    fail("closed faces " + std::to_string(closed) + " but counted " + std::to_string(closed_faces_));
  }
}

std::pair<DartId, DartId> random_dart_choice(const ProcessState& state, VertexPair p, Rng& rng) {
  if (state.remaining(p) == 0) throw std::invalid_argument("no unprocessed edge for this pair");
  auto at_lo = state.unlabelled_darts(p.lo);
  auto at_hi = state.unlabelled_darts(p.hi);
  if (!p.is_loop()) {
    DartId a = at_lo[uniform_index(rng, at_lo.size())];
    DartId b = at_hi[uniform_index(rng, at_hi.size())];
    return {a, b};
  }
  std::size_t i = uniform_index(rng, at_lo.size());
  std::size_t j = uniform_index(rng, at_lo.size() - 1);
  if (j >= i) ++j;
  return {at_lo[i], at_lo[j]};
}

VertexPair greedy_next_edge(const ProcessState& state) {
  VertexPair best;
  long long best_num = -1, best_den = 1;
  for (VertexPair p : state.open_pairs()) {
    long long num = state.closable_faces(p);
    long long den = state.remaining(p);
    if (best_num < 0 || num * best_den < best_num * den) {
      best = p;
      best_num = num;
      best_den = den;
    }
  }
  if (best_num < 0) throw std::logic_error("greedy_next_edge: no unprocessed edges");
  return best;
}

int lemma_two_slack(const ProcessState& state) {
  int best = 0;
  bool any = false;
  for (VertexPair p : state.open_pairs()) {
    int slack = state.closable_faces(p) - 2 * state.remaining(p);
    best = any ? std::min(best, slack) : slack;
    any = true;
  }
  if (!any) throw std::logic_error("lemma_two_slack: no unprocessed edges");
  return best;
}

ProcessTrace sample_embedding(const MultiGraph& g, Strategy strategy, Rng& rng, std::uint64_t seed,
                              StepObserver* observer) {
  ProcessState state(g);
  std::vector<EdgeId> order;
  if (strategy != Strategy::greedy) {
    order.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) order[e] = e;
    if (strategy == Strategy::random) {
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[uniform_index(rng, i)]);
      }
    }
  }

  std::vector<EdgeId> edge_order;
  std::vector<std::pair<DartId, DartId>> placements;
  std::vector<int> closures;
  edge_order.reserve(g.edge_count());
  placements.reserve(g.edge_count());
  closures.reserve(g.edge_count());

  for (int step = 0; step < g.edge_count(); ++step) {
    EdgeId e = strategy == Strategy::greedy ? state.next_edge_of(greedy_next_edge(state)) : order[step];
    const Edge& edge = g.edge(e);
    if (observer) observer->before_step(state, edge.pair());
    auto [at_u, at_v] = random_dart_choice(state, edge.pair(), rng);
    int x = state.process_edge(e, at_u, at_v);
    if (observer) observer->after_step(state, edge.pair(), x);
    edge_order.push_back(e);
    placements.emplace_back(at_u, at_v);
    closures.push_back(x);
  }

  return ProcessTrace{strategy,  seed, std::move(edge_order), std::move(placements), std::move(closures),
                      state.final_rotation(), state.closed_faces()};
}

void AuditCounts::merge(const AuditCounts& other) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    passed[i] += other.passed[i];
    failed[i] += other.failed[i];
  }
}

std::uint64_t AuditCounts::total_failed() const {
  std::uint64_t t = 0;
  for (auto f : failed) t += f;
  return t;
}

namespace {

enum Check { kWalkCount, kWalkDrop, kDarts, kStructure, kLemma2, kGreedy, kClosureSum };

class Auditor : public StepObserver {
 public:
  Auditor(const MultiGraph& g, Strategy strategy) : g_(g), strategy_(strategy) {}

  void record(Check c, bool ok, const std::string& what) {
    if (ok) {
      ++counts.passed[c];
    } else {
      ++counts.failed[c];
      failures.push_back(std::string(AuditCounts::kNames[c]) + ": " + what);
    }
  }

  void before_step(const ProcessState& state, VertexPair chosen) override {
    const int k = state.processed();
    walks_before_ = state.walk_count();
    d_lo_ = state.unlabelled_at(chosen.lo);
    d_hi_ = state.unlabelled_at(chosen.hi);
    mu_before_ = state.remaining(chosen);
    record(kWalkCount, walks_before_ == 2 * g_.edge_count() - 2 * k,
           "step " + std::to_string(k) + ": " + std::to_string(walks_before_) + " walks");
    int slack = lemma_two_slack(state);
    record(kLemma2, slack <= 0, "step " + std::to_string(k) + ": min slack " + std::to_string(slack));
    if (strategy_ == Strategy::greedy) {
      int c = state.closable_faces(chosen);
      record(kGreedy, c <= 2 * mu_before_,
             "step " + std::to_string(k) + ": closable " + std::to_string(c) + " > 2*" +
                 std::to_string(mu_before_));
    }
  }

  void after_step(const ProcessState& state, VertexPair chosen, int closures) override {
    const int k = state.processed();
    record(kWalkDrop, state.walk_count() == walks_before_ - 2,
           "step " + std::to_string(k) + ": walks " + std::to_string(walks_before_) + " -> " +
               std::to_string(state.walk_count()));
    bool darts_ok = state.remaining(chosen) == mu_before_ - 1 && closures >= 0 && closures <= 2;
    if (chosen.is_loop()) {
      darts_ok = darts_ok && state.unlabelled_at(chosen.lo) == d_lo_ - 2;
    } else {
      darts_ok = darts_ok && state.unlabelled_at(chosen.lo) == d_lo_ - 1 &&
                 state.unlabelled_at(chosen.hi) == d_hi_ - 1;
    }
    record(kDarts, darts_ok, "step " + std::to_string(k) + ": D/mu bookkeeping");
    try {
      state.check_invariants();
      record(kStructure, true, {});
    } catch (const std::logic_error& err) {
      record(kStructure, false, "step " + std::to_string(k) + ": " + err.what());
    }
  }

  AuditCounts counts;
  std::vector<std::string> failures;

 private:
  const MultiGraph& g_;
  Strategy strategy_;
  int walks_before_ = 0;
  int d_lo_ = 0;
  int d_hi_ = 0;
  int mu_before_ = 0;
};

}  // namespace

RunAudit audit_run(const MultiGraph& g, Strategy strategy, Rng& rng, std::uint64_t seed) {
  Auditor auditor(g, strategy);
  ProcessTrace trace = sample_embedding(g, strategy, rng, seed, &auditor);
  int sum = 0;
  for (int x : trace.closures_per_edge) sum += x;
  int traced = trace_faces(trace.final_rotation).face_count;
  auditor.record(kClosureSum, sum == traced && sum == trace.final_faces,
                 "sum X_e = " + std::to_string(sum) + ", traced F = " + std::to_string(traced));
  return RunAudit{std::move(trace), auditor.counts, std::move(auditor.failures)};
}

AuditSummary audit_many(const MultiGraph& g, std::span<const Strategy> strategies, std::uint64_t trials,
                        std::uint64_t seed, int jobs) {
  AuditSummary summary;
  for (Strategy strategy : strategies) {
    const std::uint64_t stream = run_seed(seed, static_cast<std::uint64_t>(strategy));
    const int workers = static_cast<int>(std::min<std::uint64_t>(resolve_jobs(jobs), std::max<std::uint64_t>(trials, 1)));
    std::vector<AuditCounts> counts(workers);
    std::vector<std::optional<AuditWitness>> first(workers);
    parallel_chunks(trials, workers, [&](std::uint64_t w, std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t i = begin; i < end; ++i) {
        Rng rng = run_stream(stream, i);
        auto audit = audit_run(g, strategy, rng, run_seed(stream, i));
        counts[w].merge(audit.counts);
        if (!audit.failures.empty() && !first[w]) {
          first[w] = AuditWitness{strategy, i, std::move(audit.failures), std::move(audit.trace)};
        }
      }
    });
    StrategyAudit sa{strategy, trials, {}};
    for (const auto& c : counts) sa.counts.merge(c);
    summary.strategies.push_back(sa);
    // Chunks are ordered, so the first non-empty one holds the smallest index.
    if (!summary.witness) {
      for (auto& f : first) {
        if (f) {
          summary.witness = std::move(f);
          break;
        }
      }
    }
  }
  return summary;
}

}  // namespace rembed
