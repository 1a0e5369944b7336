#include "rembed/enumeration.hpp"

#include <algorithm>

#include "rembed/parallel.hpp"

namespace rembed {

namespace {

std::uint64_t factorial_u64(int m) {
  std::uint64_t f = 1;
  for (int k = 2; k <= m; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Permutation of `sorted` with the given lexicographic rank.
void unrank_permutation(std::vector<DartId>& out, std::vector<DartId> sorted, std::uint64_t rank) {
  const int m = static_cast<int>(sorted.size());
  out.clear();
  for (int i = 0; i < m; ++i) {
    std::uint64_t f = factorial_u64(m - 1 - i);
    auto pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(sorted[pick]);
    sorted.erase(sorted.begin() + static_cast<std::ptrdiff_t>(pick));
  }
}

std::uint64_t rank_permutation(std::span<const DartId> perm) {
  const int m = static_cast<int>(perm.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < m; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j < m; ++j) {
      if (perm[j] < perm[i]) ++smaller;
    }
    rank += smaller * factorial_u64(m - 1 - i);
  }
  return rank;
}

}  // namespace

BudgetExceeded::BudgetExceeded(BigInt count, std::uint64_t budget)
    : std::runtime_error("enumeration refused: " + count.str() +
                         " rotation systems exceed the budget of " + std::to_string(budget)),
      count_(std::move(count)),
      budget_(budget) {}

std::uint64_t checked_rotation_count(const MultiGraph& g, std::uint64_t budget) {
  BigInt count = rotation_count(g);
  if (count > budget) throw BudgetExceeded(count, budget);
  return count.convert_to<std::uint64_t>();
}

RotationEnumerator::RotationEnumerator(const MultiGraph& g, std::uint64_t budget)
    : graph_(&g), size_(checked_rotation_count(g, budget)) {
  const int n = g.vertex_count();
  rest_.resize(n);
  radix_.resize(n);
  sigma_.resize(g.dart_count());
  for (Vertex v = 0; v < n; ++v) {
    auto darts = g.darts_at(v);
    rest_[v].assign(darts.begin() + 1, darts.end());
    radix_[v] = factorial_u64(static_cast<int>(rest_[v].size()));
    write_vertex(v);
  }
}

void RotationEnumerator::write_vertex(Vertex v) {
  DartId anchor = graph_->darts_at(v).front();
  DartId prev = anchor;
  for (DartId d : rest_[v]) {
    sigma_[prev] = d;
    prev = d;
  }
  sigma_[prev] = anchor;
}

void RotationEnumerator::advance() {
  if (done()) return;
  ++index_;
  for (Vertex v = graph_->vertex_count() - 1; v >= 0; --v) {
    bool carried = !std::next_permutation(rest_[v].begin(), rest_[v].end());
    write_vertex(v);
    if (!carried) break;
  }
}

void RotationEnumerator::seek(std::uint64_t index) {
  index_ = std::min(index, size_);
  std::uint64_t rem = index_ % std::max<std::uint64_t>(size_, 1);
  for (Vertex v = graph_->vertex_count() - 1; v >= 0; --v) {
    auto darts = graph_->darts_at(v);
    std::vector<DartId> sorted(darts.begin() + 1, darts.end());
    unrank_permutation(rest_[v], std::move(sorted), rem % radix_[v]);
    rem /= radix_[v];
    write_vertex(v);
  }
}

std::uint64_t rotation_index(const RotationSystem& rot) {
  const MultiGraph& g = rot.graph();
  std::uint64_t index = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto order = rot.cyclic_order(v);
    std::span<const DartId> rest(order.data() + 1, order.size() - 1);
    index = index * factorial_u64(static_cast<int>(rest.size())) + rank_permutation(rest);
  }
  return index;
}

RotationSystem rotation_at(const MultiGraph& g, std::uint64_t index) {
  RotationEnumerator it(g, ~std::uint64_t{0});
  if (index >= it.size()) throw std::out_of_range("rotation index past the end");
  it.seek(index);
  return it.current();
}

void for_each_rotation(const MultiGraph& g, const std::function<void(const RotationSystem&)>& fn,
                       std::uint64_t budget) {
  for (RotationEnumerator it(g, budget); !it.done(); it.advance()) {
    fn(it.current());
  }
}

ExactStats exact_face_stats(const MultiGraph& g, std::uint64_t budget, int jobs, std::string graph_id) {
  const std::uint64_t total = checked_rotation_count(g, budget);
  const int workers = static_cast<int>(std::min<std::uint64_t>(resolve_jobs(jobs), total));

  // Faces are bounded by |E| + components; index the histogram directly.
  const int max_faces = g.edge_count() + g.vertex_count() + 1;
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(max_faces + 1, 0));

  parallel_chunks(total, workers, [&](std::uint64_t w, std::uint64_t begin, std::uint64_t end) {
    RotationEnumerator it(g, budget);
    it.seek(begin);
    std::vector<char> scratch;
    auto& hist = partial[w];
    for (std::uint64_t i = begin; i < end; ++i, it.advance()) {
      ++hist[count_faces(g, it.sigma(), scratch)];
    }
  });

  const int ncomp = static_cast<int>(components(g).size());
  ExactStats stats;
  stats.graph_id = std::move(graph_id);
  stats.vertex_count = g.vertex_count();
  stats.edge_count = g.edge_count();
  stats.total_embeddings = total;
  BigInt weighted = 0;
  for (int f = 0; f <= max_faces; ++f) {
    BigInt count = 0;
    for (const auto& hist : partial) count += hist[f];
    if (count == 0) continue;
    stats.face_distribution[f] = count;
    int twice_genus = 2 * ncomp - g.vertex_count() + g.edge_count() - f;
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw std::logic_error("face count " + std::to_string(f) + " violates Euler's formula");
    }
    stats.genus_distribution[twice_genus / 2] += count;
    weighted += count * f;
  }
  stats.expected_faces = Rational(weighted, stats.total_embeddings);
  return stats;
}

}  // namespace rembed
