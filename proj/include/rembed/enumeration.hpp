#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rembed/multigraph.hpp"
#include "rembed/rational.hpp"
#include "rembed/rotation.hpp"

namespace rembed {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Thrown instead of truncating when a graph has more rotation systems than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(BigInt count, std::uint64_t budget);
  const BigInt& count() const { return count_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigInt count_;
  std::uint64_t budget_;
};

/// Throws BudgetExceeded if rotation_count(g) > budget; returns the count otherwise.
std::uint64_t checked_rotation_count(const MultiGraph& g, std::uint64_t budget = kDefaultBudget);

/*
  Walks every rotation system once. Per vertex the smallest dart is anchored
  and the remaining darts run through their permutations in lexicographic
  order; vertices form a mixed-radix counter with the last vertex fastest.
  index() is the position in that order, so ranges of indices can be handed
  to separate workers via seek().
*/
class RotationEnumerator {
 public:
  explicit RotationEnumerator(const MultiGraph& g, std::uint64_t budget = kDefaultBudget);

  std::uint64_t size() const { return size_; }
  std::uint64_t index() const { return index_; }
  bool done() const { return index_ >= size_; }

  std::span<const DartId> sigma() const { return sigma_; }
  RotationSystem current() const { return RotationSystem(*graph_, sigma_); }

  void advance();
  void seek(std::uint64_t index);

 private:
  void write_vertex(Vertex v);

  const MultiGraph* graph_;
  std::uint64_t size_ = 0;
  std::uint64_t index_ = 0;
  std::vector<std::vector<DartId>> rest_;  // non-anchored darts per vertex, current permutation
  std::vector<std::uint64_t> radix_;       // (deg(v) - 1)!
  std::vector<DartId> sigma_;
};

/// Position of `rot` in RotationEnumerator order.
std::uint64_t rotation_index(const RotationSystem& rot);
RotationSystem rotation_at(const MultiGraph& g, std::uint64_t index);

void for_each_rotation(const MultiGraph& g, const std::function<void(const RotationSystem&)>& fn,
                       std::uint64_t budget = kDefaultBudget);

struct ExactStats {
  std::string graph_id;
  int vertex_count = 0;
  int edge_count = 0;
  BigInt total_embeddings = 0;
  std::map<int, BigInt> face_distribution;
  std::map<int, BigInt> genus_distribution;  // total genus over components
  Rational expected_faces = 0;
};

/// Exact face-count distribution over all rotation systems. `jobs` splits the
/// index range; the result does not depend on it.
ExactStats exact_face_stats(const MultiGraph& g, std::uint64_t budget = kDefaultBudget, int jobs = 1,
                            std::string graph_id = {});

}  // namespace rembed
