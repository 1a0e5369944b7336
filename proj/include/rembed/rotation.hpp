#pragma once

#include <span>
#include <string>
#include <vector>

#include "rembed/multigraph.hpp"
#include "rembed/rational.hpp"
#include "rembed/rng.hpp"

namespace rembed {

/*
  A rotation system: the permutation sigma on darts whose cycles are the
  local rotations. Holds a non-owning pointer to its graph, which must
  outlive it.
*/
class RotationSystem {
 public:
  /// Validates that the cycles of `next_at_vertex` are exactly the vertex dart sets.
  RotationSystem(const MultiGraph& g, std::vector<DartId> next_at_vertex);
  RotationSystem(MultiGraph&&, std::vector<DartId>) = delete;

  /// `orders[v]` lists the darts of v in cyclic order (any starting dart).
  static RotationSystem from_cyclic_orders(const MultiGraph& g,
                                           const std::vector<std::vector<DartId>>& orders);
  /// Every vertex rotates its darts in increasing id order.
  static RotationSystem identity(const MultiGraph& g);
  static RotationSystem identity(MultiGraph&&) = delete;

  const MultiGraph& graph() const { return *graph_; }
  DartId next(DartId d) const { return sigma_[d]; }
  std::span<const DartId> permutation() const { return sigma_; }

  /// Darts of v in rotation order, starting from the anchored (smallest) dart.
  std::vector<DartId> cyclic_order(Vertex v) const;

  friend bool operator==(const RotationSystem& a, const RotationSystem& b) {
    return a.graph_ == b.graph_ && a.sigma_ == b.sigma_;
  }

 private:
  const MultiGraph* graph_;
  std::vector<DartId> sigma_;
};

struct FaceCensus {
  int face_count = 0;
  std::vector<int> face_lengths;  // sorted ascending, in darts
  std::vector<int> genus_per_component;
  int total_genus = 0;
};

/// Faces are the orbits of d -> sigma(alpha(d)).
FaceCensus trace_faces(const RotationSystem& rot);

/// Face count only; `scratch` is resized as needed and may be reused across calls.
int count_faces(const MultiGraph& g, std::span<const DartId> sigma, std::vector<char>& scratch);

/// (2 - n + e - f) / 2 for one connected component. Throws std::logic_error
/// when the result is negative or not an integer.
int genus_from_counts(int n_c, int e_c, int f_c);

/// Number of distinct rotation systems, prod_v (deg(v) - 1)!.
BigInt rotation_count(const MultiGraph& g);

/// Uniform over all rotation systems: anchor the first dart at each vertex and
/// shuffle the rest.
RotationSystem uniform_random_rotation(const MultiGraph& g, Rng& rng);

/// One line per vertex, `v: d0 d1 ...` with 1-based v and 0-based dart ids.
std::string format_rotation(const RotationSystem& rot);
RotationSystem parse_rotation(const MultiGraph& g, const std::string& text);

}  // namespace rembed
