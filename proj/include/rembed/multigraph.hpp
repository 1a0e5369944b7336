#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rembed {

using Vertex = int;
using DartId = int;
using EdgeId = int;

/// Unordered vertex pair stored with lo <= hi; lo == hi denotes a loop.
struct VertexPair {
  Vertex lo = 0;
  Vertex hi = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  bool is_loop() const { return lo == hi; }
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// One line of an edge list: `multiplicity` parallel edges between u and v.
struct EdgeEntry {
  Vertex u = 0;
  Vertex v = 0;
  int multiplicity = 1;
};

struct Dart {
  DartId id = 0;
  Vertex vertex = 0;
};

struct Edge {
  EdgeId id = 0;
  DartId dart_a = 0;  // incident with u
  DartId dart_b = 0;  // incident with v
  Vertex u = 0;
  Vertex v = 0;

  bool is_loop() const { return u == v; }
  VertexPair pair() const { return {u, v}; }
};

/*
  Immutable dart-based multigraph. Loops and parallel edges are allowed;
  isolated vertices are not.

  Edges are numbered in input order (duplicate pairs merged at their first
  occurrence). Dart ids are contiguous per vertex: all darts of vertex 0
  first, then vertex 1, and so on, each block in edge-id order with a loop
  contributing two consecutive darts. That numbering is also the canonical
  initial cyclic order used by the random process.
*/
class MultiGraph {
 public:
  /// Vertices are 0-based here; the text format is 1-based.
  static MultiGraph from_edge_list(int n, std::span<const EdgeEntry> entries);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return static_cast<int>(dart_vertex_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  Dart dart(DartId d) const { return {d, dart_vertex_.at(d)}; }
  Vertex vertex_of(DartId d) const { return dart_vertex_[d]; }
  EdgeId edge_of(DartId d) const { return dart_edge_[d]; }
  /// The other dart of the same edge (the edge involution).
  DartId partner(DartId d) const { return dart_partner_[d]; }

  std::span<const DartId> darts_at(Vertex v) const;
  int degree(Vertex v) const;

  /// Multiplicity of the unordered pair {u, v}; 0 when not adjacent.
  int multiplicity(Vertex u, Vertex v) const;
  /// Largest multiplicity among pairs incident with v (loops included).
  int mu_at(Vertex v) const;
  int mu() const { return mu_; }
  const std::map<VertexPair, int>& mu_pairs() const { return mu_pair_; }

  bool has_loops() const;
  /// No loops and no parallel edges.
  bool is_simple() const { return !has_loops() && mu_ == 1; }
  int max_degree() const;

  /// Edge list with one entry per pair, sorted by (lo, hi).
  std::vector<EdgeEntry> canonical_entries() const;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> dart_vertex_;
  std::vector<EdgeId> dart_edge_;
  std::vector<DartId> dart_partner_;
  std::vector<DartId> dart_ids_;    // identity; backs darts_at() spans
  std::vector<int> vertex_offset_;  // darts of v are [offset[v], offset[v+1])
  std::map<VertexPair, int> mu_pair_;
  std::vector<int> mu_at_;
  int mu_ = 0;
};

/// Connected components, each a sorted vertex list, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const MultiGraph& g);
/// Component index of every vertex, consistent with components().
std::vector<int> component_labels(const MultiGraph& g);

/// Bridges (cut edges), sorted by edge id. Parallel edges are never bridges.
std::vector<EdgeId> cut_edges(const MultiGraph& g);

/*
  Text format, one graph per file:

    # comment
    n m
    u v mult      (m lines, 1-based vertices)

  Blank lines and lines starting with '#' are ignored.
*/
MultiGraph read_graph(std::istream& in);
MultiGraph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const MultiGraph& g);
std::string format_graph(const MultiGraph& g);

}  // namespace rembed
