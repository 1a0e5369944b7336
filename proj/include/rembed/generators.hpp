#pragma once

#include <string>
#include <vector>

#include "rembed/multigraph.hpp"

namespace rembed {

/// Two vertices joined by mu parallel edges.
MultiGraph dipole(int mu);

/// k dipoles in a row; the second vertex of dipole t is joined to the first
/// vertex of dipole t+1 by a single cut edge. n = 2k, |E| = k mu + k - 1.
MultiGraph dipole_chain(int k, int mu);

/// k triangles in a row, the last vertex of triangle t joined to the first
/// vertex of triangle t+1 by a cut edge. n = 3k.
MultiGraph triangle_chain(int k);

/// One vertex carrying `loops` loops.
MultiGraph bouquet(int loops);

MultiGraph complete_graph(int n);  // n >= 2
MultiGraph cycle(int n);           // n >= 3
MultiGraph path(int n);            // n >= 2 vertices

/*
  Generator spec strings, e.g. "dipole:mu=3", "dipole-chain:k=3,mu=5",
  "triangle-chain:k=2", "bouquet:loops=2", "complete:n=4", "cycle:n=5",
  "path:n=4". Throws std::invalid_argument on unknown families or missing
  parameters.
*/
MultiGraph generate(const std::string& spec);

struct NamedGraph {
  std::string name;  // a generator spec
  MultiGraph graph;
};

/// The small-graph corpus used by the property and acceptance suites: dipoles
/// mu <= 6, dipole chains k <= 3 with mu <= 3, triangle chains k <= 2, K4, K5,
/// bouquets with up to 3 loops, paths and cycles up to 8 vertices.
std::vector<NamedGraph> standard_corpus();

}  // namespace rembed
