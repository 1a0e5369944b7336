#include "rembed/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rembed {

MultiGraph MultiGraph::from_edge_list(int n, std::span<const EdgeEntry> entries) {
  if (n < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }

  // Merge duplicate pairs, keeping the position of the first occurrence.
  std::vector<std::pair<VertexPair, int>> merged;
  std::map<VertexPair, std::size_t> slot;
  for (const auto& entry : entries) {
    if (entry.u < 0 || entry.u >= n || entry.v < 0 || entry.v >= n) {
      throw std::out_of_range("edge endpoint out of range: (" + std::to_string(entry.u + 1) + ", " +
                              std::to_string(entry.v + 1) + ") with n = " + std::to_string(n));
    }
    if (entry.multiplicity < 1) {
      throw std::invalid_argument("edge multiplicity must be positive, got " +
                                  std::to_string(entry.multiplicity));
    }
    VertexPair p{entry.u, entry.v};
    auto [it, inserted] = slot.try_emplace(p, merged.size());
    if (inserted) {
      merged.emplace_back(p, entry.multiplicity);
    } else {
      merged[it->second].second += entry.multiplicity;
    }
  }

  MultiGraph g;
  g.n_ = n;
  for (const auto& [p, m] : merged) {
    for (int k = 0; k < m; ++k) {
      Edge e;
      e.id = static_cast<EdgeId>(g.edges_.size());
      e.u = p.lo;
      e.v = p.hi;
      g.edges_.push_back(e);
    }
    g.mu_pair_[p] = m;
  }

  std::vector<int> degree(n, 0);
  for (const auto& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 0) {
      throw std::invalid_argument("vertex " + std::to_string(v + 1) + " has degree 0");
    }
  }

  g.vertex_offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    g.vertex_offset_[v + 1] = g.vertex_offset_[v] + degree[v];
  }
  const int darts = g.vertex_offset_[n];
  g.dart_vertex_.resize(darts);
  g.dart_edge_.resize(darts);
  g.dart_partner_.resize(darts);
  g.dart_ids_.resize(darts);
  std::iota(g.dart_ids_.begin(), g.dart_ids_.end(), 0);

  std::vector<int> fill(g.vertex_offset_.begin(), g.vertex_offset_.end() - 1);
  for (auto& e : g.edges_) {
    e.dart_a = fill[e.u]++;
    e.dart_b = fill[e.v]++;
    g.dart_vertex_[e.dart_a] = e.u;
    g.dart_vertex_[e.dart_b] = e.v;
    g.dart_edge_[e.dart_a] = e.id;
    g.dart_edge_[e.dart_b] = e.id;
    g.dart_partner_[e.dart_a] = e.dart_b;
    g.dart_partner_[e.dart_b] = e.dart_a;
  }

  g.mu_at_.assign(n, 0);
  for (const auto& [p, m] : g.mu_pair_) {
    g.mu_at_[p.lo] = std::max(g.mu_at_[p.lo], m);
    g.mu_at_[p.hi] = std::max(g.mu_at_[p.hi], m);
    g.mu_ = std::max(g.mu_, m);
  }
  return g;
}

void MultiGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(n_) + ")");
  }
}

std::span<const DartId> MultiGraph::darts_at(Vertex v) const {
  check_vertex(v);
  return {dart_ids_.data() + vertex_offset_[v],
          static_cast<std::size_t>(vertex_offset_[v + 1] - vertex_offset_[v])};
}

int MultiGraph::degree(Vertex v) const {
  check_vertex(v);
  return vertex_offset_[v + 1] - vertex_offset_[v];
}

int MultiGraph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto it = mu_pair_.find(VertexPair{u, v});
  return it == mu_pair_.end() ? 0 : it->second;
}

int MultiGraph::mu_at(Vertex v) const {
  check_vertex(v);
  return mu_at_[v];
}

bool MultiGraph::has_loops() const {
  return std::any_of(mu_pair_.begin(), mu_pair_.end(),
                     [](const auto& kv) { return kv.first.is_loop(); });
}

int MultiGraph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) {
    best = std::max(best, vertex_offset_[v + 1] - vertex_offset_[v]);
  }
  return best;
}

std::vector<EdgeEntry> MultiGraph::canonical_entries() const {
  std::vector<EdgeEntry> out;
  out.reserve(mu_pair_.size());
  for (const auto& [p, m] : mu_pair_) {
    out.push_back({p.lo, p.hi, m});
  }
  return out;
}

std::vector<int> component_labels(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : g.edges()) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // Relabel roots densely in order of smallest member.
  std::vector<int> label(n, -1), root_label(n, -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    int r = find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

std::vector<std::vector<Vertex>> components(const MultiGraph& g) {
  auto label = component_labels(g);
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out[label[v]].push_back(v);
  }
  return out;
}

std::vector<EdgeId> cut_edges(const MultiGraph& g) {
  // Iterative Tarjan lowlink over darts; skipping only the entering edge id
  // (not the parent vertex) handles parallel edges correctly.
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> bridges;
  int timer = 0;

  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto darts = g.darts_at(f.v);
      if (f.next < darts.size()) {
        DartId d = darts[f.next++];
        EdgeId e = g.edge_of(d);
        if (e == f.via) continue;
        Vertex w = g.vertex_of(g.partner(d));
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) bridges.push_back(done.via);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_error(int lineno, const std::string& what) {
  throw std::invalid_argument("graph text, line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

MultiGraph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) parse_error(lineno, "missing header `n m`");

  long long n = 0, m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) parse_error(lineno, "expected header `n m`");
    if (n < 1 || m < 0) parse_error(lineno, "header needs n >= 1 and m >= 0");
  }

  std::vector<EdgeEntry> entries;
  entries.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_content_line(in, line, lineno)) {
      parse_error(lineno, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(k));
    }
    std::istringstream ls(line);
    long long u = 0, v = 0, mult = 0;
    std::string extra;
    if (!(ls >> u >> v >> mult) || (ls >> extra)) parse_error(lineno, "expected `u v mult`");
    if (u < 1 || u > n || v < 1 || v > n) parse_error(lineno, "vertex out of range 1.." + std::to_string(n));
    if (mult < 1) parse_error(lineno, "multiplicity must be positive");
    entries.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), static_cast<int>(mult)});
  }
  if (next_content_line(in, line, lineno)) parse_error(lineno, "trailing content after edge lines");
  return MultiGraph::from_edge_list(static_cast<int>(n), entries);
}

MultiGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  auto entries = g.canonical_entries();
  out << g.vertex_count() << ' ' << entries.size() << '\n';
  for (const auto& e : entries) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.multiplicity << '\n';
  }
}

std::string format_graph(const MultiGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace rembed
