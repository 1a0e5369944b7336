#include "rembed/rotation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rembed {

RotationSystem::RotationSystem(const MultiGraph& g, std::vector<DartId> next_at_vertex)
    : graph_(&g), sigma_(std::move(next_at_vertex)) {
  const int darts = g.dart_count();
  if (static_cast<int>(sigma_.size()) != darts) {
    throw std::invalid_argument("rotation has " + std::to_string(sigma_.size()) +
                                " entries, graph has " + std::to_string(darts) + " darts");
  }
  // Each vertex's darts must form a single sigma-cycle.
  std::vector<char> seen(darts, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto darts_v = g.darts_at(v);
    DartId d = darts_v.front();
    for (std::size_t step = 0; step < darts_v.size(); ++step) {
      if (d < 0 || d >= darts || g.vertex_of(d) != v || seen[d]) {
        throw std::invalid_argument("rotation at vertex " + std::to_string(v + 1) +
                                    " is not a single cycle over its darts");
      }
      seen[d] = 1;
      d = sigma_[d];
    }
    if (d != darts_v.front()) {
      throw std::invalid_argument("rotation at vertex " + std::to_string(v + 1) +
                                  " does not close after degree steps");
    }
  }
}

RotationSystem RotationSystem::from_cyclic_orders(const MultiGraph& g,
                                                  const std::vector<std::vector<DartId>>& orders) {
  if (static_cast<int>(orders.size()) != g.vertex_count()) {
    throw std::invalid_argument("need one cyclic order per vertex");
  }
  std::vector<DartId> sigma(g.dart_count(), -1);
  for (const auto& cyc : orders) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      DartId d = cyc[i];
      if (d < 0 || d >= g.dart_count() || sigma[d] != -1) {
        throw std::invalid_argument("dart " + std::to_string(d) + " invalid or repeated");
      }
      sigma[d] = cyc[(i + 1) % cyc.size()];
    }
  }
  if (std::find(sigma.begin(), sigma.end(), -1) != sigma.end()) {
    throw std::invalid_argument("cyclic orders do not cover every dart");
  }
  return RotationSystem(g, std::move(sigma));
}

RotationSystem RotationSystem::identity(const MultiGraph& g) {
  std::vector<DartId> sigma(g.dart_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto darts = g.darts_at(v);
    for (std::size_t i = 0; i < darts.size(); ++i) {
      sigma[darts[i]] = darts[(i + 1) % darts.size()];
    }
  }
  return RotationSystem(g, std::move(sigma));
}

std::vector<DartId> RotationSystem::cyclic_order(Vertex v) const {
  auto darts = graph_->darts_at(v);
  std::vector<DartId> out;
  out.reserve(darts.size());
  DartId d = darts.front();
  do {
    out.push_back(d);
    d = sigma_[d];
  } while (d != darts.front());
  return out;
}

int count_faces(const MultiGraph& g, std::span<const DartId> sigma, std::vector<char>& scratch) {
  const int darts = g.dart_count();
  scratch.assign(darts, 0);
  int faces = 0;
  for (DartId start = 0; start < darts; ++start) {
    if (scratch[start]) continue;
    ++faces;
    DartId d = start;
    do {
      scratch[d] = 1;
      d = sigma[g.partner(d)];
    } while (d != start);
  }
  return faces;
}

int genus_from_counts(int n_c, int e_c, int f_c) {
  int twice = 2 - n_c + e_c - f_c;
  if (twice < 0 || twice % 2 != 0) {
    throw std::logic_error("Euler characteristic inconsistent: n=" + std::to_string(n_c) +
                           " e=" + std::to_string(e_c) + " f=" + std::to_string(f_c));
  }
  return twice / 2;
}

FaceCensus trace_faces(const RotationSystem& rot) {
  const MultiGraph& g = rot.graph();
  const int darts = g.dart_count();
  const auto label = component_labels(g);
  const int ncomp = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;

  std::vector<int> n_c(ncomp, 0), e_c(ncomp, 0), f_c(ncomp, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++n_c[label[v]];
  for (const auto& e : g.edges()) ++e_c[label[e.u]];

  FaceCensus census;
  std::vector<char> seen(darts, 0);
  for (DartId start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    int length = 0;
    DartId d = start;
    do {
      seen[d] = 1;
      ++length;
      d = rot.next(g.partner(d));
    } while (d != start);
    census.face_lengths.push_back(length);
    ++f_c[label[g.vertex_of(start)]];
  }
  census.face_count = static_cast<int>(census.face_lengths.size());
  std::sort(census.face_lengths.begin(), census.face_lengths.end());

  for (int c = 0; c < ncomp; ++c) {
    census.genus_per_component.push_back(genus_from_counts(n_c[c], e_c[c], f_c[c]));
    census.total_genus += census.genus_per_component.back();
  }
  return census;
}

BigInt rotation_count(const MultiGraph& g) {
  BigInt total = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int k = 2; k < g.degree(v); ++k) total *= k;
  }
  return total;
}

RotationSystem uniform_random_rotation(const MultiGraph& g, Rng& rng) {
  std::vector<DartId> sigma(g.dart_count());
  std::vector<DartId> order;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto darts = g.darts_at(v);
    order.assign(darts.begin(), darts.end());
    // Fisher-Yates on positions 1..d-1; position 0 stays anchored.
    for (std::size_t i = order.size(); i > 2; --i) {
      std::size_t j = 1 + uniform_index(rng, i - 1);
      std::swap(order[i - 1], order[j]);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      sigma[order[i]] = order[(i + 1) % order.size()];
    }
  }
  return RotationSystem(g, std::move(sigma));
}

std::string format_rotation(const RotationSystem& rot) {
  std::ostringstream out;
  for (Vertex v = 0; v < rot.graph().vertex_count(); ++v) {
    out << v + 1 << ':';
    for (DartId d : rot.cyclic_order(v)) out << ' ' << d;
    out << '\n';
  }
  return out.str();
}

RotationSystem parse_rotation(const MultiGraph& g, const std::string& text) {
  std::vector<std::vector<DartId>> orders(g.vertex_count());
  std::vector<char> have(g.vertex_count(), 0);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("rotation line lacks 'v:' prefix");
    int v = 0;
    try {
      v = std::stoi(line.substr(0, colon)) - 1;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad vertex label in rotation line: " + line);
    }
    if (v < 0 || v >= g.vertex_count() || have[v]) {
      throw std::invalid_argument("rotation vertex out of range or repeated: " + line);
    }
    have[v] = 1;
    std::istringstream ds(line.substr(colon + 1));
    DartId d;
    while (ds >> d) orders[v].push_back(d);
    if (!ds.eof()) throw std::invalid_argument("bad dart id in rotation line: " + line);
    for (DartId x : orders[v]) {
      if (x < 0 || x >= g.dart_count() || g.vertex_of(x) != v) {
        throw std::invalid_argument("dart " + std::to_string(x) + " is not at vertex " +
                                    std::to_string(v + 1));
      }
    }
  }
  if (std::find(have.begin(), have.end(), 0) != have.end()) {
    throw std::invalid_argument("rotation text is missing a vertex");
  }
  return RotationSystem::from_cyclic_orders(g, orders);
}

}  // namespace rembed
