#include "rembed/generators.hpp"

#include <map>
#include <stdexcept>

namespace rembed {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

MultiGraph dipole(int mu) {
  require(mu >= 1, "dipole needs mu >= 1");
  std::vector<EdgeEntry> e{{0, 1, mu}};
  return MultiGraph::from_edge_list(2, e);
}

MultiGraph dipole_chain(int k, int mu) {
  require(k >= 1 && mu >= 1, "dipole chain needs k >= 1 and mu >= 1");
  std::vector<EdgeEntry> e;
  for (int t = 0; t < k; ++t) {
    e.push_back({2 * t, 2 * t + 1, mu});
    if (t + 1 < k) e.push_back({2 * t + 1, 2 * t + 2, 1});
  }
  return MultiGraph::from_edge_list(2 * k, e);
}

MultiGraph triangle_chain(int k) {
  require(k >= 1, "triangle chain needs k >= 1");
  std::vector<EdgeEntry> e;
  for (int t = 0; t < k; ++t) {
    const int a = 3 * t;
    e.push_back({a, a + 1, 1});
    e.push_back({a + 1, a + 2, 1});
    e.push_back({a, a + 2, 1});
    if (t + 1 < k) e.push_back({a + 2, a + 3, 1});
  }
  return MultiGraph::from_edge_list(3 * k, e);
}

MultiGraph bouquet(int loops) {
  require(loops >= 1, "bouquet needs at least one loop");
  std::vector<EdgeEntry> e{{0, 0, loops}};
  return MultiGraph::from_edge_list(1, e);
}

MultiGraph complete_graph(int n) {
  require(n >= 2, "complete graph needs n >= 2");
  std::vector<EdgeEntry> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.push_back({u, v, 1});
  }
  return MultiGraph::from_edge_list(n, e);
}

MultiGraph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<EdgeEntry> e;
  for (int u = 0; u < n; ++u) e.push_back({u, (u + 1) % n, 1});
  return MultiGraph::from_edge_list(n, e);
}

MultiGraph path(int n) {
  require(n >= 2, "path needs n >= 2 (a lone vertex has degree 0)");
  std::vector<EdgeEntry> e;
  for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1, 1});
  return MultiGraph::from_edge_list(n, e);
}

MultiGraph generate(const std::string& spec) {
  auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  std::map<std::string, int> params;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      auto eq = item.find('=');
      require(eq != std::string::npos && eq > 0, "generator parameter '" + item + "' is not key=value");
      try {
        std::size_t used = 0;
        params[item.substr(0, eq)] = std::stoi(item.substr(eq + 1), &used);
        require(used == item.size() - eq - 1, "trailing characters");
      } catch (const std::exception&) {
        throw std::invalid_argument("generator parameter '" + item + "' is not an integer");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    require(it != params.end(), "generator '" + family + "' needs parameter " + key);
    return it->second;
  };

  if (family == "dipole") return dipole(get("mu"));
  if (family == "dipole-chain") return dipole_chain(get("k"), get("mu"));
  if (family == "triangle-chain") return triangle_chain(get("k"));
  if (family == "bouquet") return bouquet(get("loops"));
  if (family == "complete") return complete_graph(get("n"));
  if (family == "cycle") return cycle(get("n"));
  if (family == "path") return path(get("n"));
  throw std::invalid_argument("unknown generator family '" + family + "'");
}

std::vector<NamedGraph> standard_corpus() {
  std::vector<std::string> specs;
  for (int mu = 1; mu <= 6; ++mu) specs.push_back("dipole:mu=" + std::to_string(mu));
  for (int k = 2; k <= 3; ++k) {
    for (int mu = 1; mu <= 3; ++mu) {
      specs.push_back("dipole-chain:k=" + std::to_string(k) + ",mu=" + std::to_string(mu));
    }
  }
  for (int k = 1; k <= 2; ++k) specs.push_back("triangle-chain:k=" + std::to_string(k));
  specs.push_back("complete:n=4");
  specs.push_back("complete:n=5");
  for (int l = 1; l <= 3; ++l) specs.push_back("bouquet:loops=" + std::to_string(l));
  for (int n = 2; n <= 8; ++n) specs.push_back("path:n=" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) specs.push_back("cycle:n=" + std::to_string(n));

  std::vector<NamedGraph> out;
  out.reserve(specs.size());
  for (auto& s : specs) out.push_back({s, generate(s)});
  return out;
}

}  // namespace rembed
