#include "csfkit/catalog.hpp"

#include <map>
#include <stdexcept>

namespace csfkit::catalog {

namespace {

struct Recipe {
  int n;
  std::vector<std::pair<int, int>> edges;
};

// Frozen edge lists.  The six-vertex-and-up graphs are transcribed from
// figure coordinates (0-indexed); degree sequences are recorded here and
// re-checked by tests.
const std::map<std::string, Recipe>& recipe_table() {
  static const std::map<std::string, Recipe> table = {
      // Star K_{1,3}.  Degrees [1,1,1,3].
      {"claw", {4, {{0, 1}, {0, 2}, {0, 3}}}},
      // Triangle {1,2,4} with one pendant on each corner.
      // Degrees [1,1,1,3,3,3].
      {"net", {6, {{0, 1}, {1, 2}, {2, 3}, {4, 1}, {4, 2}, {4, 5}}}},
      // Triangle {0,3,4}, pendant 1 on 0 and pendant 2 on 3.
      // Degrees [1,1,2,3,3].
      {"bull", {5, {{0, 1}, {2, 3}, {0, 3}, {4, 3}, {4, 0}}}},
      // Net plus the edge {0,3} joining two of its pendants.
      // Degrees [1,2,2,3,3,3].
      {"antenna", {6, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {4, 1}, {4, 2}, {5, 4}}}},
      // Path 0-1-2-3 with a pendant on the degree-2 vertex 1.
      // Degrees [1,1,1,2,3].
      {"chair", {5, {{0, 1}, {1, 2}, {2, 3}, {4, 1}}}},
      // Nine vertices, 18 edges, 4-regular; vertices 0..5 induce the
      // antenna.
      {"F1", {9, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {4, 1}, {4, 2}, {5, 4},
                  {8, 0}, {8, 3}, {8, 4}, {8, 5}, {6, 5}, {6, 1}, {6, 7},
                  {6, 0}, {7, 2}, {7, 3}, {7, 5}}}},
      // Seven vertices, 11 edges.  Degrees sorted [2,3,3,3,3,4,4].
      // Bull on {0..4} (triangle {0,1,2}, pendant 3 on 0, pendant 4 on 1);
      // vertex 5 is adjacent to {0,3,4} and vertex 6 to {3,4,5}.  Every
      // (claw, co-claw)-free graph with an induced bull and no induced
      // net, 3-sun, or antenna embeds in this graph; it contains no net,
      // 3-sun, or antenna itself, and it is strongly e-positive.
      {"F2", {7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {5, 0}, {5, 3},
                  {5, 4}, {6, 3}, {6, 4}, {6, 5}}}},
      // Triangle {1,2,3} with a pendant on 1.  Degrees [1,2,2,3].
      {"paw", {4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}}},
      // K_4 minus the edge {1,3}.  Degrees [2,2,3,3].
      {"diamond", {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}}},
      // Diamond plus a pendant on the degree-3 vertex 0.
      {"dart", {5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 4}}}},
      // K_{1,4} plus one edge between two leaves.
      {"cricket", {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}}}},
  };
  return table;
}

}  // namespace

Graph named(const std::string& name) {
  if (name == "sun3") return named("net").complement();
  if (name == "co_P3") return path(3).complement();
  if (name == "co_K3_2K1") {
    // Complement of the disjoint union of a triangle and two isolated
    // vertices.
    Graph k3_2k1(5);
    k3_2k1.add_edge(0, 1);
    k3_2k1.add_edge(0, 2);
    k3_2k1.add_edge(1, 2);
    return k3_2k1.complement();
  }
  auto it = recipe_table().find(name);
  if (it == recipe_table().end())
    throw std::invalid_argument("catalog::named: unknown graph name '" + name + "'");
  return Graph::from_edge_list(it->second.n, it->second.edges);
}

const std::vector<std::string>& named_list() {
  static const std::vector<std::string> names = {
      "claw", "net", "sun3", "bull", "antenna", "chair", "F1", "F2",
      "paw",  "diamond", "dart", "cricket", "co_K3_2K1", "co_P3"};
  return names;
}

Graph path(int k) {
  if (k < 1) throw std::invalid_argument("catalog::path: need k >= 1");
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int k) {
  if (k < 3) throw std::invalid_argument("catalog::cycle: need k >= 3");
  Graph g = path(k);
  g.add_edge(k - 1, 0);
  return g;
}

Graph complete(int k) {
  if (k < 1) throw std::invalid_argument("catalog::complete: need k >= 1");
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph k_chain(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("catalog::k_chain: size list is empty");
  int total = 1;
  for (int k : sizes) {
    if (k < 1) throw std::invalid_argument("catalog::k_chain: clique sizes must be >= 1");
    total += k - 1;
  }
  Graph g(total);
  int start = 0;
  for (int k : sizes) {
    for (int u = start; u < start + k; ++u)
      for (int v = u + 1; v < start + k; ++v) g.add_edge(u, v);
    start += k - 1;  // the last vertex of this clique seeds the next
  }
  return g;
}

Graph generalized_bull(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("catalog::generalized_bull: clique sizes must be >= 1");
  int core = a + b + c;
  Graph g(core + 2);
  for (int u = 0; u < core; ++u)
    for (int v = u + 1; v < core; ++v) g.add_edge(u, v);
  int horn1 = core, horn2 = core + 1;
  for (int u = 0; u < a; ++u) g.add_edge(horn1, u);
  for (int u = a; u < a + b; ++u) g.add_edge(horn2, u);
  return g;
}

Graph generalized_pyramid(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("catalog::generalized_pyramid: oval sizes must be >= 0");
  int core = a + b + c;
  Graph g(core + 3);
  for (int u = 0; u < core; ++u)
    for (int v = u + 1; v < core; ++v) g.add_edge(u, v);
  int apex12 = core, apex23 = core + 1, apex13 = core + 2;
  for (int u = 0; u < a; ++u) {
    g.add_edge(apex12, u);
    g.add_edge(apex13, u);
  }
  for (int u = a; u < a + b; ++u) {
    g.add_edge(apex12, u);
    g.add_edge(apex23, u);
  }
  for (int u = a + b; u < core; ++u) {
    g.add_edge(apex23, u);
    g.add_edge(apex13, u);
  }
  return g;
}

}  // namespace csfkit::catalog
