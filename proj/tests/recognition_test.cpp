#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <csfkit/catalog.hpp>
#include <csfkit/enumerate.hpp>
#include <csfkit/graph.hpp>
#include <csfkit/recognition.hpp>

#include <algorithm>
#include <optional>
#include <vector>

using namespace csfkit;
using namespace csfkit::recognition;

namespace {

// Are x and y joined by a path whose vertices avoid the open neighborhood
// of z?  (x and y are nonadjacent to z, so endpoints are fine.)
bool connected_avoiding(const Graph& g, int x, int y, int z) {
  VertexSet banned = g.neighbors(z);
  if (banned.contains(x) || banned.contains(y)) return false;
  VertexSet seen = VertexSet::single(x);
  std::vector<int> queue = {x};
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    if (u == y) return true;
    for (int v : g.neighbors(u).to_vector()) {
      if (banned.contains(v) || seen.contains(v)) continue;
      seen.add(v);
      queue.push_back(v);
    }
  }
  return false;
}

bool brute_has_astroidal_triple(const Graph& g) {
  int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        if (g.has_edge(x, y) || g.has_edge(x, z) || g.has_edge(y, z)) continue;
        if (connected_avoiding(g, x, y, z) && connected_avoiding(g, x, z, y) &&
            connected_avoiding(g, y, z, x))
          return true;
      }
  return false;
}

bool brute_chordal(const Graph& g) {
  for (int k = 4; k <= g.vertex_count(); ++k)
    if (contains_induced(g, catalog::cycle(k))) return false;
  return true;
}

bool orientation_is_transitive(const Graph& g, unsigned mask) {
  auto edges = g.edges();
  int n = g.vertex_count();
  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (mask >> e & 1)
      arc[u][v] = true;
    else
      arc[v][u] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (arc[a][b] && arc[b][c] && !arc[a][c]) return false;
  return true;
}

bool brute_comparability(const Graph& g) {
  size_t m = g.edges().size();
  for (unsigned mask = 0; mask < (1u << m); ++mask)
    if (orientation_is_transitive(g, mask)) return true;
  return m == 0;
}

int brute_max_stable(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool stable = true;
    for (int u = 0; u < n && stable; ++u)
      for (int v = u + 1; v < n && stable; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.has_edge(u, v)) stable = false;
    if (stable) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

bool is_maximal_clique(const Graph& g, VertexSet s) {
  auto verts = s.to_vector();
  for (size_t a = 0; a < verts.size(); ++a)
    for (size_t b = a + 1; b < verts.size(); ++b)
      if (!g.has_edge(verts[a], verts[b])) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    if (s.subset_of(g.neighbors(v))) return false;
  }
  return true;
}

long brute_maximal_clique_count(const Graph& g) {
  long count = 0;
  for (unsigned mask = 1; mask < (1u << g.vertex_count()); ++mask)
    if (is_maximal_clique(g, VertexSet{mask})) ++count;
  return count;
}

// The residual layer conditions, restated from scratch for cross-checking.
bool brute_residual_conditions(const Graph& g, int w) {
  BfsLayers layers = bfs_layers(g, w);
  if (!layers.unreachable.empty()) return false;
  if (layers.layers.size() != 3) return false;  // w, N1, N2 and nothing deeper
  VertexSet n1 = layers.layers[1];
  if (layers.layers[2].empty()) return false;
  Graph inner = g.induced(n1);
  if (n1.count() < 3) return false;
  if (!is_connected(inner)) return false;
  if (!contains_induced(inner, catalog::path(3))) return false;
  return max_stable_set(inner) == 2;
}

}  // namespace

TEST_CASE("induced subgraph search basics") {
  Graph star5 = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto hit = contains_induced(star5, catalog::named("claw"));
  REQUIRE(hit.has_value());
  CHECK(hit->count() == 4);
  CHECK(canonical_form(star5.induced(*hit)) == canonical_form(catalog::named("claw")));

  CHECK(contains_induced(catalog::complete(3), catalog::complete(3)).has_value());
  CHECK_FALSE(contains_induced(catalog::cycle(4), catalog::path(4)).has_value());
  CHECK_FALSE(contains_induced(catalog::path(3), catalog::path(4)).has_value());
  CHECK(contains_induced(catalog::cycle(7), catalog::path(4)).has_value());
  // Pattern with an isolated vertex.
  CHECK(contains_induced(catalog::named("co_K3_2K1").complement(),
                         Graph(2)).has_value());
}

TEST_CASE("catalog membership facts") {
  const Graph net = catalog::named("net");
  CHECK_FALSE(contains_induced(net, catalog::named("claw")).has_value());
  CHECK(is_chordal(net));
  CHECK_FALSE(is_at_free(net));
  CHECK_FALSE(is_unit_interval(net));

  CHECK(is_at_free(catalog::path(7)));
  CHECK(is_unit_interval(catalog::path(7)));
  CHECK_FALSE(is_chordal(catalog::cycle(4)));
  CHECK_FALSE(is_interval(catalog::cycle(5)));
  CHECK(is_interval(catalog::path(4)));
  CHECK_FALSE(is_unit_interval(catalog::named("claw")));  // claw is interval, not unit
  CHECK(is_interval(catalog::named("claw")));
  CHECK(is_unit_interval(catalog::complete(6)));
}

TEST_CASE("astroidal triple finder agrees with brute force on all connected graphs up to 7") {
  auto net_triple = find_astroidal_triple(catalog::named("net"));
  REQUIRE(net_triple.has_value());
  // The net's three pendant vertices form its astroidal triple.
  for (int v : *net_triple) CHECK(catalog::named("net").degree(v) == 1);

  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate::connected_graphs(n)) {
      bool brute = brute_has_astroidal_triple(g);
      CHECK(is_at_free(g) == !brute);
      CHECK(find_astroidal_triple(g).has_value() == brute);
      if (auto t = find_astroidal_triple(g)) {
        auto [x, y, z] = *t;
        CHECK_FALSE(g.has_edge(x, y));
        CHECK_FALSE(g.has_edge(x, z));
        CHECK_FALSE(g.has_edge(y, z));
        CHECK(connected_avoiding(g, x, y, z));
        CHECK(connected_avoiding(g, x, z, y));
        CHECK(connected_avoiding(g, y, z, x));
      }
    }
}

TEST_CASE("chordality agrees with induced-cycle search on all connected graphs up to 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate::connected_graphs(n))
      CHECK(is_chordal(g) == brute_chordal(g));
}

TEST_CASE("transitive orientation agrees with exhaustive orientation search") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate::connected_graphs(n))
      CHECK(has_transitive_orientation(g) == brute_comparability(g));
  for (const auto& g : enumerate::connected_graphs(6))
    if (g.edge_count() <= 10)
      CHECK(has_transitive_orientation(g) == brute_comparability(g));

  CHECK(is_comparability(catalog::cycle(6)));
  CHECK_FALSE(is_comparability(catalog::cycle(5)));
  CHECK_FALSE(is_co_comparability(catalog::cycle(5)));
  CHECK(is_comparability(Graph(4)));
  CHECK_THROWS_AS(has_transitive_orientation(Graph(17)), std::invalid_argument);
}

TEST_CASE("k-chain recognition") {
  CHECK(is_k_chain(catalog::k_chain({3, 3})));
  CHECK(is_k_chain(catalog::k_chain({4, 2, 4})));
  CHECK(is_k_chain(catalog::path(5)));
  CHECK(is_k_chain(catalog::complete(6)));
  CHECK(is_k_chain(Graph(1)));
  CHECK_FALSE(is_k_chain(catalog::cycle(4)));
  CHECK_FALSE(is_k_chain(catalog::named("claw")));
  CHECK_FALSE(is_k_chain(catalog::named("diamond")));  // cliques overlap in an edge
  CHECK_FALSE(is_k_chain(Graph(2)));                   // disconnected

  // Invariant under relabeling.  k_chain({3,2,3}) has 3+2+3-2 = 6 vertices
  // because consecutive cliques share one vertex.
  Graph chain = catalog::k_chain({3, 2, 3});
  REQUIRE(chain.vertex_count() == 6);
  std::vector<int> perm = {4, 2, 5, 0, 1, 3};
  CHECK(is_k_chain(chain.permuted(perm)));
}

TEST_CASE("k-chains are exactly the diamond-free unit interval graphs up to 6 vertices") {
  const Graph diamond = catalog::named("diamond");
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate::connected_graphs(n)) {
      bool expected = !contains_induced(g, diamond).has_value() && is_unit_interval(g);
      CHECK(is_k_chain(g) == expected);
    }
}

TEST_CASE("stability number and maximal cliques agree with brute force") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate::connected_graphs(n)) {
      CHECK(max_stable_set(g) == brute_max_stable(g));
      auto cliques = maximal_cliques(g);
      CHECK(static_cast<long>(cliques.size()) == brute_maximal_clique_count(g));
      for (VertexSet c : cliques) CHECK(is_maximal_clique(g, c));
    }
}

// Eccentricity of every vertex, via repeated BFS.
static std::vector<int> eccentricities(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> ecc(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    auto layers = bfs_layers(g, v);
    ecc[static_cast<size_t>(v)] = static_cast<int>(layers.layers.size()) - 1;
  }
  return ecc;
}

static bool brute_path_dominates(const Graph& g, const std::vector<int>& path) {
  VertexSet covered;
  for (int v : path) covered = covered | g.closed_neighborhood(v);
  return covered == g.all_vertices();
}

static bool brute_every_path_dominates(const Graph& g, int target,
                                       std::vector<int>& path, VertexSet& used) {
  const int cur = path.back();
  if (cur == target) return brute_path_dominates(g, path);
  for (int next = 0; next < g.vertex_count(); ++next) {
    if (used.contains(next) || !g.has_edge(cur, next)) continue;
    used.add(next);
    path.push_back(next);
    const bool ok = brute_every_path_dominates(g, target, path, used);
    path.pop_back();
    used.remove(next);
    if (!ok) return false;
  }
  return true;
}

// (x, y) is a dominating pair when every x,y-path dominates the whole graph.
static bool brute_dominating_pair(const Graph& g, int x, int y) {
  std::vector<int> path{x};
  VertexSet used = VertexSet::single(x);
  return brute_every_path_dominates(g, y, path, used);
}

TEST_CASE("layer structure of claw-free AT-free graphs") {
  // The full clique-layer condition does not hold from arbitrary base
  // vertices: in the bull, BFS from the triangle apex puts the two pendant
  // vertices together in layer 2, which is not a clique.  It does hold from
  // every vertex of maximum eccentricity and from every dominating-pair
  // endpoint, and from arbitrary vertices each layer beyond the first is
  // still a disjoint union of cliques with alpha(layer 1) <= 2.
  const Graph bull = g6_decode("DD[");  // pendants 0,1; apex 2; base 3,4
  CHECK_FALSE(clique_layer_check(bull, 2));
  CHECK(clique_layer_check(bull, 0));
  CHECK(clique_layer_check(bull, 3));

  const Graph p3 = catalog::path(3);
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate::connected_graphs(n)) {
      if (contains_induced(g, catalog::named("claw")) || !is_at_free(g)) continue;

      const auto ecc = eccentricities(g);
      const int diameter = *std::max_element(ecc.begin(), ecc.end());
      for (int w = 0; w < n; ++w) {
        const auto layers = bfs_layers(g, w);
        CHECK(max_stable_set(g.induced(layers.layers[1])) <= 2);
        for (size_t i = 2; i < layers.layers.size(); ++i)
          CHECK_FALSE(contains_induced(g.induced(layers.layers[i]), p3));
        if (ecc[static_cast<size_t>(w)] == diameter) CHECK(clique_layer_check(g, w));
      }
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (brute_dominating_pair(g, x, y)) {
            CHECK(clique_layer_check(g, x));
            CHECK(clique_layer_check(g, y));
          }
    }
  CHECK_THROWS_AS(clique_layer_check(catalog::named("net"), 0), std::invalid_argument);
  CHECK_THROWS_AS(clique_layer_check(catalog::named("claw"), 0), std::invalid_argument);
  CHECK_THROWS_AS(clique_layer_check(catalog::path(3), 5), std::invalid_argument);
}

TEST_CASE("residual layer conditions in the 2K2-free unit interval family") {
  CHECK_FALSE(residual_2k2_family(catalog::named("bull")));
  CHECK_THROWS_AS(residual_2k2_family(catalog::cycle(4)), std::invalid_argument);
  CHECK_THROWS_AS(residual_2k2_family(catalog::path(6)), std::invalid_argument);  // has 2K2

  const Graph two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate::connected_graphs(n)) {
      if (contains_induced(g, two_k2) || !is_unit_interval(g)) continue;
      auto per_vertex = residual_2k2_family_per_vertex(g);
      REQUIRE(static_cast<int>(per_vertex.size()) == n);
      for (int w = 0; w < n; ++w) CHECK(per_vertex[w] == brute_residual_conditions(g, w));
      CHECK(residual_2k2_family(g) == brute_residual_conditions(canonical_graph(g), 0));
    }
}

TEST_CASE("main classifier on catalog graphs") {
  CHECK(classify_claw_coclaw(catalog::named("claw")) == MainCase::not_claw_coclaw_free);
  CHECK(classify_claw_coclaw(catalog::named("claw").complement()) ==
        MainCase::not_claw_coclaw_free);
  // F2 itself has a co-claw (its outer triangle plus the far apex).
  CHECK(classify_claw_coclaw(catalog::named("F2")) == MainCase::not_claw_coclaw_free);

  CHECK(classify_claw_coclaw(catalog::path(4)) == MainCase::i);  // triangle-free
  CHECK(classify_claw_coclaw(catalog::named("paw")) == MainCase::i);
  CHECK(classify_claw_coclaw(catalog::complete(4)) == MainCase::i);

  CHECK(classify_claw_coclaw(catalog::named("net")) == MainCase::ii);
  CHECK(classify_claw_coclaw(catalog::named("sun3")) == MainCase::ii);

  CHECK(classify_claw_coclaw(catalog::named("antenna")) == MainCase::iii);
  CHECK(classify_claw_coclaw(catalog::named("antenna").complement()) == MainCase::iii);
  CHECK(classify_claw_coclaw(catalog::named("F1")) == MainCase::iii);
  // The six-vertex graph whose complement is the antenna: it contains a
  // bull, but the antenna case fires first.
  CHECK(classify_claw_coclaw(g6_decode("EEhw")) == MainCase::iii);

  CHECK(classify_claw_coclaw(catalog::named("bull")) == MainCase::iv);

  CHECK(main_case_name(MainCase::iv) == "iv");
  CHECK(main_case_name(MainCase::not_claw_coclaw_free) == "not-claw-coclaw-free");
}

TEST_CASE("classifier never raises on small connected graphs") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate::connected_graphs(n)) CHECK_NOTHROW(classify_claw_coclaw(g));
}

TEST_CASE("class report fields match the underlying predicates") {
  std::vector<Graph> pool;
  for (const char* name : {"claw", "net", "sun3", "bull", "antenna", "chair",
                           "paw", "diamond", "dart", "cricket", "F2"})
    pool.push_back(catalog::named(name));
  pool.push_back(catalog::path(5));
  pool.push_back(catalog::cycle(6));

  const Graph two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  for (const auto& g : pool) {
    ClassReport r = classify(g);
    Graph gc = g.complement();
    CHECK(r.claw_free == !contains_induced(g, catalog::named("claw")).has_value());
    CHECK(r.co_claw_free == !contains_induced(gc, catalog::named("claw")).has_value());
    CHECK(r.net_free == !contains_induced(g, catalog::named("net")).has_value());
    CHECK(r.diamond_free == !contains_induced(g, catalog::named("diamond")).has_value());
    CHECK(r.co_diamond_free ==
          !contains_induced(gc, catalog::named("diamond")).has_value());
    CHECK(r.two_k2_free == !contains_induced(g, two_k2).has_value());
    CHECK(r.p3_free == !contains_induced(g, catalog::path(3)).has_value());
    CHECK(r.p4_free == !contains_induced(g, catalog::path(4)).has_value());
    CHECK(r.paw_free == !contains_induced(g, catalog::named("paw")).has_value());
    CHECK(r.co_paw_free == !contains_induced(gc, catalog::named("paw")).has_value());
    CHECK(r.co_p3_free == !contains_induced(gc, catalog::path(3)).has_value());
    CHECK(r.triangle_free == !contains_induced(g, catalog::complete(3)).has_value());
    CHECK(r.co_triangle_free == !contains_induced(gc, catalog::complete(3)).has_value());
    CHECK(r.chordal == is_chordal(g));
    CHECK(r.at_free == is_at_free(g));
    CHECK(r.interval == is_interval(g));
    CHECK(r.unit_interval == is_unit_interval(g));
    REQUIRE(r.comparability.has_value());
    CHECK(*r.comparability == is_comparability(g));
    REQUIRE(r.co_comparability.has_value());
    CHECK(*r.co_comparability == is_co_comparability(g));
    CHECK(r.k_chain == is_k_chain(g));
    CHECK(r.main_case == classify_claw_coclaw(g));
  }
  // Above the orientation cap the two optional fields are absent.
  Graph big(17);
  for (int i = 0; i + 1 < 17; ++i) big.add_edge(i, i + 1);
  ClassReport r = classify(big);
  CHECK_FALSE(r.comparability.has_value());
  CHECK_FALSE(r.co_comparability.has_value());
}
