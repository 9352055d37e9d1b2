#include "csfkit/recognition.hpp"

#include "csfkit/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace csfkit::recognition {

namespace {

int ctz(uint64_t b) { return __builtin_ctzll(b); }
int popcount(uint64_t b) { return __builtin_popcountll(b); }

const Graph& claw_pattern() { static const Graph g = catalog::named("claw"); return g; }
const Graph& co_claw_pattern() { static const Graph g = catalog::named("claw").complement(); return g; }
const Graph& net_pattern() { static const Graph g = catalog::named("net"); return g; }
const Graph& two_k2_pattern() {
  static const Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  return g;
}
const Graph& p3_pattern() { static const Graph g = catalog::path(3); return g; }
const Graph& triangle_pattern() { static const Graph g = catalog::complete(3); return g; }
const Graph& co_triangle_pattern() { static const Graph g = catalog::complete(3).complement(); return g; }

/// Pattern vertices ordered so each one (after the first) has as many
/// already-placed neighbors as possible: adjacency constraints then bind
/// at the earliest possible depth.
std::vector<int> pattern_order(const Graph& h) {
  const int n = h.vertex_count();
  std::vector<int> order;
  std::vector<bool> placed(static_cast<size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_links = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[static_cast<size_t>(v)]) continue;
      int links = 0;
      for (int u : order) links += h.has_edge(u, v) ? 1 : 0;
      if (best == -1 || links > best_links ||
          (links == best_links && h.degree(v) > h.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed[static_cast<size_t>(best)] = true;
  }
  return order;
}

struct InducedSearch {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& order;
  std::vector<int> image;  // image[d] = host vertex of pattern order[d]
  uint64_t used = 0;

  bool run(size_t depth) {
    if (depth == order.size()) return true;
    int hv = order[depth];
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
      if ((used >> gv) & 1) continue;
      if (g.degree(gv) < h.degree(hv)) continue;
      bool consistent = true;
      for (size_t i = 0; i < depth; ++i)
        if (h.has_edge(hv, order[i]) != g.has_edge(gv, image[i])) {
          consistent = false;
          break;
        }
      if (!consistent) continue;
      image[depth] = gv;
      used |= uint64_t(1) << gv;
      if (run(depth + 1)) return true;
      used &= ~(uint64_t(1) << gv);
    }
    return false;
  }
};

bool induces_clique(const Graph& g, VertexSet s) {
  for (uint64_t b = s.bits; b; b &= b - 1) {
    int v = ctz(b);
    if ((g.neighbors(v).bits & s.bits) != (s.bits & ~(uint64_t(1) << v))) return false;
  }
  return true;
}

}  // namespace

std::optional<VertexSet> contains_induced(const Graph& g, const Graph& pattern) {
  if (pattern.vertex_count() == 0) return VertexSet{};
  if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
  std::vector<int> order = pattern_order(pattern);
  InducedSearch search{g, pattern, order,
                       std::vector<int>(static_cast<size_t>(pattern.vertex_count()), -1), 0};
  if (!search.run(0)) return std::nullopt;
  VertexSet witness;
  for (int v : search.image) witness.add(v);
  return witness;
}

std::optional<std::array<int, 3>> find_astroidal_triple(const Graph& g) {
  const int n = g.vertex_count();
  // comp[w][v]: component of v after deleting the open neighborhood of w
  // (-1 for deleted vertices).  w itself survives, isolated.
  std::vector<std::vector<int>> comp(static_cast<size_t>(n),
                                     std::vector<int>(static_cast<size_t>(n), -1));
  for (int w = 0; w < n; ++w) {
    uint64_t alive = g.all_vertices().bits & ~g.neighbors(w).bits;
    uint64_t seen = 0;
    int id = 0;
    for (int s = 0; s < n; ++s) {
      if (!((alive >> s) & 1) || ((seen >> s) & 1)) continue;
      uint64_t frontier = uint64_t(1) << s, members = frontier;
      while (frontier) {
        uint64_t next = 0;
        for (uint64_t b = frontier; b; b &= b - 1) next |= g.neighbors(ctz(b)).bits;
        next &= alive & ~members;
        members |= next;
        frontier = next;
      }
      for (uint64_t b = members; b; b &= b - 1)
        comp[static_cast<size_t>(w)][static_cast<size_t>(ctz(b))] = id;
      seen |= members;
      ++id;
    }
  }
  auto same_side = [&](int a, int b, int without) {
    return comp[static_cast<size_t>(without)][static_cast<size_t>(a)] ==
           comp[static_cast<size_t>(without)][static_cast<size_t>(b)];
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      for (int w = v + 1; w < n; ++w) {
        if (g.has_edge(u, w) || g.has_edge(v, w)) continue;
        if (same_side(u, v, w) && same_side(u, w, v) && same_side(v, w, u))
          return std::array<int, 3>{u, v, w};
      }
    }
  return std::nullopt;
}

bool is_at_free(const Graph& g) { return !find_astroidal_triple(g).has_value(); }

bool is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 2) return true;
  // Maximum-cardinality search, then verify the reversed visit order is a
  // perfect elimination ordering.
  std::vector<int> weight(static_cast<size_t>(n), 0), pos(static_cast<size_t>(n), -1);
  uint64_t unvisited = g.all_vertices().bits;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (uint64_t b = unvisited; b; b &= b - 1) {
      int v = ctz(b);
      if (best < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]) best = v;
    }
    pos[static_cast<size_t>(best)] = step;
    unvisited &= ~(uint64_t(1) << best);
    for (uint64_t b = g.neighbors(best).bits & unvisited; b; b &= b - 1)
      ++weight[static_cast<size_t>(ctz(b))];
  }
  // Elimination proceeds in decreasing visit position; the neighbors of v
  // still present when v is eliminated are those visited earlier.
  for (int v = 0; v < n; ++v) {
    uint64_t remaining = 0;
    for (uint64_t b = g.neighbors(v).bits; b; b &= b - 1) {
      int u = ctz(b);
      if (pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)]) remaining |= uint64_t(1) << u;
    }
    if (!remaining) continue;
    int parent = -1;
    for (uint64_t b = remaining; b; b &= b - 1) {
      int u = ctz(b);
      if (parent < 0 || pos[static_cast<size_t>(u)] > pos[static_cast<size_t>(parent)]) parent = u;
    }
    uint64_t rest = remaining & ~(uint64_t(1) << parent);
    if (rest & ~g.neighbors(parent).bits) return false;
  }
  return true;
}

bool is_interval(const Graph& g) { return is_chordal(g) && is_at_free(g); }

bool is_unit_interval(const Graph& g) {
  return is_interval(g) && !contains_induced(g, claw_pattern());
}

namespace {

struct OrientationSolver {
  const Graph& g;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> id;
  std::vector<int> state;  // 0 unset, 1 low->high, 2 high->low
  std::vector<int> trail;

  explicit OrientationSolver(const Graph& graph) : g(graph), edges(graph.edges()) {
    const size_t n = static_cast<size_t>(g.vertex_count());
    id.assign(n, std::vector<int>(n, -1));
    for (size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      id[static_cast<size_t>(u)][static_cast<size_t>(v)] = static_cast<int>(e);
      id[static_cast<size_t>(v)][static_cast<size_t>(u)] = static_cast<int>(e);
    }
    state.assign(edges.size(), 0);
  }

  static int dir_code(int a, int b) { return a < b ? 1 : 2; }

  bool oriented_as(int a, int b) const {
    int e = id[static_cast<size_t>(a)][static_cast<size_t>(b)];
    return state[static_cast<size_t>(e)] == dir_code(a, b);
  }

  bool force(int a, int b, std::vector<std::pair<int, int>>& pending) {
    int e = id[static_cast<size_t>(a)][static_cast<size_t>(b)];
    int want = dir_code(a, b);
    if (state[static_cast<size_t>(e)] == 0) {
      state[static_cast<size_t>(e)] = want;
      trail.push_back(e);
      pending.emplace_back(a, b);
      return true;
    }
    return state[static_cast<size_t>(e)] == want;
  }

  // Orienting a->b constrains every chain through the edge: a neighbor of
  // b invisible from a must point at b, a neighbor of a invisible from b
  // must be pointed at from a, and common neighbors close triangles.
  bool propagate(std::vector<std::pair<int, int>>& pending) {
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      uint64_t na = g.neighbors(a).bits, nb = g.neighbors(b).bits;
      for (uint64_t m = nb & ~na & ~(uint64_t(1) << a); m; m &= m - 1)
        if (!force(ctz(m), b, pending)) return false;
      for (uint64_t m = na & ~nb & ~(uint64_t(1) << b); m; m &= m - 1)
        if (!force(a, ctz(m), pending)) return false;
      for (uint64_t m = na & nb; m; m &= m - 1) {
        int c = ctz(m);
        if (oriented_as(b, c) && !force(a, c, pending)) return false;
        if (oriented_as(c, a) && !force(c, b, pending)) return false;
      }
    }
    return true;
  }

  bool search() {
    size_t e = 0;
    while (e < state.size() && state[e] != 0) ++e;
    if (e == state.size()) return true;
    auto [u, v] = edges[e];
    for (int attempt = 0; attempt < 2; ++attempt) {
      int a = attempt == 0 ? u : v;
      int b = attempt == 0 ? v : u;
      size_t mark = trail.size();
      std::vector<std::pair<int, int>> pending;
      if (force(a, b, pending) && propagate(pending) && search()) return true;
      while (trail.size() > mark) {
        state[static_cast<size_t>(trail.back())] = 0;
        trail.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

bool has_transitive_orientation(const Graph& g) {
  if (g.vertex_count() > kOrientationCap)
    throw std::invalid_argument("has_transitive_orientation: size cap of 16 vertices exceeded");
  OrientationSolver solver(g);
  return solver.search();
}

bool is_comparability(const Graph& g) { return has_transitive_orientation(g); }

bool is_co_comparability(const Graph& g) { return has_transitive_orientation(g.complement()); }

namespace {

void bron_kerbosch(const Graph& g, uint64_t r, uint64_t p, uint64_t x,
                   std::vector<VertexSet>& out) {
  if (!p && !x) {
    out.push_back(VertexSet(r));
    return;
  }
  int pivot = -1, covered = -1;
  for (uint64_t m = p | x; m; m &= m - 1) {
    int u = ctz(m);
    int c = popcount(g.neighbors(u).bits & p);
    if (c > covered) {
      covered = c;
      pivot = u;
    }
  }
  for (uint64_t cand = p & ~g.neighbors(pivot).bits; cand; cand &= cand - 1) {
    int v = ctz(cand);
    uint64_t nv = g.neighbors(v).bits;
    bron_kerbosch(g, r | (uint64_t(1) << v), p & nv, x & nv, out);
    p &= ~(uint64_t(1) << v);
    x |= uint64_t(1) << v;
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.vertex_count() == 0) return out;
  bron_kerbosch(g, 0, g.all_vertices().bits, 0, out);
  return out;
}

bool is_k_chain(const Graph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) return false;
  std::vector<VertexSet> cliques = maximal_cliques(g);
  const size_t m = cliques.size();
  if (m == 1) return true;

  for (int v = 0; v < g.vertex_count(); ++v) {
    int membership = 0;
    for (const VertexSet& q : cliques) membership += q.contains(v) ? 1 : 0;
    if (membership > 2) return false;
  }
  // The overlap structure must be a path: every pairwise intersection is a
  // single vertex or empty, exactly m-1 intersecting pairs, each clique
  // meeting at most two others, and the overlap graph connected.
  std::vector<int> meets(m, 0);
  std::vector<std::vector<size_t>> overlap(m);
  size_t pairs = 0;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      int shared = popcount(cliques[i].bits & cliques[j].bits);
      if (shared == 0) continue;
      if (shared > 1) return false;
      ++pairs;
      ++meets[i];
      ++meets[j];
      overlap[i].push_back(j);
      overlap[j].push_back(i);
    }
  if (pairs != m - 1) return false;
  for (size_t i = 0; i < m; ++i)
    if (meets[i] > 2) return false;
  // Connectivity of the overlap graph (a tree check: m-1 edges + connected).
  std::vector<bool> seen(m, false);
  std::vector<size_t> stack = {0};
  seen[0] = true;
  size_t reached = 1;
  while (!stack.empty()) {
    size_t i = stack.back();
    stack.pop_back();
    for (size_t j : overlap[i])
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
  }
  return reached == m;
}

namespace {

void stable_set_search(const Graph& g, uint64_t remaining, int size, int& best) {
  if (size + popcount(remaining) <= best) return;
  if (!remaining) {
    best = std::max(best, size);
    return;
  }
  int v = -1, vdeg = -1;
  for (uint64_t m = remaining; m; m &= m - 1) {
    int u = ctz(m);
    int d = popcount(g.neighbors(u).bits & remaining);
    if (d > vdeg) {
      vdeg = d;
      v = u;
    }
  }
  stable_set_search(g, remaining & ~g.closed_neighborhood(v).bits, size + 1, best);
  stable_set_search(g, remaining & ~(uint64_t(1) << v), size, best);
}

}  // namespace

int max_stable_set(const Graph& g) {
  int best = 0;
  stable_set_search(g, g.all_vertices().bits, 0, best);
  return best;
}

bool clique_layer_check(const Graph& g, int w) {
  if (w < 0 || w >= g.vertex_count())
    throw std::invalid_argument("clique_layer_check: base vertex out of range");
  if (contains_induced(g, claw_pattern()))
    throw std::invalid_argument("clique_layer_check: graph is not claw-free");
  if (!is_at_free(g))
    throw std::invalid_argument("clique_layer_check: graph is not AT-free");
  BfsLayers bl = bfs_layers(g, w);
  for (size_t i = 0; i < bl.layers.size(); ++i) {
    if (i == 1) {
      if (max_stable_set(g.induced(bl.layers[i])) > 2) return false;
    } else if (!induces_clique(g, bl.layers[i])) {
      return false;
    }
  }
  return true;
}

namespace {

bool residual_conditions(const Graph& g, int w) {
  BfsLayers bl = bfs_layers(g, w);
  if (!bl.unreachable.empty()) return false;
  if (bl.layers.size() != 3) return false;  // exactly N1 and a nonempty N2
  VertexSet n1 = bl.layers[1];
  if (n1.count() < 3) return false;  // an induced P3 needs three vertices
  Graph h = g.induced(n1);
  if (!is_connected(h)) return false;
  if (!contains_induced(h, p3_pattern())) return false;
  return max_stable_set(h) == 2;
}

void require_residual_preconditions(const Graph& g) {
  if (contains_induced(g, two_k2_pattern()))
    throw std::invalid_argument("residual_2k2_family: graph is not 2K2-free");
  if (!is_unit_interval(g))
    throw std::invalid_argument("residual_2k2_family: graph is not a unit interval graph");
}

}  // namespace

bool residual_2k2_family(const Graph& g) {
  require_residual_preconditions(g);
  return residual_conditions(canonical_graph(g), 0);
}

std::vector<bool> residual_2k2_family_per_vertex(const Graph& g) {
  require_residual_preconditions(g);
  std::vector<bool> out;
  out.reserve(static_cast<size_t>(g.vertex_count()));
  for (int w = 0; w < g.vertex_count(); ++w) out.push_back(residual_conditions(g, w));
  return out;
}

std::string main_case_name(MainCase c) {
  switch (c) {
    case MainCase::i: return "i";
    case MainCase::ii: return "ii";
    case MainCase::iii: return "iii";
    case MainCase::iv: return "iv";
    case MainCase::not_claw_coclaw_free: return "not-claw-coclaw-free";
  }
  throw std::logic_error("main_case_name: unknown case");
}

MainCase classify_claw_coclaw(const Graph& g) {
  if (contains_induced(g, claw_pattern()) || contains_induced(g, co_claw_pattern()))
    return MainCase::not_claw_coclaw_free;
  Graph gc = g.complement();

  if (!contains_induced(g, triangle_pattern()) || !contains_induced(gc, triangle_pattern()))
    return MainCase::i;

  std::string canon = canonical_form(g);
  static const std::string net_canon = canonical_form(net_pattern());
  if (canon == net_canon || canonical_form(gc) == net_canon) return MainCase::ii;

  const Graph antenna = catalog::named("antenna");
  const Graph f1 = catalog::named("F1");
  bool has_antenna = contains_induced(g, antenna) || contains_induced(gc, antenna);
  if (has_antenna &&
      (contains_induced(f1, g) || contains_induced(f1, gc)))
    return MainCase::iii;

  const Graph bull = catalog::named("bull");
  const Graph f2 = catalog::named("F2");
  bool has_bull = contains_induced(g, bull) || contains_induced(gc, bull);
  if (has_bull && (contains_induced(f2, g) || contains_induced(f2, gc)))
    return MainCase::iv;

  throw std::logic_error(
      "classify_claw_coclaw: no case applies to a (claw, co-claw)-free graph -- "
      "either a classifier bug or a counterexample to the classification theorem; graph6 " +
      g6_encode(g));
}

ClassReport classify(const Graph& g) {
  ClassReport r;
  Graph gc = g.complement();
  auto free_of = [&](const Graph& host, const Graph& pattern) {
    return !contains_induced(host, pattern).has_value();
  };
  const Graph& claw = claw_pattern();
  const Graph diamond = catalog::named("diamond");
  const Graph paw = catalog::named("paw");
  const Graph p4 = catalog::path(4);

  r.claw_free = free_of(g, claw);
  r.co_claw_free = free_of(gc, claw);
  r.net_free = free_of(g, net_pattern());
  r.diamond_free = free_of(g, diamond);
  r.co_diamond_free = free_of(gc, diamond);
  r.two_k2_free = free_of(g, two_k2_pattern());
  r.p3_free = free_of(g, p3_pattern());
  r.p4_free = free_of(g, p4);
  r.paw_free = free_of(g, paw);
  r.co_paw_free = free_of(gc, paw);
  r.co_p3_free = free_of(gc, p3_pattern());
  r.triangle_free = free_of(g, triangle_pattern());
  r.co_triangle_free = free_of(g, co_triangle_pattern());
  r.chordal = is_chordal(g);
  r.at_free = is_at_free(g);
  r.interval = r.chordal && r.at_free;
  r.unit_interval = r.interval && r.claw_free;
  if (g.vertex_count() <= kOrientationCap) {
    r.comparability = has_transitive_orientation(g);
    r.co_comparability = has_transitive_orientation(gc);
  }
  r.k_chain = is_k_chain(g);
  r.main_case = classify_claw_coclaw(g);
  return r;
}

}  // namespace csfkit::recognition
