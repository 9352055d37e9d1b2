#include "csfkit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace csfkit {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
  return out;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("Graph: vertex count must be in 1..62");
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self loops are not allowed");
  adj_[static_cast<size_t>(u)] |= uint64_t(1) << v;
  adj_[static_cast<size_t>(v)] |= uint64_t(1) << u;
}

int Graph::edge_count() const {
  int twice = 0;
  for (uint64_t row : adj_) twice += __builtin_popcountll(row);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  if (n_ == 0) return Graph{};
  Graph g(n_);
  uint64_t mask = all_vertices().bits;
  for (int v = 0; v < n_; ++v)
    g.adj_[static_cast<size_t>(v)] =
        (~adj_[static_cast<size_t>(v)]) & mask & ~(uint64_t(1) << v);
  return g;
}

Graph Graph::induced(VertexSet vertices) const {
  if (!vertices.subset_of(all_vertices()))
    throw std::invalid_argument("induced: vertex set out of range");
  std::vector<int> keep = vertices.to_vector();
  if (keep.empty()) return Graph{};
  Graph g(static_cast<int>(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = a + 1; b < keep.size(); ++b)
      if (has_edge(keep[a], keep[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permuted: permutation size mismatch");
  std::vector<bool> seen(static_cast<size_t>(n_), false);
  for (int image : perm) {
    if (image < 0 || image >= n_ || seen[static_cast<size_t>(image)])
      throw std::invalid_argument("permuted: not a permutation of 0..n-1");
    seen[static_cast<size_t>(image)] = true;
  }
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) g.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  return g;
}

BfsLayers bfs_layers(const Graph& g, int w) {
  if (w < 0 || w >= g.vertex_count())
    throw std::invalid_argument("bfs_layers: start vertex out of range");
  BfsLayers out;
  VertexSet visited = VertexSet::single(w);
  VertexSet frontier = visited;
  while (!frontier.empty()) {
    out.layers.push_back(frontier);
    uint64_t next = 0;
    for (uint64_t b = frontier.bits; b; b &= b - 1)
      next |= g.neighbors(__builtin_ctzll(b)).bits;
    frontier = VertexSet(next & ~visited.bits);
    visited = visited | frontier;
  }
  out.unreachable = VertexSet(g.all_vertices().bits & ~visited.bits);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("is_connected: empty graph has no connectivity convention");
  return bfs_layers(g, 0).unreachable.empty();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet remaining = g.all_vertices();
  while (!remaining.empty()) {
    int start = remaining.lowest();
    BfsLayers bfs = bfs_layers(g, start);
    VertexSet comp;
    for (VertexSet layer : bfs.layers) comp = comp | layer;
    out.push_back(comp);
    remaining = VertexSet(remaining.bits & ~comp.bits);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical labeling: equitable refinement + individualization, with
// certificate-based automorphism pruning.
// ---------------------------------------------------------------------------

namespace {

/// Refines a coloring to the coarsest stable one below it: each pass
/// re-ranks vertices by (color, sorted multiset of neighbor colors) and
/// stops when no cell splits.  Colors are rank-normalized, so equal
/// colorings of isomorphic graphs refine identically.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.vertex_count();
  int cells = 0;
  for (int c : colors) cells = std::max(cells, c + 1);
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> signature(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.push_back(colors[static_cast<size_t>(v)]);
      for (uint64_t b = g.neighbors(v).bits; b; b &= b - 1)
        sig.push_back(colors[static_cast<size_t>(__builtin_ctzll(b))]);
      std::sort(sig.begin() + 1, sig.end());
      signature[static_cast<size_t>(v)] = {std::move(sig), v};
    }
    auto sorted = signature;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(static_cast<size_t>(n));
    int rank = -1;
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (i == 0 || sorted[i].first != sorted[i - 1].first) ++rank;
      next[static_cast<size_t>(sorted[i].second)] = rank;
    }
    if (rank + 1 == cells) return next;
    cells = rank + 1;
    colors = std::move(next);
  }
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<uint64_t> best;          // least certificate seen so far
  std::vector<int> best_labeling;      // old vertex -> new label achieving it
  std::vector<std::vector<int>> generators;  // automorphisms discovered

  std::vector<uint64_t> certificate(const std::vector<int>& labeling) const {
    std::vector<int> old_of(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) old_of[static_cast<size_t>(labeling[static_cast<size_t>(v)])] = v;
    std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && g.has_edge(old_of[static_cast<size_t>(i)], old_of[static_cast<size_t>(j)]))
          rows[static_cast<size_t>(i)] |= uint64_t(1) << j;
    return rows;
  }

  void record_automorphism(const std::vector<int>& labeling) {
    std::vector<int> inv(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) inv[static_cast<size_t>(labeling[static_cast<size_t>(v)])] = v;
    std::vector<int> sigma(static_cast<size_t>(n));
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      sigma[static_cast<size_t>(v)] = inv[static_cast<size_t>(best_labeling[static_cast<size_t>(v)])];
      if (sigma[static_cast<size_t>(v)] != v) identity = false;
    }
    if (identity || generators.size() >= 256) return;
    // Equal certificates guarantee sigma is an automorphism; the check is
    // cheap insurance against certificate bugs.
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v) !=
            g.has_edge(sigma[static_cast<size_t>(u)], sigma[static_cast<size_t>(v)]))
          throw std::logic_error("canonical_form: certificate collision without automorphism");
    generators.push_back(std::move(sigma));
  }

  /// Orbit partition of the subgroup generated by the generators that fix
  /// every vertex of `fixed` pointwise.
  std::vector<int> pruning_orbits(const std::vector<int>& fixed) const {
    std::vector<int> parent(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<size_t>(v)] = v;
    auto find = [&](int v) {
      while (parent[static_cast<size_t>(v)] != v) {
        parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        v = parent[static_cast<size_t>(v)];
      }
      return v;
    };
    for (const auto& sigma : generators) {
      bool fixes_prefix = std::all_of(fixed.begin(), fixed.end(), [&](int u) {
        return sigma[static_cast<size_t>(u)] == u;
      });
      if (!fixes_prefix) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(sigma[static_cast<size_t>(v)]);
        if (a != b) parent[static_cast<size_t>(a)] = b;
      }
    }
    for (int v = 0; v < n; ++v) find(v);
    return parent;
  }

  void search(const std::vector<int>& colors, std::vector<int>& fixed) {
    std::vector<int> stable = refine_colors(g, colors);
    int cells = 0;
    for (int c : stable) cells = std::max(cells, c + 1);

    if (cells == n) {
      std::vector<uint64_t> cert = certificate(stable);
      if (best.empty() || cert < best) {
        best = std::move(cert);
        best_labeling = stable;
      } else if (cert == best) {
        record_automorphism(stable);
      }
      return;
    }

    // Target: the lowest-ranked non-singleton cell.
    std::vector<int> cell_size(static_cast<size_t>(cells), 0);
    for (int c : stable) ++cell_size[static_cast<size_t>(c)];
    int target = 0;
    while (cell_size[static_cast<size_t>(target)] == 1) ++target;

    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (stable[static_cast<size_t>(v)] == target) members.push_back(v);

    std::vector<int> tried;
    size_t generators_seen = generators.size();
    std::vector<int> orbit = pruning_orbits(fixed);
    for (int v : members) {
      if (generators.size() != generators_seen) {
        orbit = pruning_orbits(fixed);
        generators_seen = generators.size();
      }
      bool redundant = std::any_of(tried.begin(), tried.end(), [&](int u) {
        return orbit[static_cast<size_t>(u)] == orbit[static_cast<size_t>(v)];
      });
      if (redundant) continue;
      std::vector<int> split(stable);
      for (int& c : split) c *= 2;
      split[static_cast<size_t>(v)] -= 1;
      fixed.push_back(v);
      search(split, fixed);
      fixed.pop_back();
      tried.push_back(v);
    }
  }
};

std::vector<int> canonical_labeling(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("canonical_form: graph is empty");
  CanonSearch search{g, n, {}, {}, {}};
  std::vector<int> fixed;
  search.search(std::vector<int>(static_cast<size_t>(n), 0), fixed);
  return search.best_labeling;
}

}  // namespace

Graph canonical_graph(const Graph& g) { return g.permuted(canonical_labeling(g)); }

std::string canonical_form(const Graph& g) { return g6_encode(canonical_graph(g)); }

// ---------------------------------------------------------------------------
// graph6 short form.
// ---------------------------------------------------------------------------

std::string g6_encode(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("g6_encode: graph must have at least one vertex");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int shift = 5;
  unsigned group = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) group |= 1u << shift;
      if (shift == 0) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        shift = 5;
      } else {
        --shift;
      }
    }
  }
  if (shift != 5) out.push_back(static_cast<char>(63 + group));
  return out;
}

Graph g6_decode(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("g6_decode: empty input");
  for (char c : text)
    if (c < 63 || c > 126)
      throw std::invalid_argument("g6_decode: byte outside printable graph6 range");
  const int n = text[0] - 63;
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("g6_decode: vertex count must be in 1..62");
  const size_t data_bits = static_cast<size_t>(n) * (n - 1) / 2;
  const size_t expected = 1 + (data_bits + 5) / 6;
  if (text.size() != expected)
    throw std::invalid_argument("g6_decode: length does not match vertex count");
  Graph g(n);
  size_t bit_index = 0;
  auto bit_at = [&](size_t k) {
    return (static_cast<unsigned>(text[1 + k / 6] - 63) >> (5 - k % 6)) & 1u;
  };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bit_at(bit_index++)) g.add_edge(i, j);
  for (size_t k = data_bits; k < 6 * (expected - 1); ++k)
    if (bit_at(k)) throw std::invalid_argument("g6_decode: nonzero padding bits");
  return g;
}

// ---------------------------------------------------------------------------
// Edge-list text form "n; u v; u v; ...".
// ---------------------------------------------------------------------------

std::string edge_list_encode(const Graph& g) {
  std::string out = std::to_string(g.vertex_count());
  for (auto [u, v] : g.edges())
    out += "; " + std::to_string(u) + " " + std::to_string(v);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("edge_list_decode: malformed ") + what);
  return value;
}

}  // namespace

Graph edge_list_decode(std::string_view text) {
  std::vector<std::string_view> segments;
  size_t start = 0;
  while (start <= text.size()) {
    size_t semi = text.find(';', start);
    if (semi == std::string_view::npos) semi = text.size();
    segments.push_back(trim(text.substr(start, semi - start)));
    start = semi + 1;
  }
  if (segments.empty() || segments[0].empty())
    throw std::invalid_argument("edge_list_decode: missing vertex count");
  Graph g(parse_int(segments[0], "vertex count"));
  for (size_t i = 1; i < segments.size(); ++i) {
    std::string_view seg = segments[i];
    if (seg.empty()) continue;  // tolerate a trailing semicolon
    size_t space = seg.find_first_of(" \t");
    if (space == std::string_view::npos)
      throw std::invalid_argument("edge_list_decode: edge must be two vertex labels");
    int u = parse_int(trim(seg.substr(0, space)), "edge endpoint");
    int v = parse_int(trim(seg.substr(space)), "edge endpoint");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace csfkit
