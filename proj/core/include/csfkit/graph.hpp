#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csfkit {

/// Maximum number of vertices: one 64-bit word per adjacency row, minus
/// headroom so the graph6 short form always applies.
inline constexpr int kMaxVertices = 62;

/// A set of vertices of a graph on at most 62 vertices, stored as a bit
/// mask.  Only bits below the host graph's vertex count may be set.
struct VertexSet {
  uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(uint64_t b) : bits(b) {}
  static constexpr VertexSet single(int v) { return VertexSet(uint64_t(1) << v); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1);
  }

  constexpr bool contains(int v) const { return (bits >> v) & 1; }
  constexpr bool empty() const { return bits == 0; }
  int count() const { return __builtin_popcountll(bits); }
  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

  void add(int v) { bits |= uint64_t(1) << v; }
  void remove(int v) { bits &= ~(uint64_t(1) << v); }
  /// Smallest vertex in the set; undefined when empty.
  int lowest() const { return __builtin_ctzll(bits); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
  constexpr VertexSet operator~() const { return VertexSet(~bits); }
  constexpr bool operator==(const VertexSet&) const = default;

  /// Sorted list of members.
  std::vector<int> to_vector() const;
};

/// A finite simple undirected graph on vertices 0..n-1, n <= 62, stored as
/// one adjacency bit row per vertex.  Operations on Graph values are pure;
/// the only mutator is add_edge, used while building a graph.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.  Throws for n outside 1..62 (n = 0 is
  /// permitted only by the default constructor, as an empty placeholder).
  explicit Graph(int n);

  /// Builds a graph from an edge list.  Vertices out of range and self
  /// loops raise std::invalid_argument; duplicate edges collapse.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<size_t>(v)]); }
  VertexSet closed_neighborhood(int v) const {
    return VertexSet(adj_[static_cast<size_t>(v)] | (uint64_t(1) << v));
  }
  int degree(int v) const { return __builtin_popcountll(adj_[static_cast<size_t>(v)]); }
  VertexSet all_vertices() const { return VertexSet::first_n(n_); }

  void add_edge(int u, int v);

  /// Sorted edge list (u < v).
  std::vector<std::pair<int, int>> edges() const;

  /// Complement graph on the same vertices.
  Graph complement() const;

  /// Subgraph induced by the given vertices, relabeled 0..k-1 in ascending
  /// order of original label.  Throws if the set contains bits >= n.
  Graph induced(VertexSet vertices) const;

  /// Graph with vertex v relabeled to perm[v].
  Graph permuted(const std::vector<int>& perm) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<uint64_t> adj_;
};

/// BFS distance classes from a start vertex: layers[d] holds the vertices
/// at distance exactly d (layers[0] = {w}); vertices in other components
/// are reported in `unreachable`.
struct BfsLayers {
  std::vector<VertexSet> layers;
  VertexSet unreachable;
};

BfsLayers bfs_layers(const Graph& g, int w);

/// Connectivity over all vertices.  Throws std::invalid_argument on an
/// empty graph, where the convention would be arbitrary.
bool is_connected(const Graph& g);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Canonical form: the graph6 encoding of a canonically relabeled copy,
/// so that two graphs are isomorphic exactly when their canonical forms
/// are equal as strings.  Computed by equitable-partition refinement with
/// individualization and automorphism pruning.
std::string canonical_form(const Graph& g);

/// The canonically relabeled copy itself.
Graph canonical_graph(const Graph& g);

/// graph6 short form (printable ASCII, one line per graph; n <= 62).
std::string g6_encode(const Graph& g);

/// Strict graph6 decoder: rejects wrong lengths, bytes outside 63..126,
/// vertex counts outside 1..62, and nonzero padding bits.
Graph g6_decode(std::string_view text);

/// Plain text edge-list form "n; u v; u v; ...".
std::string edge_list_encode(const Graph& g);
Graph edge_list_decode(std::string_view text);

}  // namespace csfkit
