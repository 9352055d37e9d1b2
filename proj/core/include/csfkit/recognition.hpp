#pragma once

#include "csfkit/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace csfkit::recognition {

/// Backtracking induced-subgraph search: returns a vertex set of g whose
/// induced subgraph is isomorphic to the pattern, or absent when none
/// exists (in particular when the pattern has more vertices than g).
/// Candidates are tried in degree-compatible order.
std::optional<VertexSet> contains_induced(const Graph& g, const Graph& pattern);

/// An astroidal triple: a stable triple such that each pair is joined by a
/// path avoiding the open neighborhood of the third vertex.  Returns the
/// lexicographically first such triple, or absent.
std::optional<std::array<int, 3>> find_astroidal_triple(const Graph& g);
bool is_at_free(const Graph& g);

/// Chordality via maximum-cardinality search plus verification of the
/// resulting elimination ordering.
bool is_chordal(const Graph& g);

/// In this library interval graphs are exactly the chordal AT-free graphs,
/// and unit interval graphs the claw-free interval graphs.
bool is_interval(const Graph& g);
bool is_unit_interval(const Graph& g);

/// True iff the edges can be directed so that a->b and b->c imply a->c.
/// Implemented by constraint propagation with backtracking; enforced size
/// cap n <= 16 (std::invalid_argument beyond it).
bool has_transitive_orientation(const Graph& g);
inline constexpr int kOrientationCap = 16;

bool is_comparability(const Graph& g);
bool is_co_comparability(const Graph& g);

/// True iff g is connected, every vertex lies in at most two maximal
/// cliques, and the maximal cliques form a path under single-vertex
/// overlaps (the shape produced by catalog::k_chain).
bool is_k_chain(const Graph& g);

/// Exact stability number, by branch and bound on bit masks.
int max_stable_set(const Graph& g);

/// Maximal cliques (Bron-Kerbosch with pivoting), in discovery order.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// For a claw-free AT-free graph, checks the BFS layer structure from w:
/// every layer other than layer 1 must induce a clique, and layer 1 must
/// have stability number at most 2.  Violating the precondition (g not
/// claw-free AT-free, or w out of range) raises std::invalid_argument.
bool clique_layer_check(const Graph& g, int w);

/// Layer conditions of the residual family in the 2K2-free unit interval
/// analysis, evaluated from a base vertex w: [N1] connected, [N1] contains
/// an induced P3, alpha([N1]) = 2, N2 nonempty, and no layer beyond N2.
/// residual_2k2_family fixes w = vertex 0 of the canonical labeling; the
/// per-vertex variant reports the test for every base vertex.  Both require
/// g to be a 2K2-free unit interval graph (std::invalid_argument otherwise).
bool residual_2k2_family(const Graph& g);
std::vector<bool> residual_2k2_family_per_vertex(const Graph& g);

/// Outcome of the (claw, co-claw)-free classifier.
enum class MainCase { i, ii, iii, iv, not_claw_coclaw_free };
std::string main_case_name(MainCase c);

/// Classifies a (claw, co-claw)-free graph into the first applicable case:
///   (i)   g or its complement is triangle-free;
///   (ii)  g or its complement is the net;
///   (iii) g or its complement contains an antenna, and g or its
///         complement is an induced subgraph of F1;
///   (iv)  same with bull and F2.
/// Graphs that are not (claw, co-claw)-free return not_claw_coclaw_free.
/// A (claw, co-claw)-free graph matching no case raises std::logic_error:
/// that would contradict the classification theorem the sweep tests.
MainCase classify_claw_coclaw(const Graph& g);

/// Every class membership flag the library tracks, plus the classifier
/// case.  comparability/co_comparability are absent when the graph exceeds
/// the orientation size cap.
struct ClassReport {
  bool claw_free = false;
  bool co_claw_free = false;
  bool net_free = false;
  bool diamond_free = false;
  bool co_diamond_free = false;
  bool two_k2_free = false;
  bool p3_free = false;
  bool p4_free = false;
  bool paw_free = false;
  bool co_paw_free = false;
  bool co_p3_free = false;
  bool triangle_free = false;
  bool co_triangle_free = false;
  bool chordal = false;
  bool at_free = false;
  bool interval = false;
  bool unit_interval = false;
  std::optional<bool> comparability;
  std::optional<bool> co_comparability;
  bool k_chain = false;
  MainCase main_case = MainCase::not_claw_coclaw_free;
};

ClassReport classify(const Graph& g);

}  // namespace csfkit::recognition
