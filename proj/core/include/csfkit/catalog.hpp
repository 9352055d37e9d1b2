#pragma once

#include "csfkit/graph.hpp"

#include <string>
#include <vector>

namespace csfkit::catalog {

/// Fixed small graphs, by name.  Available names:
///   claw, net, sun3, bull, antenna, chair, F1, F2,
///   paw, diamond, dart, cricket, co_K3_2K1, co_P3.
/// Edge lists are frozen constants; see catalog.cpp for the table and the
/// recorded degree sequences.  Throws std::invalid_argument on an unknown
/// name.
Graph named(const std::string& name);

/// All valid arguments to named(), in a fixed order.
const std::vector<std::string>& named_list();

/// Chordless path / chordless cycle / complete graph on k vertices.
/// path and complete require k >= 1; cycle requires k >= 3.
Graph path(int k);
Graph cycle(int k);
Graph complete(int k);

/// Chain of cliques attached sequentially at single shared vertices:
/// cliques Q_1..Q_m with |Q_i| = sizes[i], consecutive cliques sharing
/// exactly one vertex.  Requires a nonempty list of sizes >= 1.
Graph k_chain(const std::vector<int>& sizes);

/// Bull with its triangle vertices substituted by cliques of sizes a, b, c
/// (pairwise completely joined), plus the two horn vertices: one adjacent
/// to every vertex of the first clique, the other to every vertex of the
/// second.  Substitution semantics: each clique vertex inherits all of the
/// original triangle vertex's neighbors, so a horn sees its whole clique.
/// Requires a, b, c >= 1.
Graph generalized_bull(int a, int b, int c);

/// Three cliques ("ovals") of sizes a, b, c >= 0, pairwise completely
/// joined, plus three pairwise nonadjacent apex vertices, each adjacent to
/// every vertex of its two incident ovals (apex 1 to ovals 1 and 2, apex 2
/// to ovals 2 and 3, apex 3 to ovals 1 and 3).
Graph generalized_pyramid(int a, int b, int c);

}  // namespace csfkit::catalog
