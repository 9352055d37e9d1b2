#pragma once

#include "csfkit/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace csfkit::enumerate {

/// Enumeration is capped at 9 vertices unless explicitly raised; 12 is a
/// hard ceiling (the chromatic pipeline's table range).
inline constexpr int kDefaultCap = 9;
inline constexpr int kHardCap = 12;

struct EnumerationOptions {
  /// Largest n this run may enumerate.  Asking for n above the cap raises
  /// std::invalid_argument, so exceeding the default is an explicit choice.
  int cap = kDefaultCap;
  /// Restrict to claw-free graphs, applied hereditarily at every level of
  /// the generation tree (claw-freeness is closed under induced subgraphs,
  /// so pruned subtrees can never recover it).
  bool claw_free_only = false;
  /// Worker threads; results are independent of the value.
  int jobs = 1;
  /// When nonempty, progress lines are rewritten to this file during long
  /// sweeps (one line: suite/level, done/total, violations so far).
  std::string checkpoint_path;
};

/// Every isomorphism class of connected graphs on n vertices, exactly
/// once, sorted by canonical form.  Generation is by canonical
/// augmentation: each graph on m vertices is extended by one vertex over
/// all neighbor subsets, a child is kept iff deleting the highest vertex
/// of its canonical copy reproduces the parent's canonical form, and the
/// survivors are deduplicated by canonical form.  Intermediate levels keep
/// disconnected graphs (a canonical deletion may disconnect the graph);
/// connectivity is filtered at the final level.
std::vector<Graph> connected_graphs(int n, const EnumerationOptions& options);
std::vector<Graph> connected_graphs(int n);

enum class ConjectureMode {
  /// Every connected (claw, net)-free graph is e-positive.
  claw_net_free_positive,
  /// Every connected non-e-positive graph contains a claw or a net.
  non_positive_has_witness,
  /// Strong e-positivity coincides with (claw, net)-freeness.
  strongly_epositive_iff,
};

/// Names as spelled on the command line: "claw-net-free-positive",
/// "non-positive-has-witness", "strongly-epositive-iff".
std::string conjecture_mode_name(ConjectureMode mode);
ConjectureMode conjecture_mode_from_name(const std::string& name);

/// Result of one verification sweep.  All fields other than wall_seconds
/// are deterministic functions of (suite, mode, n): lists are sorted by
/// canonical form and counts never depend on the job count.  wall_seconds
/// is for operator feedback (stderr) and stays out of serialized reports
/// so reruns compare byte-identical.
struct VerifyReport {
  std::string suite;  // "counts", "conjecture", or "structure"
  std::string mode;   // conjecture mode name; empty for other suites
  int n = 0;
  /// Connected graphs scanned.  For the claw-net-free-positive mode the
  /// scan runs inside the hereditarily claw-free universe, and this counts
  /// the connected claw-free graphs.
  long total_connected = 0;
  std::map<std::string, long> class_counts;
  long non_e_positive_count = 0;
  /// The non-e-positive graphs themselves (counts suite), graph6.
  std::vector<std::string> non_e_positive;
  /// Graphs violating the property under test, graph6.  The census in
  /// non_e_positive is expected output, never a violation.
  std::vector<std::string> counterexamples;
  double wall_seconds = 0.0;
};

/// Census of connected non-e-positive graphs on n vertices.
VerifyReport count_non_e_positive(int n, const EnumerationOptions& options = {});

/// Exhaustive sweep for one conjecture mode; see ConjectureMode.
VerifyReport verify_conjecture(int n, ConjectureMode mode,
                               const EnumerationOptions& options = {});

/// Checks the (claw, co-claw) structure theory over every connected graph
/// on n vertices:
///   - a (claw, co-claw)-free graph with a vertex-disjoint triangle and
///     co-triangle contains a net or a 3-sun;
///   - a (claw, co-claw)-free graph containing a net or 3-sun is one;
///   - a (claw, co-claw)-free graph containing an antenna is an induced
///     subgraph of F1;
///   - a (claw, co-claw)-free graph with a bull but no net, 3-sun, or
///     antenna is an induced subgraph of F2;
///   - every (claw, co-claw)-free graph lands in one of the four
///     classifier cases.
VerifyReport verify_structure_theorems(int n, const EnumerationOptions& options = {});

}  // namespace csfkit::enumerate
