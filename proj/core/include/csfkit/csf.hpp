#pragma once

#include "csfkit/graph.hpp"
#include "csfkit/symfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace csfkit::csf {

/// Degree cap shared by the chromatic-symmetric-function pipeline: the
/// cached basis-transition tables cover degrees up to 12, which covers
/// every graph in the verification range.
inline constexpr int kMaxCsfVertices = kMaxTableDegree;

/// Monomial expansion of the chromatic symmetric function:
///   X_G = sum_lambda r_lambda * (prod_i mult_i(lambda)!) * m_lambda,
/// where r_lambda counts stable partitions of V(G) of type lambda.  Stable
/// partitions are enumerated by backtracking: vertices in descending degree
/// order, each joining a compatible earlier block or opening the next one.
/// Requires 1 <= n <= 12.
SymExpr csf_m(const Graph& g);

/// Elementary expansion m_to_e(csf_m(g)); always integral.
SymExpr csf_e(const Graph& g);

/// Independent power-sum oracle by edge-subset inclusion-exclusion:
///   X_G = sum_{S subseteq E} (-1)^{|S|} p_{lambda(S)},
/// with lambda(S) the component sizes of (V, S).  Enumerates all 2^|E|
/// subsets; requires |E| <= 24.
SymExpr csf_p_oracle(const Graph& g);
inline constexpr int kMaxOracleEdges = 24;

/// Number of proper colorings with k colors, by deletion-contraction with
/// edgeless/complete base cases, component factorization, and a bounded
/// memo keyed on (canonical form, k).  Contraction collapses parallel
/// edges (simple-graph semantics).  Requires k >= 0.
Int chromatic_poly(const Graph& g, int k);

/// Deletion-contraction memo controls.  The memo is process-global and
/// thread-safe; entries are deterministic.  Capacity is in entries
/// (default 2^20); snapshot/preload support an on-disk spill.
void set_chromatic_memo_capacity(size_t entries);
struct ChromaticMemoEntry {
  std::string canon;  // canonical form of the minor
  int k;
  std::string value;  // decimal
};
std::vector<ChromaticMemoEntry> chromatic_memo_snapshot();
void chromatic_memo_preload(const std::vector<ChromaticMemoEntry>& entries);

/// e-positivity: every coefficient of csf_e(g) nonnegative.  The report
/// lists the negative terms in partition listing order.
struct EPositivityReport {
  bool e_positive = false;
  std::vector<std::pair<Partition, Rational>> negative_terms;
};
EPositivityReport e_positivity(const Graph& g);

/// Memoized by canonical form (process-global, thread-safe).  Disconnected
/// graphs multiply componentwise in the e basis; a product of e-positive
/// factors is e-positive, and mixed signs are resolved by expanding the
/// product.
bool is_e_positive(const Graph& g);

/// Strong e-positivity: every nonempty induced subgraph is e-positive.
/// Subsets are scanned smallest-first and deduplicated by canonical form,
/// so the reported witness has minimum order.
struct StrongEPositivityReport {
  bool strongly_e_positive = false;
  std::optional<Graph> min_failing_subgraph;
};
StrongEPositivityReport strong_e_positivity(const Graph& g);
bool is_strongly_e_positive(const Graph& g);

/// An induced claw if present, else an induced net, else absent.
struct ForbiddenWitness {
  std::string pattern;  // "claw" or "net"
  VertexSet vertices;
};
std::optional<ForbiddenWitness> forbidden_witness(const Graph& g);

/// Everything the csf query surface reports for one graph.  Both classical
/// expansions are always present (e_positive is read off the e one); the
/// power-sum expansion joins when requested.  The oracle fields are set
/// only when oracle checks were asked for: chromatic_oracle_ok compares
/// eval_at_ones(csf_e, k) with the deletion-contraction count for
/// k = 1..p(n)+1, and power_sum_oracle_ok compares e_to_p(csf_e) with the
/// edge-subset expansion (skipped, left unset, above the edge cap).
struct CsfResult {
  std::string graph6;
  int n = 0;
  Basis basis = Basis::e;  // the basis the caller asked to see
  SymExpr m_expansion{Basis::m, 0};
  SymExpr e_expansion{Basis::e, 0};
  std::optional<SymExpr> p_expansion;
  bool e_positive = false;
  std::vector<std::pair<Partition, Rational>> negative_terms;
  std::optional<bool> chromatic_oracle_ok;
  std::optional<bool> power_sum_oracle_ok;
};
CsfResult csf_result(const Graph& g, Basis basis, bool check_oracles);

}  // namespace csfkit::csf
