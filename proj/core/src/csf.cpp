#include "csfkit/csf.hpp"

#include "csfkit/catalog.hpp"
#include "csfkit/recognition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <list>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace csfkit::csf {

namespace {

// ---------------------------------------------------------------------------
// stable partition enumeration

// Counts stable partitions by type.  Vertices are inserted in descending
// degree order; a vertex may join any earlier block it is not adjacent to,
// or open the next fresh block, so each set partition shows up exactly
// once (restricted-growth form).  Counts fit in uint64_t: the total over
// all types is the Bell number, and Bell(12) < 2^23.
struct stable_partition_counter {
  const Graph& g;
  const PartitionTable& table;
  std::vector<int> order;
  std::vector<uint64_t> block_adj;  // union of neighborhoods of the block
  std::vector<int> block_size;
  std::vector<uint64_t> counts;

  explicit stable_partition_counter(const Graph& graph, const PartitionTable& t)
      : g(graph), table(t), counts(static_cast<size_t>(t.size()), 0) {
    order.resize(static_cast<size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
  }

  void run() { descend(0); }

  void descend(size_t depth) {
    if (depth == order.size()) {
      std::vector<int> sizes(block_size);
      std::sort(sizes.begin(), sizes.end(), std::greater<int>());
      counts[static_cast<size_t>(table.index_of(Partition(sizes)))] += 1;
      return;
    }
    const int v = order[depth];
    const uint64_t mask = uint64_t{1} << v;
    const uint64_t vadj = g.neighbors(v).bits;
    for (size_t b = 0; b < block_adj.size(); ++b) {
      if (block_adj[b] & mask) continue;  // adjacent to someone in the block
      const uint64_t saved = block_adj[b];
      block_adj[b] |= vadj;
      ++block_size[b];
      descend(depth + 1);
      --block_size[b];
      block_adj[b] = saved;
    }
    block_adj.push_back(vadj);
    block_size.push_back(1);
    descend(depth + 1);
    block_adj.pop_back();
    block_size.pop_back();
  }
};

void require_csf_size(const Graph& g) {
  if (g.vertex_count() > kMaxCsfVertices) {
    throw std::invalid_argument(
        "chromatic symmetric function computations support at most " +
        std::to_string(kMaxCsfVertices) + " vertices, got " +
        std::to_string(g.vertex_count()));
  }
}

// ---------------------------------------------------------------------------
// deletion-contraction memo

struct chromatic_memo {
  using entry = std::pair<std::string, Int>;
  std::list<entry> order;  // most recent at front
  std::unordered_map<std::string, std::list<entry>::iterator> index;
  size_t capacity = size_t{1} << 20;
  std::mutex mu;

  std::optional<Int> lookup(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = index.find(key);
    if (it == index.end()) return std::nullopt;
    order.splice(order.begin(), order, it->second);
    return it->second->second;
  }

  void insert(const std::string& key, const Int& value) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = index.find(key);
    if (it != index.end()) {
      order.splice(order.begin(), order, it->second);
      return;
    }
    order.emplace_front(key, value);
    index.emplace(key, order.begin());
    while (index.size() > capacity) {
      index.erase(order.back().first);
      order.pop_back();
    }
  }
};

chromatic_memo& memo() {
  static chromatic_memo m;
  return m;
}

std::string memo_key(const std::string& canon, int k) {
  // graph6 bytes are all >= 63, so a space never collides.
  return canon + ' ' + std::to_string(k);
}

Int falling_factorial(int k, int n) {
  Int out = 1;
  for (int i = 0; i < n; ++i) out *= k - i;
  return out;
}

Int int_pow(int k, int n) {
  Int out = 1;
  for (int i = 0; i < n; ++i) out *= k;
  return out;
}

// Contract edge {u, v}: v disappears, u absorbs v's neighborhood, labels
// above v shift down by one.  Parallel edges collapse (simple graph).
Graph contract_edge(const Graph& g, int u, int v) {
  const int n = g.vertex_count();
  Graph out(n - 1);
  auto relabel = [&](int x) { return x < v ? x : x - 1; };
  for (const auto& [a, b] : g.edges()) {
    int x = a == v ? u : a;
    int y = b == v ? u : b;
    if (x == y) continue;
    int rx = relabel(x);
    int ry = relabel(y);
    if (!out.has_edge(rx, ry)) out.add_edge(rx, ry);
  }
  return out;
}

Int chromatic_rec(const Graph& g, int k) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (k == 0) return 0;  // n >= 1 always holds here
  if (m == 0) return int_pow(k, n);
  if (m == n * (n - 1) / 2) return falling_factorial(k, n);

  const auto comps = components(g);
  if (comps.size() > 1) {
    Int out = 1;
    for (const auto& c : comps) out *= chromatic_rec(g.induced(c), k);
    return out;
  }

  const std::string key = memo_key(canonical_form(g), k);
  if (auto hit = memo().lookup(key)) return *hit;

  // Pick the edge with the largest endpoint degree sum: contractions
  // shrink fast and deletions converge toward the sparse base case.
  int bu = -1, bv = -1, best = -1;
  for (const auto& [u, v] : g.edges()) {
    const int score = g.degree(u) + g.degree(v);
    if (score > best) {
      best = score;
      bu = u;
      bv = v;
    }
  }
  Graph deleted(n);
  for (const auto& [u, v] : g.edges()) {
    if (u == bu && v == bv) continue;
    deleted.add_edge(u, v);
  }
  const Int value = chromatic_rec(deleted, k) - chromatic_rec(contract_edge(g, bu, bv), k);
  memo().insert(key, value);
  return value;
}

// ---------------------------------------------------------------------------
// e-positivity memo

struct positivity_memo {
  std::unordered_map<std::string, bool> entries;
  std::mutex mu;

  std::optional<bool> lookup(const std::string& canon) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = entries.find(canon);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& canon, bool value) {
    std::lock_guard<std::mutex> lock(mu);
    entries.emplace(canon, value);
  }
};

positivity_memo& epos_memo() {
  static positivity_memo m;
  return m;
}

bool connected_e_positive(const Graph& g) {
  const std::string canon = canonical_form(g);
  if (auto hit = epos_memo().lookup(canon)) return *hit;
  const bool value = e_positivity(g).e_positive;
  epos_memo().insert(canon, value);
  return value;
}

}  // namespace

SymExpr csf_m(const Graph& g) {
  require_csf_size(g);
  const int n = g.vertex_count();
  const PartitionTable& table = partition_table(n);
  stable_partition_counter counter(g, table);
  counter.run();
  SymExpr out(Basis::m, n);
  for (int i = 0; i < table.size(); ++i) {
    if (counter.counts[static_cast<size_t>(i)] == 0) continue;
    const Partition& lambda = table.at(i);
    Rational coeff(Int(counter.counts[static_cast<size_t>(i)]) *
                   lambda.multiplicity_factorial());
    out.add_term(lambda, coeff);
  }
  return out;
}

SymExpr csf_e(const Graph& g) {
  SymExpr e = m_to_e(csf_m(g));
  e.require_integral();
  return e;
}

SymExpr csf_p_oracle(const Graph& g) {
  const int n = g.vertex_count();
  const auto edge_list = g.edges();
  const int m = static_cast<int>(edge_list.size());
  if (m > kMaxOracleEdges) {
    throw std::invalid_argument("power-sum oracle supports at most " +
                                std::to_string(kMaxOracleEdges) + " edges, got " +
                                std::to_string(m));
  }
  const PartitionTable& table = partition_table(n);
  std::vector<int64_t> signed_counts(static_cast<size_t>(table.size()), 0);
  std::vector<int> parent(static_cast<size_t>(n));
  std::vector<int> size(static_cast<size_t>(n));
  for (uint32_t subset = 0; subset < (uint32_t{1} << m); ++subset) {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(size.begin(), size.end(), 1);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (int e = 0; e < m; ++e) {
      if (!(subset & (uint32_t{1} << e))) continue;
      int a = find(edge_list[static_cast<size_t>(e)].first);
      int b = find(edge_list[static_cast<size_t>(e)].second);
      if (a == b) continue;
      if (size[a] < size[b]) std::swap(a, b);
      parent[b] = a;
      size[a] += size[b];
    }
    std::vector<int> comp_sizes;
    for (int v = 0; v < n; ++v) {
      if (find(v) == v) comp_sizes.push_back(size[v]);
    }
    std::sort(comp_sizes.begin(), comp_sizes.end(), std::greater<int>());
    const int idx = table.index_of(Partition(comp_sizes));
    const int sign = (std::popcount(subset) % 2 == 0) ? 1 : -1;
    signed_counts[static_cast<size_t>(idx)] += sign;
  }
  SymExpr out(Basis::p, n);
  for (int i = 0; i < table.size(); ++i) {
    if (signed_counts[static_cast<size_t>(i)] == 0) continue;
    out.add_term(table.at(i), Rational(signed_counts[static_cast<size_t>(i)]));
  }
  return out;
}

Int chromatic_poly(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("chromatic_poly requires k >= 0");
  return chromatic_rec(g, k);
}

void set_chromatic_memo_capacity(size_t entries) {
  if (entries == 0) throw std::invalid_argument("memo capacity must be positive");
  std::lock_guard<std::mutex> lock(memo().mu);
  memo().capacity = entries;
  while (memo().index.size() > memo().capacity) {
    memo().index.erase(memo().order.back().first);
    memo().order.pop_back();
  }
}

std::vector<ChromaticMemoEntry> chromatic_memo_snapshot() {
  std::lock_guard<std::mutex> lock(memo().mu);
  std::vector<ChromaticMemoEntry> out;
  out.reserve(memo().order.size());
  for (const auto& [key, value] : memo().order) {
    const size_t space = key.rfind(' ');
    out.push_back({key.substr(0, space), std::stoi(key.substr(space + 1)),
                   value.str()});
  }
  return out;
}

void chromatic_memo_preload(const std::vector<ChromaticMemoEntry>& entries) {
  for (const auto& e : entries) {
    memo().insert(memo_key(e.canon, e.k), Int(e.value));
  }
}

EPositivityReport e_positivity(const Graph& g) {
  const SymExpr e = csf_e(g);
  EPositivityReport report;
  report.negative_terms = e.negative_terms();
  report.e_positive = report.negative_terms.empty();
  return report;
}

bool is_e_positive(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() == 1) return connected_e_positive(g);
  // X_{G+H} = X_G * X_H; a product of e-positive factors is e-positive.
  bool all_positive = true;
  for (const auto& c : comps) {
    if (!connected_e_positive(g.induced(c))) {
      all_positive = false;
      break;
    }
  }
  if (all_positive) return true;
  // Mixed signs can still cancel into a positive product; expand honestly.
  SymExpr product(Basis::e, 0);
  product.add_term(Partition{}, Rational(1));
  for (const auto& c : comps) product = sym_mul(product, csf_e(g.induced(c)));
  return product.negative_terms().empty();
}

StrongEPositivityReport strong_e_positivity(const Graph& g) {
  require_csf_size(g);
  const int n = g.vertex_count();
  StrongEPositivityReport report;
  std::unordered_map<std::string, bool> seen;
  for (int s = 1; s <= n; ++s) {
    // Subsets of size s in ascending numeric order of their bitmask.
    uint64_t subset = (uint64_t{1} << s) - 1;
    const uint64_t limit = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n);
    while (subset < limit) {
      const Graph h = g.induced(VertexSet{subset});
      const std::string canon = canonical_form(h);
      if (!seen.contains(canon)) {
        seen.emplace(canon, true);
        if (!is_e_positive(h)) {
          report.strongly_e_positive = false;
          report.min_failing_subgraph = h;
          return report;
        }
      }
      // Gosper's hack: next subset with the same popcount.
      const uint64_t c = subset & -subset;
      const uint64_t r = subset + c;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  report.strongly_e_positive = true;
  return report;
}

bool is_strongly_e_positive(const Graph& g) {
  return strong_e_positivity(g).strongly_e_positive;
}

CsfResult csf_result(const Graph& g, Basis basis, bool check_oracles) {
  CsfResult r;
  r.graph6 = g6_encode(g);
  r.n = g.vertex_count();
  r.basis = basis;
  r.m_expansion = csf_m(g);
  r.e_expansion = m_to_e(r.m_expansion);
  r.e_expansion.require_integral();
  if (basis == Basis::p) r.p_expansion = e_to_p(r.e_expansion);
  r.negative_terms = r.e_expansion.negative_terms();
  r.e_positive = r.negative_terms.empty();
  if (check_oracles) {
    bool chrom_ok = true;
    const long top = partition_count(r.n) + 1;
    for (long k = 1; k <= top; ++k) {
      if (eval_at_ones(r.e_expansion, static_cast<int>(k)) !=
          Rational(chromatic_poly(g, static_cast<int>(k)))) {
        chrom_ok = false;
        break;
      }
    }
    r.chromatic_oracle_ok = chrom_ok;
    if (g.edge_count() <= kMaxOracleEdges) {
      r.power_sum_oracle_ok = e_to_p(r.e_expansion) == csf_p_oracle(g);
    }
  }
  return r;
}

std::optional<ForbiddenWitness> forbidden_witness(const Graph& g) {
  static const Graph claw = catalog::named("claw");
  static const Graph net = catalog::named("net");
  if (auto hit = recognition::contains_induced(g, claw)) {
    return ForbiddenWitness{"claw", *hit};
  }
  if (auto hit = recognition::contains_induced(g, net)) {
    return ForbiddenWitness{"net", *hit};
  }
  return std::nullopt;
}

}  // namespace csfkit::csf
