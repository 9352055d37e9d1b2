#include "csfkit/enumerate.hpp"

#include "csfkit/catalog.hpp"
#include "csfkit/csf.hpp"
#include "csfkit/recognition.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace csfkit::enumerate {

namespace {

void require_in_cap(int n, const EnumerationOptions& options) {
  if (options.cap > kHardCap) {
    throw std::invalid_argument("enumeration cap cannot exceed " +
                                std::to_string(kHardCap) + " vertices");
  }
  if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
  if (n > options.cap) {
    throw std::invalid_argument(
        "n = " + std::to_string(n) + " exceeds the enumeration cap of " +
        std::to_string(options.cap) + "; raise the cap explicitly to proceed");
  }
  if (options.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

// Rewrites the checkpoint file in place (truncate + single line), so an
// interrupted long sweep leaves a readable progress marker behind.
void write_checkpoint(const std::string& path, const std::string& line) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::trunc);
  out << line << '\n';
}

// Runs body(i) for i in [0, total) on `jobs` threads, in chunks; between
// chunks the coordinator runs after_chunk(done) on its own thread.  Worker
// exceptions are captured and rethrown for the lowest failing index, so
// failures are deterministic too.
void parallel_chunks(long total, int jobs,
                     const std::function<void(long)>& body,
                     const std::function<void(long)>& after_chunk) {
  constexpr long kChunk = 4096;
  std::vector<std::pair<long, std::exception_ptr>> failures;
  for (long start = 0; start < total; start += kChunk) {
    const long end = std::min(total, start + kChunk);
    if (jobs == 1) {
      for (long i = start; i < end; ++i) body(i);
    } else {
      std::atomic<long> next{start};
      std::mutex failure_mu;
      auto worker = [&] {
        for (;;) {
          const long i = next.fetch_add(1);
          if (i >= end) return;
          try {
            body(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            failures.emplace_back(i, std::current_exception());
          }
        }
      };
      std::vector<std::thread> threads;
      const int count = static_cast<int>(std::min<long>(jobs, end - start));
      threads.reserve(static_cast<size_t>(count));
      for (int t = 0; t < count; ++t) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
      if (!failures.empty()) {
        std::sort(failures.begin(), failures.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::rethrow_exception(failures.front().second);
      }
    }
    if (after_chunk) after_chunk(end);
  }
}

bool claw_free(const Graph& g) {
  static const Graph claw = catalog::named("claw");
  return !recognition::contains_induced(g, claw).has_value();
}

// One canonical-augmentation level: all children of `parents` (canonical
// graph6 strings of the m-vertex level) on m+1 vertices that pass the
// canonical-deletion test, deduplicated and sorted by canonical form.
std::vector<std::string> next_level(const std::vector<std::string>& parents,
                                    const EnumerationOptions& options,
                                    int child_n) {
  std::vector<std::vector<std::string>> accepted(parents.size());
  auto expand_parent = [&](long pi) {
    const Graph parent = g6_decode(parents[static_cast<size_t>(pi)]);
    const int m = parent.vertex_count();
    const auto parent_edges = parent.edges();
    std::unordered_set<std::string> local;
    const VertexSet keep_all = VertexSet::first_n(m);
    for (uint64_t subset = 0; subset < (uint64_t{1} << m); ++subset) {
      Graph child(m + 1);
      for (const auto& [u, v] : parent_edges) child.add_edge(u, v);
      for (int v = 0; v < m; ++v) {
        if (subset & (uint64_t{1} << v)) child.add_edge(v, m);
      }
      if (options.claw_free_only && !claw_free(child)) continue;
      const Graph canon = canonical_graph(child);
      // Canonical deletion: drop the highest-labeled vertex of the
      // canonical copy; the child belongs to this parent iff that
      // reproduces it.
      if (canonical_form(canon.induced(keep_all)) != parents[static_cast<size_t>(pi)]) {
        continue;
      }
      local.insert(g6_encode(canon));
    }
    auto& slot = accepted[static_cast<size_t>(pi)];
    slot.assign(local.begin(), local.end());
    std::sort(slot.begin(), slot.end());
  };
  auto checkpoint = [&](long done) {
    write_checkpoint(options.checkpoint_path,
                     "level=" + std::to_string(child_n) + " parents=" +
                         std::to_string(done) + "/" + std::to_string(parents.size()));
  };
  parallel_chunks(static_cast<long>(parents.size()), options.jobs, expand_parent,
                  checkpoint);

  std::vector<std::string> merged;
  for (const auto& slot : accepted) {
    merged.insert(merged.end(), slot.begin(), slot.end());
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

// All graphs (connected or not) on n vertices as canonical forms; the
// intermediate levels of the generation tree.
std::vector<std::string> all_graph_forms(int n, const EnumerationOptions& options) {
  std::vector<std::string> level = {canonical_form(Graph(1))};
  for (int m = 2; m <= n; ++m) {
    level = next_level(level, options, m);
  }
  return level;
}

struct sweep_clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::vector<Graph> connected_universe(int n, const EnumerationOptions& options) {
  require_in_cap(n, options);
  auto forms = all_graph_forms(n, options);
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const auto& form : forms) {
    Graph g = g6_decode(form);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Graph> connected_graphs(int n, const EnumerationOptions& options) {
  return connected_universe(n, options);
}

std::vector<Graph> connected_graphs(int n) {
  return connected_graphs(n, EnumerationOptions{});
}

std::string conjecture_mode_name(ConjectureMode mode) {
  switch (mode) {
    case ConjectureMode::claw_net_free_positive: return "claw-net-free-positive";
    case ConjectureMode::non_positive_has_witness: return "non-positive-has-witness";
    case ConjectureMode::strongly_epositive_iff: return "strongly-epositive-iff";
  }
  throw std::logic_error("conjecture_mode_name: unknown mode");
}

ConjectureMode conjecture_mode_from_name(const std::string& name) {
  if (name == "claw-net-free-positive") return ConjectureMode::claw_net_free_positive;
  if (name == "non-positive-has-witness") return ConjectureMode::non_positive_has_witness;
  if (name == "strongly-epositive-iff") return ConjectureMode::strongly_epositive_iff;
  throw std::invalid_argument("unknown conjecture mode '" + name + "'");
}

VerifyReport count_non_e_positive(int n, const EnumerationOptions& options) {
  sweep_clock clock;
  VerifyReport report;
  report.suite = "counts";
  report.n = n;

  const std::vector<Graph> graphs = connected_universe(n, options);
  report.total_connected = static_cast<long>(graphs.size());

  static const Graph claw = catalog::named("claw");
  static const Graph net = catalog::named("net");
  static const Graph triangle = catalog::complete(3);

  struct row {
    bool e_positive = false;
    bool claw_free = false;
    bool net_free = false;
    bool triangle_free = false;
  };
  std::vector<row> rows(graphs.size());
  auto body = [&](long i) {
    const Graph& g = graphs[static_cast<size_t>(i)];
    row& r = rows[static_cast<size_t>(i)];
    r.e_positive = csf::is_e_positive(g);
    r.claw_free = !recognition::contains_induced(g, claw).has_value();
    r.net_free = !recognition::contains_induced(g, net).has_value();
    r.triangle_free = !recognition::contains_induced(g, triangle).has_value();
  };
  auto checkpoint = [&](long done) {
    write_checkpoint(options.checkpoint_path,
                     "suite=counts n=" + std::to_string(n) + " scanned=" +
                         std::to_string(done) + "/" + std::to_string(graphs.size()));
  };
  parallel_chunks(static_cast<long>(graphs.size()), options.jobs, body, checkpoint);

  long claw_free_count = 0, net_free_count = 0, both_free = 0, triangle_free_count = 0,
       positive = 0;
  for (size_t i = 0; i < graphs.size(); ++i) {
    const row& r = rows[i];
    if (r.claw_free) ++claw_free_count;
    if (r.net_free) ++net_free_count;
    if (r.claw_free && r.net_free) ++both_free;
    if (r.triangle_free) ++triangle_free_count;
    if (r.e_positive) {
      ++positive;
    } else {
      report.non_e_positive.push_back(g6_encode(graphs[i]));
    }
  }
  report.non_e_positive_count = static_cast<long>(report.non_e_positive.size());
  report.class_counts["claw-free"] = claw_free_count;
  report.class_counts["net-free"] = net_free_count;
  report.class_counts["claw-net-free"] = both_free;
  report.class_counts["triangle-free"] = triangle_free_count;
  report.class_counts["e-positive"] = positive;
  report.wall_seconds = clock.seconds();
  return report;
}

VerifyReport verify_conjecture(int n, ConjectureMode mode,
                               const EnumerationOptions& options) {
  sweep_clock clock;
  VerifyReport report;
  report.suite = "conjecture";
  report.mode = conjecture_mode_name(mode);
  report.n = n;

  static const Graph claw = catalog::named("claw");
  static const Graph net = catalog::named("net");

  // The first mode only ever looks at claw-free graphs, so the generation
  // tree is pruned hereditarily to the claw-free universe.
  EnumerationOptions scan = options;
  if (mode == ConjectureMode::claw_net_free_positive) scan.claw_free_only = true;

  const std::vector<Graph> graphs = connected_universe(n, scan);
  report.total_connected = static_cast<long>(graphs.size());

  struct row {
    bool relevant = false;   // satisfies the mode's premise
    bool violation = false;  // fails the mode's conclusion
    bool extra = false;      // mode-specific tally (see below)
  };
  std::vector<row> rows(graphs.size());

  auto body = [&](long i) {
    const Graph& g = graphs[static_cast<size_t>(i)];
    row& r = rows[static_cast<size_t>(i)];
    switch (mode) {
      case ConjectureMode::claw_net_free_positive: {
        // Universe is claw-free already; the premise adds net-freeness.
        r.relevant = !recognition::contains_induced(g, net).has_value();
        if (r.relevant) {
          r.extra = csf::is_e_positive(g);
          r.violation = !r.extra;
        }
        break;
      }
      case ConjectureMode::non_positive_has_witness: {
        r.relevant = !csf::is_e_positive(g);
        if (r.relevant) {
          r.extra = csf::forbidden_witness(g).has_value();
          r.violation = !r.extra;
        }
        break;
      }
      case ConjectureMode::strongly_epositive_iff: {
        const bool cnf = !recognition::contains_induced(g, claw).has_value() &&
                         !recognition::contains_induced(g, net).has_value();
        const bool strong = csf::is_strongly_e_positive(g);
        r.relevant = cnf;
        r.extra = strong;
        r.violation = strong != cnf;
        break;
      }
    }
  };
  auto checkpoint = [&](long done) {
    write_checkpoint(options.checkpoint_path,
                     "suite=conjecture mode=" + report.mode + " n=" +
                         std::to_string(n) + " scanned=" + std::to_string(done) +
                         "/" + std::to_string(graphs.size()));
  };
  parallel_chunks(static_cast<long>(graphs.size()), options.jobs, body, checkpoint);

  long relevant = 0, extra = 0;
  for (size_t i = 0; i < graphs.size(); ++i) {
    if (rows[i].relevant) ++relevant;
    if (rows[i].extra) ++extra;
    if (rows[i].violation) report.counterexamples.push_back(g6_encode(graphs[i]));
  }
  switch (mode) {
    case ConjectureMode::claw_net_free_positive:
      report.class_counts["claw-net-free"] = relevant;
      report.class_counts["e-positive"] = extra;
      break;
    case ConjectureMode::non_positive_has_witness:
      report.non_e_positive_count = relevant;
      report.class_counts["non-e-positive"] = relevant;
      report.class_counts["witnessed"] = extra;
      break;
    case ConjectureMode::strongly_epositive_iff:
      report.class_counts["claw-net-free"] = relevant;
      report.class_counts["strongly-e-positive"] = extra;
      break;
  }
  report.wall_seconds = clock.seconds();
  return report;
}

VerifyReport verify_structure_theorems(int n, const EnumerationOptions& options) {
  sweep_clock clock;
  VerifyReport report;
  report.suite = "structure";
  report.n = n;

  const std::vector<Graph> graphs = connected_universe(n, options);
  report.total_connected = static_cast<long>(graphs.size());

  static const Graph claw = catalog::named("claw");
  static const Graph co_claw = catalog::named("claw").complement();
  static const Graph net = catalog::named("net");
  static const Graph sun3 = catalog::named("sun3");
  static const Graph antenna = catalog::named("antenna");
  static const Graph bull = catalog::named("bull");
  static const Graph f1 = catalog::named("F1");
  static const Graph f2 = catalog::named("F2");
  static const std::string net_form = canonical_form(net);
  static const std::string sun3_form = canonical_form(sun3);

  // A vertex-disjoint triangle/co-triangle pair: some triangle whose
  // removal leaves stability number >= 3.
  auto has_disjoint_triangle_cotriangle = [](const Graph& g) {
    const int nn = g.vertex_count();
    for (int a = 0; a < nn; ++a) {
      for (int b = a + 1; b < nn; ++b) {
        if (!g.has_edge(a, b)) continue;
        for (int c = b + 1; c < nn; ++c) {
          if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
          VertexSet rest = g.all_vertices();
          rest.remove(a);
          rest.remove(b);
          rest.remove(c);
          if (rest.count() >= 3 &&
              recognition::max_stable_set(g.induced(rest)) >= 3) {
            return true;
          }
        }
      }
    }
    return false;
  };

  struct row {
    bool ccf = false;  // (claw, co-claw)-free
    bool premise_disjoint = false;
    bool premise_net_sun = false;
    bool premise_antenna = false;
    bool premise_bull_only = false;
    bool violation = false;
    recognition::MainCase main_case = recognition::MainCase::not_claw_coclaw_free;
  };
  std::vector<row> rows(graphs.size());

  auto body = [&](long i) {
    const Graph& g = graphs[static_cast<size_t>(i)];
    row& r = rows[static_cast<size_t>(i)];
    r.ccf = !recognition::contains_induced(g, claw).has_value() &&
            !recognition::contains_induced(g, co_claw).has_value();
    if (!r.ccf) return;

    const bool has_net = recognition::contains_induced(g, net).has_value();
    const bool has_sun = recognition::contains_induced(g, sun3).has_value();
    const bool has_antenna = recognition::contains_induced(g, antenna).has_value();
    const bool has_bull = recognition::contains_induced(g, bull).has_value();

    r.premise_disjoint = has_disjoint_triangle_cotriangle(g);
    if (r.premise_disjoint && !(has_net || has_sun)) r.violation = true;

    r.premise_net_sun = has_net || has_sun;
    if (r.premise_net_sun) {
      const std::string form = canonical_form(g);
      if (form != net_form && form != sun3_form) r.violation = true;
    }

    r.premise_antenna = has_antenna;
    if (has_antenna && !recognition::contains_induced(f1, g).has_value()) {
      r.violation = true;
    }

    r.premise_bull_only = has_bull && !has_net && !has_sun && !has_antenna;
    if (r.premise_bull_only && !recognition::contains_induced(f2, g).has_value()) {
      r.violation = true;
    }

    try {
      r.main_case = recognition::classify_claw_coclaw(g);
      if (r.main_case == recognition::MainCase::not_claw_coclaw_free) {
        r.violation = true;  // classifier disagrees with the direct check
      }
    } catch (const std::logic_error&) {
      r.violation = true;  // no case applied: a genuine counterexample
    }
  };
  auto checkpoint = [&](long done) {
    write_checkpoint(options.checkpoint_path,
                     "suite=structure n=" + std::to_string(n) + " scanned=" +
                         std::to_string(done) + "/" + std::to_string(graphs.size()));
  };
  parallel_chunks(static_cast<long>(graphs.size()), options.jobs, body, checkpoint);

  long ccf = 0, disjoint = 0, net_sun = 0, with_antenna = 0, bull_only = 0;
  std::map<recognition::MainCase, long> cases;
  for (size_t i = 0; i < graphs.size(); ++i) {
    const row& r = rows[i];
    if (!r.ccf) continue;
    ++ccf;
    if (r.premise_disjoint) ++disjoint;
    if (r.premise_net_sun) ++net_sun;
    if (r.premise_antenna) ++with_antenna;
    if (r.premise_bull_only) ++bull_only;
    ++cases[r.main_case];
    if (r.violation) report.counterexamples.push_back(g6_encode(graphs[i]));
  }
  report.class_counts["claw-co-claw-free"] = ccf;
  report.class_counts["disjoint-triangle-cotriangle"] = disjoint;
  report.class_counts["contains-net-or-3-sun"] = net_sun;
  report.class_counts["contains-antenna"] = with_antenna;
  report.class_counts["bull-no-net-3sun-antenna"] = bull_only;
  for (const auto& [c, count] : cases) {
    report.class_counts["case-" + recognition::main_case_name(c)] = count;
  }
  report.wall_seconds = clock.seconds();
  return report;
}

}  // namespace csfkit::enumerate
