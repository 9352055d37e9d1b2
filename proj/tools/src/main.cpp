// Command-line front end: csf, classify, catalog, verify, epos.
//
// Exit codes: 0 = success / zero violations, 1 = violations or
// counterexamples found (non-e-positive inputs for epos, failed oracle
// checks for csf --check-oracles), 2 = usage or input errors.  Usage
// errors print a synopsis to stderr.  All reports go to stdout, one JSON
// object per line unless --format text; progress and timing go to stderr.

#include "csfkit/catalog.hpp"
#include "csfkit/csf.hpp"
#include "csfkit/enumerate.hpp"
#include "csfkit/graph.hpp"
#include "csfkit/recognition.hpp"
#include "csfkit/report_json.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace csfkit;

// ---------------------------------------------------------------------------
// shared input plumbing

struct input_options {
  std::string graph6;     // inline graph6
  std::string input_path; // file with one graph6 per line; "-" = stdin
  std::string edge_list;  // inline "n; u v; ..." text
};

void add_input_flags(CLI::App* cmd, input_options& in) {
  cmd->add_option("--graph6", in.graph6, "inline graph6 string");
  cmd->add_option("--input", in.input_path,
                  "file with one graph6 per line ('-' for stdin)");
  cmd->add_option("--edge-list", in.edge_list,
                  "inline edge list \"n; u v; u v; ...\"");
}

std::vector<Graph> load_graphs(const input_options& in) {
  const int sources = (in.graph6.empty() ? 0 : 1) + (in.input_path.empty() ? 0 : 1) +
                      (in.edge_list.empty() ? 0 : 1);
  if (sources != 1) {
    throw CLI::ValidationError(
        "input", "exactly one of --graph6, --input, --edge-list is required");
  }
  std::vector<Graph> graphs;
  if (!in.graph6.empty()) {
    graphs.push_back(g6_decode(in.graph6));
  } else if (!in.edge_list.empty()) {
    graphs.push_back(edge_list_decode(in.edge_list));
  } else {
    std::ifstream file;
    std::istream* stream = &std::cin;
    if (in.input_path != "-") {
      file.open(in.input_path);
      if (!file) {
        throw std::invalid_argument("cannot open input file '" + in.input_path + "'");
      }
      stream = &file;
    }
    std::string line;
    while (std::getline(*stream, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.pop_back();
      }
      if (line.empty() || line[0] == '#') continue;
      graphs.push_back(g6_decode(line));
    }
    if (graphs.empty()) {
      throw std::invalid_argument("input contained no graphs");
    }
  }
  return graphs;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw std::invalid_argument(flag + ": expected comma-separated integers, got '" +
                                  text + "'");
    }
  }
  if (out.empty()) {
    throw std::invalid_argument(flag + ": expected comma-separated integers");
  }
  return out;
}

// ---------------------------------------------------------------------------
// deletion-contraction memo spill (EPOS_CACHE_DIR)

std::filesystem::path memo_spill_path(const std::string& dir) {
  return std::filesystem::path(dir) / "chromatic_memo.tsv";
}

void load_memo_spill(const std::string& dir) {
  std::ifstream file(memo_spill_path(dir));
  if (!file) return;  // absent cache is simply empty
  std::vector<csf::ChromaticMemoEntry> entries;
  std::string line;
  while (std::getline(file, line)) {
    const size_t t1 = line.find('\t');
    const size_t t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) continue;
    try {
      entries.push_back({line.substr(0, t1), std::stoi(line.substr(t1 + 1, t2 - t1 - 1)),
                         line.substr(t2 + 1)});
    } catch (const std::exception&) {
      // a corrupt line only loses one cached value
    }
  }
  csf::chromatic_memo_preload(entries);
}

void save_memo_spill(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // cache is best-effort
  std::ofstream file(memo_spill_path(dir), std::ios::trunc);
  if (!file) return;
  for (const auto& entry : csf::chromatic_memo_snapshot()) {
    file << entry.canon << '\t' << entry.k << '\t' << entry.value << '\n';
  }
}

// ---------------------------------------------------------------------------
// subcommands

int run_csf(const input_options& in, const std::string& basis_text, bool check_oracles,
            const std::string& format) {
  const Basis basis = basis_from_name(basis_text);
  bool oracle_failure = false;
  for (const Graph& g : load_graphs(in)) {
    const csf::CsfResult result = csf::csf_result(g, basis, check_oracles);
    if (format == "text") {
      std::cout << report_json::csf_result_text(result);
    } else {
      std::cout << report_json::csf_result_json(result) << '\n';
    }
    if ((result.chromatic_oracle_ok && !*result.chromatic_oracle_ok) ||
        (result.power_sum_oracle_ok && !*result.power_sum_oracle_ok)) {
      oracle_failure = true;
    }
  }
  return oracle_failure ? 1 : 0;
}

int run_classify(const input_options& in, const std::string& format) {
  for (const Graph& g : load_graphs(in)) {
    const recognition::ClassReport report = recognition::classify(g);
    if (format == "text") {
      std::cout << report_json::class_report_text(g6_encode(g), g.vertex_count(), report);
    } else {
      std::cout << report_json::class_report_json(g6_encode(g), g.vertex_count(), report)
                << '\n';
    }
  }
  return 0;
}

int run_epos(const input_options& in, bool strong, bool witness,
             const std::string& format) {
  bool any_negative = false;
  for (const Graph& g : load_graphs(in)) {
    report_json::EposResult result;
    result.graph6 = g6_encode(g);
    result.n = g.vertex_count();
    result.positivity = csf::e_positivity(g);
    if (strong) result.strong = csf::strong_e_positivity(g);
    if (witness) {
      result.witness = csf::forbidden_witness(g);
      result.witness_checked = true;
    }
    if (!result.positivity.e_positive ||
        (result.strong && !result.strong->strongly_e_positive)) {
      any_negative = true;
    }
    if (format == "text") {
      std::cout << report_json::epos_result_text(result);
    } else {
      std::cout << report_json::epos_result_json(result) << '\n';
    }
  }
  return any_negative ? 1 : 0;
}

int run_catalog(const std::string& name, bool list, const std::string& path_k,
                const std::string& cycle_k, const std::string& complete_k,
                const std::string& chain, const std::string& gbull,
                const std::string& gpyramid, const std::string& format) {
  std::vector<std::pair<std::string, Graph>> entries;
  const int selectors = (name.empty() ? 0 : 1) + (list ? 1 : 0) +
                        (path_k.empty() ? 0 : 1) + (cycle_k.empty() ? 0 : 1) +
                        (complete_k.empty() ? 0 : 1) + (chain.empty() ? 0 : 1) +
                        (gbull.empty() ? 0 : 1) + (gpyramid.empty() ? 0 : 1);
  if (selectors != 1) {
    throw CLI::ValidationError("catalog",
                               "exactly one of --name, --list, --path, --cycle, "
                               "--complete, --k-chain, --generalized-bull, "
                               "--generalized-pyramid is required");
  }
  if (list) {
    for (const std::string& entry : catalog::named_list()) {
      entries.emplace_back(entry, catalog::named(entry));
    }
  } else if (!name.empty()) {
    entries.emplace_back(name, catalog::named(name));
  } else if (!path_k.empty()) {
    const int k = parse_int_list(path_k, "--path").at(0);
    entries.emplace_back("path(" + std::to_string(k) + ")", catalog::path(k));
  } else if (!cycle_k.empty()) {
    const int k = parse_int_list(cycle_k, "--cycle").at(0);
    entries.emplace_back("cycle(" + std::to_string(k) + ")", catalog::cycle(k));
  } else if (!complete_k.empty()) {
    const int k = parse_int_list(complete_k, "--complete").at(0);
    entries.emplace_back("complete(" + std::to_string(k) + ")", catalog::complete(k));
  } else if (!chain.empty()) {
    const std::vector<int> sizes = parse_int_list(chain, "--k-chain");
    entries.emplace_back("k_chain(" + chain + ")", catalog::k_chain(sizes));
  } else if (!gbull.empty()) {
    const std::vector<int> abc = parse_int_list(gbull, "--generalized-bull");
    if (abc.size() != 3) {
      throw std::invalid_argument("--generalized-bull expects three sizes a,b,c");
    }
    entries.emplace_back("generalized_bull(" + gbull + ")",
                         catalog::generalized_bull(abc[0], abc[1], abc[2]));
  } else {
    const std::vector<int> abc = parse_int_list(gpyramid, "--generalized-pyramid");
    if (abc.size() != 3) {
      throw std::invalid_argument("--generalized-pyramid expects three sizes a,b,c");
    }
    entries.emplace_back("generalized_pyramid(" + gpyramid + ")",
                         catalog::generalized_pyramid(abc[0], abc[1], abc[2]));
  }

  for (const auto& [entry_name, g] : entries) {
    if (format == "g6") {
      std::cout << g6_encode(g) << '\n';
    } else if (format == "edge-list") {
      std::cout << edge_list_encode(g) << '\n';
    } else if (format == "text") {
      std::cout << report_json::catalog_entry_text(entry_name, g);
    } else {
      std::cout << report_json::catalog_entry_json(entry_name, g) << '\n';
    }
  }
  return 0;
}

int run_verify(const std::string& suite, int n, const std::string& mode, int jobs,
               bool extended, const std::string& counterexample_path,
               const std::string& checkpoint, const std::string& format) {
  if (n >= 9 && !extended) {
    throw CLI::ValidationError(
        "verify", "n >= 9 is an extended run; pass --extended to confirm");
  }
  enumerate::EnumerationOptions options;
  options.jobs = jobs;
  options.cap = extended ? enumerate::kHardCap : enumerate::kDefaultCap;
  options.checkpoint_path = checkpoint;
  if (extended && checkpoint.empty()) {
    options.checkpoint_path =
        "csfkit-" + suite + "-n" + std::to_string(n) + ".checkpoint";
  }

  enumerate::VerifyReport report;
  if (suite == "counts") {
    report = enumerate::count_non_e_positive(n, options);
  } else if (suite == "conjecture") {
    if (mode.empty()) {
      throw CLI::ValidationError("verify",
                                 "--suite conjecture requires --mode "
                                 "(claw-net-free-positive, "
                                 "non-positive-has-witness, "
                                 "strongly-epositive-iff)");
    }
    report = enumerate::verify_conjecture(n, enumerate::conjecture_mode_from_name(mode),
                                          options);
  } else if (suite == "structure") {
    report = enumerate::verify_structure_theorems(n, options);
  } else {
    throw CLI::ValidationError("verify",
                               "--suite must be counts, conjecture, or structure");
  }

  if (format == "text") {
    std::cout << report_json::verify_report_text(report);
  } else {
    std::cout << report_json::verify_report_json(report) << '\n';
  }
  std::cerr << "verify " << suite << " n=" << n << " finished in " << report.wall_seconds
            << " s\n";

  if (!counterexample_path.empty()) {
    std::ofstream file(counterexample_path, std::ios::trunc);
    if (!file) {
      throw std::invalid_argument("cannot write counterexample file '" +
                                  counterexample_path + "'");
    }
    for (const auto& g6 : report.counterexamples) file << g6 << '\n';
  }
  return report.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chromatic symmetric function toolkit"};
  app.require_subcommand(1);

  // csf ----------------------------------------------------------------
  input_options csf_in;
  std::string csf_basis = "e";
  bool csf_check_oracles = false;
  std::string csf_format = "json";
  CLI::App* csf_cmd =
      app.add_subcommand("csf", "chromatic symmetric function expansions");
  add_input_flags(csf_cmd, csf_in);
  csf_cmd->add_option("--basis", csf_basis, "expansion basis to display: m, e, or p")
      ->check(CLI::IsMember({"m", "e", "p"}));
  csf_cmd->add_flag("--check-oracles", csf_check_oracles,
                    "re-verify the chromatic-polynomial and power-sum oracles");
  csf_cmd->add_option("--format", csf_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  // classify -------------------------------------------------------------
  input_options classify_in;
  std::string classify_format = "json";
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "graph-class membership report");
  add_input_flags(classify_cmd, classify_in);
  classify_cmd->add_option("--format", classify_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  // catalog --------------------------------------------------------------
  std::string catalog_name, catalog_path, catalog_cycle, catalog_complete;
  std::string catalog_chain, catalog_gbull, catalog_gpyramid;
  bool catalog_list = false;
  std::string catalog_format = "json";
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "named and parameterized graphs");
  catalog_cmd->add_option("--name", catalog_name, "named graph (see --list)");
  catalog_cmd->add_flag("--list", catalog_list, "emit every named graph");
  catalog_cmd->add_option("--path", catalog_path, "path P_k");
  catalog_cmd->add_option("--cycle", catalog_cycle, "cycle C_k");
  catalog_cmd->add_option("--complete", catalog_complete, "complete graph K_k");
  catalog_cmd->add_option("--k-chain", catalog_chain,
                          "chain of cliques, comma-separated sizes");
  catalog_cmd->add_option("--generalized-bull", catalog_gbull,
                          "generalized bull, sizes a,b,c");
  catalog_cmd->add_option("--generalized-pyramid", catalog_gpyramid,
                          "generalized pyramid, oval sizes a,b,c");
  catalog_cmd->add_option("--format", catalog_format, "output format")
      ->check(CLI::IsMember({"json", "text", "g6", "edge-list"}));

  // verify ---------------------------------------------------------------
  std::string verify_suite, verify_mode, verify_counterexamples, verify_checkpoint;
  std::string verify_format = "json";
  int verify_n = 0;
  int verify_jobs = 1;
  bool verify_extended = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "exhaustive verification sweeps");
  verify_cmd->add_option("--suite", verify_suite, "counts, conjecture, or structure")
      ->required()
      ->check(CLI::IsMember({"counts", "conjecture", "structure"}));
  verify_cmd->add_option("--n", verify_n, "number of vertices")->required();
  verify_cmd->add_option("--mode", verify_mode,
                         "conjecture mode: claw-net-free-positive, "
                         "non-positive-has-witness, strongly-epositive-iff");
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--extended", verify_extended,
                       "allow long runs with n >= 9 (checkpointed)");
  verify_cmd->add_option("--counterexamples", verify_counterexamples,
                         "write violating graphs to this file, one graph6 per line");
  verify_cmd->add_option("--checkpoint", verify_checkpoint,
                         "progress file for long sweeps");
  verify_cmd->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  // epos -----------------------------------------------------------------
  input_options epos_in;
  bool epos_strong = false;
  bool epos_witness = false;
  std::string epos_format = "json";
  CLI::App* epos_cmd =
      app.add_subcommand("epos", "e-positivity and strong e-positivity queries");
  add_input_flags(epos_cmd, epos_in);
  epos_cmd->add_flag("--strong", epos_strong,
                     "also decide strong e-positivity (all induced subgraphs)");
  epos_cmd->add_flag("--witness", epos_witness,
                     "report an induced claw or net when one exists");
  epos_cmd->add_option("--format", epos_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  const char* cache_dir = std::getenv("EPOS_CACHE_DIR");
  const std::string cache(cache_dir ? cache_dir : "");
  if (!cache.empty()) load_memo_spill(cache);

  int code = 0;
  try {
    if (csf_cmd->parsed()) {
      code = run_csf(csf_in, csf_basis, csf_check_oracles, csf_format);
    } else if (classify_cmd->parsed()) {
      code = run_classify(classify_in, classify_format);
    } else if (catalog_cmd->parsed()) {
      code = run_catalog(catalog_name, catalog_list, catalog_path, catalog_cycle,
                         catalog_complete, catalog_chain, catalog_gbull,
                         catalog_gpyramid, catalog_format);
    } else if (verify_cmd->parsed()) {
      code = run_verify(verify_suite, verify_n, verify_mode, verify_jobs,
                        verify_extended, verify_counterexamples, verify_checkpoint,
                        verify_format);
    } else if (epos_cmd->parsed()) {
      code = run_epos(epos_in, epos_strong, epos_witness, epos_format);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (!cache.empty()) save_memo_spill(cache);
  return code;
}
