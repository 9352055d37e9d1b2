#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct run_result {
  int exit_code;
  std::string out;
};

// Run the binary through the shell, capturing stdout.  stderr is sent to
// /dev/null unless the fragment redirects it itself.  `env_prefix` goes in
// front of the binary ("VAR=value ").
run_result run(const std::string& args, bool keep_stderr = false,
               const std::string& env_prefix = {}) {
  std::string cmd = env_prefix + std::string(CSFKIT_CLI_PATH) + " " + args;
  if (!keep_stderr) cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    if (end > start) lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("csf subcommand") {
  run_result r = run("csf --graph6 Cs");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["type"] == "csf_result");
  CHECK(doc["n"] == 4);
  CHECK(doc["e_positive"] == false);
  CHECK(doc["graph6"] == "Cs");
  CHECK_FALSE(doc.contains("oracles"));

  r = run("csf --graph6 Cs --check-oracles --basis p");
  CHECK(r.exit_code == 0);
  doc = json::parse(r.out);
  CHECK(doc["oracles"]["chromatic_polynomial"] == true);
  CHECK(doc["oracles"]["power_sum"] == true);
  CHECK(doc.contains("p_expansion"));

  r = run("csf --graph6 Bw --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 1) != "{");
  CHECK(r.out.find("e(") != std::string::npos);
}

TEST_CASE("csf input variants") {
  run_result r = run("csf --edge-list '4; 0 1; 0 2; 0 3'");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["n"] == 4);

  // File input with comments and blank lines.
  fs::path dir = fs::path("cli_test_scratch");
  fs::create_directories(dir);
  {
    std::ofstream file(dir / "graphs.g6");
    file << "# census sample\n\nCs\nDhO\n";
  }
  r = run("csf --input " + (dir / "graphs.g6").string());
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out).size() == 2);

  // The same file through stdin, one report line per graph.
  r = run("csf --input - < " + (dir / "graphs.g6").string());
  CHECK(r.exit_code == 0);
  auto reports = lines_of(r.out);
  REQUIRE(reports.size() == 2);
  CHECK(json::parse(reports[0])["graph6"] == "Cs");
  CHECK(json::parse(reports[1])["graph6"] == "DhO");

  CHECK(run("csf --graph6 'C!'").exit_code == 2);           // malformed graph6
  CHECK(run("csf").exit_code == 2);                         // no input source
  CHECK(run("csf --graph6 Cs --edge-list '2; 0 1'").exit_code == 2);
  CHECK(run("csf --input missing_file.g6").exit_code == 2);
  CHECK(run("csf --graph6 Cs --basis q").exit_code == 2);
  CHECK(run("csf --input - </dev/null").exit_code == 2);    // empty input
}

TEST_CASE("classify subcommand") {
  run_result r = run("classify --graph6 EEhw");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["type"] == "class_report");
  CHECK(doc["main_case"] == "iii");
  CHECK(doc["classes"]["claw-free"] == true);
  CHECK(doc["classes"].size() == 20);
}

TEST_CASE("catalog subcommand") {
  run_result r = run("catalog --list");
  CHECK(r.exit_code == 0);
  auto entries = lines_of(r.out);
  CHECK(entries.size() == 14);
  for (const auto& line : entries) {
    json doc = json::parse(line);
    CHECK(doc["type"] == "catalog_entry");
  }

  r = run("catalog --name F2");
  CHECK(r.exit_code == 0);
  json f2 = json::parse(r.out);
  CHECK(f2["n"] == 7);
  CHECK(f2["edge_count"] == 11);

  r = run("catalog --k-chain 3,3");
  CHECK(r.exit_code == 0);
  json bowtie = json::parse(r.out);
  CHECK(bowtie["name"] == "k_chain(3,3)");
  CHECK(bowtie["n"] == 5);
  CHECK(bowtie["edge_count"] == 6);

  CHECK(json::parse(run("catalog --path 4").out)["edge_count"] == 3);
  CHECK(json::parse(run("catalog --cycle 5").out)["edge_count"] == 5);
  CHECK(json::parse(run("catalog --complete 4").out)["edge_count"] == 6);
  CHECK(json::parse(run("catalog --generalized-bull 1,1,1").out)["n"] == 5);
  CHECK(json::parse(run("catalog --generalized-pyramid 1,1,1").out)["n"] == 6);

  CHECK(run("catalog --name mystery_graph").exit_code == 2);
  CHECK(run("catalog").exit_code == 2);
  CHECK(run("catalog --k-chain 3,x").exit_code == 2);
  CHECK(run("catalog --generalized-bull 0,1,1").exit_code == 2);
  CHECK(run("catalog --cycle 2").exit_code == 2);
}

TEST_CASE("verify subcommand") {
  run_result r = run("verify --suite counts --n 5");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["type"] == "verify_report");
  CHECK(doc["suite"] == "counts");
  CHECK(doc["n"] == 5);
  CHECK(doc["non_e_positive_count"] == 4);
  CHECK(doc["total_connected"] == 21);
  CHECK(doc["counterexamples"] == json::array());

  r = run("verify --suite conjecture --mode claw-net-free-positive --n 6");
  CHECK(r.exit_code == 0);
  doc = json::parse(r.out);
  CHECK(doc["mode"] == "claw-net-free-positive");
  CHECK(doc["class_counts"]["claw-net-free"] == 49);
  CHECK(doc["class_counts"]["e-positive"] == 49);

  r = run("verify --suite structure --n 5");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["counterexamples"] == json::array());

  CHECK(run("verify --suite counts").exit_code == 2);          // --n required
  CHECK(run("verify --suite guesses --n 5").exit_code == 2);   // unknown suite
  CHECK(run("verify --suite counts --n 9").exit_code == 2);    // needs --extended
  CHECK(run("verify --suite counts --n 13 --extended").exit_code == 2);
  CHECK(run("verify --suite conjecture --mode weakly --n 5").exit_code == 2);
}

TEST_CASE("verify reports are byte-identical across job counts") {
  for (const char* base : {"verify --suite counts --n 6", "verify --suite structure --n 5"}) {
    run_result one = run(std::string(base) + " --jobs 1");
    run_result four = run(std::string(base) + " --jobs 4");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.out == four.out);
  }
}

TEST_CASE("epos subcommand and its exit codes") {
  // Triangle: e-positive, exit 0.
  run_result r = run("epos --graph6 Bw --strong --witness");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["type"] == "epos_result");
  CHECK(doc["e_positive"] == true);
  CHECK(doc["strongly_e_positive"] == true);
  CHECK(doc["witness"].is_null());

  // Net: not e-positive, exit 1, net witness.
  r = run("epos --edge-list '6; 0 1; 1 2; 2 3; 4 1; 4 2; 4 5' --strong --witness");
  CHECK(r.exit_code == 1);
  doc = json::parse(r.out);
  CHECK(doc["e_positive"] == false);
  CHECK(doc["strongly_e_positive"] == false);
  CHECK(doc["witness"]["pattern"] == "net");
  CHECK(doc["witness"]["vertices"].size() == 6);

  // Chair: e-positive but not strongly; strong query exits 1.
  r = run("epos --graph6 DhO");
  CHECK(r.exit_code == 0);
  r = run("epos --graph6 DhO --strong --witness");
  CHECK(r.exit_code == 1);
  doc = json::parse(r.out);
  CHECK(doc["e_positive"] == true);
  CHECK(doc["strongly_e_positive"] == false);
  CHECK(doc["min_failing_subgraph"].is_string());
  CHECK(doc["witness"]["pattern"] == "claw");

  CHECK(run("epos").exit_code == 2);
}

TEST_CASE("chromatic memo spills to EPOS_CACHE_DIR") {
  fs::path dir = fs::absolute("cli_test_cache");
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string env = "EPOS_CACHE_DIR=" + dir.string() + " ";

  run_result plain = run("csf --graph6 EEhw --check-oracles");
  // Same query with the cache enabled writes a spill file; a further run
  // reloads it and must produce the identical report.
  run_result writing = run("csf --graph6 EEhw --check-oracles", false, env);
  CHECK(writing.exit_code == plain.exit_code);
  CHECK(writing.out == plain.out);

  fs::path spill = dir / "chromatic_memo.tsv";
  REQUIRE(fs::exists(spill));
  std::ifstream file(spill);
  std::string line;
  REQUIRE(std::getline(file, line));
  CHECK(line.find('\t') != std::string::npos);

  run_result reading = run("csf --graph6 EEhw --check-oracles", false, env);
  CHECK(reading.exit_code == plain.exit_code);
  CHECK(reading.out == plain.out);
  fs::remove_all(dir);
}

TEST_CASE("usage errors print a synopsis on stderr") {
  run_result r = run("verify 2>&1", true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("--n") != std::string::npos);

  r = run("2>&1", true);  // no subcommand
  CHECK(r.exit_code == 2);

  r = run("--help 2>&1", true);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("csf") != std::string::npos);
}
