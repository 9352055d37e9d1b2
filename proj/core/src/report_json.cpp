#include "csfkit/report_json.hpp"

#include <json.hpp>

#include <sstream>

namespace csfkit::report_json {

namespace {

using nlohmann::json;

// nlohmann's default object keeps keys sorted, which is exactly the
// deterministic layout the reports promise.

std::string rational_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

json partition_json(const Partition& p) {
  json arr = json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

json terms_json(const std::vector<std::pair<Partition, Rational>>& terms) {
  json arr = json::array();
  for (const auto& [lambda, c] : terms) {
    arr.push_back(json{{"partition", partition_json(lambda)},
                       {"coeff", rational_string(c)}});
  }
  return arr;
}

json symexpr_object(const SymExpr& expr) {
  json terms = json::array();
  for (const auto& [lambda, c] : expr.terms()) {
    terms.push_back(json{{"partition", partition_json(lambda)},
                         {"coeff", rational_string(c)}});
  }
  return json{{"basis", basis_name(expr.basis())},
              {"degree", expr.degree()},
              {"terms", terms}};
}

json vertex_set_json(const VertexSet& s) {
  json arr = json::array();
  for (int v : s.to_vector()) arr.push_back(v);
  return arr;
}

}  // namespace

std::string symexpr_json(const SymExpr& expr) { return symexpr_object(expr).dump(); }

std::string csf_result_json(const csf::CsfResult& result) {
  json doc{{"type", "csf_result"},
           {"graph6", result.graph6},
           {"n", result.n},
           {"basis", basis_name(result.basis)},
           {"m_expansion", symexpr_object(result.m_expansion)},
           {"e_expansion", symexpr_object(result.e_expansion)},
           {"e_positive", result.e_positive},
           {"negative_terms", terms_json(result.negative_terms)}};
  if (result.p_expansion) doc["p_expansion"] = symexpr_object(*result.p_expansion);
  if (result.chromatic_oracle_ok || result.power_sum_oracle_ok) {
    json oracles = json::object();
    if (result.chromatic_oracle_ok)
      oracles["chromatic_polynomial"] = *result.chromatic_oracle_ok;
    if (result.power_sum_oracle_ok)
      oracles["power_sum"] = *result.power_sum_oracle_ok;
    doc["oracles"] = oracles;
  }
  return doc.dump();
}

std::string class_report_json(const std::string& graph6, int n,
                              const recognition::ClassReport& report) {
  json classes{{"claw-free", report.claw_free},
               {"co-claw-free", report.co_claw_free},
               {"net-free", report.net_free},
               {"diamond-free", report.diamond_free},
               {"co-diamond-free", report.co_diamond_free},
               {"2K2-free", report.two_k2_free},
               {"P3-free", report.p3_free},
               {"P4-free", report.p4_free},
               {"paw-free", report.paw_free},
               {"co-paw-free", report.co_paw_free},
               {"co-P3-free", report.co_p3_free},
               {"triangle-free", report.triangle_free},
               {"co-triangle-free", report.co_triangle_free},
               {"chordal", report.chordal},
               {"AT-free", report.at_free},
               {"interval", report.interval},
               {"unit-interval", report.unit_interval},
               {"K-chain", report.k_chain}};
  classes["comparability"] =
      report.comparability ? json(*report.comparability) : json(nullptr);
  classes["co-comparability"] =
      report.co_comparability ? json(*report.co_comparability) : json(nullptr);
  json doc{{"type", "class_report"},
           {"graph6", graph6},
           {"n", n},
           {"classes", classes},
           {"main_case", recognition::main_case_name(report.main_case)}};
  return doc.dump();
}

std::string verify_report_json(const enumerate::VerifyReport& report) {
  json counts = json::object();
  for (const auto& [key, value] : report.class_counts) counts[key] = value;
  json doc{{"type", "verify_report"},
           {"suite", report.suite},
           {"n", report.n},
           {"total_connected", report.total_connected},
           {"class_counts", counts},
           {"non_e_positive_count", report.non_e_positive_count},
           {"non_e_positive", report.non_e_positive},
           {"counterexamples", report.counterexamples}};
  if (!report.mode.empty()) doc["mode"] = report.mode;
  return doc.dump();
}

std::string epos_result_json(const EposResult& result) {
  json doc{{"type", "epos_result"},
           {"graph6", result.graph6},
           {"n", result.n},
           {"e_positive", result.positivity.e_positive},
           {"negative_terms", terms_json(result.positivity.negative_terms)}};
  if (result.strong) {
    doc["strongly_e_positive"] = result.strong->strongly_e_positive;
    if (result.strong->min_failing_subgraph) {
      doc["min_failing_subgraph"] = g6_encode(*result.strong->min_failing_subgraph);
    }
  }
  if (result.witness_checked) {
    if (result.witness) {
      doc["witness"] = json{{"pattern", result.witness->pattern},
                            {"vertices", vertex_set_json(result.witness->vertices)}};
    } else {
      doc["witness"] = json(nullptr);
    }
  }
  return doc.dump();
}

std::string catalog_entry_json(const std::string& name, const Graph& g) {
  json doc{{"type", "catalog_entry"},
           {"name", name},
           {"n", g.vertex_count()},
           {"edge_count", g.edge_count()},
           {"graph6", g6_encode(g)},
           {"edge_list", edge_list_encode(g)}};
  return doc.dump();
}

// ---------------------------------------------------------------------------
// text renderings

std::string csf_result_text(const csf::CsfResult& result) {
  std::ostringstream out;
  out << result.graph6 << "  n=" << result.n << '\n';
  switch (result.basis) {
    case Basis::m: out << "  X = " << result.m_expansion.to_string() << '\n'; break;
    case Basis::e: out << "  X = " << result.e_expansion.to_string() << '\n'; break;
    case Basis::p:
      out << "  X = " << result.p_expansion->to_string() << '\n';
      break;
  }
  out << "  e-positive: " << (result.e_positive ? "yes" : "no") << '\n';
  for (const auto& [lambda, c] : result.negative_terms) {
    out << "    negative term: " << c << "*e" << lambda.to_string() << '\n';
  }
  if (result.chromatic_oracle_ok) {
    out << "  chromatic oracle: " << (*result.chromatic_oracle_ok ? "ok" : "MISMATCH")
        << '\n';
  }
  if (result.power_sum_oracle_ok) {
    out << "  power-sum oracle: " << (*result.power_sum_oracle_ok ? "ok" : "MISMATCH")
        << '\n';
  }
  return out.str();
}

std::string class_report_text(const std::string& graph6, int n,
                              const recognition::ClassReport& report) {
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << graph6 << "  n=" << n << '\n'
      << "  claw-free: " << mark(report.claw_free)
      << "  co-claw-free: " << mark(report.co_claw_free)
      << "  net-free: " << mark(report.net_free) << '\n'
      << "  diamond-free: " << mark(report.diamond_free)
      << "  co-diamond-free: " << mark(report.co_diamond_free)
      << "  2K2-free: " << mark(report.two_k2_free) << '\n'
      << "  P3-free: " << mark(report.p3_free) << "  P4-free: " << mark(report.p4_free)
      << "  paw-free: " << mark(report.paw_free)
      << "  co-paw-free: " << mark(report.co_paw_free)
      << "  co-P3-free: " << mark(report.co_p3_free) << '\n'
      << "  triangle-free: " << mark(report.triangle_free)
      << "  co-triangle-free: " << mark(report.co_triangle_free) << '\n'
      << "  chordal: " << mark(report.chordal) << "  AT-free: " << mark(report.at_free)
      << "  interval: " << mark(report.interval)
      << "  unit-interval: " << mark(report.unit_interval) << '\n'
      << "  comparability: "
      << (report.comparability ? mark(*report.comparability) : "n/a (size cap)")
      << "  co-comparability: "
      << (report.co_comparability ? mark(*report.co_comparability) : "n/a (size cap)")
      << '\n'
      << "  K-chain: " << mark(report.k_chain) << '\n'
      << "  case: " << recognition::main_case_name(report.main_case) << '\n';
  return out.str();
}

std::string verify_report_text(const enumerate::VerifyReport& report) {
  std::ostringstream out;
  out << "suite: " << report.suite;
  if (!report.mode.empty()) out << " (" << report.mode << ")";
  out << "  n=" << report.n << '\n'
      << "  connected graphs scanned: " << report.total_connected << '\n';
  for (const auto& [key, value] : report.class_counts) {
    out << "  " << key << ": " << value << '\n';
  }
  if (report.suite == "counts" || report.non_e_positive_count > 0) {
    out << "  non-e-positive: " << report.non_e_positive_count << '\n';
  }
  for (const auto& g6 : report.non_e_positive) out << "    " << g6 << '\n';
  out << "  counterexamples: " << report.counterexamples.size() << '\n';
  for (const auto& g6 : report.counterexamples) out << "    " << g6 << '\n';
  return out.str();
}

std::string epos_result_text(const EposResult& result) {
  std::ostringstream out;
  out << result.graph6 << "  n=" << result.n << '\n'
      << "  e-positive: " << (result.positivity.e_positive ? "yes" : "no") << '\n';
  for (const auto& [lambda, c] : result.positivity.negative_terms) {
    out << "    negative term: " << c << "*e" << lambda.to_string() << '\n';
  }
  if (result.strong) {
    out << "  strongly e-positive: "
        << (result.strong->strongly_e_positive ? "yes" : "no") << '\n';
    if (result.strong->min_failing_subgraph) {
      out << "    smallest failing induced subgraph: "
          << g6_encode(*result.strong->min_failing_subgraph) << '\n';
    }
  }
  if (result.witness_checked) {
    if (result.witness) {
      out << "  forbidden pattern: " << result.witness->pattern << " on vertices";
      for (int v : result.witness->vertices.to_vector()) out << ' ' << v;
      out << '\n';
    } else {
      out << "  forbidden pattern: none (claw-free and net-free)\n";
    }
  }
  return out.str();
}

std::string catalog_entry_text(const std::string& name, const Graph& g) {
  std::ostringstream out;
  out << name << ": n=" << g.vertex_count() << " edges=" << g.edge_count() << '\n'
      << "  graph6: " << g6_encode(g) << '\n'
      << "  edge list: " << edge_list_encode(g) << '\n';
  return out.str();
}

}  // namespace csfkit::report_json
