#pragma once

#include "csfkit/csf.hpp"
#include "csfkit/enumerate.hpp"
#include "csfkit/recognition.hpp"

#include <optional>
#include <string>

namespace csfkit::report_json {

/// Serialized report documents.  Every function returns one compact JSON
/// object on a single line, with keys in lexicographic order, so identical
/// reports are byte-identical strings.  Each document carries a "type"
/// discriminator matching the shipped schema (schemas/csfkit.schema.json):
/// csf_result, class_report, verify_report, epos_result, catalog_entry.
/// Coefficients are serialized as decimal strings ("-2", "7", "1/3"), since
/// exact integers routinely exceed double precision.

std::string symexpr_json(const SymExpr& expr);

std::string csf_result_json(const csf::CsfResult& result);

std::string class_report_json(const std::string& graph6, int n,
                              const recognition::ClassReport& report);

std::string verify_report_json(const enumerate::VerifyReport& report);

/// e-positivity query result for one graph; strong/witness parts appear
/// only when they were computed.
struct EposResult {
  std::string graph6;
  int n = 0;
  csf::EPositivityReport positivity;
  std::optional<csf::StrongEPositivityReport> strong;
  std::optional<csf::ForbiddenWitness> witness;
  bool witness_checked = false;  // distinguishes "no witness" from "not asked"
};
std::string epos_result_json(const EposResult& result);

std::string catalog_entry_json(const std::string& name, const Graph& g);

/// Human-readable renderings of the same reports, for --format text.
std::string csf_result_text(const csf::CsfResult& result);
std::string class_report_text(const std::string& graph6, int n,
                              const recognition::ClassReport& report);
std::string verify_report_text(const enumerate::VerifyReport& report);
std::string epos_result_text(const EposResult& result);
std::string catalog_entry_text(const std::string& name, const Graph& g);

}  // namespace csfkit::report_json
