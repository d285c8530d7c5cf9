#pragma once

// JSON, CSV and human-readable renderings of verification records.
// Output is a pure function of the records: identical input, identical bytes.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "extraconn/verification.hpp"

namespace extraconn {

enum class Format { json, csv, human };

inline Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "human") return Format::human;
  throw InputError("unknown output format '" + std::string(text) + "' (json | csv | human)");
}

namespace detail {

using ordered_json = nlohmann::ordered_json;

template <typename T>
ordered_json optional_json(const std::optional<T>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

inline ordered_json set_json(const std::optional<VertexSet>& s) {
  return s ? ordered_json(s->members()) : ordered_json(nullptr);
}

template <typename T>
std::string optional_cell(const std::optional<T>& value) {
  if (!value) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *value ? "true" : "false";
  } else {
    return std::to_string(*value);
  }
}

inline std::string set_cell(const std::optional<VertexSet>& s) {
  if (!s) return "";
  std::string out;
  for (int v : s->members()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline nlohmann::ordered_json record_json(const VerificationRecord& r) {
  using detail::optional_json;
  using detail::set_json;
  nlohmann::ordered_json j;
  j["graph"] = r.graph;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["g"] = r.g;
  j["min_degree"] = r.min_degree;
  j["kappa_g"] = optional_json(r.kappa_g);
  j["hypothesis_holds"] = optional_json(r.hypothesis_holds);
  j["hypothesis_g_bound"] = optional_json(r.hypothesis_g_bound);
  j["hypothesis_half_order"] = optional_json(r.hypothesis_half_order);
  j["mu_kappa"] = optional_json(r.mu_kappa);
  j["expected"] = optional_json(r.expected);
  j["equality_holds"] = optional_json(r.equality_holds);
  j["upper_bound_holds"] = optional_json(r.upper_bound_holds);
  j["iff_consistent"] = optional_json(r.iff_consistent);
  j["witness"] = set_json(r.witness);
  j["mu_witness"] = set_json(r.mu_witness);
  j["upper_witness"] = set_json(r.upper_witness);
  j["status"] = status_name(r.status);
  j["note"] = r.note;
  return j;
}

inline nlohmann::ordered_json summary_json(const BatchSummary& s) {
  nlohmann::ordered_json j;
  j["records"] = s.records;
  j["verified"] = s.verified;
  j["hypothesis_failed"] = s.hypothesis_failed;
  j["not_applicable"] = s.not_applicable;
  j["skipped"] = s.skipped;
  j["violations"] = s.violations;
  return j;
}

inline constexpr std::string_view kCsvHeader =
    "graph,graph6,n,m,g,kappa_g,hypothesis_holds,mu_kappa,expected,equality_holds,upper_bound_holds,status,"
    "min_degree,hypothesis_g_bound,hypothesis_half_order,iff_consistent,witness,mu_witness,upper_witness,note";

inline std::string csv_row(const VerificationRecord& r) {
  using detail::optional_cell;
  using detail::set_cell;
  const std::vector<std::string> cells = {
      detail::csv_escape(r.graph),
      r.graph6,
      std::to_string(r.n),
      std::to_string(r.m),
      std::to_string(r.g),
      optional_cell(r.kappa_g),
      optional_cell(r.hypothesis_holds),
      optional_cell(r.mu_kappa),
      optional_cell(r.expected),
      optional_cell(r.equality_holds),
      optional_cell(r.upper_bound_holds),
      std::string(status_name(r.status)),
      std::to_string(r.min_degree),
      optional_cell(r.hypothesis_g_bound),
      optional_cell(r.hypothesis_half_order),
      optional_cell(r.iff_consistent),
      set_cell(r.witness),
      set_cell(r.mu_witness),
      set_cell(r.upper_witness),
      detail::csv_escape(r.note),
  };
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

inline std::string human_line(const VerificationRecord& r) {
  std::ostringstream out;
  out << (r.graph.empty() ? r.graph6 : r.graph) << " n=" << r.n << " m=" << r.m << " g=" << r.g << ": ";
  if (!r.kappa_g) {
    out << status_name(r.status);
    if (!r.note.empty()) out << " (" << r.note << ")";
    return out.str();
  }
  const int lifted = r.g == 0 ? 0 : 2 * r.g + 1;
  out << "kappa_" << r.g << "(G)=" << *r.kappa_g << " kappa_" << lifted << "(mu(G))=";
  out << (r.mu_kappa ? std::to_string(*r.mu_kappa) : std::string("-"));
  out << " expected=" << *r.expected;
  out << " hypothesis=" << (*r.hypothesis_holds ? "yes" : "no");
  out << " -> " << status_name(r.status);
  if (!r.note.empty()) out << " (" << r.note << ")";
  return out.str();
}

/// Renders a full report. JSON is {"records":[...],"summary":{...}}; CSV is a
/// header row plus one row per record; human is one line per record plus a
/// summary line.
inline std::string emit_report(const std::vector<VerificationRecord>& records, const BatchSummary& summary,
                               Format format) {
  std::string out;
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["records"] = nlohmann::ordered_json::array();
      for (const auto& r : records) j["records"].push_back(record_json(r));
      j["summary"] = summary_json(summary);
      out = j.dump() + "\n";
      break;
    }
    case Format::csv:
      out = std::string(kCsvHeader) + "\n";
      for (const auto& r : records) out += csv_row(r) + "\n";
      break;
    case Format::human:
      for (const auto& r : records) out += human_line(r) + "\n";
      out += "summary: records=" + std::to_string(summary.records) + " verified=" + std::to_string(summary.verified) +
             " hypothesis_failed=" + std::to_string(summary.hypothesis_failed) +
             " not_applicable=" + std::to_string(summary.not_applicable) +
             " skipped=" + std::to_string(summary.skipped) + " violations=" + std::to_string(summary.violations) +
             "\n";
      break;
  }
  return out;
}

}  // namespace extraconn
