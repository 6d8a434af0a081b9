#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "privcoal/audit.hpp"
#include "privcoal/coalition.hpp"
#include "privcoal/scheme.hpp"

namespace privcoal {

inline constexpr const char* kToolName = "privcoal";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kDocumentVersion = 1;

// Embedded in every output document so a run can be repeated from the
// document alone.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> inputs;
  std::optional<std::string> output;
  std::string version = kToolVersion;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

nlohmann::json manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

struct SharesDocument {
  unsigned t = 0;
  ShareTable table;
  RunManifest manifest;
};

nlohmann::json shares_to_json(const SharesDocument& doc);
// Throws ParameterError on any schema violation.
SharesDocument shares_from_json(const nlohmann::json& j);

nlohmann::json coalition_report_to_json(const CoalitionReport& report, const RunManifest& manifest);
CoalitionReport coalition_report_from_json(const nlohmann::json& j);

nlohmann::json access_structure_to_json(const AccessStructure& as, const RunManifest& manifest);
nlohmann::json audit_report_to_json(const AuditReport& report, const RunManifest& manifest);

// One cell of the minimal-coalition count grid.
struct TableCell {
  unsigned j = 0;
  std::size_t count = 0;
  std::map<unsigned, std::size_t> per_length;
  std::optional<unsigned> r_min;
  std::optional<std::size_t> N_min;
};

struct TableRow {
  std::uint64_t p = 0;
  std::vector<TableCell> cells;
};

// Minimal privileged coalition counts over {1..N}, aggregated over every
// valid length, for each prime and index.
std::vector<TableRow> minimal_count_table(unsigned t, unsigned N, const std::vector<std::uint64_t>& primes,
                                          const std::vector<unsigned>& js, unsigned workers = 1);

// "p,j=1,...,j=k" header, one row per prime. With per_length, one row per
// (p, r) with an extra r column.
std::string table_to_csv(const std::vector<TableRow>& rows, unsigned t, bool per_length);
nlohmann::json table_to_json(const std::vector<TableRow>& rows, unsigned t, unsigned N,
                             const RunManifest& manifest);

// Writes via a temporary sibling file and rename.
void write_file_atomically(const std::string& path, const std::string& content);

}  // namespace privcoal
