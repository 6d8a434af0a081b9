#include "privcoal/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <filesystem>

namespace privcoal {

using nlohmann::json;

namespace {

json optional_json(const auto& opt) { return opt ? json(*opt) : json(nullptr); }

json track_list(const std::vector<Track>& tracks) {
  json out = json::array();
  for (const auto& tr : tracks) out.push_back(tr.values());
  return out;
}

template <typename T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParameterError(std::string("document is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParameterError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

}  // namespace

json manifest_to_json(const RunManifest& m) {
  return json{{"tool", kToolName},
              {"version", m.version},
              {"command", m.command},
              {"parameters", m.parameters},
              {"seed", optional_json(m.seed)},
              {"inputs", m.inputs},
              {"output", optional_json(m.output)}};
}

RunManifest manifest_from_json(const json& j) {
  RunManifest m;
  m.command = require<std::string>(j, "command");
  m.version = require<std::string>(j, "version");
  m.parameters = j.value("parameters", json::object());
  if (j.contains("seed") && !j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("inputs")) m.inputs = j.at("inputs").get<std::vector<std::string>>();
  if (j.contains("output") && !j.at("output").is_null()) m.output = j.at("output").get<std::string>();
  return m;
}

json shares_to_json(const SharesDocument& doc) {
  json participants = json::array();
  for (const auto& s : doc.table.shares()) participants.push_back({{"id", s.id}, {"share", s.value.value()}});
  return json{{"version", kDocumentVersion},
              {"p", doc.table.modulus().value()},
              {"t", doc.t},
              {"participants", participants},
              {"manifest", manifest_to_json(doc.manifest)}};
}

SharesDocument shares_from_json(const json& j) {
  if (require<int>(j, "version") != kDocumentVersion) throw ParameterError("unsupported shares document version");
  const PrimeModulus modulus(require<std::uint64_t>(j, "p"));
  const auto t = require<unsigned>(j, "t");
  const json participants = require<json>(j, "participants");
  if (!participants.is_array()) throw ParameterError("'participants' must be an array");
  std::vector<Share> shares;
  for (const auto& entry : participants) {
    const auto id = require<std::uint64_t>(entry, "id");
    const auto share = require<std::uint64_t>(entry, "share");
    if (share >= modulus.value()) {
      throw ParameterError("share " + std::to_string(share) + " is not a residue mod " +
                           std::to_string(modulus.value()));
    }
    shares.push_back({id, FieldElement(share, modulus)});
  }
  ShareTable table(modulus, std::move(shares));
  // Validates t against the participant set.
  std::vector<std::uint64_t> ids;
  for (const auto& s : table.shares()) ids.push_back(s.id);
  SchemeConfig(t, Track(ids, modulus));
  RunManifest manifest = j.contains("manifest") ? manifest_from_json(j.at("manifest")) : RunManifest{};
  return {t, std::move(table), std::move(manifest)};
}

json coalition_report_to_json(const CoalitionReport& report, const RunManifest& manifest) {
  const auto& q = report.query;
  return json{{"version", kDocumentVersion},
              {"query",
               {{"t", q.t},
                {"j", q.j},
                {"r", report.all_lengths ? json(nullptr) : json(q.r)},
                {"p", q.p},
                {"N", q.N}}},
              {"minimal", report.minimal_only},
              {"count", report.count()},
              {"coalitions", track_list(report.coalitions)},
              {"r_min", optional_json(report.r_min)},
              {"N_min", optional_json(report.N_min)},
              {"manifest", manifest_to_json(manifest)}};
}

CoalitionReport coalition_report_from_json(const json& j) {
  if (require<int>(j, "version") != kDocumentVersion) throw ParameterError("unsupported report version");
  const json q = require<json>(j, "query");
  CoalitionReport report;
  report.query.t = require<unsigned>(q, "t");
  report.query.j = require<unsigned>(q, "j");
  report.query.p = require<std::uint64_t>(q, "p");
  report.query.N = require<unsigned>(q, "N");
  if (q.contains("r") && !q.at("r").is_null()) {
    report.query.r = q.at("r").get<unsigned>();
  } else {
    report.all_lengths = true;
  }
  report.minimal_only = require<bool>(j, "minimal");
  const PrimeModulus modulus(report.query.p);
  for (const auto& tr : require<json>(j, "coalitions")) {
    report.coalitions.emplace_back(tr.get<std::vector<std::uint64_t>>(), modulus, LabelRange::kUpToFieldOrder);
  }
  if (require<std::size_t>(j, "count") != report.coalitions.size()) {
    throw ParameterError("report count does not match its coalition list");
  }
  if (!j.at("r_min").is_null()) report.r_min = j.at("r_min").get<unsigned>();
  if (!j.at("N_min").is_null()) report.N_min = j.at("N_min").get<std::size_t>();
  return report;
}

json access_structure_to_json(const AccessStructure& as, const RunManifest& manifest) {
  json families = json::array();
  for (std::size_t j = 0; j < as.minimal_sets.size(); ++j) {
    json members = json::array();
    for (const auto& m : as.minimal_sets[j]) {
      members.push_back({{"ids", m.ids.values()}, {"kind", to_string(m.kind)}});
    }
    families.push_back({{"j", j},
                        {"count", as.minimal_sets[j].size()},
                        {"unextended", as.unextended_count(static_cast<unsigned>(j))},
                        {"minimal_sets", members}});
  }
  return json{{"version", kDocumentVersion}, {"t", as.t}, {"structures", families},
              {"manifest", manifest_to_json(manifest)}};
}

json audit_report_to_json(const AuditReport& report, const RunManifest& manifest) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json entry{{"subset", e.subset},
               {"j", e.j},
               {"known", e.known},
               {"authorized", e.authorized},
               {"verdict", to_string(e.verdict)},
               {"observations", e.observations}};
    if (!e.witness.empty()) entry["histogram"] = e.witness;
    entries.push_back(std::move(entry));
  }
  return json{{"version", kDocumentVersion},
              {"t", report.t},
              {"p", report.p},
              {"identities", report.identities},
              {"domain", to_string(report.domain)},
              {"polynomials", report.polynomial_count},
              {"correctness_failures", report.correctness_failures},
              {"leaky_entries", report.leaky_entries},
              {"pass", report.passed},
              {"entries", entries},
              {"manifest", manifest_to_json(manifest)}};
}

std::vector<TableRow> minimal_count_table(unsigned t, unsigned N, const std::vector<std::uint64_t>& primes,
                                          const std::vector<unsigned>& js, unsigned workers) {
  std::vector<TableRow> rows;
  for (std::uint64_t p : primes) {
    TableRow row{.p = p, .cells = {}};
    for (unsigned j : js) {
      const CoalitionReport sweep = minimal_privileged_sweep(t, j, p, N, workers);
      row.cells.push_back({.j = j,
                           .count = sweep.count(),
                           .per_length = count_by_length(sweep),
                           .r_min = sweep.r_min,
                           .N_min = sweep.N_min});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows, unsigned t, bool per_length) {
  std::ostringstream os;
  if (rows.empty()) return "p\n";
  os << (per_length ? "p,r" : "p");
  for (const auto& cell : rows.front().cells) os << ",j=" << cell.j;
  os << '\n';
  for (const auto& row : rows) {
    if (!per_length) {
      os << row.p;
      for (const auto& cell : row.cells) os << ',' << cell.count;
      os << '\n';
      continue;
    }
    for (unsigned r = 1; r < t; ++r) {
      os << row.p << ',' << r;
      for (const auto& cell : row.cells) {
        auto it = cell.per_length.find(r);
        os << ',' << (it == cell.per_length.end() ? 0 : it->second);
      }
      os << '\n';
    }
  }
  return os.str();
}

json table_to_json(const std::vector<TableRow>& rows, unsigned t, unsigned N, const RunManifest& manifest) {
  json out_rows = json::array();
  for (const auto& row : rows) {
    json cells = json::array();
    for (const auto& cell : row.cells) {
      json per_length = json::object();
      for (const auto& [r, c] : cell.per_length) per_length[std::to_string(r)] = c;
      cells.push_back({{"j", cell.j},
                       {"count", cell.count},
                       {"per_length", per_length},
                       {"r_min", optional_json(cell.r_min)},
                       {"N_min", optional_json(cell.N_min)}});
    }
    out_rows.push_back({{"p", row.p}, {"cells", cells}});
  }
  return json{{"version", kDocumentVersion}, {"t", t}, {"N", N}, {"rows", out_rows},
              {"manifest", manifest_to_json(manifest)}};
}

void write_file_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParameterError("cannot open '" + tmp + "' for writing");
    out << content;
    out.flush();
    if (!out) throw ParameterError("failed writing '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ParameterError("cannot move output into '" + path + "': " + ec.message());
  }
}

}  // namespace privcoal
