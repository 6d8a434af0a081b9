#include "privcoal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "privcoal/audit.hpp"
#include "privcoal/coalition.hpp"
#include "privcoal/io.hpp"
#include "privcoal/scheme.hpp"

namespace privcoal::cli {

using nlohmann::json;

namespace {

std::string format_set(std::vector<std::uint64_t> values, bool descending) {
  if (descending) std::reverse(values.begin(), values.end());
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  os << '}';
  return os.str();
}

void emit(const std::string& content, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << content;
  } else {
    write_file_atomically(output_path, content);
  }
}

std::optional<std::string> optional_path(const std::string& path) {
  return path.empty() ? std::nullopt : std::optional<std::string>(path);
}

Track resolve_identities(const std::vector<std::uint64_t>& ids, unsigned n, PrimeModulus modulus) {
  if (!ids.empty() && n != 0) throw ParameterError("give either --ids or --n, not both");
  if (!ids.empty()) return Track(ids, modulus);
  if (n == 0) throw ParameterError("participant identities required (--ids or --n)");
  std::vector<std::uint64_t> range(n);
  for (unsigned i = 0; i < n; ++i) range[i] = i + 1;
  return Track(range, modulus);
}

struct EnumerateArgs {
  unsigned t = 0, j = 0, r = 0, N = 0, workers = 1;
  std::uint64_t p = 0;
  bool minimal = false, shortest = false, paper_order = false;
  std::string format = "json", output;
};

int cmd_enumerate(const EnumerateArgs& a, bool r_given, std::ostream& out) {
  CoalitionReport report;
  if (r_given) {
    if (a.shortest) throw ParameterError("--shortest sweeps all lengths; drop --r");
    const CoalitionQuery q{.t = a.t, .j = a.j, .r = a.r, .p = a.p, .N = a.N};
    report = a.minimal ? minimal_privileged_coalitions(q, a.workers) : privileged_coalitions(q, a.workers);
  } else if (a.minimal && !a.shortest) {
    report = minimal_privileged_sweep(a.t, a.j, a.p, a.N, a.workers);
  } else {
    report = shortest_privileged_coalitions(a.t, a.j, a.p, a.N, a.workers);
    report.minimal_only = a.minimal;
  }

  RunManifest manifest{.command = "enumerate"};
  manifest.parameters = {{"t", a.t},          {"j", a.j},
                         {"r", r_given ? json(a.r) : json(nullptr)},
                         {"p", a.p},          {"N", a.N},
                         {"minimal", a.minimal}, {"shortest", a.shortest},
                         {"format", a.format}, {"paper_order", a.paper_order}};
  manifest.output = optional_path(a.output);

  std::ostringstream doc;
  if (a.format == "json") {
    doc << coalition_report_to_json(report, manifest).dump(2) << '\n';
  } else if (a.format == "csv") {
    std::size_t widest = 0;
    for (const auto& tr : report.coalitions) widest = std::max(widest, tr.size());
    doc << "r";
    for (std::size_t i = 1; i <= widest; ++i) doc << ",l" << i;
    doc << '\n';
    for (const auto& tr : report.coalitions) {
      auto values = tr.values();
      if (a.paper_order) std::reverse(values.begin(), values.end());
      doc << tr.size();
      for (auto v : values) doc << ',' << v;
      doc << '\n';
    }
  } else {
    doc << "(" << a.t << "," << a.j << ")-" << (report.minimal_only ? "minimal " : "")
        << "privileged coalitions over F_" << a.p << " with respect to N=" << a.N;
    if (!report.all_lengths) doc << ", length " << a.r;
    doc << ": " << report.count() << '\n';
    for (const auto& tr : report.coalitions) doc << format_set(tr.values(), a.paper_order) << '\n';
    if (report.all_lengths) {
      doc << "r_min: " << (report.r_min ? std::to_string(*report.r_min) : "none") << '\n';
      doc << "N_min: " << (report.N_min ? std::to_string(*report.N_min) : "none") << '\n';
    }
  }
  emit(doc.str(), a.output, out);
  return kOk;
}

struct TableArgs {
  unsigned t = 7, N = 13, workers = 1;
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> js;
  bool per_length = false;
  std::string format = "csv", output;
};

int cmd_table(TableArgs a, std::ostream& out) {
  for (std::uint64_t p : a.primes) {
    if (!is_prime(p)) throw ParameterError("p=" + std::to_string(p) + " is not prime");
  }
  if (a.js.empty()) {
    for (unsigned j = 1; j + 1 < a.t; ++j) a.js.push_back(j);
  }
  const auto rows = minimal_count_table(a.t, a.N, a.primes, a.js, a.workers);
  RunManifest manifest{.command = "table"};
  manifest.parameters = {{"t", a.t}, {"N", a.N}, {"p", a.primes}, {"j", a.js},
                         {"per_length", a.per_length}, {"format", a.format}};
  manifest.output = optional_path(a.output);
  if (a.format == "json") {
    emit(table_to_json(rows, a.t, a.N, manifest).dump(2) + "\n", a.output, out);
  } else {
    emit(table_to_csv(rows, a.t, a.per_length), a.output, out);
  }
  return kOk;
}

struct ConfigArgs {
  unsigned t = 0, n = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> ids;
};

SchemeConfig make_config(const ConfigArgs& c) {
  const PrimeModulus modulus(c.p);
  return SchemeConfig(c.t, resolve_identities(c.ids, c.n, modulus));
}

json config_parameters(const SchemeConfig& cfg) {
  return {{"t", cfg.t()}, {"p", cfg.modulus().value()}, {"ids", cfg.identities().values()}};
}

int cmd_access_structure(const ConfigArgs& c, const std::string& format, const std::string& output,
                         std::ostream& out) {
  const SchemeConfig cfg = make_config(c);
  const AccessStructure as = derive_access_structure(cfg);
  RunManifest manifest{.command = "access-structure", .parameters = config_parameters(cfg)};
  manifest.parameters["format"] = format;
  manifest.output = optional_path(output);
  std::ostringstream doc;
  if (format == "json") {
    doc << access_structure_to_json(as, manifest).dump(2) << '\n';
  } else {
    for (std::size_t j = 0; j < as.minimal_sets.size(); ++j) {
      doc << "Gamma_" << j << " min (" << as.minimal_sets[j].size() << " sets, "
          << as.unextended_count(static_cast<unsigned>(j)) << " unextended):\n";
      for (const auto& m : as.minimal_sets[j]) {
        doc << "  " << format_set(m.ids.values(), false) << "  " << to_string(m.kind) << '\n';
      }
    }
  }
  emit(doc.str(), output, out);
  return kOk;
}

struct DealArgs {
  ConfigArgs config;
  std::vector<std::uint64_t> secrets;
  std::optional<std::uint64_t> blinding;
  std::optional<std::uint64_t> seed;
  std::string domain = "full-field", output;
};

int cmd_deal(const DealArgs& a, std::ostream& out, std::ostream& err) {
  const SchemeConfig cfg = make_config(a.config);
  SecretVector sv = [&] {
    if (a.seed) {
      if (!a.secrets.empty() || a.blinding) throw ParameterError("--seed excludes --secrets/--blinding");
      return random_secret_vector(cfg, *a.seed, parse_domain(a.domain));
    }
    if (!a.blinding) throw ParameterError("explicit dealing needs --secrets and --blinding (or use --seed)");
    if (a.secrets.size() != cfg.secret_count()) {
      throw ParameterError("expected " + std::to_string(cfg.secret_count()) + " secrets (t-1), got " +
                           std::to_string(a.secrets.size()));
    }
    return make_secret_vector(a.secrets, *a.blinding, cfg.modulus());
  }();
  const ShareTable table = deal(cfg, sv);

  RunManifest manifest{.command = "deal", .parameters = config_parameters(cfg), .seed = a.seed};
  manifest.parameters["secret_source"] = a.seed ? "seed" : "explicit";
  manifest.parameters["domain"] = a.domain;
  manifest.output = optional_path(a.output);
  err << "warning: shares are written in the clear; this tool is not a secure distribution channel\n";
  emit(shares_to_json({cfg.t(), table, manifest}).dump(2) + "\n", a.output, out);
  return kOk;
}

int cmd_recover(const std::string& shares_path, const std::vector<std::uint64_t>& subset, unsigned j,
                bool explain, std::ostream& out) {
  std::ifstream in(shares_path);
  if (!in) throw ParameterError("cannot read shares file '" + shares_path + "'");
  json parsed;
  try {
    parsed = json::parse(in);
  } catch (const json::exception& e) {
    throw ParameterError("shares file is not valid JSON: " + std::string(e.what()));
  }
  const SharesDocument doc = shares_from_json(parsed);
  std::vector<std::uint64_t> ids;
  for (const auto& s : doc.table.shares()) ids.push_back(s.id);
  const SchemeConfig cfg(doc.t, Track(ids, doc.table.modulus()));
  if (subset.empty()) throw ParameterError("--subset must name at least one participant");
  const std::vector<Share> chosen = doc.table.select(subset);
  const Recovery rec = recover(chosen, j, cfg);
  out << rec.value.value() << '\n';
  if (explain) {
    if (rec.route == RecoveryRoute::kFullSolve) {
      out << "route: full solve of the t x t system on " << format_set(rec.used.values(), false) << '\n';
    } else {
      out << "route: privileged coalition " << format_set(rec.used.values(), false)
          << " extended by virtual points " << format_set(rec.extension->values(), false) << '\n';
    }
  }
  return kOk;
}

int cmd_audit(const ConfigArgs& c, const std::string& domain, const std::string& format,
              const std::string& output, std::ostream& out) {
  const SchemeConfig cfg = make_config(c);
  const AuditReport report = perfectness_report(cfg, parse_domain(domain));
  RunManifest manifest{.command = "audit", .parameters = config_parameters(cfg)};
  manifest.parameters["domain"] = domain;
  manifest.parameters["format"] = format;
  manifest.output = optional_path(output);
  std::ostringstream doc;
  if (format == "json") {
    doc << audit_report_to_json(report, manifest).dump(2) << '\n';
  } else {
    std::size_t determined = 0, uniform = 0;
    for (const auto& e : report.entries) {
      if (e.verdict == Verdict::kDetermined) ++determined;
      if (e.verdict == Verdict::kUniform) ++uniform;
    }
    doc << "t=" << report.t << " p=" << report.p << " domain=" << to_string(report.domain)
        << " polynomials=" << report.polynomial_count << '\n'
        << "entries: " << report.entries.size() << " (determined " << determined << ", uniform " << uniform
        << ", leaky " << report.leaky_entries << ")\n"
        << "correctness failures: " << report.correctness_failures << '\n'
        << "ideal: " << (ideality_check(cfg) ? "yes" : "no") << '\n'
        << "result: " << (report.passed ? "PASS" : "FAIL") << '\n';
  }
  emit(doc.str(), output, out);
  return report.passed ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Privileged coalitions and multi-secret sharing over prime fields", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List (t,j)-privileged coalitions over {1..N}");
  enumerate->add_option("--t", en.t, "Threshold")->required();
  enumerate->add_option("--j", en.j, "Coefficient index of the secret")->required();
  auto* r_opt = enumerate->add_option("--r", en.r, "Coalition length (omit to sweep all lengths)");
  enumerate->add_option("--p", en.p, "Field order (prime)")->required();
  enumerate->add_option("--N", en.N, "Identity bound")->required();
  enumerate->add_flag("--minimal", en.minimal, "Keep only minimal privileged coalitions");
  enumerate->add_flag("--shortest", en.shortest, "Report only the shortest length that has coalitions");
  enumerate->add_flag("--paper-order", en.paper_order, "Print coalition elements in descending order");
  enumerate->add_option("--format", en.format)->check(CLI::IsMember({"json", "csv", "text"}));
  enumerate->add_option("--workers", en.workers)->check(CLI::PositiveNumber);
  enumerate->add_option("--output,-o", en.output);

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Counts of minimal privileged coalitions per (p, j)");
  table->add_option("--t", tb.t, "Threshold")->capture_default_str();
  table->add_option("--N", tb.N, "Identity bound")->capture_default_str();
  table->add_option("--p", tb.primes, "Primes (comma separated)")->required()->delimiter(',');
  table->add_option("--j", tb.js, "Coefficient indices (default 1..t-2)")->delimiter(',');
  table->add_flag("--per-length", tb.per_length, "One row per coalition length");
  table->add_option("--format", tb.format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--workers", tb.workers)->check(CLI::PositiveNumber);
  table->add_option("--output,-o", tb.output);

  auto add_config = [](CLI::App* cmd, ConfigArgs& c) {
    cmd->add_option("--t", c.t, "Threshold")->required();
    cmd->add_option("--p", c.p, "Field order (prime)")->required();
    cmd->add_option("--ids", c.ids, "Participant identities (comma separated)")->delimiter(',');
    cmd->add_option("--n", c.n, "Use identities 1..n");
  };

  ConfigArgs as_cfg;
  std::string as_format = "json", as_output;
  auto* access = app.add_subcommand("access-structure", "Minimal authorized sets for every secret");
  add_config(access, as_cfg);
  access->add_option("--format", as_format)->check(CLI::IsMember({"json", "text"}));
  access->add_option("--output,-o", as_output);

  DealArgs dl;
  auto* dealc = app.add_subcommand("deal", "Deal shares of t-1 secrets");
  add_config(dealc, dl.config);
  dealc->add_option("--secrets", dl.secrets, "s_0..s_{t-2} (comma separated)")->delimiter(',');
  dealc->add_option("--blinding", dl.blinding, "Nonzero top coefficient a_{t-1}");
  dealc->add_option("--seed", dl.seed, "Draw secrets pseudo-randomly from this seed");
  dealc->add_option("--domain", dl.domain)->check(CLI::IsMember({"full-field", "paper-strict"}));
  dealc->add_option("--output,-o", dl.output);

  std::string rc_shares;
  std::vector<std::uint64_t> rc_subset;
  unsigned rc_j = 0;
  bool rc_explain = false;
  auto* recoverc = app.add_subcommand("recover", "Recover s_j from a subset of shares");
  recoverc->add_option("--shares", rc_shares, "Shares document")->required();
  recoverc->add_option("--subset", rc_subset, "Participant identities (comma separated)")
      ->required()
      ->delimiter(',');
  recoverc->add_option("--j", rc_j, "Secret index")->required();
  recoverc->add_flag("--explain", rc_explain, "Describe the reconstruction route");

  ConfigArgs au_cfg;
  std::string au_domain = "full-field", au_format = "json", au_output;
  auto* audit = app.add_subcommand("audit", "Exhaustive perfectness audit");
  add_config(audit, au_cfg);
  audit->add_option("--domain", au_domain)->check(CLI::IsMember({"full-field", "paper-strict"}));
  audit->add_option("--format", au_format)->check(CLI::IsMember({"json", "text"}));
  audit->add_option("--output,-o", au_output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParameterError;
  }

  try {
    if (*enumerate) return cmd_enumerate(en, r_opt->count() > 0, out);
    if (*table) return cmd_table(tb, out);
    if (*access) return cmd_access_structure(as_cfg, as_format, as_output, out);
    if (*dealc) return cmd_deal(dl, out, err);
    if (*recoverc) return cmd_recover(rc_shares, rc_subset, rc_j, rc_explain, out);
    if (*audit) return cmd_audit(au_cfg, au_domain, au_format, au_output, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const AuthorizationError& e) {
    err << "error: " << e.what() << '\n';
    return kAuthorizationError;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace privcoal::cli
