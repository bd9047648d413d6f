#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hqx/binomial.hpp"
#include "hqx/errors.hpp"
#include "hqx/isoperimetry.hpp"
#include "hqx/oracle.hpp"
#include "hqx/reliability.hpp"

namespace hqx::cli {

using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kMaxRows = 1'000'000;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Nonzero verification outcome that is still a normal report.
struct Outcome {
  OutputRecord record;
  int status = kSuccess;
};

std::string cell(const ordered_json& v) {
  if (v.is_null()) return "n/a";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) joined += ';';
      joined += cell(v[i]);
    }
    return joined;
  }
  return v.dump();
}

std::string csv_quote(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string binary_label(Vertex v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((v >> i) & 1U) s[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return s;
}

template <typename T = long long>
T parse_integer(const std::string& text) {
  T value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw usage_error("not an integer: '" + text + "'");
  return value;
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HQX_BUDGET"); env != nullptr && *env != '\0') {
    const long long v = parse_integer(env);
    if (v <= 0) throw usage_error("HQX_BUDGET must be positive");
    return static_cast<std::uint64_t>(v);
  }
  return oracle::kDefaultBudget;
}

void require_dim(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi) {
    throw usage_error(what + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi) + ", got " +
                      std::to_string(n));
  }
}

Range checked_range(const std::string& text, std::uint64_t lo, std::uint64_t hi, const std::string& name) {
  const Range r = parse_range(text);
  if (r.lo < lo || r.hi > hi) {
    throw usage_error(name + " range " + text + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (r.hi - r.lo >= kMaxRows) throw usage_error(name + " range too large");
  return r;
}

// Values of a checked range; never wraps at 2^64 - 1.
std::vector<std::uint64_t> values_of(const Range& r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i <= r.hi - r.lo; ++i) out.push_back(r.lo + i);
  return out;
}

// ---- commands ------------------------------------------------------------

struct CommonArgs {
  std::string format = "csv";
  int threads = 0;
};

Outcome cmd_boundary(int n, const std::string& m_text) {
  require_dim(n, 1, 64, "boundary");
  const Range range = checked_range(m_text, 1, max_proper_order(n), "m");

  Outcome o;
  o.record.command = "boundary";
  o.record.params = {{"n", n}, {"m", m_text}};
  std::uint64_t applicable = 0;
  std::uint64_t mismatches = 0;
  for (const std::uint64_t mm : values_of(range)) {
    const std::uint64_t cascade = min_boundary(n, mm);
    ordered_json row = {{"m", mm}, {"cascade", cascade}, {"closed_form", nullptr}, {"agreement", "n/a"}};
    if (closed_form_row(n, mm)) {
      const std::uint64_t closed = boundary_closed_form(n, mm).value;
      ++applicable;
      row["closed_form"] = closed;
      row["agreement"] = closed == cascade ? "ok" : "mismatch";
      if (closed != cascade) ++mismatches;
    }
    o.record.rows.push_back(std::move(row));
  }
  o.record.summary = {{"rows", o.record.rows.size()}, {"closed_form_rows", applicable}, {"mismatches", mismatches}};
  o.status = mismatches == 0 ? kSuccess : kVerificationFailed;
  return o;
}

Outcome cmd_extraconn(int n) {
  require_dim(n, 5, 64, "extraconn");
  const ExtraConnTable table = extra_conn_table(n);
  Outcome o;
  o.record.command = "extraconn";
  o.record.params = {{"n", n}};
  std::size_t next = 0;
  for (int hm1 = 0; hm1 <= 3 * n - 7; ++hm1) {
    if (next < table.entries.size() && table.entries[next].h_minus_1 == hm1) {
      const ExtraConnEntry& e = table.entries[next++];
      const std::string guard = "h=" + std::to_string(e.guard.h_lo) + ".." + std::to_string(e.guard.h_hi) +
                                ";n>=" + std::to_string(e.guard.n_min);
      o.record.rows.push_back(
          {{"h_minus_1", hm1}, {"h", hm1 + 1}, {"value", e.value}, {"row", to_string(e.row)}, {"guard", guard}});
    } else {
      o.record.rows.push_back(
          {{"h_minus_1", hm1}, {"h", hm1 + 1}, {"value", nullptr}, {"row", "gap"}, {"guard", nullptr}});
    }
  }
  o.record.summary = {{"entries", table.entries.size()}, {"gaps", table.gaps}};
  return o;
}

Outcome cmd_witness(int n, long long m, const std::string& emit) {
  require_dim(n, 1, CubeDim::kMax, "witness");
  if (m < 1 || m > 3LL * n - 2) throw usage_error("witness order must lie in [1, 3n-2]");
  if (emit != "labels" && emit != "summary") throw usage_error("--emit must be labels or summary");
  const WitnessSet w = witness_set(n, static_cast<std::uint64_t>(m));
  const std::uint64_t boundary = vertex_boundary(w.vertices).size();
  const std::uint64_t target = min_boundary(n, static_cast<std::uint64_t>(m));

  Outcome o;
  o.record.command = "witness";
  o.record.params = {{"n", n}, {"m", m}, {"emit", emit}};
  ordered_json row = {{"family", to_string(w.family)}, {"m", m}, {"boundary", boundary}, {"target", target},
                      {"match", boundary == target}};
  if (emit == "labels") {
    ordered_json labels = ordered_json::array();
    for (Vertex v : w.vertices.members()) labels.push_back(binary_label(v, n));
    row["vertices"] = std::move(labels);
  }
  o.record.rows.push_back(std::move(row));
  o.record.summary = {{"match", boundary == target}};
  o.status = boundary == target ? kSuccess : kVerificationFailed;
  return o;
}

struct VerifyArgs {
  std::string kind;
  int n = 0;
  std::string m;
  std::string h;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string sampler = "both";
  int n_min = 5;
  int n_max = 40;
  std::optional<std::uint64_t> budget;
};

Outcome verify_boundary_oracle(const VerifyArgs& a, const oracle::Options& opts) {
  require_dim(a.n, 1, oracle::kMaxEnumerationDim, "verify boundary-oracle");
  const CubeDim dim(a.n);
  const std::string m_text = a.m.empty() ? "1.." + std::to_string(max_proper_order(a.n)) : a.m;
  const Range range = checked_range(m_text, 1, max_proper_order(a.n), "m");

  Outcome o;
  o.record.command = "verify";
  o.record.params = {{"kind", a.kind}, {"n", a.n}, {"m", m_text}, {"budget", opts.budget}};
  std::uint64_t matches = 0;
  std::uint64_t explored = 0;
  for (const std::uint64_t mm : values_of(range)) {
    const oracle::OracleResult r = oracle::min_boundary_bruteforce(dim, mm, opts);
    const std::uint64_t cascade = min_boundary(a.n, mm);
    explored += r.explored;
    if (r.value == cascade) ++matches;
    ordered_json witness = ordered_json::array();
    for (Vertex v : r.witness.members()) witness.push_back(binary_label(v, a.n));
    o.record.rows.push_back({{"m", mm},
                             {"oracle", r.value},
                             {"cascade", cascade},
                             {"match", r.value == cascade},
                             {"explored", r.explored},
                             {"witness", std::move(witness)}});
  }
  const std::uint64_t checked = o.record.rows.size();
  o.record.summary = {{"checked", checked}, {"matches", matches}, {"mismatches", checked - matches},
                      {"explored", explored}};
  o.status = matches == checked ? kSuccess : kVerificationFailed;
  return o;
}

Outcome verify_extraconn_oracle(const VerifyArgs& a, const oracle::Options& opts) {
  require_dim(a.n, 1, oracle::kMaxEnumerationDim, "verify extraconn-oracle");
  const CubeDim dim(a.n);
  const std::string h_text = a.h.empty() ? "1..2" : a.h;
  const Range range = checked_range(h_text, 1, dim.vertex_count(), "h");

  Outcome o;
  o.record.command = "verify";
  o.record.params = {{"kind", a.kind}, {"n", a.n}, {"h", h_text}, {"budget", opts.budget}};
  std::uint64_t compared = 0;
  std::uint64_t mismatches = 0;
  for (const std::uint64_t h : values_of(range)) {
    const int hm1 = static_cast<int>(h - 1);
    const oracle::OracleResult r = oracle::extra_conn_bruteforce(dim, hm1, opts);
    ordered_json row = {{"h_minus_1", hm1}, {"oracle", nullptr}, {"theorem", nullptr}, {"match", "n/a"},
                        {"explored", r.explored}};
    if (r.found) row["oracle"] = r.value;
    std::optional<std::uint64_t> theorem;
    try {
      theorem = extra_connectivity(a.n, hm1).value;
      row["theorem"] = *theorem;
    } catch (const range_error&) {
    }
    if (theorem && r.found) {
      ++compared;
      row["match"] = *theorem == r.value ? "ok" : "mismatch";
      if (*theorem != r.value) ++mismatches;
    }
    o.record.rows.push_back(std::move(row));
  }
  o.record.summary = {{"rows", o.record.rows.size()}, {"compared", compared}, {"mismatches", mismatches}};
  o.status = mismatches == 0 ? kSuccess : kVerificationFailed;
  return o;
}

Outcome verify_structure(const VerifyArgs& a, const oracle::Options& opts) {
  require_dim(a.n, 5, 16, "verify structure");
  const CubeDim dim(a.n);
  if (a.sampler != "uniform" && a.sampler != "adversarial" && a.sampler != "both") {
    throw usage_error("--sampler must be uniform, adversarial or both");
  }
  std::vector<int> hs;
  if (a.h.empty()) {
    for (int h = 1; h <= 3 * a.n - 6; ++h) {
      if (structure_licensed(a.n, h)) hs.push_back(h);
    }
  } else {
    const Range range = checked_range(a.h, 1, static_cast<std::uint64_t>(3 * a.n - 6), "h");
    for (const std::uint64_t h : values_of(range)) {
      oracle::check_trial_guard(dim, static_cast<int>(h));
      hs.push_back(static_cast<int>(h));
    }
  }

  Outcome o;
  o.record.command = "verify";
  o.record.params = {{"kind", a.kind}, {"n", a.n},         {"h", a.h.empty() ? "licensed" : a.h},
                     {"trials", a.trials}, {"seed", a.seed}, {"sampler", a.sampler}};
  std::uint64_t violations = 0;
  auto add = [&](const std::string& sampler, const oracle::TrialReport& r) {
    violations += r.violations;
    o.record.rows.push_back({{"h", r.h},
                             {"sampler", sampler},
                             {"trials", r.trials},
                             {"seed", r.seed},
                             {"violations", r.violations},
                             {"worst_small_total", r.worst_small_total},
                             {"bound", f_of_h(a.n, r.h)},
                             {"threshold", min_boundary(a.n, static_cast<std::uint64_t>(r.h))}});
  };
  for (int h : hs) {
    if (a.sampler != "adversarial") add("uniform", oracle::structure_trials(dim, h, a.trials, a.seed, opts));
    if (a.sampler != "uniform") add("adversarial", oracle::adversarial_trials(dim, h, a.trials, a.seed, opts));
  }
  o.record.summary = {{"rows", o.record.rows.size()}, {"violations", violations}};
  o.status = violations == 0 ? kSuccess : kVerificationFailed;
  return o;
}

Outcome verify_identities(const VerifyArgs& a, bool plateaus) {
  if (a.n_min < 5 || a.n_max > 64 || a.n_min > a.n_max) throw usage_error("need 5 <= n-min <= n-max <= 64");
  Outcome o;
  o.record.command = "verify";
  o.record.params = {{"kind", a.kind}, {"n_min", a.n_min}, {"n_max", a.n_max}};
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skipped = 0;
  for (int n = a.n_min; n <= a.n_max; ++n) {
    const std::vector<IdentityRecord> records = plateaus ? plateau_identities(n) : difference_identities(n);
    for (const IdentityRecord& r : records) {
      (r.status == ClaimStatus::pass ? pass : r.status == ClaimStatus::fail ? fail : skipped) += 1;
      o.record.rows.push_back({{"n", r.n},
                               {"claim", to_string(r.kind)},
                               {"index", r.index},
                               {"status", to_string(r.status)},
                               {"orders", r.orders},
                               {"values", r.values}});
    }
  }
  o.record.summary = {{"pass", pass}, {"fail", fail}, {"not_applicable", skipped}};
  o.status = fail == 0 ? kSuccess : kVerificationFailed;
  return o;
}

Outcome cmd_verify(const VerifyArgs& a, int threads) {
  const oracle::Options opts{resolve_budget(a.budget), threads};
  if (a.kind == "boundary-oracle") return verify_boundary_oracle(a, opts);
  if (a.kind == "extraconn-oracle") return verify_extraconn_oracle(a, opts);
  if (a.kind == "structure") return verify_structure(a, opts);
  if (a.kind == "plateaus") return verify_identities(a, true);
  return verify_identities(a, false);
}

}  // namespace

std::string to_json(const OutputRecord& record) {
  ordered_json j;
  j["schema_version"] = record.schema_version;
  j["command"] = record.command;
  j["params"] = record.params;
  j["rows"] = record.rows;
  j["summary"] = record.summary;
  return j.dump(2) + "\n";
}

OutputRecord from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  OutputRecord r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  for (const auto& row : j.at("rows")) r.rows.push_back(row);
  r.summary = j.at("summary");
  return r;
}

std::string to_csv(const OutputRecord& record) {
  std::string out;
  if (record.rows.empty()) return out;
  std::vector<std::string> columns;
  for (const auto& item : record.rows.front().items()) columns.push_back(item.key());
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + csv_quote(columns[i]);
  out += '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      out += row.contains(columns[i]) ? csv_quote(cell(row.at(columns[i]))) : "n/a";
    }
    out += '\n';
  }
  return out;
}

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r{};
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_integer<std::uint64_t>(text);
  } else {
    r.lo = parse_integer<std::uint64_t>(text.substr(0, dots));
    r.hi = parse_integer<std::uint64_t>(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw usage_error("empty range '" + text + "'");
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact vertex-isoperimetry and extra-connectivity tables for hypercubes", "hqx"};
  app.require_subcommand(1);

  CommonArgs common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  int n = 0;
  std::string m_text;
  long long m_single = 0;
  std::string emit = "labels";
  VerifyArgs verify;

  auto* boundary = app.add_subcommand("boundary", "b_v(m; Q_n) by cascade and closed form");
  boundary->add_option("--n", n, "Dimension")->required();
  boundary->add_option("--m", m_text, "Order or inclusive range a..b")->required();
  add_common(boundary);

  auto* extraconn = app.add_subcommand("extraconn", "(h-1)-extra connectivity table");
  extraconn->add_option("--n", n, "Dimension")->required();
  add_common(extraconn);

  auto* witness = app.add_subcommand("witness", "Extremal witness set and its boundary");
  witness->add_option("--n", n, "Dimension")->required();
  witness->add_option("--m", m_single, "Order")->required();
  witness->add_option("--emit", emit, "labels or summary");
  add_common(witness);

  auto* verify_cmd = app.add_subcommand("verify", "Run an oracle or identity check");
  verify_cmd->set_help_flag("--help", "Print this help message and exit");
  verify_cmd->add_option("kind", verify.kind, "What to verify")
      ->required()
      ->check(CLI::IsMember({"boundary-oracle", "extraconn-oracle", "structure", "plateaus", "differences"}));
  verify_cmd->add_option("--n", verify.n, "Dimension");
  verify_cmd->add_option("--m", verify.m, "Orders a..b (boundary-oracle)");
  verify_cmd->add_option("--h", verify.h, "h values a..b (structure, extraconn-oracle)");
  verify_cmd->add_option("--trials", verify.trials, "Trials per (h, sampler)");
  verify_cmd->add_option("--seed", verify.seed, "64-bit seed");
  verify_cmd->add_option("--sampler", verify.sampler, "uniform, adversarial or both");
  verify_cmd->add_option("--n-min", verify.n_min, "Smallest n (plateaus, differences)");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n (plateaus, differences)");
  verify_cmd->add_option("--budget", verify.budget, "Enumeration budget (overrides HQX_BUDGET)");
  verify_cmd->add_option("--threads", common.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  add_common(verify_cmd);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    if (*boundary) {
      o = cmd_boundary(n, m_text);
    } else if (*extraconn) {
      o = cmd_extraconn(n);
    } else if (*witness) {
      o = cmd_witness(n, m_single, emit);
    } else {
      o = cmd_verify(verify, common.threads);
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      err << "elapsed_ms: " << ms.count() << '\n';
    }
    out << (common.format == "json" ? to_json(o.record) : to_csv(o.record));
    if (o.status == kVerificationFailed) err << "verification failed\n";
    return o.status;
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace hqx::cli
