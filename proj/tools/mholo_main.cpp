// Command-line front end: single-case counts, parameter sweeps, triplet
// listings and the verification battery, with JSON/CSV/table output.
//
// Exit codes: 0 success/agreement, 1 usage error, 2 mathematical
// disagreement or invariant violation, 3 enumeration budget exceeded.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mholo/serialize.hpp"
#include "mholo/verify.hpp"

namespace {

using namespace mholo;

struct OutputConfig {
  std::string format = "table";
  std::string out_path;
};

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file " << out_path << '\n';
    return 1;
  }
  file << text;
  return 0;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<RegularSubgroupReport> admissible_reports(const GammaContext& ctx) {
  std::vector<RegularSubgroupReport> out;
  for (const Triplet& t : all_triplets(ctx)) {
    RegularSubgroupReport report = analyze_triplet(t, ctx);
    if (report.admissible) out.push_back(std::move(report));
  }
  return out;
}

struct CountConfig {
  long long p = 0;
  unsigned m = 0, n = 0, r = 0;
  std::string method = "all";
  OutputConfig output;
  Budget budget;
};

int cmd_count(const CountConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  GroupParams P = GroupParams::make(Int(static_cast<long>(cfg.p)), cfg.m, cfg.n, cfg.r);
  bool want_formula = cfg.method == "formula" || cfg.method == "all";
  bool want_triplets = cfg.method == "triplets" || cfg.method == "all";
  bool want_oracle = cfg.method == "oracle" || cfg.method == "all";

  std::vector<std::pair<std::string, Int>> values;
  CountReport report;
  std::vector<RegularSubgroupReport> triplets;
  if (want_triplets || want_oracle) {
    GammaContext ctx(P);
    report = enumerate_counts(ctx, Checker::General);
    triplets = admissible_reports(ctx);
    values.emplace_back("triplets(general)", report.n_admissible_iso);
    if (want_triplets && P.regime != Regime::OPEN) {
      values.emplace_back("triplets(fast)",
                          enumerate_counts(ctx, Checker::Fast)
                              .n_admissible_iso);
    }
    if (want_oracle) {
      values.emplace_back("oracle",
                          aut_pair_scan(P, cfg.budget).n_with_N_iso_G);
    }
  } else {
    report.p = P.p;
    report.m = P.m;
    report.n = P.n;
    report.r = P.r;
    report.regime = P.regime;
    report.error = "not enumerated (method=formula)";
    report.formula_value = closed_formula(P);
  }
  if (want_formula) {
    auto formula = closed_formula(P);
    if (formula) {
      values.emplace_back("formula", *formula);
    } else if (cfg.method == "formula") {
      throw RegimeUnsupported("no closed formula in the open regime; use "
                              "--method triplets");
    }
  }

  bool agree = true;
  for (const auto& [name, value] : values) {
    agree = agree && value == values.front().second;
  }

  Json doc = count_document(report, triplets, elapsed_ms(start));
  Json methods = Json::object();
  for (const auto& [name, value] : values) {
    methods[name] = static_cast<long long>(value.get_si());
  }
  doc["methods"] = methods;
  doc["methods_agree"] = agree;

  int rc = 0;
  if (cfg.output.format == "json") {
    rc = write_output(dump_json(doc), cfg.output.out_path);
  } else if (cfg.output.format == "csv") {
    rc = write_output(csv_header() + "\n" + csv_row(report) + "\n",
                      cfg.output.out_path);
  } else {
    std::string text = render_count_table(report, triplets);
    for (const auto& [name, value] : values) {
      text += "  method " + name + " -> " + value.get_str() + "\n";
    }
    text += agree ? "  methods agree\n" : "  METHOD DISAGREEMENT\n";
    rc = write_output(text, cfg.output.out_path);
  }
  if (rc != 0) return rc;
  return agree ? 0 : 2;
}

struct SweepConfig {
  std::vector<long long> primes;
  std::vector<unsigned long long> max_orders;
  OutputConfig output;
};

int cmd_sweep(const SweepConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  if (cfg.primes.empty()) {
    throw InvalidParams("sweep: at least one --p is required");
  }
  std::vector<SweepRange> ranges;
  for (std::size_t i = 0; i < cfg.primes.size(); ++i) {
    unsigned long long bound =
        cfg.max_orders.empty()
            ? 243
            : cfg.max_orders[std::min(i, cfg.max_orders.size() - 1)];
    ranges.push_back({Int(static_cast<long>(cfg.primes[i])), bound});
  }
  std::vector<CountReport> rows = sweep(ranges);
  bool agree = true;
  for (const CountReport& row : rows) {
    if (row.agreement && !*row.agreement) agree = false;
  }
  int rc = 0;
  if (cfg.output.format == "json") {
    rc = write_output(dump_json(sweep_document(rows, elapsed_ms(start))),
                      cfg.output.out_path);
  } else if (cfg.output.format == "csv") {
    rc = write_output(render_csv(rows), cfg.output.out_path);
  } else {
    rc = write_output(render_sweep_table(rows), cfg.output.out_path);
  }
  if (rc != 0) return rc;
  return agree ? 0 : 2;
}

struct TripletsConfig {
  long long p = 0;
  unsigned m = 0, n = 0, r = 0;
  bool pi_table = false;
  OutputConfig output;
  Budget budget;
};

int cmd_triplets(const TripletsConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  GroupParams P = GroupParams::make(Int(static_cast<long>(cfg.p)), cfg.m, cfg.n, cfg.r);
  GammaContext ctx(P);
  CountReport report = enumerate_counts(ctx, Checker::General);
  std::vector<RegularSubgroupReport> triplets = admissible_reports(ctx);
  Json doc = count_document(report, triplets, elapsed_ms(start));
  if (cfg.pi_table) {
    for (std::size_t i = 0; i < triplets.size(); ++i) {
      if (!triplets[i].iso_to_G) continue;
      GPermutation pi = pi_map(triplets[i].triplet, ctx, cfg.budget);
      doc["triplets"][i]["pi_table"] = pi.table;
    }
  }
  int rc = 0;
  if (cfg.output.format == "json") {
    rc = write_output(dump_json(doc), cfg.output.out_path);
  } else if (cfg.output.format == "csv") {
    rc = write_output(csv_header() + "\n" + csv_row(report) + "\n",
                      cfg.output.out_path);
  } else {
    rc = write_output(render_count_table(report, triplets),
                      cfg.output.out_path);
  }
  return rc;
}

struct VerifyConfig {
  std::vector<long long> primes;
  std::vector<unsigned long long> max_orders;
  bool open_regime = false;
  bool no_oracle = false;
  bool inject_fault = false;
  OutputConfig output;
  Budget budget;
};

int cmd_verify(const VerifyConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  VerifyOptions options;
  options.with_oracle = !cfg.no_oracle;
  options.open_regime = cfg.open_regime;
  options.inject_fault = cfg.inject_fault;
  options.budget = cfg.budget;
  for (std::size_t i = 0; i < cfg.primes.size(); ++i) {
    unsigned long long bound =
        cfg.max_orders.empty()
            ? 243
            : cfg.max_orders[std::min(i, cfg.max_orders.size() - 1)];
    for (GroupParams& P : sweep_params({Int(static_cast<long>(cfg.primes[i])), bound})) {
      options.params.push_back(std::move(P));
    }
  }
  VerifyResult result = run_verification(options);

  Json doc;
  doc["violations"] = Json::array();
  for (const Violation& v : result.violations) {
    doc["violations"].push_back(
        Json{{"check", v.check}, {"where", v.where}, {"detail", v.detail}});
  }
  if (cfg.open_regime) {
    doc["open_regime_counts"] = Json::array();
    for (const CountReport& row : result.open_counts) {
      doc["open_regime_counts"].push_back(count_row_json(row));
    }
  }
  doc["metadata"] =
      Json{{"runtime_ms", elapsed_ms(start)}, {"version", kVersion}};

  int rc;
  if (cfg.output.format == "json") {
    rc = write_output(dump_json(doc), cfg.output.out_path);
  } else {
    std::string text;
    for (const Violation& v : result.violations) {
      text += "VIOLATION " + v.check + " at " + v.where +
              (v.detail.empty() ? "" : ": " + v.detail) + "\n";
    }
    text += "checks " +
            std::string(result.violations.empty() ? "passed" : "FAILED") +
            " (" + std::to_string(result.violations.size()) +
            " violations)\n";
    rc = write_output(text, cfg.output.out_path);
  }
  if (rc != 0) return rc;
  return result.violations.empty() ? 0 : 2;
}

void add_output_options(CLI::App* cmd, OutputConfig& output) {
  cmd->add_option("--format", output.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", output.out_path, "Write output to a file");
}

void add_budget_options(CLI::App* cmd, Budget& budget) {
  cmd->add_option("--budget", budget.max_group_enum,
                  "Cap on |G| for full enumeration");
  cmd->add_option("--pair-budget", budget.max_pair_ops,
                  "Cap on quadratic pair-scan work");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Computes the multiple-holomorph quotient T(G) = NHol(G)/Hol(G) for "
      "non-abelian split metacyclic p-groups, p odd"};
  app.require_subcommand(1);

  CountConfig count_cfg;
  CLI::App* count_cmd =
      app.add_subcommand("count", "Compute |T(G)| for a single group");
  count_cmd->add_option("--p", count_cfg.p, "Odd prime p")->required();
  count_cmd->add_option("--m", count_cfg.m, "Exponent m (order of x)")
      ->required();
  count_cmd->add_option("--n", count_cfg.n, "Exponent n (order of y)")
      ->required();
  count_cmd->add_option("--r", count_cfg.r, "Twist parameter r")->required();
  count_cmd
      ->add_option("--method", count_cfg.method,
                   "Counting route(s): formula, triplets, oracle, all")
      ->check(CLI::IsMember({"formula", "triplets", "oracle", "all"}));
  add_output_options(count_cmd, count_cfg.output);
  add_budget_options(count_cmd, count_cfg.budget);

  SweepConfig sweep_cfg;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Tabulate counts over a parameter range");
  sweep_cmd->add_option("--p", sweep_cfg.primes, "Odd prime (repeatable)")
      ->required();
  sweep_cmd->add_option("--max-order", sweep_cfg.max_orders,
                        "Include groups with |G| = p^{m+n} up to this bound "
                        "(repeatable, parallel to --p; default 243)");
  add_output_options(sweep_cmd, sweep_cfg.output);

  TripletsConfig triplets_cfg;
  CLI::App* triplets_cmd = app.add_subcommand(
      "triplets", "List admissible triplets with their invariants");
  triplets_cmd->add_option("--p", triplets_cfg.p, "Odd prime p")->required();
  triplets_cmd->add_option("--m", triplets_cfg.m, "Exponent m")->required();
  triplets_cmd->add_option("--n", triplets_cfg.n, "Exponent n")->required();
  triplets_cmd->add_option("--r", triplets_cfg.r, "Twist parameter r")
      ->required();
  triplets_cmd->add_flag("--pi-table", triplets_cfg.pi_table,
                         "Include the pi-map image tables (json only)");
  add_output_options(triplets_cmd, triplets_cfg.output);
  add_budget_options(triplets_cmd, triplets_cfg.budget);

  VerifyConfig verify_cfg;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the invariant battery and the brute-force oracle");
  verify_cmd->add_option("--p", verify_cfg.primes,
                         "Odd prime (repeatable; default suite p=3, m+n<=5)");
  verify_cmd->add_option("--max-order", verify_cfg.max_orders,
                         "Per-prime bound on |G| (parallel to --p)");
  verify_cmd->add_flag("--open-regime", verify_cfg.open_regime,
                       "Record open-regime counts in the report");
  verify_cmd->add_flag("--no-oracle", verify_cfg.no_oracle,
                       "Skip the quadratic Aut(G)^2 oracle");
  verify_cmd
      ->add_flag("--inject-fault", verify_cfg.inject_fault,
                 "Negative control: report a deliberately corrupted check")
      ->group("");  // hidden
  add_output_options(verify_cmd, verify_cfg.output);
  add_budget_options(verify_cmd, verify_cfg.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(count_cfg);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_cfg);
    if (triplets_cmd->parsed()) return cmd_triplets(triplets_cfg);
    if (verify_cmd->parsed()) return cmd_verify(verify_cfg);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
