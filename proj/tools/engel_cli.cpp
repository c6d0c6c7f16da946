#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "engel/report.hpp"

namespace {

using namespace engel;

void add_run_options(CLI::App* cmd, RunConfig& cfg, std::string& lemma_csv) {
  cmd->add_option("--catalog", cfg.catalog, "catalog selector")
      ->default_val("default");
  cmd->add_option("--add", cfg.extra_files,
                  "additional group file(s) appended to the catalog");
  cmd->add_option("--max-order", cfg.max_order,
                  "drop catalog groups above this order")
      ->default_val(2000);
  cmd->add_option("--lemmas", lemma_csv,
                  "comma-separated subset of kovacs,lprod,lf2,l0")
      ->default_val("kovacs,lprod,lf2,l0");
  cmd->add_option("--seed", cfg.seed, "seed for sampling and audits")
      ->default_val(42);
  cmd->add_option("--format", cfg.format, "csv or json")->default_val("csv");
  cmd->add_option("--out", cfg.out, "output file (default: stdout)");
  cmd->add_option("--threads", cfg.threads, "worker threads (0 = auto)")
      ->envname("ENGEL_THREADS")
      ->default_val(0);
  cmd->add_option("--enum-threshold", cfg.enumeration_threshold,
                  "full-enumeration order cap")
      ->default_val(20000);
  cmd->add_option("--lattice-cap", cfg.lattice_cap,
                  "subgroup-class enumeration cap")
      ->default_val(50000);
  cmd->add_option("--sample-cap", cfg.l0_sample_cap,
                  "max sampled (P,g) pairs per group for l0")
      ->default_val(500);
  cmd->add_option("--audit-samples", cfg.audit_samples,
                  "sink equivariance audit samples per group")
      ->default_val(16);
  cmd->add_flag("--self-test-corrupt", cfg.corrupt_selftest,
                "deliberately corrupt the l0 oracle (harness self-test)")
      ->group("");  // hidden
}

std::vector<std::string> split_lemmas(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item != "kovacs" && item != "lprod" && item != "lf2" && item != "l0")
      throw Error("unknown lemma '" + item + "'");
    out.push_back(item);
  }
  return out;
}

int run_batch(RunConfig cfg, const std::string& lemma_csv, bool verify_mode) {
  cfg.lemmas = split_lemmas(lemma_csv);
  if (cfg.format != "csv" && cfg.format != "json")
    throw Error("unknown format '" + cfg.format + "'");
  std::vector<CatalogEntry> entries = collect_entries(cfg);
  for (const auto& e : entries)
    if (!e.group.enumerable())
      std::cerr << "warning: " << e.group.label()
                << " exceeds the enumeration threshold; structural columns "
                   "will be capped\n";
  std::vector<GroupRow> rows = run_rows(cfg, entries);

  std::ostringstream buf;
  if (verify_mode) {
    if (cfg.format == "csv")
      write_verify_csv(buf, rows, cfg);
    else
      write_verify_json(buf, rows, cfg);
  } else {
    if (cfg.format == "csv")
      write_report_csv(buf, rows, cfg);
    else
      write_report_json(buf, rows, cfg);
  }
  if (cfg.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Error("cannot write " + cfg.out);
    f << buf.str();
  }

  int failures = failure_count(rows);
  if (failures > 0) {
    std::cerr << failures << " lemma check(s) failed\n";
    return 1;
  }
  return 0;
}

int run_sink(const std::string& group_spec, const std::string& element_text,
             int enum_threshold) {
  GroupOptions opts;
  opts.enumeration_threshold = enum_threshold;
  CatalogEntry entry = entry_from_spec(group_spec, opts);
  const Group& G = entry.group;
  Permutation g = Permutation::from_cycles(G.degree(), element_text);
  SinkReport sr = minimal_sink(G, g);
  RankCertificate rc = rank(sr.sink_subgroup);
  std::cout << "group: " << G.label() << " (order " << G.order() << ", degree "
            << G.degree() << ")\n";
  std::cout << "element: " << g.cycles() << "\n";
  std::cout << "sink_size: " << sr.sink.size() << "\n";
  std::cout << "sink_rank: " << rc.rank_value << "\n";
  std::cout << "max_tail: " << sr.max_tail << "\n";
  std::cout << "sink:\n";
  const Enumeration& E = G.elements();
  for (int i : sr.sink) std::cout << E.perm(i).cycles() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "engel: Engel sinks, subgroup ranks and structural series of finite "
      "permutation groups"};
  app.require_subcommand(1);
  // keys live in a section per subcommand: [report] max-order=...
  app.set_config("--config");

  std::string group_spec, element_text;
  int sink_enum_threshold = 20000;
  CLI::App* sink = app.add_subcommand(
      "sink", "minimal Engel sink of one element");
  sink->add_option("--group", group_spec, "group file or catalog label")
      ->required();
  sink->add_option("--element", element_text, "element in cycle notation")
      ->required();
  sink->add_option("--enum-threshold", sink_enum_threshold,
                   "full-enumeration order cap")
      ->default_val(20000);

  RunConfig verify_cfg, report_cfg;
  std::string verify_lemmas, report_lemmas;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the lemma suites over the catalog (exit 1 on failure)");
  add_run_options(verify, verify_cfg, verify_lemmas);
  CLI::App* report = app.add_subcommand(
      "report", "tabulate order, series, ranks, r* and lemma results");
  add_run_options(report, report_cfg, report_lemmas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (sink->parsed())
      return run_sink(group_spec, element_text, sink_enum_threshold);
    if (verify->parsed()) return run_batch(verify_cfg, verify_lemmas, true);
    if (report->parsed()) return run_batch(report_cfg, report_lemmas, false);
  } catch (const engel::MathError& e) {
    std::cerr << "mathematical check failed: " << e.what() << "\n";
    return 1;
  } catch (const engel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
