#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "engel/report.hpp"

using namespace engel;

namespace {

RunConfig small_config() {
  RunConfig cfg;
  cfg.max_order = 30;
  cfg.threads = 2;
  return cfg;
}

const GroupRow& row_of(const std::vector<GroupRow>& rows,
                       const std::string& label) {
  for (const auto& r : rows)
    if (r.label == label) return r;
  throw std::runtime_error("row not found: " + label);
}

}  // namespace

TEST_CASE("rows carry the structural columns") {
  RunConfig cfg = small_config();
  auto entries = collect_entries(cfg);
  auto rows = run_rows(cfg, entries);
  CHECK(rows.size() == entries.size());

  const GroupRow& s3 = row_of(rows, "S3");
  CHECK(s3.order_str == "6");
  CHECK(s3.soluble);
  CHECK_FALSE(s3.nilpotent);
  CHECK(s3.fitting_height == 2);
  CHECK(s3.rank_g == 2);
  CHECK(s3.r_star == 1);
  CHECK(s3.rank_residual == 1);

  const GroupRow& s4 = row_of(rows, "S4");
  CHECK(s4.fitting_height == 3);
  CHECK(s4.r_star == 2);
  CHECK(s4.rank_residual == 2);

  const GroupRow& ab1 = row_of(rows, "Ab1");
  CHECK(ab1.order_str == "18");
  CHECK(ab1.r_star == 2);
  CHECK(ab1.rank_residual == 2);

  for (const auto& r : rows) {
    if (r.capped) continue;
    if (r.nilpotent) {
      CHECK(r.r_star == 0);
      CHECK(r.rank_residual == 0);
    }
    CHECK(r.rank_residual <= r.rank_g);
    CHECK((r.fitting_height.has_value() == r.soluble));
  }
}

TEST_CASE("lemma cells aggregate pass counts") {
  RunConfig cfg = small_config();
  auto rows = run_rows(cfg, collect_entries(cfg));
  for (const auto& r : rows) {
    for (const auto& [name, cell] : r.lemmas)
      CHECK(cell.status != CheckStatus::Fail);
    CHECK(r.lemmas.count("kovacs") == 1);
    CHECK(r.lemmas.at("kovacs").checked == 1);
  }
  // metadata-bearing groups actually run the height-two check
  const GroupRow& c5c4 = row_of(rows, "C5:C4");
  CHECK(c5c4.lemmas.at("lf2").status == CheckStatus::Pass);
  const GroupRow& d5 = row_of(rows, "D5");
  CHECK(d5.lemmas.at("lf2").status == CheckStatus::Skipped);
}

TEST_CASE("csv report format is frozen") {
  RunConfig cfg = small_config();
  cfg.lemmas = {"kovacs"};
  auto rows = run_rows(cfg, collect_entries(cfg));
  std::ostringstream os;
  write_report_csv(os, rows, cfg);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "label,order,soluble,nilpotent,fitting_height,rank,r_star,"
        "rank_gamma_inf,kovacs");
  std::string line;
  bool saw_summary = false;
  size_t data_lines = 0;
  while (std::getline(is, line)) {
    if (line.rfind("# r_star=", 0) == 0) {
      saw_summary = true;
      continue;
    }
    ++data_lines;
  }
  CHECK(saw_summary);
  CHECK(data_lines == rows.size());
}

TEST_CASE("json report parses and echoes the run-shape config") {
  RunConfig cfg = small_config();
  auto rows = run_rows(cfg, collect_entries(cfg));
  std::ostringstream os;
  write_report_json(os, rows, cfg);
  auto doc = nlohmann::json::parse(os.str());
  CHECK(doc["config"]["seed"] == 42);
  CHECK(doc["config"].contains("lattice_cap"));
  CHECK_FALSE(doc["config"].contains("threads"));
  CHECK(doc["groups"].size() == rows.size());
  CHECK(doc["summary"]["failures"] == 0);
  bool found = false;
  for (const auto& g : doc["groups"])
    if (g["label"] == "S3") {
      CHECK(g["rank_gamma_inf"] == 1);
      CHECK(g["r_star"] == 1);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("summary table is the fold of the rows") {
  RunConfig cfg = small_config();
  auto rows = run_rows(cfg, collect_entries(cfg));
  std::ostringstream os;
  write_report_json(os, rows, cfg);
  auto doc = nlohmann::json::parse(os.str());
  for (const auto& t : doc["summary"]["r_star_table"]) {
    int rs = t["r_star"], maxr = t["max_rank_gamma_inf"], count = t["groups"];
    int expect_max = 0, expect_count = 0;
    for (const auto& r : rows)
      if (r.r_star == rs) {
        expect_max = std::max(expect_max, r.rank_residual);
        ++expect_count;
      }
    CHECK(maxr == expect_max);
    CHECK(count == expect_count);
  }
}

TEST_CASE("output is byte-identical across thread counts") {
  RunConfig a = small_config();
  a.max_order = 60;
  a.threads = 1;
  RunConfig b = a;
  b.threads = 4;
  std::ostringstream oa, ob;
  write_report_csv(oa, run_rows(a, collect_entries(a)), a);
  write_report_csv(ob, run_rows(b, collect_entries(b)), b);
  CHECK(oa.str() == ob.str());
}

TEST_CASE("verify output and the corrupted-oracle self test") {
  RunConfig cfg = small_config();
  cfg.lemmas = {"l0"};
  auto rows = run_rows(cfg, collect_entries(cfg));
  CHECK(failure_count(rows) == 0);
  std::ostringstream os;
  write_verify_csv(os, rows, cfg);
  CHECK(os.str().find("# failures=0") != std::string::npos);

  cfg.corrupt_selftest = true;
  auto bad = run_rows(cfg, collect_entries(cfg));
  CHECK(failure_count(bad) > 0);
  bool witnessed = false;
  for (const auto& r : bad)
    for (const auto& [name, cell] : r.lemmas)
      if (cell.status == CheckStatus::Fail && !cell.witness.empty())
        witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("user files join the catalog; label collisions are rejected") {
  {
    std::ofstream f("user_s3.grp");
    f << "degree: 3\ngen: (1 2)\ngen: (1 2 3)\n";
  }
  RunConfig cfg;
  cfg.max_order = 10;
  cfg.extra_files = {"user_s3.grp"};
  // unlabeled files take their label from the file stem: no collision
  auto entries = collect_entries(cfg);
  bool found = false;
  for (const auto& e : entries) found |= e.group.label() == "user_s3";
  CHECK(found);

  // a saved catalog group keeps its label and now clashes
  save_group(entry_from_spec("S3").group, "clash.grp");
  cfg.extra_files = {"clash.grp"};
  CHECK_THROWS_AS(collect_entries(cfg), Error);
  std::remove("user_s3.grp");
  std::remove("clash.grp");
}

TEST_CASE("groups above the enumeration threshold appear capped") {
  Group s10 = Group::from_generators(
      10,
      {Permutation::from_cycles(10, "(1 2)"),
       Permutation::from_cycles(10, "(1 2 3 4 5 6 7 8 9 10)")},
      "S10");
  save_group(s10, "big.grp");
  RunConfig cfg;
  cfg.max_order = 2;
  cfg.enumeration_threshold = 100;
  cfg.extra_files = {"big.grp"};
  auto rows = run_rows(cfg, collect_entries(cfg));
  const GroupRow& big = row_of(rows, "S10");
  CHECK(big.capped);
  CHECK(big.order_str == "3628800");
  std::ostringstream os;
  write_report_csv(os, rows, cfg);
  CHECK(os.str().find("S10,3628800,?") != std::string::npos);
  std::remove("big.grp");
}

TEST_CASE("unknown configuration is rejected") {
  RunConfig cfg;
  cfg.catalog = "nope";
  CHECK_THROWS_AS(collect_entries(cfg), Error);
  RunConfig cfg2 = small_config();
  cfg2.lemmas = {"bogus"};
  auto entries = collect_entries(cfg2);
  CHECK_THROWS_AS(run_rows(cfg2, entries), Error);
}

TEST_CASE("json rows mark capped groups") {
  Group s8 = Group::from_generators(
      8,
      {Permutation::from_cycles(8, "(1 2)"),
       Permutation::from_cycles(8, "(1 2 3 4 5 6 7 8)")},
      "S8");
  save_group(s8, "big8.grp");
  RunConfig cfg;
  cfg.max_order = 2;
  cfg.enumeration_threshold = 50;
  cfg.extra_files = {"big8.grp"};
  auto rows = run_rows(cfg, collect_entries(cfg));
  std::ostringstream os;
  write_report_json(os, rows, cfg);
  auto doc = nlohmann::json::parse(os.str());
  bool found = false;
  for (const auto& g : doc["groups"])
    if (g["label"] == "S8") {
      CHECK(g["capped"] == true);
      CHECK(g["order"] == 40320);
      CHECK_FALSE(g.contains("rank"));
      found = true;
    }
  CHECK(found);
  std::remove("big8.grp");
}
