#ifndef ENGEL_REPORT_HPP
#define ENGEL_REPORT_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "engel/catalog.hpp"
#include "engel/sinks.hpp"

namespace engel {

struct RunConfig {
  std::string catalog = "default";
  std::vector<std::string> extra_files;  // appended group files
  uint64_t max_order = 2000;
  std::vector<std::string> lemmas = {"kovacs", "lprod", "lf2", "l0"};
  std::string format = "csv";  // csv | json
  std::string out;             // empty: stdout
  int threads = 0;             // 0: hardware concurrency
  int enumeration_threshold = 20000;
  int lattice_cap = 50000;
  uint64_t seed = 42;
  int l0_sample_cap = 500;
  int audit_samples = 16;
  bool corrupt_selftest = false;  // deliberately breaks the l0 oracle
};

struct LemmaCell {
  CheckStatus status = CheckStatus::Skipped;
  int checked = 0;
  int skipped = 0;
  std::string witness;
  std::string reason;
};

// One catalog row. Groups beyond the enumeration threshold appear with
// capped=true and structural columns left blank.
struct GroupRow {
  std::string label;
  std::string order_str;
  bool capped = false;
  bool soluble = false;
  bool nilpotent = false;
  std::optional<int> fitting_height;
  int rank_g = 0;
  bool rank_exact = true;
  std::string rank_method;
  std::vector<std::string> rank_witness;  // cycle notation
  int r_star = 0;
  int rank_residual = 0;
  bool residual_exact = true;
  std::map<std::string, LemmaCell> lemmas;
  double millis = 0;  // never serialized: output must be run-invariant
};

std::vector<CatalogEntry> collect_entries(const RunConfig& cfg);
GroupRow compute_row(const CatalogEntry& entry, const RunConfig& cfg);
// parallel over groups; row order matches the entry order
std::vector<GroupRow> run_rows(const RunConfig& cfg,
                               const std::vector<CatalogEntry>& entries);

int failure_count(const std::vector<GroupRow>& rows);

void write_report_csv(std::ostream& os, const std::vector<GroupRow>& rows,
                      const RunConfig& cfg);
void write_report_json(std::ostream& os, const std::vector<GroupRow>& rows,
                       const RunConfig& cfg);
void write_verify_csv(std::ostream& os, const std::vector<GroupRow>& rows,
                      const RunConfig& cfg);
void write_verify_json(std::ostream& os, const std::vector<GroupRow>& rows,
                       const RunConfig& cfg);

// lemma drivers, each aggregating every applicable case on one group
LemmaCell run_kovacs(const Group& G, const RunConfig& cfg);
LemmaCell run_lprod(const Group& G, const RunConfig& cfg);
LemmaCell run_lf2(const CatalogEntry& entry, const RunConfig& cfg);
LemmaCell run_l0(const Group& G, const RunConfig& cfg);

}  // namespace engel

#endif
