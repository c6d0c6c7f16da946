#include "engel/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include <json.hpp>

namespace engel {

namespace {

using ordered_json = nlohmann::ordered_json;

void fold_check(LemmaCell& cell, const CheckResult& r) {
  switch (r.status) {
    case CheckStatus::Pass:
      ++cell.checked;
      break;
    case CheckStatus::Fail:
      ++cell.checked;
      if (cell.witness.empty()) cell.witness = r.witness;
      cell.status = CheckStatus::Fail;
      break;
    case CheckStatus::Skipped:
      ++cell.skipped;
      if (cell.reason.empty()) cell.reason = r.detail;
      break;
  }
  if (cell.status != CheckStatus::Fail)
    cell.status = cell.checked > 0 ? CheckStatus::Pass : CheckStatus::Skipped;
}

}  // namespace

LemmaCell run_kovacs(const Group& G, const RunConfig& cfg) {
  LemmaCell cell;
  fold_check(cell, verify_kovacs(G, LatticeOptions{cfg.lattice_cap}));
  return cell;
}

LemmaCell run_lprod(const Group& G, const RunConfig& cfg) {
  (void)cfg;
  LemmaCell cell;
  Subgroup whole = Subgroup::whole(G);
  Subgroup F = fitting_subgroup(G);
  Subgroup resid = nilpotent_residual(G);
  fold_check(cell, verify_lprod(F, whole));
  fold_check(cell, verify_lprod(resid, whole));
  for (int p : prime_divisors(G.order()))
    fold_check(cell, verify_lprod(F, sylow_subgroup(G, p)));
  Subgroup cyc = Subgroup::closure(G, {G.generators().front()});
  fold_check(cell, verify_lprod(F, cyc));
  return cell;
}

LemmaCell run_lf2(const CatalogEntry& entry, const RunConfig& cfg) {
  (void)cfg;
  LemmaCell cell;
  if (!entry.hall) {
    fold_check(cell, CheckResult::skipped("no Hall complement metadata"));
    return cell;
  }
  fold_check(cell, verify_lf2(entry.group, *entry.hall));
  return cell;
}

LemmaCell run_l0(const Group& G, const RunConfig& cfg) {
  LemmaCell cell;
  const Enumeration& E = G.elements();

  struct Pair {
    Subgroup P;
    int g;
  };
  std::vector<Pair> pairs;
  for (int p : prime_divisors(G.order())) {
    Subgroup S = sylow_subgroup(G, p);
    // distinct conjugates of S, in first-discovery order
    std::vector<Subgroup> conjugates;
    std::vector<uint64_t> seen;
    for (int g = 0; g < E.size(); ++g) {
      std::vector<int> idx, gens;
      idx.reserve(S.indices().size());
      for (int x : S.indices()) idx.push_back(E.conj(x, g));
      std::sort(idx.begin(), idx.end());
      uint64_t h = 0;
      for (int x : idx) h += splitmix64(uint64_t(x) + 0x1234567);
      if (std::find(seen.begin(), seen.end(), h) != seen.end()) continue;
      seen.push_back(h);
      for (int x : S.generator_indices()) gens.push_back(E.conj(x, g));
      conjugates.push_back(
          Subgroup::from_indices(G, std::move(idx), std::move(gens)));
    }
    for (const Subgroup& P : conjugates) {
      for (int h = 0; h < E.size(); ++h) {
        if (uint64_t(E.order_of(h)) % uint64_t(p) == 0) continue;
        bool normalizes = true;
        for (int s : P.generator_indices())
          if (!P.contains_index(E.conj(s, h))) {
            normalizes = false;
            break;
          }
        if (normalizes) pairs.push_back({P, h});
      }
    }
  }

  if (int(pairs.size()) > cfg.l0_sample_cap) {
    std::mt19937_64 rng(cfg.seed ^
                        fnv1a64(G.label().data(), G.label().size()));
    sample_prefix(pairs, size_t(cfg.l0_sample_cap), rng);
  }

  // one sink subgroup per distinct element g
  std::map<int, Subgroup> sinks;
  for (const Pair& pr : pairs) {
    auto it = sinks.find(pr.g);
    if (it == sinks.end()) {
      SinkReport sr = minimal_sink_index(G, pr.g);
      Subgroup sub = cfg.corrupt_selftest ? Subgroup::trivial(G)
                                          : sr.sink_subgroup;
      it = sinks.emplace(pr.g, std::move(sub)).first;
    }
    fold_check(cell, verify_l0_index(G, pr.P, pr.g, it->second));
  }
  if (pairs.empty())
    fold_check(cell, CheckResult::skipped("no valid (P,g) pairs"));
  return cell;
}

std::vector<CatalogEntry> collect_entries(const RunConfig& cfg) {
  if (cfg.catalog != "default")
    throw Error("unknown catalog '" + cfg.catalog + "'");
  if (cfg.enumeration_threshold < 1 || cfg.lattice_cap < 1 ||
      cfg.l0_sample_cap < 0 || cfg.audit_samples < 0 || cfg.threads < 0)
    throw Error("configuration caps must be positive");
  GroupOptions opts;
  opts.enumeration_threshold = cfg.enumeration_threshold;
  std::vector<CatalogEntry> entries = default_catalog(cfg.max_order, opts);
  for (const auto& path : cfg.extra_files) {
    CatalogEntry e;
    e.recipe.kind = RecipeKind::FromFile;
    e.recipe.path = path;
    e.group = load_group(path, opts);
    e.recipe.label = e.group.label();
    entries.push_back(std::move(e));
  }
  std::vector<std::string> labels;
  for (const auto& e : entries) labels.push_back(e.group.label());
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw Error("duplicate group labels in the run");
  return entries;
}

GroupRow compute_row(const CatalogEntry& entry, const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  GroupRow row;
  const Group& G = entry.group;
  row.label = G.label();
  if (!G.enumerable()) {
    row.capped = true;
    row.order_str = G.order_big().str();
    return row;
  }
  row.order_str = std::to_string(G.order());
  row.soluble = is_soluble(G);
  row.nilpotent = is_nilpotent(G);
  row.fitting_height = fitting_height(G);

  LatticeOptions lopts{cfg.lattice_cap};
  RankCertificate rg = rank(G, RankMode::Auto, lopts);
  row.rank_g = rg.rank_value;
  row.rank_exact = rg.exact;
  row.rank_method = rank_method_name(rg.method);
  for (const auto& w : rg.witness_generators)
    row.rank_witness.push_back(w.cycles());
  Subgroup resid = nilpotent_residual(G);
  RankCertificate rr = rank(resid, RankMode::Auto, lopts);
  row.rank_residual = rr.rank_value;
  row.residual_exact = rr.exact;

  SinkProfile prof = sink_profile(G, cfg.audit_samples, cfg.seed, lopts);
  row.r_star = prof.r_star;

  if (row.nilpotent && (row.r_star != 0 || row.rank_residual != 0))
    throw MathError("nilpotent group with nontrivial sink data: " + row.label);
  if (rg.exact && rr.exact && row.rank_residual > row.rank_g)
    throw MathError("residual rank exceeds group rank: " + row.label);

  for (const auto& lemma : cfg.lemmas) {
    if (lemma == "kovacs")
      row.lemmas[lemma] = run_kovacs(G, cfg);
    else if (lemma == "lprod")
      row.lemmas[lemma] = run_lprod(G, cfg);
    else if (lemma == "lf2")
      row.lemmas[lemma] = run_lf2(entry, cfg);
    else if (lemma == "l0")
      row.lemmas[lemma] = run_l0(G, cfg);
    else
      throw Error("unknown lemma '" + lemma + "'");
  }
  row.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return row;
}

std::vector<GroupRow> run_rows(const RunConfig& cfg,
                               const std::vector<CatalogEntry>& entries) {
  std::vector<GroupRow> rows(entries.size());
  int nthreads = cfg.threads > 0
                     ? cfg.threads
                     : int(std::thread::hardware_concurrency());
  nthreads = std::max(1, std::min<int>(nthreads, int(entries.size())));
  std::atomic<size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      try {
        rows[i] = compute_row(entries[i], cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

int failure_count(const std::vector<GroupRow>& rows) {
  int n = 0;
  for (const auto& row : rows)
    for (const auto& [name, cell] : row.lemmas)
      if (cell.status == CheckStatus::Fail) ++n;
  return n;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string lemma_cell_text(const LemmaCell& cell) {
  switch (cell.status) {
    case CheckStatus::Pass:
      return "pass:" + std::to_string(cell.checked);
    case CheckStatus::Fail:
      return "fail:" + cell.witness;
    case CheckStatus::Skipped:
      return "skip:" + (cell.reason.empty() ? std::string("n/a") : cell.reason);
  }
  return "";
}

std::string rank_text(int value, bool exact) {
  return exact ? std::to_string(value) : ">=" + std::to_string(value);
}

std::string height_text(const GroupRow& row) {
  return row.fitting_height ? std::to_string(*row.fitting_height) : "-";
}

// catalog-wide max of rank_gamma_inf per observed r_star value
std::vector<std::tuple<int, int, int>> r_star_table(
    const std::vector<GroupRow>& rows) {
  std::map<int, std::pair<int, int>> agg;  // r_star -> (max residual, count)
  for (const auto& row : rows) {
    if (row.capped) continue;
    auto& slot = agg[row.r_star];
    slot.first = std::max(slot.first, row.rank_residual);
    ++slot.second;
  }
  std::vector<std::tuple<int, int, int>> out;
  for (auto& [rs, v] : agg) out.emplace_back(rs, v.first, v.second);
  return out;
}

ordered_json config_json(const RunConfig& cfg) {
  // run-shape options only: fields that alter bytes, never threads/out
  ordered_json j;
  j["catalog"] = cfg.catalog;
  j["max_order"] = cfg.max_order;
  j["lemmas"] = cfg.lemmas;
  j["seed"] = cfg.seed;
  j["enumeration_threshold"] = cfg.enumeration_threshold;
  j["lattice_cap"] = cfg.lattice_cap;
  j["l0_sample_cap"] = cfg.l0_sample_cap;
  j["audit_samples"] = cfg.audit_samples;
  return j;
}

ordered_json lemma_json(const LemmaCell& cell) {
  ordered_json j;
  switch (cell.status) {
    case CheckStatus::Pass:
      j["status"] = "pass";
      break;
    case CheckStatus::Fail:
      j["status"] = "fail";
      break;
    case CheckStatus::Skipped:
      j["status"] = "skip";
      break;
  }
  j["checked"] = cell.checked;
  j["skipped"] = cell.skipped;
  if (!cell.witness.empty()) j["witness"] = cell.witness;
  if (!cell.reason.empty()) j["reason"] = cell.reason;
  return j;
}

}  // namespace

void write_report_csv(std::ostream& os, const std::vector<GroupRow>& rows,
                      const RunConfig& cfg) {
  os << "label,order,soluble,nilpotent,fitting_height,rank,r_star,"
        "rank_gamma_inf";
  for (const auto& lemma : cfg.lemmas) os << ',' << lemma;
  os << '\n';
  for (const auto& row : rows) {
    os << csv_quote(row.label) << ',' << row.order_str;
    if (row.capped) {
      for (int i = 0; i < 6; ++i) os << ",?";
      for (size_t i = 0; i < cfg.lemmas.size(); ++i) os << ",?";
      os << '\n';
      continue;
    }
    os << ',' << (row.soluble ? "true" : "false") << ','
       << (row.nilpotent ? "true" : "false") << ',' << height_text(row) << ','
       << rank_text(row.rank_g, row.rank_exact) << ',' << row.r_star << ','
       << rank_text(row.rank_residual, row.residual_exact);
    for (const auto& lemma : cfg.lemmas) {
      auto it = row.lemmas.find(lemma);
      os << ',' << (it == row.lemmas.end() ? "-"
                                           : csv_quote(lemma_cell_text(it->second)));
    }
    os << '\n';
  }
  for (auto& [rs, maxr, count] : r_star_table(rows))
    os << "# r_star=" << rs << " max_rank_gamma_inf=" << maxr
       << " groups=" << count << '\n';
}

namespace {

ordered_json row_json(const GroupRow& row, bool with_structure) {
  ordered_json g;
  g["label"] = row.label;
  uint64_t order = 0;
  bool numeric = true;
  try {
    order = std::stoull(row.order_str);
  } catch (...) {
    numeric = false;
  }
  if (numeric)
    g["order"] = order;
  else
    g["order"] = row.order_str;
  if (row.capped) {
    g["capped"] = true;
    return g;
  }
  if (with_structure) {
    g["soluble"] = row.soluble;
    g["nilpotent"] = row.nilpotent;
    if (row.fitting_height)
      g["fitting_height"] = *row.fitting_height;
    else
      g["fitting_height"] = nullptr;
    g["rank"] = row.rank_g;
    g["rank_exact"] = row.rank_exact;
    g["rank_method"] = row.rank_method;
    g["rank_witness"] = row.rank_witness;
    g["r_star"] = row.r_star;
    g["rank_gamma_inf"] = row.rank_residual;
    g["rank_gamma_inf_exact"] = row.residual_exact;
  }
  if (!row.lemmas.empty()) {
    ordered_json lem;
    for (const auto& [name, cell] : row.lemmas) lem[name] = lemma_json(cell);
    g["lemmas"] = lem;
  }
  return g;
}

void write_json_doc(std::ostream& os, const std::vector<GroupRow>& rows,
                    const RunConfig& cfg, bool with_structure) {
  ordered_json doc;
  doc["config"] = config_json(cfg);
  ordered_json groups = ordered_json::array();
  for (const auto& row : rows) groups.push_back(row_json(row, with_structure));
  doc["groups"] = groups;
  ordered_json summary;
  summary["groups"] = rows.size();
  summary["failures"] = failure_count(rows);
  if (with_structure) {
    ordered_json table = ordered_json::array();
    for (auto& [rs, maxr, count] : r_star_table(rows)) {
      ordered_json t;
      t["r_star"] = rs;
      t["max_rank_gamma_inf"] = maxr;
      t["groups"] = count;
      table.push_back(t);
    }
    summary["r_star_table"] = table;
  }
  doc["summary"] = summary;
  os << doc.dump(2) << '\n';
}

}  // namespace

void write_report_json(std::ostream& os, const std::vector<GroupRow>& rows,
                       const RunConfig& cfg) {
  write_json_doc(os, rows, cfg, true);
}

void write_verify_csv(std::ostream& os, const std::vector<GroupRow>& rows,
                      const RunConfig& cfg) {
  os << "label,order";
  for (const auto& lemma : cfg.lemmas) os << ',' << lemma;
  os << '\n';
  int failures = 0;
  int skipped = 0;
  for (const auto& row : rows) {
    os << csv_quote(row.label) << ',' << row.order_str;
    for (const auto& lemma : cfg.lemmas) {
      auto it = row.lemmas.find(lemma);
      if (it == row.lemmas.end()) {
        os << ",?";
        continue;
      }
      os << ',' << csv_quote(lemma_cell_text(it->second));
      if (it->second.status == CheckStatus::Fail) ++failures;
      skipped += it->second.skipped;
    }
    os << '\n';
  }
  os << "# failures=" << failures << " skipped_cases=" << skipped << '\n';
}

void write_verify_json(std::ostream& os, const std::vector<GroupRow>& rows,
                       const RunConfig& cfg) {
  write_json_doc(os, rows, cfg, false);
}

}  // namespace engel
