// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each. Exit code = number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "engel/report.hpp"

using namespace engel;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  if (problem.empty()) {
    std::cout << "PASS criterion " << number << ": " << title << "  ["
              << int(secs * 1000) << " ms]\n";
  } else {
    ++g_failures;
    std::cout << "FAIL criterion " << number << ": " << title << " -- "
              << problem << "\n";
  }
  std::cout.flush();
}

const GroupRow* find_row(const std::vector<GroupRow>& rows,
                         const std::string& label) {
  for (const auto& r : rows)
    if (r.label == label) return &r;
  return nullptr;
}

// independent route: lower central series from element-pair commutators only
Subgroup residual_bruteforce(const Group& G) {
  Subgroup cur = Subgroup::whole(G);
  for (;;) {
    Subgroup next = commutator_subgroup_bruteforce(cur, Subgroup::whole(G));
    if (next.same_elements(cur)) return next;
    cur = next;
  }
}

}  // namespace

int main() {
  RunConfig cfg;  // defaults: full catalog, order <= 2000, seed 42,
                  // all four lemmas, l0 sample cap 500
  cfg.threads = std::min(8u, std::thread::hardware_concurrency());

  std::vector<CatalogEntry> entries;
  std::vector<GroupRow> rows;
  try {
    entries = collect_entries(cfg);
    rows = run_rows(cfg, entries);
  } catch (const std::exception& e) {
    std::cout << "FAIL: catalog run aborted: " << e.what() << "\n";
    return 1;
  }

  criterion(1, "nilpotency iff trivial sinks across the catalog", [&] {
    std::ostringstream bad;
    if (rows.size() < 100)
      return std::string("catalog has fewer than 100 groups");
    for (const auto& r : rows) {
      if (r.capped) return "capped group in default catalog: " + r.label;
      if (r.nilpotent != (r.r_star == 0))
        bad << r.label << " nilpotent=" << r.nilpotent
            << " r_star=" << r.r_star << "; ";
    }
    return bad.str();
  });

  criterion(2, "inverted elementary-abelian family: order, r*, residual rank",
            [&] {
              std::ostringstream bad;
              for (int r = 0; r <= 3; ++r) {
                std::string label = "Ab" + std::to_string(r);
                const GroupRow* row = find_row(rows, label);
                if (!row) return label + " missing from the report";
                uint64_t expect_order = 2;
                for (int i = 0; i <= r; ++i) expect_order *= 3;
                if (row->order_str != std::to_string(expect_order))
                  bad << label << " order " << row->order_str << "; ";
                if (row->r_star != r + 1)
                  bad << label << " r_star " << row->r_star << " != " << r + 1
                      << "; ";
                if (row->rank_residual != r + 1 || !row->residual_exact)
                  bad << label << " residual rank " << row->rank_residual
                      << "; ";
              }
              return bad.str();
            });

  criterion(3, "SL2(p) diagonal pairs: T inside the sink, [T,g]=T, C_T(g)=1",
            [&] {
              std::ostringstream bad;
              for (int p : {5, 7, 11}) {
                Sl2DiagonalPair pair = sl2_diagonal_pair(p);
                const Enumeration& E = pair.group.elements();
                int g = E.index_of(pair.diagonal);
                SinkReport sr = minimal_sink_index(pair.group, g);
                Bitset in_sink(E.size());
                for (int s : sr.sink) in_sink.set(s);
                for (int t : pair.unipotent.indices()) {
                  if (!in_sink.test(t)) {
                    bad << "p=" << p << ": " << E.perm(t).cycles()
                        << " outside the sink; ";
                    break;
                  }
                }
                // [T,g] = T and C_T(g) = 1, recomputed here
                std::vector<int> comms;
                for (int t : pair.unipotent.indices()) {
                  if (t != 0 && E.conj(t, g) == t)
                    bad << "p=" << p << ": fixed point in T; ";
                  comms.push_back(E.comm(t, g));
                }
                auto [idx, gens] = closure_of_set(E, comms);
                if (idx != pair.unipotent.indices())
                  bad << "p=" << p << ": [T,g] != T; ";
              }
              return bad.str();
            });

  criterion(4, "lemma suites pass with zero failures (seed 42)", [&] {
    std::ostringstream bad;
    for (const auto& r : rows)
      for (const auto& [name, cell] : r.lemmas) {
        if (cell.status == CheckStatus::Fail)
          bad << r.label << "/" << name << " witness " << cell.witness << "; ";
        if (name == "l0" && cell.checked + cell.skipped > cfg.l0_sample_cap)
          bad << r.label << "/l0 exceeded the sample cap; ";
      }
    int lf2_checked = 0;
    bool sampler_engaged = false;
    for (const auto& r : rows) {
      auto it = r.lemmas.find("lf2");
      if (it != r.lemmas.end() && it->second.checked > 0) ++lf2_checked;
      auto l0 = r.lemmas.find("l0");
      if (l0 != r.lemmas.end() &&
          l0->second.checked + l0->second.skipped == cfg.l0_sample_cap)
        sampler_engaged = true;
    }
    if (lf2_checked < 10)
      bad << "only " << lf2_checked << " metadata-bearing lf2 runs; ";
    if (!sampler_engaged)
      bad << "no group reached the " << cfg.l0_sample_cap
          << "-pair sample cap; ";
    return bad.str();
  });

  criterion(5, "functional-graph sinks equal the iteration oracle, order <= 200",
            [&] {
              std::ostringstream bad;
              for (const auto& e : entries) {
                const Group& G = e.group;
                if (G.order() > 200) continue;
                const Enumeration& E = G.elements();
                for (int g = 0; g < E.size(); ++g) {
                  SinkReport sr = minimal_sink_index(G, g);
                  std::vector<int> oracle =
                      naive_sink_oracle(G, E.perm(g), uint64_t(E.size()));
                  if (sr.sink != oracle) {
                    bad << G.label() << " at " << E.perm(g).cycles() << "; ";
                    break;
                  }
                }
              }
              return bad.str();
            });

  criterion(6, "rank shortcuts equal exhaustive search on nilpotent and "
               "p-groups",
            [&] {
              std::ostringstream bad;
              for (const auto& e : entries) {
                const Group& G = e.group;
                if (G.order() <= 200 && is_nilpotent(G)) {
                  RankCertificate fast = rank(G, RankMode::Auto);
                  RankCertificate slow = rank(G, RankMode::ForceLattice);
                  if (fast.rank_value != slow.rank_value)
                    bad << G.label() << " shortcut " << fast.rank_value
                        << " vs lattice " << slow.rank_value << "; ";
                }
                uint64_t p = 0;
                if (G.order() <= 256 && is_prime_power(G.order(), &p)) {
                  Subgroup whole = Subgroup::whole(G);
                  int formula = frattini_quotient_rank(whole);
                  int search =
                      min_generators(whole, MinGenMode::SearchOnly).count;
                  if (formula != search)
                    bad << G.label() << " Frattini " << formula << " vs search "
                        << search << "; ";
                }
              }
              return bad.str();
            });

  criterion(7, "known structural values match brute force", [&] {
    std::ostringstream bad;
    Group s3 = entry_from_spec("S3").group;
    Subgroup r3 = nilpotent_residual(s3);
    if (r3.order() != 3 || !r3.same_elements(residual_bruteforce(s3)))
      bad << "residual of S3; ";
    if (rank(r3).rank_value != 1) bad << "rank residual S3; ";

    Group s4 = entry_from_spec("S4").group;
    Subgroup r4 = nilpotent_residual(s4);
    if (r4.order() != 12 || !r4.same_elements(residual_bruteforce(s4)))
      bad << "residual of S4; ";
    if (rank(r4).rank_value != 2) bad << "rank residual S4; ";
    if (fitting_height(s4) != 3) bad << "fitting height S4; ";

    Group a5 = entry_from_spec("A5").group;
    Subgroup d5 = commutator_subgroup_bruteforce(Subgroup::whole(a5),
                                                 Subgroup::whole(a5));
    if (!d5.is_whole()) bad << "A5 not perfect; ";
    if (!nilpotent_residual(a5).is_whole()) bad << "residual of A5; ";
    return bad.str();
  });

  criterion(8, "report files are identical across thread counts", [&] {
    // two full runs from scratch, nothing shared, different thread counts
    auto run_to_file = [&](int threads, const std::string& path) {
      RunConfig c = cfg;
      c.threads = threads;
      std::vector<CatalogEntry> fresh = collect_entries(c);
      std::ofstream f(path, std::ios::binary);
      write_report_csv(f, run_rows(c, fresh), c);
    };
    run_to_file(1, "acceptance_report_t1.csv");
    run_to_file(4, "acceptance_report_t4.csv");
    std::ifstream fa("acceptance_report_t1.csv", std::ios::binary);
    std::ifstream fb("acceptance_report_t4.csv", std::ios::binary);
    std::string a((std::istreambuf_iterator<char>(fa)),
                  std::istreambuf_iterator<char>());
    std::string b((std::istreambuf_iterator<char>(fb)),
                  std::istreambuf_iterator<char>());
    std::remove("acceptance_report_t1.csv");
    std::remove("acceptance_report_t4.csv");
    if (a.empty()) return std::string("empty report");
    if (a != b) return std::string("files differ");
    return std::string();
  });

  // the observed r* vs residual-rank table, for inspection
  std::cout << "\nr_star vs max rank(gamma_inf) over the catalog:\n";
  {
    std::map<int, std::pair<int, int>> table;
    for (const auto& r : rows) {
      auto& slot = table[r.r_star];
      slot.first = std::max(slot.first, r.rank_residual);
      ++slot.second;
    }
    for (auto& [rs, v] : table)
      std::cout << "  r_star=" << rs << "  max_rank_gamma_inf=" << v.first
                << "  groups=" << v.second << "\n";
  }

  if (g_failures == 0)
    std::cout << "\nall acceptance criteria passed\n";
  else
    std::cout << "\n" << g_failures << " acceptance criteria FAILED\n";
  return g_failures;
}
