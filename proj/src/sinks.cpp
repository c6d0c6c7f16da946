#include "engel/sinks.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "engel/rank.hpp"

namespace engel {

SinkReport minimal_sink_index(const Group& G, int g) {
  const Enumeration& E = G.elements();
  const int n = E.size();
  std::vector<int> phi(n);
  for (int x = 0; x < n; ++x) phi[x] = E.comm(x, g);

  // peel the acyclic part; what survives is periodic
  std::vector<int> indeg(n, 0);
  for (int x = 0; x < n; ++x) ++indeg[phi[x]];
  std::vector<int> removal;
  removal.reserve(n);
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) removal.push_back(x);
  for (size_t k = 0; k < removal.size(); ++k) {
    int y = phi[removal[k]];
    if (--indeg[y] == 0) removal.push_back(y);
  }
  std::vector<char> periodic(n, 1);
  for (int x : removal) periodic[x] = 0;

  SinkReport r;
  r.element = g;
  for (int x = 0; x < n; ++x)
    if (periodic[x]) r.sink.push_back(x);

  // tails: walk the removal list backwards so phi-targets are done first
  std::vector<int> tail(n, 0);
  for (size_t k = removal.size(); k-- > 0;) {
    int x = removal[k];
    tail[x] = 1 + tail[phi[x]];
    r.max_tail = std::max(r.max_tail, tail[x]);
  }

  if (!periodic[0])
    throw MathError("identity missing from an Engel sink");
  // phi must permute the sink
  Bitset in_sink(n);
  for (int x : r.sink) in_sink.set(x);
  Bitset image(n);
  for (int x : r.sink) {
    if (!in_sink.test(phi[x]) || image.test(phi[x]))
      throw MathError("commutator map does not permute the sink");
    image.set(phi[x]);
  }

  auto [idx, gens] = closure_of_set(E, r.sink);
  r.sink_subgroup = Subgroup::from_indices(G, std::move(idx), std::move(gens));
  return r;
}

SinkReport minimal_sink(const Group& G, const Permutation& g) {
  const Enumeration& E = G.elements();
  int gi = E.index_of(g);
  if (gi < 0)
    throw Error("element " + g.cycles() + " is not in the group");
  return minimal_sink_index(G, gi);
}

std::vector<int> naive_sink_oracle(const Group& G, const Permutation& g,
                                   uint64_t horizon) {
  const Enumeration& E = G.elements();
  int gi = E.index_of(g);
  if (gi < 0)
    throw Error("element " + g.cycles() + " is not in the group");
  if (horizon < uint64_t(E.size()))
    throw Error("oracle horizon must be at least the group order");
  Bitset seen(E.size());
  std::vector<int> out;
  for (int x = 0; x < E.size(); ++x) {
    int y = x;
    for (uint64_t k = 0; k < horizon; ++k) y = E.comm(y, gi);
    int z = y;
    do {
      if (!seen.test(z)) {
        seen.set(z);
        out.push_back(z);
      }
      z = E.comm(z, gi);
    } while (z != y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SinkProfile sink_profile(const Group& G, int audit_samples,
                         uint64_t audit_seed, const LatticeOptions& rank_opts) {
  const Enumeration& E = G.elements();
  const ConjugacyClasses& cc = conjugacy_classes(G);
  SinkProfile prof;
  prof.class_of = cc.class_of;
  prof.to_rep = cc.to_rep;
  prof.class_reports.reserve(cc.reps.size());
  for (int rep : cc.reps)
    prof.class_reports.push_back(minimal_sink_index(G, rep));

  // equivariance audit: E(g^h) must equal E(g)^h
  if (E.size() > 1 && audit_samples > 0) {
    std::mt19937_64 rng(audit_seed);
    for (int s = 0; s < audit_samples; ++s) {
      int x = int(rng() % uint64_t(E.size()));
      const SinkReport& repr = prof.class_reports[cc.class_of[x]];
      int h = cc.to_rep[x];
      std::vector<int> expected;
      expected.reserve(repr.sink.size());
      for (int e : repr.sink) expected.push_back(E.conj(e, h));
      std::sort(expected.begin(), expected.end());
      SinkReport direct = minimal_sink_index(G, x);
      if (direct.sink != expected)
        throw MathError("sink equivariance audit failed on " + G.label() +
                        " at element " + E.perm(x).cycles());
    }
  }

  // rank each distinct sink subgroup once
  std::vector<std::pair<size_t, int>> seen;  // (class index, rank)
  for (auto& rep : prof.class_reports) {
    int r = -1;
    for (auto& [ci, rr] : seen)
      if (prof.class_reports[ci].sink_subgroup.set_hash() ==
              rep.sink_subgroup.set_hash() &&
          prof.class_reports[ci].sink_subgroup.same_elements(
              rep.sink_subgroup)) {
        r = rr;
        break;
      }
    if (r < 0) {
      r = rank(rep.sink_subgroup, RankMode::Auto, rank_opts).rank_value;
      seen.emplace_back(&rep - prof.class_reports.data(), r);
    }
    rep.sink_rank = r;
    prof.r_star = std::max(prof.r_star, r);
  }
  return prof;
}

SinkReport sink_report_for(const Group& G, const SinkProfile& profile,
                           int element) {
  const Enumeration& E = G.elements();
  const SinkReport& rep = profile.class_reports.at(profile.class_of.at(element));
  int h = profile.to_rep[element];
  SinkReport out;
  out.element = element;
  out.max_tail = rep.max_tail;
  out.sink_rank = rep.sink_rank;
  out.sink.reserve(rep.sink.size());
  for (int s : rep.sink) out.sink.push_back(E.conj(s, h));
  std::sort(out.sink.begin(), out.sink.end());
  std::vector<int> sub;
  sub.reserve(rep.sink_subgroup.indices().size());
  for (int s : rep.sink_subgroup.indices()) sub.push_back(E.conj(s, h));
  std::sort(sub.begin(), sub.end());
  out.sink_subgroup = Subgroup::from_indices(G, std::move(sub));
  return out;
}

CheckResult verify_l0_index(const Group& G, const Subgroup& P, int gi,
                            const Subgroup& sink_subgroup_of_g) {
  const Enumeration& E = G.elements();
  if (P.order() == 1) return CheckResult::skipped("trivial subgroup");
  uint64_t p = 0;
  if (!is_prime_power(P.order(), &p))
    return CheckResult::skipped("not a p-subgroup");
  if (uint64_t(E.order_of(gi)) % p == 0)
    return CheckResult::skipped("element order not coprime to p");
  for (int s : P.generator_indices())
    if (!P.contains_index(E.conj(s, gi)))
      return CheckResult::skipped("element does not normalize the subgroup");

  std::vector<int> comms;
  comms.reserve(P.indices().size());
  for (int x : P.indices()) comms.push_back(E.comm(x, gi));
  auto [idx, gens] = closure_of_set(E, comms);
  for (int y : idx)
    if (!sink_subgroup_of_g.contains_index(y))
      return CheckResult::fail(E.perm(y).cycles(),
                               "[P,g] escapes the sink subgroup");
  return CheckResult::pass("|[P,g]|=" + std::to_string(idx.size()) +
                           " inside |<E(g)>|=" +
                           std::to_string(sink_subgroup_of_g.order()));
}

CheckResult verify_l0(const Group& G, const Subgroup& P,
                      const Permutation& g) {
  const Enumeration& E = G.elements();
  if (!P.parent().same_object(G))
    throw Error("subgroup belongs to a different group");
  int gi = E.index_of(g);
  if (gi < 0)
    throw Error("element " + g.cycles() + " is not in the group");
  SinkReport sr = minimal_sink_index(G, gi);
  return verify_l0_index(G, P, gi, sr.sink_subgroup);
}

}  // namespace engel
