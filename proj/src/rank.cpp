#include "engel/rank.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace engel {

namespace {

struct CyclicReps {
  std::vector<int> canon;   // canonical generators, ascending, identity absent
  std::vector<int> cyc_of;  // element -> canonical generator of <element>
};

CyclicReps cyclic_reps(const Enumeration& E, const std::vector<int>& ambient) {
  CyclicReps c;
  c.cyc_of.assign(E.size(), -1);
  c.cyc_of[0] = 0;
  for (int x : ambient) {
    if (c.cyc_of[x] >= 0) continue;
    int ox = E.order_of(x);
    int y = x;
    while (y != 0) {
      if (E.order_of(y) == ox) c.cyc_of[y] = x;
      y = E.mul(y, x);
    }
    c.canon.push_back(x);
  }
  return c;
}

std::vector<int> cyclic_elements(const Enumeration& E, int x) {
  std::vector<int> idx{0};
  int y = x;
  while (y != 0) {
    idx.push_back(y);
    y = E.mul(y, x);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

// conjugation-invariant fingerprint: order plus element-order histogram
uint64_t class_fingerprint(const Enumeration& E, const std::vector<int>& idx) {
  uint64_t sum = 0;
  for (int i : idx) sum += splitmix64(uint64_t(E.order_of(i)) * 0x9e37 + 17);
  return splitmix64(idx.size()) ^ sum;
}

uint64_t exact_set_hash(const std::vector<int>& idx) {
  uint64_t sum = 0;
  for (int i : idx) sum += splitmix64(uint64_t(i) + 0x1234567);
  return sum;
}

bool conjugate_in_ambient(const Enumeration& E, const std::vector<int>& ambient,
                          const std::vector<int>& K, const std::vector<int>& C,
                          const Bitset& C_mask) {
  if (K == C) return true;
  if (K.size() < 2) return false;  // trivial groups are equal or nothing
  int probe = K[1];
  for (int g : ambient) {
    if (!C_mask.test(E.conj(probe, g))) continue;
    bool all = true;
    for (int y : K)
      if (!C_mask.test(E.conj(y, g))) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

// fixed-size generating-tuple search over ascending candidate combinations;
// returns true and fills witness at the first generating tuple
bool search_tuples(const Enumeration& E, const std::vector<int>& cand,
                   uint64_t target, int k, std::vector<int>& witness) {
  std::vector<int> gens;
  std::function<bool(size_t, const Bitset&, int)> go =
      [&](size_t start, const Bitset& mask, int size) -> bool {
    int remaining = k - int(gens.size());
    if (remaining == 0) return uint64_t(size) == target;
    // every further generator at least doubles the subgroup, and the final
    // order must land on the target exactly
    uint64_t floor = remaining < 60 ? uint64_t(size) << remaining : UINT64_MAX;
    if (floor > target) return false;
    for (size_t i = start; i + remaining <= cand.size() + 0u; ++i) {
      int x = cand[i];
      if (mask.test(x)) continue;
      Bitset m2 = mask;
      int s2 = extend_closure(E, m2, size, gens, x);
      if (uint64_t(s2) == target && remaining > 1) continue;  // k is minimal
      gens.push_back(x);
      if (go(i + 1, m2, s2)) return true;
      gens.pop_back();
    }
    return false;
  };
  Bitset mask(E.size());
  mask.set(0);
  if (!go(0, mask, 1)) return false;
  witness = gens;
  return true;
}

int count_omega(const Enumeration& E, const std::vector<int>& idx, int p,
                const Bitset* modulo = nullptr) {
  int m = 0;
  for (int x : idx) {
    int xp = E.pow(x, uint64_t(p));
    if (modulo ? modulo->test(xp) : xp == 0) ++m;
  }
  return m;
}

// d of an abelian subgroup: max over p of log_p |{x : x^p = 1}|
int abelian_rank_formula(const Enumeration& E, const Subgroup& H, int* best_p) {
  int d = 0;
  for (int p : prime_divisors(H.order())) {
    int m = count_omega(E, H.indices(), p);
    int dp = exact_log(uint64_t(p), uint64_t(m));
    if (dp < 0) throw MathError("omega subgroup count is not a p-power");
    if (dp > d) {
      d = dp;
      if (best_p) *best_p = p;
    }
  }
  return d;
}

// d(H/H'), a lower bound for d(H); computed by counting, no quotient built
int abelianization_lower_bound(const Enumeration& E, const Subgroup& H) {
  Subgroup D = commutator_subgroup(H, H);
  uint64_t index = H.order() / D.order();
  if (index == 1) return 1;
  int lb = 1;
  for (int p : prime_divisors(index)) {
    int m = count_omega(E, H.indices(), p, &D.mask());
    int dp = exact_log(uint64_t(p), uint64_t(m) / D.order());
    if (dp < 0) throw MathError("abelianization omega count is not a p-power");
    lb = std::max(lb, dp);
  }
  return lb;
}

struct FrattiniData {
  int p = 0;
  int d = 0;
  std::vector<int> phi_idx;
  std::vector<int> phi_gens;
};

FrattiniData frattini_data(const Enumeration& E, const Subgroup& P,
                           uint64_t p) {
  Subgroup D = commutator_subgroup(P, P);
  std::vector<int> seed = D.indices();
  for (int x : P.indices()) seed.push_back(E.pow(x, p));
  auto [idx, gens] = closure_of_set(E, seed);
  FrattiniData f;
  f.p = int(p);
  f.phi_idx = std::move(idx);
  f.phi_gens = std::move(gens);
  f.d = exact_log(p, P.order() / f.phi_idx.size());
  if (f.d < 0) throw MathError("Frattini index is not a p-power");
  return f;
}

GenWitness frattini_min_generators(const Enumeration& E, const Subgroup& P,
                                   uint64_t p) {
  FrattiniData f = frattini_data(E, P, p);
  Bitset mask(E.size());
  for (int i : f.phi_idx) mask.set(i);
  int size = int(f.phi_idx.size());
  std::vector<int> gens = f.phi_gens;
  std::vector<int> chosen;
  for (int x : P.indices()) {
    if (mask.test(x)) continue;
    size = extend_closure(E, mask, size, gens, x);
    gens.push_back(x);
    chosen.push_back(x);
    if (uint64_t(size) == P.order()) break;
  }
  if (int(chosen.size()) != f.d)
    throw MathError("greedy Frattini basis has wrong size");
  if (closure_of_set(E, chosen).first.size() != P.order())
    throw MathError("Frattini basis does not generate");
  return {f.d, std::move(chosen)};
}

uint64_t lattice_cache_key(const Subgroup& H, int cap) {
  return splitmix64(0x4c415454u) ^ H.set_hash() ^ splitmix64(uint64_t(cap));
}

struct CachedLattice {
  std::vector<int> ambient;
  Lattice lat;
};

uint64_t rank_cache_key(const Subgroup& H, RankMode mode, int cap) {
  return splitmix64(0x52414e4bu) ^ H.set_hash() ^
         splitmix64(uint64_t(cap) * 2 + (mode == RankMode::ForceLattice));
}

struct CachedRank {
  std::vector<int> ambient;
  RankCertificate cert;
};

}  // namespace

int frattini_quotient_rank(const Subgroup& P) {
  uint64_t p = 0;
  if (!is_prime_power(P.order(), &p))
    throw Error("Frattini rank formula needs a p-group");
  return frattini_data(P.parent().elements(), P, p).d;
}

GenWitness min_generators(const Subgroup& H, MinGenMode mode) {
  const Enumeration& E = H.parent().elements();
  uint64_t n = H.order();
  if (n == 1) return {0, {}};

  if (mode == MinGenMode::Auto) {
    uint64_t p = 0;
    if (is_prime_power(n, &p)) return frattini_min_generators(E, H, p);
  }

  CyclicReps cyc = cyclic_reps(E, H.indices());

  if (mode == MinGenMode::Auto) {
    int d = -1;
    if (is_abelian(H)) {
      d = abelian_rank_formula(E, H, nullptr);
    } else if (is_nilpotent_subgroup(H)) {
      d = 0;
      for (int p : prime_divisors(n))
        d = std::max(d, min_generators(sylow_subgroup(H, p)).count);
    }
    if (d >= 0) {
      std::vector<int> w;
      if (!search_tuples(E, cyc.canon, n, d, w))
        throw MathError("no generating tuple at the formula rank");
      return {d, std::move(w)};
    }
  }

  // increasing k; k = 1 is a cyclicity scan
  for (int x : H.indices())
    if (uint64_t(E.order_of(x)) == n) return {1, {x}};
  int start = 2;
  if (mode == MinGenMode::Auto)
    start = std::max(start, abelianization_lower_bound(E, H));
  for (int k = start; k <= 64; ++k) {
    std::vector<int> w;
    if (search_tuples(E, cyc.canon, n, k, w)) return {k, std::move(w)};
  }
  throw MathError("generator search exceeded 64 generators");
}

Lattice subgroup_classes(const Subgroup& ambient, const LatticeOptions& opts) {
  const Group& G = ambient.parent();
  const uint64_t key = lattice_cache_key(ambient, opts.class_cap);
  if (auto hit = G.cache_get(key)) {
    auto c = std::static_pointer_cast<CachedLattice>(hit);
    if (c->ambient == ambient.indices()) return c->lat;
  }

  const Enumeration& E = G.elements();
  const std::vector<int>& amb = ambient.indices();
  const bool trivial_conj = is_abelian(ambient);
  CyclicReps cyc = cyclic_reps(E, amb);

  struct ClassRec {
    std::vector<int> idx;
    Bitset mask;
    std::vector<int> gens;
    uint64_t sethash;
  };
  std::vector<ClassRec> classes;
  std::unordered_map<uint64_t, std::vector<int>> byfp;

  auto try_add = [&](std::vector<int> idx, std::vector<int> gens) {
    uint64_t fp = class_fingerprint(E, idx);
    uint64_t sh = exact_set_hash(idx);
    auto& bucket = byfp[fp];
    for (int ci : bucket) {
      const ClassRec& c = classes[ci];
      if (c.idx.size() != idx.size()) continue;
      if (c.sethash == sh && c.idx == idx) return;
      if (!trivial_conj && conjugate_in_ambient(E, amb, idx, c.idx, c.mask))
        return;
    }
    ClassRec rec;
    rec.mask = Bitset(E.size());
    for (int i : idx) rec.mask.set(i);
    rec.idx = std::move(idx);
    rec.gens = std::move(gens);
    rec.sethash = sh;
    bucket.push_back(int(classes.size()));
    classes.push_back(std::move(rec));
  };

  try_add({0}, {});
  for (int x : cyc.canon) try_add(cyclic_elements(E, x), {x});

  bool complete = true;
  for (size_t ci = 0; ci < classes.size() && complete; ++ci) {
    if (classes[ci].idx.size() == amb.size()) continue;
    // normalizer of the class representative within the ambient subgroup
    std::vector<int> N;
    for (int g : amb) {
      bool ok = true;
      for (int s : classes[ci].gens)
        if (!classes[ci].mask.test(E.conj(s, g))) {
          ok = false;
          break;
        }
      if (ok) N.push_back(g);
    }
    std::vector<int> ngens = greedy_generator_indices(E, N);

    std::vector<char> visited(E.size(), 0);
    for (int x : cyc.canon) {
      if (classes[ci].mask.test(x) || visited[x]) continue;
      // skip the whole normalizer orbit of <x>: it yields conjugate results
      std::vector<int> orbit{x};
      visited[x] = 1;
      for (size_t k = 0; k < orbit.size(); ++k)
        for (int c : ngens) {
          int z = cyc.cyc_of[E.conj(orbit[k], c)];
          if (!visited[z]) {
            visited[z] = 1;
            orbit.push_back(z);
          }
        }
      Bitset m = classes[ci].mask;
      std::vector<int> extra;
      extend_closure(E, m, int(classes[ci].idx.size()), classes[ci].gens, x,
                     &extra);
      std::vector<int> idx = classes[ci].idx;
      idx.insert(idx.end(), extra.begin(), extra.end());
      std::sort(idx.begin(), idx.end());
      std::vector<int> gens = classes[ci].gens;
      gens.push_back(x);
      try_add(std::move(idx), std::move(gens));
      if (int(classes.size()) > opts.class_cap) {
        complete = false;
        break;
      }
    }
  }

  std::vector<int> order(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (classes[a].idx.size() != classes[b].idx.size())
      return classes[a].idx.size() < classes[b].idx.size();
    return classes[a].idx < classes[b].idx;
  });

  Lattice lat;
  lat.complete = complete;
  lat.classes.reserve(classes.size());
  for (int i : order)
    lat.classes.push_back(Subgroup::from_indices(G, std::move(classes[i].idx),
                                                 std::move(classes[i].gens)));

  auto cached = std::make_shared<CachedLattice>();
  cached->ambient = ambient.indices();
  cached->lat = lat;
  G.cache_put(key, cached);
  return lat;
}

RankCertificate rank(const Subgroup& H, RankMode mode,
                     const LatticeOptions& opts) {
  const Group& G = H.parent();
  const uint64_t key = rank_cache_key(H, mode, opts.class_cap);
  if (auto hit = G.cache_get(key)) {
    auto c = std::static_pointer_cast<CachedRank>(hit);
    if (c->ambient == H.indices()) return c->cert;
  }
  const Enumeration& E = G.elements();

  RankCertificate cert;
  auto done = [&](RankCertificate c) {
    auto cached = std::make_shared<CachedRank>();
    cached->ambient = H.indices();
    cached->cert = c;
    G.cache_put(key, cached);
    return c;
  };

  if (H.order() == 1) {
    cert.rank_value = 0;
    cert.method = RankMethod::AbelianShortcut;
    cert.witness_subgroup = H;
    return done(cert);
  }

  if (mode == RankMode::Auto) {
    if (is_abelian(H)) {
      // every subgroup of an abelian group of rank r has rank <= r
      int best_p = 0;
      cert.rank_value = abelian_rank_formula(E, H, &best_p);
      cert.method = RankMethod::AbelianShortcut;
      std::vector<int> omega;
      for (int x : H.indices())
        if (E.pow(x, uint64_t(best_p)) == 0) omega.push_back(x);
      cert.witness_subgroup = Subgroup::from_indices(G, std::move(omega));
      GenWitness gw = min_generators(cert.witness_subgroup);
      if (gw.count != cert.rank_value)
        throw MathError("omega witness rank mismatch");
      for (int w : gw.witness) cert.witness_generators.push_back(E.perm(w));
      return done(cert);
    }
    uint64_t p = 0;
    if (!is_prime_power(H.order(), &p) && is_nilpotent_subgroup(H)) {
      // rank of a nilpotent group is the max of its Sylow subgroup ranks
      RankCertificate best;
      for (int q : prime_divisors(H.order())) {
        RankCertificate cq = rank(sylow_subgroup(H, q), RankMode::Auto, opts);
        if (cq.rank_value > best.rank_value) best = cq;
      }
      best.method = RankMethod::NilpotentShortcut;
      return done(best);
    }
  }

  Lattice lat = subgroup_classes(H, opts);
  int best = -1;
  Subgroup witness;
  GenWitness bw;
  for (const Subgroup& C : lat.classes) {
    GenWitness gw = min_generators(C);
    if (gw.count > best) {
      best = gw.count;
      witness = C;
      bw = std::move(gw);
    }
  }
  cert.rank_value = best;
  cert.method = RankMethod::ExhaustiveLattice;
  cert.exact = lat.complete;
  cert.witness_subgroup = witness;
  for (int w : bw.witness) cert.witness_generators.push_back(E.perm(w));
  cert.classes_enumerated = int(lat.classes.size());
  return done(cert);
}

RankCertificate rank(const Group& G, RankMode mode, const LatticeOptions& opts) {
  return rank(Subgroup::whole(G), mode, opts);
}

const char* rank_method_name(RankMethod m) {
  switch (m) {
    case RankMethod::AbelianShortcut:
      return "abelian-shortcut";
    case RankMethod::NilpotentShortcut:
      return "nilpotent-shortcut";
    case RankMethod::ExhaustiveLattice:
      return "exhaustive-lattice";
  }
  return "";
}

std::string certificate_record(const RankCertificate& cert,
                               const std::string& label) {
  std::string out = "{\"group\":\"" + label + "\",\"rank\":";
  out += std::to_string(cert.rank_value);
  out += ",\"exact\":";
  out += cert.exact ? "true" : "false";
  out += ",\"witness\":[";
  for (size_t i = 0; i < cert.witness_generators.size(); ++i) {
    if (i) out += ',';
    out += '"' + cert.witness_generators[i].cycles() + '"';
  }
  out += "],\"method\":\"";
  out += rank_method_name(cert.method);
  out += "\"}";
  return out;
}

CheckResult verify_kovacs(const Group& G, const LatticeOptions& opts) {
  RankCertificate rg = rank(G, RankMode::Auto, opts);
  if (!rg.exact) return CheckResult::skipped("lattice cap hit");
  int d = 0;
  for (int p : prime_divisors(G.order())) {
    RankCertificate rp = rank(sylow_subgroup(G, p), RankMode::Auto, opts);
    if (!rp.exact) return CheckResult::skipped("lattice cap hit on Sylow");
    d = std::max(d, rp.rank_value);
  }
  std::string detail = "rank=" + std::to_string(rg.rank_value) +
                       " max_sylow_rank=" + std::to_string(d);
  if (rg.rank_value <= d + 1) return CheckResult::pass(detail);
  return CheckResult::fail(G.label(), detail);
}

CheckResult verify_lprod(const Subgroup& target, const Subgroup& actors) {
  if (!target.parent().same_object(actors.parent()))
    throw Error("subgroups live in different parent groups");
  const Enumeration& E = target.parent().elements();
  for (int a : actors.generator_indices())
    for (int t : target.generator_indices())
      if (!target.contains_index(E.conj(t, a)))
        return CheckResult::skipped("actors do not normalize the target");

  // [T,A] from every element pair
  Subgroup lhs = commutator_subgroup_bruteforce(target, actors);
  // product of the [T,a_i] over the stored generators of A
  std::vector<int> acc;
  for (int a : actors.generator_indices()) {
    for (int t : target.indices()) acc.push_back(E.comm(t, a));
  }
  auto [idx, gens] = closure_of_set(E, acc);
  if (idx == lhs.indices())
    return CheckResult::pass("|[T,A]|=" + std::to_string(idx.size()));
  // first element in the symmetric difference
  Bitset m(E.size());
  for (int i : idx) m.set(i);
  std::string w;
  for (int y : lhs.indices())
    if (!m.test(y)) {
      w = E.perm(y).cycles();
      break;
    }
  if (w.empty())
    for (int y : idx)
      if (!lhs.contains_index(y)) {
        w = E.perm(y).cycles();
        break;
      }
  return CheckResult::fail(w, "commutator product mismatch");
}

CheckResult verify_lf2(const Group& H, const HallComplements& hall) {
  std::optional<int> fh = fitting_height(H);
  if (!fh || *fh > 2)
    return CheckResult::skipped("Fitting height is not 1 or 2");
  const Enumeration& E = H.elements();
  Subgroup residual = nilpotent_residual(H);
  Subgroup F = fitting_subgroup(H);

  std::vector<int> acc;
  for (int q : prime_divisors(F.order())) {
    auto it = hall.find(q);
    if (it == hall.end())
      return CheckResult::skipped("no Hall complement metadata for q=" +
                                  std::to_string(q));
    Subgroup Hq = Subgroup::closure(H, it->second);
    uint64_t expected = H.order() / p_part(H.order(), uint64_t(q));
    if (Hq.order() != expected)
      return CheckResult::skipped("Hall metadata order mismatch for q=" +
                                  std::to_string(q));
    Subgroup Fq = sylow_subgroup(F, q);
    Subgroup part = commutator_subgroup_bruteforce(Fq, Hq);
    acc.insert(acc.end(), part.indices().begin(), part.indices().end());
  }
  if (acc.empty()) acc.push_back(0);
  auto [idx, gens] = closure_of_set(E, acc);
  if (idx == residual.indices())
    return CheckResult::pass("|residual|=" + std::to_string(idx.size()));
  Bitset m(E.size());
  for (int i : idx) m.set(i);
  std::string w;
  for (int y : residual.indices())
    if (!m.test(y)) {
      w = E.perm(y).cycles();
      break;
    }
  if (w.empty())
    for (int y : idx)
      if (!residual.contains_index(y)) {
        w = E.perm(y).cycles();
        break;
      }
  return CheckResult::fail(w, "residual product mismatch");
}

}  // namespace engel
