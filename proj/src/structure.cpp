#include "engel/structure.hpp"

#include <algorithm>
#include <numeric>

namespace engel {

namespace {

constexpr uint64_t kKeyLcs = 0x4c435301;
constexpr uint64_t kKeyDerived = 0x445301;
constexpr uint64_t kKeyFitting = 0x46495401;
constexpr uint64_t kKeyFitSeries = 0x465301;
constexpr uint64_t kKeyConj = 0x434a01;

void require_same_parent(const Subgroup& A, const Subgroup& B) {
  if (!A.parent().same_object(B.parent()))
    throw Error("subgroups live in different parent groups");
}

}  // namespace

std::vector<int> prime_divisors(uint64_t n) {
  std::vector<int> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(int(p));
  return ps;
}

std::pair<std::vector<int>, std::vector<int>> closure_of_set(
    const Enumeration& E, const std::vector<int>& elems) {
  Bitset mask(E.size());
  mask.set(0);
  int size = 1;
  std::vector<int> gens;
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  for (int x : sorted) {
    if (mask.test(x)) continue;
    size = extend_closure(E, mask, size, gens, x);
    gens.push_back(x);
  }
  std::vector<int> out;
  out.reserve(size);
  for (int i = 0; i < mask.size(); ++i)
    if (mask.test(i)) out.push_back(i);
  return {out, gens};
}

Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B) {
  require_same_parent(A, B);
  const Enumeration& E = A.parent().elements();
  std::vector<int> seeds;
  for (int a : A.generator_indices())
    for (int b : B.generator_indices()) {
      int c = E.comm(a, b);
      if (c != 0) seeds.push_back(c);
    }
  std::vector<int> conj_gens = A.generator_indices();
  conj_gens.insert(conj_gens.end(), B.generator_indices().begin(),
                   B.generator_indices().end());
  std::vector<int> idx = normal_closure_indices(E, std::move(seeds), conj_gens);
  return Subgroup::from_indices(A.parent(), std::move(idx));
}

Subgroup commutator_subgroup_bruteforce(const Subgroup& A, const Subgroup& B) {
  require_same_parent(A, B);
  const Enumeration& E = A.parent().elements();
  std::vector<int> comms;
  Bitset seen(E.size());
  for (int a : A.indices())
    for (int b : B.indices()) {
      int c = E.comm(a, b);
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  auto [idx, gens] = closure_of_set(E, comms);
  return Subgroup::from_indices(A.parent(), std::move(idx), std::move(gens));
}

namespace {

Series descending_series(const Group& G, SeriesKind kind) {
  Series s;
  s.kind = kind;
  s.terms.push_back(Subgroup::whole(G));
  for (;;) {
    const Subgroup& cur = s.terms.back();
    Subgroup next = kind == SeriesKind::Derived
                        ? commutator_subgroup(cur, cur)
                        : commutator_subgroup(cur, Subgroup::whole(G));
    if (next.same_elements(cur)) {
      s.terms.push_back(next);
      s.stabilized = true;
      return s;
    }
    s.terms.push_back(next);
  }
}

}  // namespace

Series lower_central_series(const Group& G) {
  if (auto hit = G.cache_get(kKeyLcs))
    return *std::static_pointer_cast<Series>(hit);
  Series s = descending_series(G, SeriesKind::LowerCentral);
  G.cache_put(kKeyLcs, std::make_shared<Series>(s));
  return s;
}

Subgroup nilpotent_residual(const Group& G) {
  return lower_central_series(G).terms.back();
}

Series derived_series(const Group& G) {
  if (auto hit = G.cache_get(kKeyDerived))
    return *std::static_pointer_cast<Series>(hit);
  Series s = descending_series(G, SeriesKind::Derived);
  G.cache_put(kKeyDerived, std::make_shared<Series>(s));
  return s;
}

bool is_soluble(const Group& G) {
  return derived_series(G).terms.back().is_trivial();
}

bool is_abelian(const Subgroup& H) {
  const Enumeration& E = H.parent().elements();
  const auto& g = H.generator_indices();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (E.mul(g[i], g[j]) != E.mul(g[j], g[i])) return false;
  return true;
}

bool is_abelian(const Group& G) { return is_abelian(Subgroup::whole(G)); }

namespace {

bool normalized_by(const Enumeration& E, const Subgroup& H,
                   const std::vector<int>& elems) {
  for (int g : elems)
    for (int s : H.generator_indices())
      if (!H.contains_index(E.conj(s, g))) return false;
  return true;
}

}  // namespace

bool is_nilpotent_subgroup(const Subgroup& H) {
  const Enumeration& E = H.parent().elements();
  for (int p : prime_divisors(H.order())) {
    Subgroup S = sylow_subgroup(H, p);
    if (!normalized_by(E, S, H.generator_indices())) return false;
  }
  return true;
}

bool is_nilpotent(const Group& G) {
  bool via_series = nilpotent_residual(G).is_trivial();
  bool via_sylow = is_nilpotent_subgroup(Subgroup::whole(G));
  if (via_series != via_sylow)
    throw MathError("nilpotency cross-check disagrees on " + G.label());
  return via_series;
}

std::vector<int> normalizer_indices(const Subgroup& ambient,
                                    const Subgroup& H) {
  require_same_parent(ambient, H);
  const Enumeration& E = ambient.parent().elements();
  std::vector<int> out;
  for (int g : ambient.indices()) {
    bool ok = true;
    for (int s : H.generator_indices())
      if (!H.contains_index(E.conj(s, g))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

Subgroup sylow_subgroup(const Subgroup& ambient, int p) {
  const Group& G = ambient.parent();
  const Enumeration& E = G.elements();
  uint64_t n = ambient.order();
  uint64_t pe = p_part(n, uint64_t(p));
  if (pe == 1) return Subgroup::trivial(G);

  // seed: first p-element of maximal order
  int best = -1, best_ord = 0;
  for (int x : ambient.indices()) {
    int o = E.order_of(x);
    if (o > 1 && exact_log(uint64_t(p), uint64_t(o)) >= 0 && o > best_ord) {
      best_ord = o;
      best = x;
    }
  }
  Subgroup P = Subgroup::closure_indices(G, {best});
  while (P.order() < pe) {
    std::vector<int> N = normalizer_indices(ambient, P);
    int chosen = -1;
    for (int y : N) {
      if (P.contains_index(y)) continue;
      int o = E.order_of(y);
      if (o > 1 && exact_log(uint64_t(p), uint64_t(o)) >= 0) {
        chosen = y;
        break;
      }
    }
    if (chosen < 0)
      throw MathError("Sylow ascent stalled below the full p-part");
    std::vector<int> gens = P.generator_indices();
    gens.push_back(chosen);
    P = Subgroup::closure_indices(G, std::move(gens));
  }
  return P;
}

Subgroup sylow_subgroup(const Group& G, int p) {
  return sylow_subgroup(Subgroup::whole(G), p);
}

Subgroup p_core(const Group& G, int p) {
  const Enumeration& E = G.elements();
  Subgroup S = sylow_subgroup(G, p);
  if (S.is_trivial()) return S;
  std::vector<int> cur = S.indices();
  for (int g = 0; g < E.size() && cur.size() > 1; ++g) {
    // keep x with x in S^g, i.e. x^(g^-1) in S
    int gi = E.inv(g);
    std::vector<int> next;
    next.reserve(cur.size());
    for (int x : cur)
      if (S.contains_index(E.conj(x, gi))) next.push_back(x);
    cur = std::move(next);
  }
  return Subgroup::from_indices(G, std::move(cur));
}

Subgroup fitting_subgroup(const Group& G) {
  if (auto hit = G.cache_get(kKeyFitting))
    return *std::static_pointer_cast<Subgroup>(hit);
  const Enumeration& E = G.elements();
  std::vector<int> units;
  for (int p : prime_divisors(E.size())) {
    Subgroup O = p_core(G, p);
    units.insert(units.end(), O.indices().begin(), O.indices().end());
  }
  if (units.empty()) units.push_back(0);
  auto [idx, gens] = closure_of_set(E, units);
  Subgroup F = Subgroup::from_indices(G, std::move(idx), std::move(gens));
  if (!normalized_by(E, F, Subgroup::whole(G).generator_indices()) ||
      !is_nilpotent_subgroup(F))
    throw MathError("Fitting subgroup postcondition failed on " + G.label());
  G.cache_put(kKeyFitting, std::make_shared<Subgroup>(F));
  return F;
}

Permutation Quotient::action_of(int parent_elem) const {
  std::vector<int> img(d_->reps.size());
  const Enumeration& E = d_->parent.elements();
  for (size_t c = 0; c < d_->reps.size(); ++c)
    img[c] = d_->coset_of[E.mul(d_->reps[c], parent_elem)];
  return Permutation(std::move(img));
}

int Quotient::project(int parent_elem) const {
  return d_->quotient.elements().index_of(action_of(parent_elem));
}

Subgroup Quotient::preimage(const Subgroup& sub_of_quotient) const {
  if (!sub_of_quotient.parent().same_object(d_->quotient))
    throw Error("preimage: subgroup does not live in this quotient");
  const Enumeration& E = d_->parent.elements();
  std::vector<int> idx;
  std::vector<int> lift(d_->quotient.elements().size(), -1);
  for (int x = 0; x < E.size(); ++x) {
    int q = project(x);
    if (lift[q] < 0) lift[q] = x;
    if (sub_of_quotient.contains_index(q)) idx.push_back(x);
  }
  std::vector<int> gens = d_->kernel.generator_indices();
  for (int qg : sub_of_quotient.generator_indices()) gens.push_back(lift[qg]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Subgroup::from_indices(d_->parent, std::move(idx), std::move(gens));
}

Quotient quotient_action(const Group& G, const Subgroup& N) {
  if (!N.parent().same_object(G))
    throw Error("quotient: subgroup of a different group");
  const Enumeration& E = G.elements();
  if (!normalized_by(E, N, Subgroup::whole(G).generator_indices()))
    throw Error("quotient: subgroup is not normal");
  uint64_t index = uint64_t(E.size()) / N.order();
  if (index > uint64_t(G.options().enumeration_threshold))
    throw Error("quotient index exceeds enumeration threshold");

  auto d = std::make_shared<Quotient::Data>();
  d->parent = G;
  d->kernel = N;
  d->coset_of.assign(E.size(), -1);
  for (int x = 0; x < E.size(); ++x) {
    if (d->coset_of[x] >= 0) continue;
    int cid = int(d->reps.size());
    d->reps.push_back(x);
    for (int b : N.indices()) d->coset_of[E.mul(b, x)] = cid;
  }
  if (d->reps.size() != index)
    throw MathError("coset count mismatch in quotient construction");

  std::vector<Permutation> qgens;
  const int deg = int(d->reps.size());
  for (const auto& g : G.generators()) {
    int gi = E.index_of(g);
    std::vector<int> img(deg);
    for (int c = 0; c < deg; ++c) img[c] = d->coset_of[E.mul(d->reps[c], gi)];
    qgens.emplace_back(std::move(img));
  }
  d->quotient = Group::from_generators(
      deg, std::move(qgens), G.label() + "/N" + std::to_string(N.order()),
      G.options());

  Quotient q;
  q.d_ = std::move(d);
  return q;
}

Series fitting_series(const Group& G) {
  if (auto hit = G.cache_get(kKeyFitSeries))
    return *std::static_pointer_cast<Series>(hit);
  Series s;
  s.kind = SeriesKind::Fitting;
  s.terms.push_back(fitting_subgroup(G));
  for (;;) {
    const Subgroup& cur = s.terms.back();
    if (cur.is_whole()) {
      s.stabilized = true;
      s.height = int(s.terms.size());
      break;
    }
    Quotient q = quotient_action(G, cur);
    Subgroup next = q.preimage(fitting_subgroup(q.group()));
    if (next.same_elements(cur)) {
      s.stabilized = true;  // stuck below G: height undefined
      break;
    }
    s.terms.push_back(next);
  }
  G.cache_put(kKeyFitSeries, std::make_shared<Series>(s));
  return s;
}

std::optional<int> fitting_height(const Group& G) {
  return fitting_series(G).height;
}

const ConjugacyClasses& conjugacy_classes(const Group& G) {
  if (auto hit = G.cache_get(kKeyConj))
    return *std::static_pointer_cast<ConjugacyClasses>(hit);
  const Enumeration& E = G.elements();
  auto cc = std::make_shared<ConjugacyClasses>();
  cc->class_of.assign(E.size(), -1);
  cc->to_rep.assign(E.size(), 0);
  std::vector<int> gen_idx = Subgroup::whole(G).generator_indices();
  std::vector<int> queue;
  for (int i = 0; i < E.size(); ++i) {
    if (cc->class_of[i] >= 0) continue;
    int cid = int(cc->reps.size());
    cc->reps.push_back(i);
    cc->class_of[i] = cid;
    cc->to_rep[i] = 0;
    queue.clear();
    queue.push_back(i);
    for (size_t k = 0; k < queue.size(); ++k) {
      int x = queue[k];
      for (int g : gen_idx) {
        int y = E.conj(x, g);
        if (cc->class_of[y] < 0) {
          cc->class_of[y] = cid;
          cc->to_rep[y] = E.mul(cc->to_rep[x], g);
          queue.push_back(y);
        }
      }
    }
  }
  G.cache_put(kKeyConj, std::static_pointer_cast<void>(cc));
  auto back = std::static_pointer_cast<ConjugacyClasses>(G.cache_get(kKeyConj));
  return *back;
}

}  // namespace engel
