#include "engel/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>

namespace engel {

int Enumeration::pow(int x, uint64_t e) const {
  int acc = 0;  // identity
  int base = x;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

struct GroupData {
  int degree = 0;
  std::vector<Permutation> gens;
  std::string label;
  GroupOptions opts;

  mutable std::once_flag enum_once;
  mutable std::unique_ptr<Enumeration> enumeration;  // null when too large
  mutable std::once_flag chain_once;
  mutable std::unique_ptr<StabilizerChain> chain;

  mutable std::mutex cache_mu;
  mutable std::map<uint64_t, std::shared_ptr<void>> cache;

  void build_enumeration() const {
    const int cap = opts.enumeration_threshold;
    std::unordered_map<Permutation, int, PermHash> seen;
    std::vector<Permutation> elems;
    elems.emplace_back(degree);
    seen.emplace(elems[0], 0);
    for (size_t k = 0; k < elems.size(); ++k) {
      for (const auto& g : gens) {
        Permutation y = compose(elems[k], g);
        if (seen.emplace(y, int(elems.size())).second) {
          if (int(elems.size()) >= cap) return;  // above threshold
          elems.push_back(std::move(y));
        }
      }
    }
    auto E = std::make_unique<Enumeration>();
    std::sort(elems.begin(), elems.end());
    E->n_ = int(elems.size());
    E->elems_ = std::move(elems);
    E->index_.reserve(E->n_ * 2);
    for (int i = 0; i < E->n_; ++i) E->index_.emplace(E->elems_[i], i);
    assert(E->elems_[0].is_identity());
    E->inv_.resize(E->n_);
    E->ord_.resize(E->n_);
    for (int i = 0; i < E->n_; ++i) {
      E->inv_[i] = E->index_.at(E->elems_[i].inverse());
      E->ord_[i] = int(E->elems_[i].order());
    }
    if (E->n_ <= opts.table_threshold) {
      E->table_.resize(size_t(E->n_) * E->n_);
      for (int i = 0; i < E->n_; ++i)
        for (int j = 0; j < E->n_; ++j)
          E->table_[size_t(i) * E->n_ + j] =
              E->index_.at(compose(E->elems_[i], E->elems_[j]));
    }
    enumeration = std::move(E);
  }

  const Enumeration* enum_ptr() const {
    std::call_once(enum_once, [this] { build_enumeration(); });
    return enumeration.get();
  }

  const StabilizerChain& get_chain() const {
    std::call_once(chain_once, [this] {
      chain = std::make_unique<StabilizerChain>(degree, gens);
    });
    return *chain;
  }
};

Group Group::from_generators(int degree, std::vector<Permutation> generators,
                             std::string label, GroupOptions opts) {
  if (degree < 1) throw Error("group degree must be >= 1");
  if (generators.empty()) throw Error("generator list must be nonempty");
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error("generator degree mismatch");
  Group G;
  G.d_ = std::make_shared<GroupData>();
  G.d_->degree = degree;
  G.d_->gens = std::move(generators);
  G.d_->label = std::move(label);
  G.d_->opts = opts;
  return G;
}

int Group::degree() const { return d_->degree; }
const std::vector<Permutation>& Group::generators() const { return d_->gens; }
const std::string& Group::label() const { return d_->label; }
const GroupOptions& Group::options() const { return d_->opts; }

bool Group::enumerable() const { return d_->enum_ptr() != nullptr; }

const Enumeration& Group::elements() const {
  const Enumeration* E = d_->enum_ptr();
  if (!E)
    throw Error("group \"" + d_->label + "\" exceeds enumeration threshold (" +
                std::to_string(d_->opts.enumeration_threshold) + ")");
  return *E;
}

BigUnsigned Group::order_big() const {
  const Enumeration* E = d_->enum_ptr();
  if (E) return BigUnsigned(uint64_t(E->size()));
  return d_->get_chain().order();
}

uint64_t Group::order() const {
  BigUnsigned n = order_big();
  if (!n.fits_u64()) throw Error("group order does not fit in 64 bits");
  return n.as_u64();
}

bool Group::contains(const Permutation& p) const {
  if (p.degree() != d_->degree) return false;
  const Enumeration* E = d_->enum_ptr();
  if (E) return E->index_of(p) >= 0;
  return d_->get_chain().contains(p);
}

const StabilizerChain& Group::chain() const { return d_->get_chain(); }

std::shared_ptr<void> Group::cache_get(uint64_t key) const {
  std::lock_guard<std::mutex> lk(d_->cache_mu);
  auto it = d_->cache.find(key);
  return it == d_->cache.end() ? nullptr : it->second;
}

void Group::cache_put(uint64_t key, std::shared_ptr<void> value) const {
  std::lock_guard<std::mutex> lk(d_->cache_mu);
  d_->cache.emplace(key, std::move(value));
}

// ---------------------------------------------------------------------------

std::vector<int> closure_indices_bfs(const Enumeration& E,
                                     const std::vector<int>& gen_idx) {
  Bitset seen(E.size());
  std::vector<int> queue;
  seen.set(0);
  queue.push_back(0);
  for (size_t k = 0; k < queue.size(); ++k) {
    for (int g : gen_idx) {
      int y = E.mul(queue[k], g);
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

int extend_closure(const Enumeration& E, Bitset& mask, int current_size,
                   const std::vector<int>& subgroup_gens, int x,
                   std::vector<int>* out_new) {
  if (mask.test(x)) return current_size;
  // right-coset BFS: reps are words over (subgroup gens + x); each new
  // rep marks its whole right coset base*rep at once
  std::vector<int> base;
  base.reserve(current_size);
  for (int i = 0; i < mask.size(); ++i)
    if (mask.test(i)) base.push_back(i);

  std::vector<int> all_gens = subgroup_gens;
  all_gens.push_back(x);
  std::vector<int> reps{0};
  int count = current_size;
  auto add_coset = [&](int z) {
    for (int b : base) {
      int e = E.mul(b, z);
      if (!mask.test(e)) {
        mask.set(e);
        ++count;
        if (out_new) out_new->push_back(e);
      }
    }
    reps.push_back(z);
  };
  add_coset(x);
  for (size_t k = 0; k < reps.size(); ++k) {
    for (int s : all_gens) {
      int z = E.mul(reps[k], s);
      if (!mask.test(z)) add_coset(z);
    }
  }
  return count;
}

std::vector<int> greedy_generator_indices(const Enumeration& E,
                                          const std::vector<int>& sorted_idx) {
  std::vector<int> gens;
  if (sorted_idx.size() <= 1) return gens;
  Bitset mask(E.size());
  mask.set(0);
  int size = 1;
  for (int x : sorted_idx) {
    if (mask.test(x)) continue;
    size = extend_closure(E, mask, size, gens, x);
    gens.push_back(x);
    if (size == int(sorted_idx.size())) break;
  }
  return gens;
}

std::vector<int> normal_closure_indices(const Enumeration& E,
                                        std::vector<int> seeds,
                                        const std::vector<int>& conj_gens) {
  Bitset mask(E.size());
  mask.set(0);
  int size = 1;
  std::vector<int> gens;
  std::vector<int> work = std::move(seeds);
  for (size_t k = 0; k < work.size(); ++k) {
    int t = work[k];
    if (!mask.test(t)) {
      size = extend_closure(E, mask, size, gens, t);
      gens.push_back(t);
    }
    for (int c : conj_gens) {
      int y = E.conj(t, c);
      if (!mask.test(y)) work.push_back(y);
    }
  }
  std::vector<int> out;
  out.reserve(size);
  for (int i = 0; i < mask.size(); ++i)
    if (mask.test(i)) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------

struct Subgroup::Data {
  Group parent;
  std::vector<Permutation> gens;
  std::vector<int> gen_idx;
  std::vector<int> idx;  // sorted; empty if parent not enumerable
  Bitset mask;
  bool has_elems = false;
  mutable std::once_flag chain_once;
  mutable std::unique_ptr<StabilizerChain> chain;
  mutable uint64_t sethash = 0;

  const StabilizerChain& get_chain() const {
    std::call_once(chain_once, [this] {
      chain = std::make_unique<StabilizerChain>(parent.degree(), gens);
    });
    return *chain;
  }
};

static std::shared_ptr<Subgroup::Data> make_data(const Group& parent) {
  auto d = std::make_shared<Subgroup::Data>();
  d->parent = parent;
  return d;
}

Subgroup Subgroup::closure(const Group& parent,
                           std::vector<Permutation> generators) {
  if (generators.empty()) generators.emplace_back(parent.degree());
  for (const auto& g : generators) {
    if (g.degree() != parent.degree())
      throw Error("subgroup generator degree mismatch");
    if (!parent.contains(g))
      throw Error("subgroup generator " + g.cycles() +
                  " is not in the parent group");
  }
  if (!parent.enumerable()) {
    auto d = make_data(parent);
    d->gens = std::move(generators);
    Subgroup s;
    s.d_ = std::move(d);
    return s;
  }
  const Enumeration& E = parent.elements();
  std::vector<int> gi;
  for (const auto& g : generators) gi.push_back(E.index_of(g));
  return closure_indices(parent, std::move(gi));
}

Subgroup Subgroup::closure_indices(const Group& parent,
                                   std::vector<int> generator_indices) {
  const Enumeration& E = parent.elements();
  auto d = make_data(parent);
  d->gen_idx = std::move(generator_indices);
  if (d->gen_idx.empty()) d->gen_idx.push_back(0);
  for (int g : d->gen_idx) d->gens.push_back(E.perm(g));
  d->idx = closure_indices_bfs(E, d->gen_idx);
  d->mask = Bitset(E.size());
  for (int i : d->idx) d->mask.set(i);
  d->has_elems = true;
  Subgroup s;
  s.d_ = std::move(d);
  return s;
}

Subgroup Subgroup::from_indices(const Group& parent, std::vector<int> sorted,
                                std::vector<int> generator_indices) {
  const Enumeration& E = parent.elements();
  auto d = make_data(parent);
  d->idx = std::move(sorted);
  if (d->idx.empty() || d->idx[0] != 0)
    throw Error("subgroup element set must contain the identity");
  d->gen_idx = generator_indices.empty()
                   ? greedy_generator_indices(E, d->idx)
                   : std::move(generator_indices);
  if (d->gen_idx.empty()) d->gen_idx.push_back(0);
  for (int g : d->gen_idx) d->gens.push_back(E.perm(g));
  d->mask = Bitset(E.size());
  for (int i : d->idx) d->mask.set(i);
  d->has_elems = true;
  Subgroup s;
  s.d_ = std::move(d);
  return s;
}

Subgroup Subgroup::trivial(const Group& parent) {
  return from_indices(parent, {0}, {0});
}

Subgroup Subgroup::whole(const Group& parent) {
  const uint64_t kWholeKey = 0x57484f4c45ULL;  // "WHOLE"
  if (auto hit = parent.cache_get(kWholeKey))
    return *std::static_pointer_cast<Subgroup>(hit);
  const Enumeration& E = parent.elements();
  std::vector<int> all(E.size());
  for (int i = 0; i < E.size(); ++i) all[i] = i;
  std::vector<int> gi;
  for (const auto& g : parent.generators()) gi.push_back(E.index_of(g));
  Subgroup s = from_indices(parent, std::move(all), std::move(gi));
  parent.cache_put(kWholeKey, std::make_shared<Subgroup>(s));
  return s;
}

const Group& Subgroup::parent() const { return d_->parent; }
const std::vector<Permutation>& Subgroup::generators() const {
  return d_->gens;
}
const std::vector<int>& Subgroup::generator_indices() const {
  return d_->gen_idx;
}
bool Subgroup::has_elements() const { return d_->has_elems; }

const std::vector<int>& Subgroup::indices() const {
  if (!d_->has_elems) throw Error("subgroup has no element enumeration");
  return d_->idx;
}

const Bitset& Subgroup::mask() const {
  if (!d_->has_elems) throw Error("subgroup has no element enumeration");
  return d_->mask;
}

uint64_t Subgroup::order() const {
  if (d_->has_elems) return d_->idx.size();
  BigUnsigned n = d_->get_chain().order();
  if (!n.fits_u64()) throw Error("subgroup order does not fit in 64 bits");
  return n.as_u64();
}

bool Subgroup::contains_index(int i) const { return mask().test(i); }

bool Subgroup::contains(const Permutation& p) const {
  if (d_->has_elems) {
    int i = d_->parent.elements().index_of(p);
    return i >= 0 && d_->mask.test(i);
  }
  return d_->get_chain().contains(p);
}

bool Subgroup::same_elements(const Subgroup& o) const {
  return indices() == o.indices();
}

bool Subgroup::subset_of(const Subgroup& o) const {
  return mask().subset_of(o.mask());
}

bool Subgroup::is_trivial() const { return order() == 1; }

bool Subgroup::is_whole() const {
  return d_->has_elems && uint64_t(d_->idx.size()) ==
                              uint64_t(d_->parent.elements().size());
}

uint64_t Subgroup::set_hash() const {
  if (d_->sethash == 0) {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int i : indices()) h += splitmix64(uint64_t(i) + 0x1234567);
    d_->sethash = h ? h : 1;
  }
  return d_->sethash;
}

std::string Subgroup::generators_cycles() const {
  std::string out;
  for (const auto& g : d_->gens) {
    if (!out.empty()) out += ", ";
    out += g.cycles();
  }
  return out;
}

}  // namespace engel
