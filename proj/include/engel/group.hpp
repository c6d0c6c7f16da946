#ifndef ENGEL_GROUP_HPP
#define ENGEL_GROUP_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "engel/perm.hpp"
#include "engel/stabilizer_chain.hpp"
#include "engel/util.hpp"

namespace engel {

struct GroupOptions {
  // full element enumeration above this order is refused
  int enumeration_threshold = 20000;
  // multiplication table built only up to this order
  int table_threshold = 2048;
};

// Canonically sorted element list of an enumerable group, with index-space
// arithmetic. elems[0] is always the identity (it is lexicographically
// least). Built once, immutable afterwards.
class Enumeration {
public:
  int size() const { return n_; }
  const Permutation& perm(int i) const { return elems_[i]; }
  int index_of(const Permutation& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }

  int mul(int a, int b) const {
    if (!table_.empty()) return table_[size_t(a) * n_ + b];
    return index_.at(compose(elems_[a], elems_[b]));
  }
  int inv(int a) const { return inv_[a]; }
  int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }
  int comm(int x, int g) const { return mul(inv_[x], conj(x, g)); }
  int pow(int x, uint64_t e) const;
  int order_of(int i) const { return ord_[i]; }
  bool tabled() const { return !table_.empty(); }

private:
  friend struct GroupData;
  int n_ = 0;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, int, PermHash> index_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::vector<int32_t> table_;
};

struct GroupData;

// A finite permutation group given by generators. Cheap to copy; all
// cached data is shared and built once under a lock, then read-only.
class Group {
public:
  Group() = default;
  static Group from_generators(int degree, std::vector<Permutation> generators,
                               std::string label = "", GroupOptions opts = {});

  bool valid() const { return d_ != nullptr; }
  int degree() const;
  const std::vector<Permutation>& generators() const;
  const std::string& label() const;
  const GroupOptions& options() const;

  bool enumerable() const;
  const Enumeration& elements() const;  // throws Error when not enumerable
  BigUnsigned order_big() const;
  uint64_t order() const;  // throws Error when it does not fit
  bool contains(const Permutation& p) const;
  const StabilizerChain& chain() const;

  bool same_object(const Group& o) const { return d_ == o.d_; }

  // per-group slot for expensive derived data (lattices, certificates)
  std::shared_ptr<void> cache_get(uint64_t key) const;
  void cache_put(uint64_t key, std::shared_ptr<void> value) const;

private:
  std::shared_ptr<GroupData> d_;
};

// Subgroup of a parent group: generators plus, when the parent is
// enumerable, the full sorted element-index set. Cheap to copy.
class Subgroup {
public:
  Subgroup() = default;

  static Subgroup closure(const Group& parent,
                          std::vector<Permutation> generators);
  static Subgroup closure_indices(const Group& parent,
                                  std::vector<int> generator_indices);
  // element set already known; generators derived greedily unless given
  static Subgroup from_indices(const Group& parent, std::vector<int> sorted,
                               std::vector<int> generator_indices = {});
  static Subgroup trivial(const Group& parent);
  static Subgroup whole(const Group& parent);

  bool valid() const { return d_ != nullptr; }
  const Group& parent() const;
  const std::vector<Permutation>& generators() const;
  const std::vector<int>& generator_indices() const;

  bool has_elements() const;
  const std::vector<int>& indices() const;  // ascending
  const Bitset& mask() const;
  uint64_t order() const;
  bool contains_index(int i) const;
  bool contains(const Permutation& p) const;
  bool same_elements(const Subgroup& o) const;
  bool subset_of(const Subgroup& o) const;
  bool is_trivial() const;
  bool is_whole() const;
  uint64_t set_hash() const;  // order-independent hash of the index set

  // "(1 2 3), (4 5)" generator list serialization
  std::string generators_cycles() const;

  struct Data;  // defined in group.cpp

private:
  std::shared_ptr<const Data> d_;
};

// BFS closure of generator indices in index space; sorted result.
std::vector<int> closure_indices_bfs(const Enumeration& E,
                                     const std::vector<int>& gen_idx);

// Extends a subgroup (mask over E, with its sorted indices) by one element;
// whole right cosets are marked at a time. Returns the new element count;
// mask is updated in place; new elements are appended unsorted to out.
int extend_closure(const Enumeration& E, Bitset& mask, int current_size,
                   const std::vector<int>& subgroup_gens, int x,
                   std::vector<int>* out_new = nullptr);

// Smallest-first greedy generating set of a subgroup given by sorted indices.
std::vector<int> greedy_generator_indices(const Enumeration& E,
                                          const std::vector<int>& sorted_idx);

// Normal closure of seed elements under conjugation by conj_gens, inside the
// subgroup they generate together.
std::vector<int> normal_closure_indices(const Enumeration& E,
                                        std::vector<int> seeds,
                                        const std::vector<int>& conj_gens);

}  // namespace engel

#endif
