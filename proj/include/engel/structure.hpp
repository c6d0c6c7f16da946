#ifndef ENGEL_STRUCTURE_HPP
#define ENGEL_STRUCTURE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "engel/group.hpp"

namespace engel {

// Closure of an arbitrary element set (need not be a subgroup); returns the
// sorted element indices of the generated subgroup and the greedy generators
// actually used.
std::pair<std::vector<int>, std::vector<int>> closure_of_set(
    const Enumeration& E, const std::vector<int>& elems);

// [A,B]: generated by generator commutators, closed under conjugation by
// <A,B> (normal closure). A and B must share a parent.
Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B);

// Same subgroup computed from every element pair; independent route used by
// the verification suite.
Subgroup commutator_subgroup_bruteforce(const Subgroup& A, const Subgroup& B);

enum class SeriesKind { Derived, LowerCentral, Fitting };

struct Series {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  bool stabilized = false;
  // Fitting series only: first h with F_h = G; empty when the series
  // stabilizes below the group (non-soluble input)
  std::optional<int> height;
};

// gamma_1 = G, gamma_{i+1} = [gamma_i, G], until two consecutive terms agree
Series lower_central_series(const Group& G);
Subgroup nilpotent_residual(const Group& G);  // last lower-central term

Series derived_series(const Group& G);
bool is_soluble(const Group& G);
// lower central series reaches 1; cross-checked against all Sylow
// subgroups being normal
bool is_nilpotent(const Group& G);

bool is_abelian(const Subgroup& H);
bool is_abelian(const Group& G);
bool is_nilpotent_subgroup(const Subgroup& H);

// Sylow p-subgroup of an ambient subgroup, by greedy normalizer ascent in
// canonical order. Returns the trivial subgroup when p does not divide the
// order.
Subgroup sylow_subgroup(const Subgroup& ambient, int p);
Subgroup sylow_subgroup(const Group& G, int p);

// elements of the ambient subgroup normalizing H
std::vector<int> normalizer_indices(const Subgroup& ambient, const Subgroup& H);

// largest normal p-subgroup: intersection of the conjugates of a Sylow
// p-subgroup
Subgroup p_core(const Group& G, int p);

// largest normal nilpotent subgroup, generated by the p-cores
Subgroup fitting_subgroup(const Group& G);

Series fitting_series(const Group& G);
// empty for non-soluble groups (the series stabilizes below G)
std::optional<int> fitting_height(const Group& G);

// G/N as a permutation group on the right cosets of N, with the projection
// retained for preimages.
class Quotient {
public:
  const Group& group() const { return d_->quotient; }
  const Group& parent() const { return d_->parent; }
  const Subgroup& kernel() const { return d_->kernel; }
  int index() const { return int(d_->reps.size()); }

  Permutation action_of(int parent_elem) const;
  int project(int parent_elem) const;  // index in quotient enumeration
  Subgroup preimage(const Subgroup& sub_of_quotient) const;

private:
  friend Quotient quotient_action(const Group&, const Subgroup&);
  struct Data {
    Group parent;
    Group quotient;
    Subgroup kernel;
    std::vector<int> coset_of;  // parent element -> coset point
    std::vector<int> reps;      // coset point -> least parent element
  };
  std::shared_ptr<const Data> d_;
};

Quotient quotient_action(const Group& G, const Subgroup& N);

struct ConjugacyClasses {
  std::vector<int> reps;      // ascending
  std::vector<int> class_of;  // element -> position in reps
  std::vector<int> to_rep;    // h with element = rep^h
};

const ConjugacyClasses& conjugacy_classes(const Group& G);  // cached

std::vector<int> prime_divisors(uint64_t n);

}  // namespace engel

#endif
