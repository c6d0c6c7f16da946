#ifndef ENGEL_RANK_HPP
#define ENGEL_RANK_HPP

#include <map>
#include <vector>

#include "engel/structure.hpp"

namespace engel {

enum class MinGenMode {
  Auto,       // Frattini / abelian / nilpotent shortcuts where valid
  SearchOnly  // pure increasing-k tuple search; the cross-check oracle
};

struct GenWitness {
  int count = 0;
  std::vector<int> witness;  // element indices, ascending
};

// d(H): least k such that some k elements generate H. The search iterates
// candidate tuples in canonical order (one representative per cyclic
// subgroup) and stops at the first success.
GenWitness min_generators(const Subgroup& H,
                          MinGenMode mode = MinGenMode::Auto);

// exact d for p-groups: log_p |P / (P' P^p)|
int frattini_quotient_rank(const Subgroup& P);

struct LatticeOptions {
  int class_cap = 50000;
};

struct Lattice {
  std::vector<Subgroup> classes;  // one representative per conjugacy class,
                                  // sorted by (order, element set)
  bool complete = true;           // false iff the class cap was hit
};

// All subgroups of the ambient subgroup up to conjugacy in it, bottom-up:
// cyclic seeds, then extension of every known class by one outside cyclic
// generator (orbit-reduced under the class normalizer).
Lattice subgroup_classes(const Subgroup& ambient,
                         const LatticeOptions& opts = {});

enum class RankMethod { AbelianShortcut, NilpotentShortcut, ExhaustiveLattice };

enum class RankMode { Auto, ForceLattice };

struct RankCertificate {
  int rank_value = 0;
  bool exact = true;  // false: lattice cap hit, value is a lower bound
  RankMethod method = RankMethod::AbelianShortcut;
  Subgroup witness_subgroup;                  // attains the maximum
  std::vector<Permutation> witness_generators;  // minimal generating set of it
  int classes_enumerated = 0;
};

// rank(H) = max over subgroups of d, exact. Abelian groups use the
// omega-subgroup formula, nilpotent ones reduce to their Sylow subgroups,
// everything else enumerates the lattice.
RankCertificate rank(const Subgroup& H, RankMode mode = RankMode::Auto,
                     const LatticeOptions& opts = {});
RankCertificate rank(const Group& G, RankMode mode = RankMode::Auto,
                     const LatticeOptions& opts = {});

const char* rank_method_name(RankMethod m);  // "abelian-shortcut", ...

// one-line record: {group label, rank, witness generators, method}
std::string certificate_record(const RankCertificate& cert,
                               const std::string& label);

// rank(G) <= 1 + max over p of rank of a Sylow p-subgroup
CheckResult verify_kovacs(const Group& G, const LatticeOptions& opts = {});

// [T,A] equals the product of the [T,a] over the stored generators a of A
CheckResult verify_lprod(const Subgroup& target, const Subgroup& actors);

// Hall q'-subgroup generators per prime q, from construction metadata
using HallComplements = std::map<int, std::vector<Permutation>>;

// On a group of Fitting height <= 2: the nilpotent residual equals the
// product over q of [F_q, H_{q'}] with F_q the Sylow q-subgroup of F(H).
CheckResult verify_lf2(const Group& H, const HallComplements& hall);

}  // namespace engel

#endif
