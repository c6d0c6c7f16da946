#ifndef ENGEL_SINKS_HPP
#define ENGEL_SINKS_HPP

#include <vector>

#include "engel/rank.hpp"
#include "engel/structure.hpp"

namespace engel {

// Minimal Engel sink of g: the periodic points of x -> [x,g] on G. The map
// has out-degree one, so the periodic points are exactly the nodes left
// after peeling the acyclic part of its functional graph.
struct SinkReport {
  int element = 0;           // index of g in the parent enumeration
  std::vector<int> sink;     // periodic points, ascending
  Subgroup sink_subgroup;    // <sink>
  int sink_rank = -1;        // rank of <sink>; set by the profile pass
  int max_tail = 0;          // longest pre-periodic tail over all x
};

SinkReport minimal_sink(const Group& G, const Permutation& g);
SinkReport minimal_sink_index(const Group& G, int g);

// Reference implementation: for every x, iterate the commutator map
// `horizon` times and collect one full cycle. horizon must be >= |G|.
std::vector<int> naive_sink_oracle(const Group& G, const Permutation& g,
                                   uint64_t horizon);

// One report per conjugacy class; other elements' sinks are conjugates.
struct SinkProfile {
  std::vector<SinkReport> class_reports;  // indexed by class id
  std::vector<int> class_of;              // element -> class id
  std::vector<int> to_rep;                // h with element = rep^h
  int r_star = 0;                         // max over g of rank<E(g)>
};

// audit_samples elements get their sinks recomputed directly and compared
// against the conjugated class representative (throws MathError on mismatch)
SinkProfile sink_profile(const Group& G, int audit_samples = 16,
                         uint64_t audit_seed = 42,
                         const LatticeOptions& rank_opts = {});

// per-element view of a profile: the class representative's report
// conjugated to the element (tails and ranks are conjugation-invariant)
SinkReport sink_report_for(const Group& G, const SinkProfile& profile,
                           int element);

// [P,g] <= <E(g)> for a p-subgroup P normalized by the p'-element g.
// Violated preconditions produce a skipped result, not a failure.
CheckResult verify_l0(const Group& G, const Subgroup& P, const Permutation& g);
CheckResult verify_l0_index(const Group& G, const Subgroup& P, int g,
                            const Subgroup& sink_subgroup_of_g);

}  // namespace engel

#endif
