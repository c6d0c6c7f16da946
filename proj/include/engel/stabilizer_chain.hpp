#ifndef ENGEL_STABILIZER_CHAIN_HPP
#define ENGEL_STABILIZER_CHAIN_HPP

#include <memory>
#include <optional>
#include <vector>

#include "engel/perm.hpp"
#include "engel/util.hpp"

namespace engel {

// Deterministic Schreier-Sims stabilizer chain. Gives group order and
// membership for groups too large to enumerate. No generator reduction;
// fine at the degrees this project handles.
class StabilizerChain {
public:
  StabilizerChain(int degree, const std::vector<Permutation>& generators);

  int degree() const { return degree_; }
  BigUnsigned order() const;
  bool contains(const Permutation& p) const;

private:
  struct Level {
    int base = -1;
    std::vector<Permutation> gens;
    std::vector<int> orbit;  // discovery order, orbit[0] == base
    // transversal[p] maps base to p (apply-left-first), empty if p not in orbit
    std::vector<std::optional<Permutation>> transversal;
  };

  void add_generator(size_t level, const Permutation& g);
  void rebuild_orbit(Level& lv) const;
  // sift from the given level; true iff residue is the identity
  bool sifts_to_identity(size_t level, Permutation g) const;

  int degree_;
  std::vector<Level> levels_;
};

}  // namespace engel

#endif
