#include "engel/stabilizer_chain.hpp"

namespace engel {

StabilizerChain::StabilizerChain(int degree,
                                 const std::vector<Permutation>& generators)
    : degree_(degree) {
  levels_.reserve(degree);  // one base point per level at most
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error("stabilizer chain: degree mismatch");
    add_generator(0, g);
  }
}

void StabilizerChain::rebuild_orbit(Level& lv) const {
  lv.orbit.clear();
  lv.transversal.assign(degree_, std::nullopt);
  lv.orbit.push_back(lv.base);
  lv.transversal[lv.base] = Permutation(degree_);
  for (size_t k = 0; k < lv.orbit.size(); ++k) {
    int p = lv.orbit[k];
    for (const auto& s : lv.gens) {
      int q = s[p];
      if (!lv.transversal[q]) {
        lv.transversal[q] = compose(*lv.transversal[p], s);
        lv.orbit.push_back(q);
      }
    }
  }
}

void StabilizerChain::add_generator(size_t level, const Permutation& g) {
  if (g.is_identity()) return;
  if (sifts_to_identity(level, g)) return;
  if (level == levels_.size()) {
    Level lv;
    for (int i = 0; i < degree_; ++i)
      if (g[i] != i) {
        lv.base = i;
        break;
      }
    levels_.push_back(std::move(lv));
  }
  Level& lv = levels_[level];
  lv.gens.push_back(g);
  rebuild_orbit(lv);
  // push every Schreier generator down a level
  for (int p : lv.orbit) {
    for (const auto& s : lv.gens) {
      int q = s[p];
      Permutation x = compose(compose(*lv.transversal[p], s),
                              lv.transversal[q]->inverse());
      add_generator(level + 1, x);
    }
  }
}

bool StabilizerChain::sifts_to_identity(size_t level, Permutation g) const {
  for (size_t i = level; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    int p = g[lv.base];
    if (p == lv.base) continue;
    if (!lv.transversal[p]) return false;
    g = compose(g, lv.transversal[p]->inverse());
  }
  return g.is_identity();
}

BigUnsigned StabilizerChain::order() const {
  BigUnsigned n(1);
  for (const auto& lv : levels_) n.mul(uint32_t(lv.orbit.size()));
  return n;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sifts_to_identity(0, p);
}

}  // namespace engel
