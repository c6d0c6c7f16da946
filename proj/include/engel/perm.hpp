#ifndef ENGEL_PERM_HPP
#define ENGEL_PERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "engel/util.hpp"

namespace engel {

// A permutation of {0,...,n-1} in image form. Immutable after construction.
//
// The composition convention is normative for the whole project:
// compose(p, q) applies p first, i.e. maps i to q(p(i)). Conjugation is
// x^g = g^-1 x g and the commutator is [x,g] = x^-1 x^g.
class Permutation {
public:
  // identity on degree points
  explicit Permutation(int degree);
  // takes ownership; must be a bijection on {0,...,n-1}
  explicit Permutation(std::vector<int> images);

  int degree() const { return int(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  uint64_t order() const;  // lcm of cycle lengths

  // "(1 2 3)(4 5)" with 1-based points; identity prints as "()"
  std::string cycles() const;
  static Permutation from_cycles(int degree, std::string_view text);

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  // lexicographic on image arrays; this is the canonical element order
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

struct PermHash {
  size_t operator()(const Permutation& p) const {
    return size_t(
        fnv1a64(p.images().data(), p.images().size() * sizeof(int)));
  }
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation conjugate(const Permutation& x, const Permutation& g);
Permutation commutator(const Permutation& x, const Permutation& g);
// [x,g,...,g] with g repeated n times, n >= 1
Permutation left_normed_commutator(const Permutation& x, const Permutation& g,
                                   int n);

}  // namespace engel

#endif
