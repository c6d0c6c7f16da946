#include "engel/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace engel {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b,
                         const char* op) {
  if (a.degree() != b.degree())
    throw Error(std::string(op) + ": degree mismatch (" +
                std::to_string(a.degree()) + " vs " +
                std::to_string(b.degree()) + ")");
}

}  // namespace

Permutation::Permutation(int degree) : images_(degree) {
  if (degree < 1) throw Error("permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error("permutation degree must be >= 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= int(images_.size()) || seen[v])
      throw Error("image array is not a bijection");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  unsigned __int128 l = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = images_[j];
      ++len;
    }
    l = l / std::gcd(uint64_t(l), len) * len;  // lcm
    if (l > (unsigned __int128)UINT64_MAX >> 1)
      throw Error("element order overflows");
  }
  return uint64_t(l);
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation Permutation::from_cycles(int degree, std::string_view text) {
  if (degree < 1) throw Error("permutation degree must be >= 1");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) ||
            text[pos] == ','))
      ++pos;
  };

  skip_ws();
  if (pos == text.size()) throw Error("empty cycle expression");
  bool any_cycle = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(')
      throw Error("expected '(' at position " + std::to_string(pos + 1));
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos == text.size()) throw Error("unterminated cycle, missing ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error("expected point number at position " +
                    std::to_string(pos + 1));
      long v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > degree) break;
        ++pos;
      }
      if (v < 1 || v > degree)
        throw Error("point " + std::to_string(v) + " outside 1.." +
                    std::to_string(degree));
      int p = int(v) - 1;
      if (used[p])
        throw Error("point " + std::to_string(v) + " repeated");
      used[p] = 1;
      cyc.push_back(p);
    }
    any_cycle = true;
    if (cyc.size() > 1)
      for (size_t k = 0; k < cyc.size(); ++k)
        img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  if (!any_cycle) throw Error("empty cycle expression");
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "compose");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q[p[i]];
  return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  require_same_degree(x, g, "conjugate");
  // g^-1 x g without materializing intermediates
  std::vector<int> img(x.degree());
  for (int i = 0; i < x.degree(); ++i) img[g[i]] = g[x[i]];
  return Permutation(std::move(img));
}

Permutation commutator(const Permutation& x, const Permutation& g) {
  require_same_degree(x, g, "commutator");
  return compose(x.inverse(), conjugate(x, g));
}

Permutation left_normed_commutator(const Permutation& x, const Permutation& g,
                                   int n) {
  if (n < 1) throw Error("left-normed commutator needs n >= 1");
  Permutation y = commutator(x, g);
  for (int i = 1; i < n; ++i) y = commutator(y, g);
  return y;
}

}  // namespace engel
