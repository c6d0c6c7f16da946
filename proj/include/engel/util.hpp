#ifndef ENGEL_UTIL_HPP
#define ENGEL_UTIL_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace engel {

// Rejected input, violated precondition, resource cap. The CLI maps this
// to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A statement that is a theorem failed to verify; indicates a bug in this
// implementation. The CLI maps this to exit code 1.
class MathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a64(const void* data, size_t n) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  uint64_t h = 1469598103934665603ULL;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

// Fixed-size bit vector over group element indices.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  // true iff every bit of this is set in o
  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Unsigned integer of arbitrary size; just enough for stabilizer-chain
// orders (product of small factors, printing, threshold comparison).
class BigUnsigned {
public:
  BigUnsigned(uint64_t v = 0) {
    while (v) {
      d_.push_back(uint32_t(v % kBase));
      v /= kBase;
    }
    if (d_.empty()) d_.push_back(0);
  }

  void mul(uint32_t m) {
    uint64_t carry = 0;
    for (auto& digit : d_) {
      uint64_t cur = uint64_t(digit) * m + carry;
      digit = uint32_t(cur % kBase);
      carry = cur / kBase;
    }
    while (carry) {
      d_.push_back(uint32_t(carry % kBase));
      carry /= kBase;
    }
  }

  bool fits_u64() const {
    if (d_.size() > 3) return false;
    unsigned __int128 v = 0;
    for (size_t i = d_.size(); i-- > 0;) v = v * kBase + d_[i];
    return v <= (unsigned __int128)UINT64_MAX;
  }

  uint64_t as_u64() const {
    uint64_t v = 0;
    for (size_t i = d_.size(); i-- > 0;) v = v * kBase + d_[i];
    return v;
  }

  bool operator==(const BigUnsigned& o) const { return d_ == o.d_; }

  std::string str() const {
    std::string s = std::to_string(d_.back());
    for (size_t i = d_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(d_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

private:
  static constexpr uint64_t kBase = 1000000000ULL;
  std::vector<uint32_t> d_;  // little endian, base 1e9
};

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline uint64_t p_part(uint64_t n, uint64_t p) {
  uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

// exact log: k with base^k == n, or -1
inline int exact_log(uint64_t base, uint64_t n) {
  int k = 0;
  while (n > 1) {
    if (n % base != 0) return -1;
    n /= base;
    ++k;
  }
  return k;
}

inline bool is_prime_power(uint64_t n, uint64_t* p_out = nullptr) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (p_out) *p_out = f[0].first;
  return true;
}

enum class CheckStatus { Pass, Fail, Skipped };

// Outcome of one lemma / invariant verification.
struct CheckResult {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::string witness;  // set on failure

  static CheckResult pass(std::string detail = "") {
    return {CheckStatus::Pass, std::move(detail), ""};
  }
  static CheckResult fail(std::string witness, std::string detail = "") {
    return {CheckStatus::Fail, std::move(detail), std::move(witness)};
  }
  static CheckResult skipped(std::string reason) {
    return {CheckStatus::Skipped, std::move(reason), ""};
  }
  bool ok() const { return status != CheckStatus::Fail; }
};

// Deterministic partial Fisher-Yates: first k entries of v become the sample.
template <typename T>
void sample_prefix(std::vector<T>& v, size_t k, std::mt19937_64& rng) {
  if (k >= v.size()) return;
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + size_t(rng() % uint64_t(v.size() - i));
    std::swap(v[i], v[j]);
  }
  v.resize(k);
}

}  // namespace engel

#endif
