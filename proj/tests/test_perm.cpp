#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "engel/perm.hpp"

using namespace engel;

namespace {

std::vector<Permutation> all_perms(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation random_perm(int degree, std::mt19937_64& rng) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (int i = degree - 1; i > 0; --i)
    std::swap(img[i], img[size_t(rng() % uint64_t(i + 1))]);
  return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("compose applies the left factor first") {
  Permutation a = Permutation::from_cycles(3, "(1 2)");
  Permutation b = Permutation::from_cycles(3, "(2 3)");
  // hand-composed: 0 ->a 1 ->b 2, 1 ->a 0 ->b 0, 2 ->a 2 ->b 1
  Permutation ab = compose(a, b);
  CHECK(ab.images() == std::vector<int>{2, 0, 1});
  CHECK(ab.order() == 3);  // a 3-cycle either way

  CHECK(compose(a, a).is_identity());  // involution squared
  Permutation id(3);
  CHECK(compose(a, id) == a);
  CHECK(compose(id, a) == a);
}

TEST_CASE("compose rejects mixed degrees") {
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), Error);
  CHECK_THROWS_AS(commutator(Permutation(3), Permutation(4)), Error);
}

TEST_CASE("identity and inverse laws, exhaustive through degree 6") {
  for (int d = 1; d <= 6; ++d) {
    Permutation id(d);
    for (const Permutation& p : all_perms(d)) {
      CHECK(compose(p, id) == p);
      CHECK(compose(id, p) == p);
      CHECK(compose(p.inverse(), p) == id);
      CHECK(compose(p, p.inverse()) == id);
    }
  }
}

TEST_CASE("associativity: exhaustive on S4, randomized beyond") {
  auto s4 = all_perms(4);
  for (const auto& a : s4)
    for (const auto& b : s4)
      for (const auto& c : s4)
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));

  std::mt19937_64 rng(7);
  for (int d : {5, 6, 9}) {
    for (int t = 0; t < 500; ++t) {
      Permutation a = random_perm(d, rng), b = random_perm(d, rng),
                  c = random_perm(d, rng);
      REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
  }
}

TEST_CASE("commutator vanishes exactly on commuting pairs (all of S4)") {
  auto s4 = all_perms(4);
  for (const auto& x : s4)
    for (const auto& g : s4) {
      bool commute = compose(x, g) == compose(g, x);
      CHECK(commutator(x, g).is_identity() == commute);
    }
}

TEST_CASE("commutator basics") {
  Permutation x = Permutation::from_cycles(3, "(1 3)");
  Permutation g = Permutation::from_cycles(3, "(1 2)");
  CHECK(commutator(x, Permutation(3)).is_identity());
  CHECK(commutator(g, g).is_identity());
  // x^-1 g^-1 x g evaluated by hand: the 3-cycle 0->1->2->0
  Permutation c = commutator(x, g);
  CHECK(c.images() == std::vector<int>{1, 2, 0});
  CHECK(c.cycles() == "(1 2 3)");
}

TEST_CASE("left-normed commutator") {
  Permutation x = Permutation::from_cycles(3, "(1 3)");
  Permutation g = Permutation::from_cycles(3, "(1 2)");
  CHECK(left_normed_commutator(x, g, 1) == commutator(x, g));
  CHECK_THROWS_AS(left_normed_commutator(x, g, 0), Error);

  // [x,g] is a fixed point of y -> [y,g] here, so every length agrees
  Permutation c1 = left_normed_commutator(x, g, 1);
  CHECK(left_normed_commutator(x, g, 2) == c1);
  CHECK(left_normed_commutator(x, g, 7) == c1);

  // recurrence against the one-step map, all of S4
  auto s4 = all_perms(4);
  for (const auto& a : s4)
    for (const auto& b : s4) {
      Permutation prev = commutator(a, b);
      for (int n = 2; n <= 4; ++n) {
        Permutation next = left_normed_commutator(a, b, n);
        CHECK(next == commutator(prev, b));
        prev = next;
      }
    }

  // central x: the trivial sink of any length
  Permutation id(4);
  for (const auto& b : s4)
    CHECK(left_normed_commutator(id, b, 3).is_identity());
}

TEST_CASE("cycle notation round-trips exactly") {
  for (int d = 1; d <= 5; ++d)
    for (const Permutation& p : all_perms(d)) {
      std::string text = p.cycles();
      CHECK(Permutation::from_cycles(d, text) == p);
    }
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Permutation p = random_perm(40, rng);
    CHECK(Permutation::from_cycles(40, p.cycles()) == p);
  }
}

TEST_CASE("cycle notation fixed forms") {
  CHECK(Permutation(4).cycles() == "()");
  CHECK(Permutation::from_cycles(4, "()").is_identity());
  CHECK(Permutation::from_cycles(5, " ( 1 2 3 ) ( 4 5 ) ").cycles() ==
        "(1 2 3)(4 5)");
  Permutation p = Permutation::from_cycles(6, "(2 4)(3 6 5)");
  CHECK(p.cycles() == "(2 4)(3 6 5)");
  CHECK(p.order() == 6);
}

TEST_CASE("cycle notation parse errors") {
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 2"), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, ""), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "   "), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 4)"), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1)"), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(4, "(1 2)(2 3)"), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "x(1 2)"), Error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), Error);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(Permutation(5).order() == 1);
  CHECK(Permutation::from_cycles(5, "(1 2 3)(4 5)").order() == 6);
  CHECK(Permutation::from_cycles(9, "(1 2)(3 4 5)(6 7 8 9)").order() == 12);
}
