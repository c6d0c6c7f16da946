#include <doctest.h>

#include <algorithm>

#include "engel/catalog.hpp"
#include "engel/group.hpp"

using namespace engel;

namespace {

Group symmetric(int n) {
  GroupRecipe r;
  r.kind = RecipeKind::Symmetric;
  r.n = n;
  r.label = "S" + std::to_string(n);
  return build(r).group;
}

}  // namespace

TEST_CASE("closure examples") {
  Group s3 = symmetric(3);
  Subgroup rot = Subgroup::closure(s3, {Permutation::from_cycles(3, "(1 2 3)")});
  CHECK(rot.order() == 3);

  Group s4 = symmetric(4);
  Subgroup whole = Subgroup::closure(
      s4, {Permutation::from_cycles(4, "(1 2)"),
           Permutation::from_cycles(4, "(1 2 3 4)")});
  CHECK(whole.order() == 24);

  Subgroup triv = Subgroup::closure(s4, {Permutation(4)});
  CHECK(triv.order() == 1);
  CHECK(triv.is_trivial());
}

TEST_CASE("closure validates membership and degree") {
  Group s3 = symmetric(3);
  CHECK_THROWS_AS(Subgroup::closure(s3, {Permutation(4)}), Error);
  Group a3 = entry_from_spec("A3").group;
  CHECK_THROWS_AS(
      Subgroup::closure(a3, {Permutation::from_cycles(3, "(1 2)")}), Error);
}

TEST_CASE("closure is idempotent") {
  Group s4 = symmetric(4);
  Subgroup h = Subgroup::closure(s4, {Permutation::from_cycles(4, "(1 2 3)"),
                                      Permutation::from_cycles(4, "(1 2)")});
  std::vector<Permutation> elems;
  for (int i : h.indices()) elems.push_back(s4.elements().perm(i));
  Subgroup again = Subgroup::closure(s4, elems);
  CHECK(again.same_elements(h));
  CHECK(h.order() == 6);
}

TEST_CASE("identity is always element zero") {
  for (const char* label : {"S4", "D5", "Q8"}) {
    Group g = entry_from_spec(label).group;
    CHECK(g.elements().perm(0).is_identity());
    CHECK(g.contains(Permutation(g.degree())));
  }
}

TEST_CASE("enumeration arithmetic agrees with permutation arithmetic") {
  Group s4 = symmetric(4);
  const Enumeration& E = s4.elements();
  for (int i = 0; i < E.size(); i += 3)
    for (int j = 0; j < E.size(); j += 5) {
      CHECK(E.perm(E.mul(i, j)) == compose(E.perm(i), E.perm(j)));
      CHECK(E.perm(E.inv(i)) == E.perm(i).inverse());
      CHECK(E.perm(E.comm(i, j)) == commutator(E.perm(i), E.perm(j)));
    }
  for (int i = 0; i < E.size(); ++i)
    CHECK(uint64_t(E.order_of(i)) == E.perm(i).order());
}

TEST_CASE("stabilizer chain order matches enumeration on the catalog") {
  for (const char* label : {"S4", "A5", "D15", "Q16", "C7:C3", "PSL2(5)"}) {
    Group g = entry_from_spec(label).group;
    StabilizerChain chain(g.degree(), g.generators());
    BigUnsigned n = chain.order();
    REQUIRE(n.fits_u64());
    CHECK(n.as_u64() == g.order());
  }
}

TEST_CASE("stabilizer chain handles groups beyond enumeration") {
  GroupOptions opts;
  opts.enumeration_threshold = 1000;
  Group s10 = Group::from_generators(
      10,
      {Permutation::from_cycles(10, "(1 2)"),
       Permutation::from_cycles(10, "(1 2 3 4 5 6 7 8 9 10)")},
      "S10", opts);
  CHECK_FALSE(s10.enumerable());
  CHECK(s10.order_big().str() == "3628800");
  CHECK_THROWS_AS(s10.elements(), Error);
  CHECK(s10.contains(Permutation::from_cycles(10, "(1 3 5)")));
  CHECK(s10.contains(Permutation::from_cycles(10, "(1 2)(3 4 5)")));
  // subgroup of a non-enumerable parent still knows its order via a chain
  Subgroup alt = Subgroup::closure(
      s10, {Permutation::from_cycles(10, "(1 2 3)"),
            Permutation::from_cycles(10, "(2 3 4 5 6 7 8 9 10)")});
  CHECK(alt.order() == 1814400);
}

TEST_CASE("very large chain orders print exactly") {
  std::vector<Permutation> gens = {
      Permutation::from_cycles(25, "(1 2)"),
      Permutation::from_cycles(
          25, "(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 "
              "24 25)")};
  StabilizerChain chain(25, gens);
  CHECK(chain.order().str() == "15511210043330985984000000");  // 25!
}

TEST_CASE("subgroup membership and masks") {
  Group s4 = symmetric(4);
  Subgroup v4 = Subgroup::closure(
      s4, {Permutation::from_cycles(4, "(1 2)(3 4)"),
           Permutation::from_cycles(4, "(1 3)(2 4)")});
  CHECK(v4.order() == 4);
  CHECK(v4.contains(Permutation::from_cycles(4, "(1 4)(2 3)")));
  CHECK_FALSE(v4.contains(Permutation::from_cycles(4, "(1 2)")));
  CHECK(v4.subset_of(Subgroup::whole(s4)));
  CHECK_FALSE(Subgroup::whole(s4).subset_of(v4));
}

TEST_CASE("greedy generators reproduce the subgroup") {
  Group s4 = symmetric(4);
  const Enumeration& E = s4.elements();
  Subgroup a4 = Subgroup::closure(
      s4, {Permutation::from_cycles(4, "(1 2 3)"),
           Permutation::from_cycles(4, "(1 2)(3 4)")});
  std::vector<int> gens = greedy_generator_indices(E, a4.indices());
  CHECK(gens.size() <= 4);
  Subgroup re = Subgroup::closure_indices(s4, gens);
  CHECK(re.same_elements(a4));
}

TEST_CASE("group construction validation") {
  CHECK_THROWS_AS(Group::from_generators(3, {}), Error);
  CHECK_THROWS_AS(Group::from_generators(3, {Permutation(4)}), Error);
  Group triv = Group::from_generators(1, {Permutation(1)}, "T");
  CHECK(triv.order() == 1);
}

TEST_CASE("index arithmetic agrees with and without the product table") {
  GroupOptions no_table;
  no_table.table_threshold = 1;
  Group tabled = entry_from_spec("S4").group;
  Group plain = Group::from_generators(4, tabled.generators(), "S4nt", no_table);
  const Enumeration& A = tabled.elements();
  const Enumeration& B = plain.elements();
  REQUIRE(A.size() == B.size());
  CHECK(A.tabled());
  CHECK_FALSE(B.tabled());
  for (int i = 0; i < A.size(); ++i) {
    CHECK(A.perm(i) == B.perm(i));  // same canonical order
    for (int j = 0; j < A.size(); j += 7) CHECK(A.mul(i, j) == B.mul(i, j));
    CHECK(A.inv(i) == B.inv(i));
  }
}

TEST_CASE("subgroups serialize as generator lists in cycle notation") {
  Group s4 = entry_from_spec("S4").group;
  Subgroup v4 = Subgroup::closure(
      s4, {Permutation::from_cycles(4, "(1 2)(3 4)"),
           Permutation::from_cycles(4, "(1 3)(2 4)")});
  CHECK(v4.generators_cycles() == "(1 2)(3 4), (1 3)(2 4)");
}

TEST_CASE("enumeration threshold is inclusive") {
  GroupOptions at;
  at.enumeration_threshold = 24;
  Group s4a = Group::from_generators(
      4, entry_from_spec("S4").group.generators(), "S4a", at);
  CHECK(s4a.enumerable());
  CHECK(s4a.order() == 24);

  GroupOptions below;
  below.enumeration_threshold = 23;
  Group s4b = Group::from_generators(
      4, entry_from_spec("S4").group.generators(), "S4b", below);
  CHECK_FALSE(s4b.enumerable());
  CHECK(s4b.order() == 24);  // via the stabilizer chain
}
