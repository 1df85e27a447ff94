#include <doctest.h>

#include "corpus.hpp"
#include "unknot/braid.hpp"
#include "unknot/invariants.hpp"

using namespace unknot;

TEST_CASE("permutation and knot test") {
  CHECK(closure_is_knot(BraidWord{2, {1, 1, 1}}));
  CHECK_FALSE(closure_is_knot(BraidWord{2, {1, 1}}));
  CHECK(closure_is_knot(BraidWord{3, {1, -2}}));
  CHECK(braid_permutation(BraidWord{3, {1, 2}}) == std::vector<int>{2, 0, 1});
  CHECK_THROWS_AS(closure(BraidWord{2, {1, 1}}), MultiComponentError);
  CHECK_THROWS_AS(validate_braid(BraidWord{3, {3}}), BraidError);
  CHECK_THROWS_AS(validate_braid(BraidWord{3, {0}}), BraidError);
}

TEST_CASE("closure has one crossing per letter and the braid writhe") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto b = random_knot_braid(s, 2, 8, 14);
    auto d = closure(b);
    CHECK(d.size() == static_cast<int>(b.letters.size()));
    CHECK(writhe(d) == braid_writhe(b));
    CHECK(component_count(d) == 1);
  }
  CHECK(closure(BraidWord{1, {}}).empty());
  CHECK(closure(BraidWord{3, {1, 2}}).size() == 2);
}

TEST_CASE("closure of sigma1 cubed is the right trefoil") {
  auto d = closure(BraidWord{2, {1, 1, 1}});
  CHECK(signature(d) == -2);
  CHECK(jones(d) == jones(mirror(parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"))));
}

TEST_CASE("Markov stabilisation keeps the knot") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    auto b = random_knot_braid(s, 2, 5, 10);
    BraidWord st = b;
    ++st.strands;
    st.letters.push_back(s % 2 ? b.strands : -b.strands);
    CHECK(jones(closure(st)) == jones(closure(b)));
    CHECK(alexander(closure(st)) == alexander(closure(b)));
  }
}

TEST_CASE("Bennequin bounds") {
  auto bb = slice_bennequin(BraidWord{2, {1, 1, 1}});
  CHECK(bb.lower == 2);
  CHECK(bb.upper == 2);
  CHECK(bb.closure_crossings == 3);
  auto chain = slice_bennequin(BraidWord{6, {1, 2, 3, 4, 5}});
  CHECK(chain.lower == 0);
  CHECK(chain.upper == 0);
  CHECK(chain.simplified_crossings == 0);
}

TEST_CASE("braid connected sum") {
  BraidWord a{2, {1, 1, 1}}, b{3, {1, -2, 1, -2}};
  auto s = braid_connected_sum(a, b);
  CHECK(s.strands == 5);
  CHECK(s.letters == std::vector<int>{1, 1, 1, 2, 3, -4, 3, -4});
  CHECK(jones(closure(s)) == jones(closure(a)) * jones(closure(b)));
}

TEST_CASE("identity words preserve the closure") {
  for (const auto& w : default_identity_library()) {
    auto perm = braid_permutation(BraidWord{w.span() + 1, w.pattern});
    for (int i = 0; i <= w.span(); ++i) CHECK(perm[i] == i);
  }
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto b = random_knot_braid(s, 4, 6, 10);
    auto m = insert_identity_words(b, s, 3);
    CHECK(m.letters.size() > b.letters.size());
    CHECK(jones(closure(m)) == jones(closure(b)));
    CHECK(insert_identity_words(b, s, 3) == m);
  }
}

TEST_CASE("identity words can be forced across a boundary") {
  BraidWord a{3, {1, -2, 1, -2}}, b{3, {1, 1, 1, -2}};
  auto s = braid_connected_sum(a, b);
  auto m = insert_identity_words(s, 4, 2, default_identity_library(), a.strands);
  CHECK(alexander(closure(m)) == alexander(closure(s)));
}

TEST_CASE("identity library parsing rejects non-identities") {
  auto lib = parse_identity_library("free: 1,-1\n# comment\nrel: 1,2,1,-2,-1,-2\n");
  CHECK(lib.size() == 2);
  CHECK(lib[0].name == "free");
  CHECK_THROWS_AS(parse_identity_library("bad: 1,1\n"), BraidError);
  CHECK_THROWS_AS(parse_identity_library("bad: 1,2,-1,-2\n"), BraidError);
}

TEST_CASE("braid text format") {
  auto b = parse_braid("strands=4\n1,-2,3\n");
  CHECK(b.strands == 4);
  CHECK(b.letters == std::vector<int>{1, -2, 3});
  CHECK(parse_braid(serialize_braid(b)) == b);
  CHECK(parse_braid("1, 2, -1").strands == 3);
  CHECK_THROWS_AS(parse_braid("1, x"), BraidError);
}
