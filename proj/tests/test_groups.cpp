#include <doctest.h>

#include <random>

#include "solvcore/group.hpp"
#include "support.hpp"

using namespace solvcore;
using solvcore::testing::random_reduced_word;

namespace {

Word pw(const std::string& text, const Group& g) { return parse_word(text, g); }

}  // namespace

TEST_CASE("descriptor parsing") {
  CHECK(Group::parse("S(3,2)") == Group::free_solvable(3, 2));
  CHECK(Group::parse("wr(Z^2,S(2,2))") ==
        Group::wreath(Group::free_abelian(2), Group::free_solvable(2, 2)));
  CHECK(Group::parse("Z/4") == Group::finite_cyclic(4));
  CHECK(Group::parse(" wr( Z^1 , Z/3 ) ") ==
        Group::wreath(Group::free_abelian(1), Group::finite_cyclic(3)));
  CHECK_THROWS_AS(Group::parse("Z/0"), ParseError);
  CHECK_THROWS_AS(Group::parse("S(0,2)"), ParseError);
  CHECK_THROWS_AS(Group::parse("Q8"), ParseError);
  CHECK_THROWS_AS(Group::parse("Z^2 x"), ParseError);
  CHECK(Group::parse("wr(Z^2,S(2,2))").to_string() == "wr(Z^2,S(2,2))");
  CHECK(Group::parse("wr(Z^2,S(2,2))").ngens() == 4);
}

TEST_CASE("wp base cases") {
  Group za2 = Group::free_abelian(2);
  CHECK(wp(za2, pw("x1 x2 X1 X2", za2)));
  Group z3 = Group::finite_cyclic(3);
  CHECK(wp(z3, pw("x1 x1 x1", z3)));
  CHECK_FALSE(wp(z3, pw("x1 x1", z3)));
  Group s22 = Group::free_solvable(2, 2);
  CHECK_FALSE(wp(s22, pw("x1 x2 X1 X2", s22)));
  CHECK(wp(Group::free_solvable(1, 2), pw("x1 x2 X1 X2", za2)));
  CHECK_THROWS_AS(wp(za2, Word::identity(3)), AlphabetError);
}

TEST_CASE("cp base cases") {
  Group za2 = Group::free_abelian(2);
  CHECK(cp(za2, pw("x1", za2), pw("x2 x1 X2", za2)));
  Group z4 = Group::finite_cyclic(4);
  CHECK_FALSE(cp(z4, pw("x1", z4), pw("x1 x1", z4)));
  Group s22 = Group::free_solvable(2, 2);
  Word c = pw("x1 x2 X1 X2", s22);
  CHECK(cp(s22, c, conj_by(pw("x1", s22), c)));
}

TEST_CASE("csp base cases") {
  Group za2 = Group::free_abelian(2);
  auto z = csp(za2, pw("x1", za2), pw("x2 x1 X2", za2));
  REQUIRE(z);
  CHECK(z->empty());
  Group z3 = Group::finite_cyclic(3);
  CHECK_FALSE(csp(z3, pw("x1", z3), pw("x1 x1", z3)));
  Group s22 = Group::free_solvable(2, 2);
  Word x = pw("x1 x2 X1 X2", s22);
  Word y = conj_by(pw("x1", s22), x);
  auto s = csp(s22, x, y);
  REQUIRE(s);
  CHECK(wp(s22, concat(conj_by(*s, x), invert(y))));
}

TEST_CASE("pp base cases") {
  Group za2 = Group::free_abelian(2);
  CHECK(pp(za2, pw("x1 x1 x1 x1 x1 x1 X2 X2 X2 X2", za2), pw("x1 x1 x1 X2 X2", za2)) == 2);
  CHECK_FALSE(pp(za2, pw("x1 x1 x1 x2 x2", za2), pw("x1 x1 x1 x1 x1 x1 x2 x2 x2 x2", za2)));
  CHECK(pp(za2, Word::identity(2), pw("x1", za2)) == 0);
  // zero-denominator coordinates constrain but do not divide
  CHECK(pp(za2, pw("x1 x1", za2), pw("x1", za2)) == 2);
  CHECK_FALSE(pp(za2, pw("x1 x2", za2), pw("x1", za2)));
  CHECK(pp(za2, Word::identity(2), Word::identity(2)) == 0);

  Group z6 = Group::finite_cyclic(6);
  auto n = pp(z6, pw("x1 x1 x1 x1", z6), pw("x1 x1", z6));
  REQUIRE(n);
  CHECK(((*n % 3) + 3) % 3 == 2);  // 2n = 4 mod 6
  CHECK_FALSE(pp(z6, pw("x1", z6), pw("x1 x1", z6)));
}

TEST_CASE("order_of") {
  Group s22 = Group::free_solvable(2, 2);
  CHECK(order_of(s22, pw("x1 x2 X1 X2", s22)) == Order::infinite());
  CHECK(order_of(s22, Word::identity(2)) == Order::fin(1));
  Group z4 = Group::finite_cyclic(4);
  CHECK(order_of(z4, pw("x1 x1", z4)) == Order::fin(2));
  CHECK(order_of(z4, pw("x1", z4)) == Order::fin(4));
  CHECK(order_of(Group::free_abelian(2), Word::identity(2)) == Order::fin(1));

  Group w23 = Group::wreath(Group::finite_cyclic(2), Group::finite_cyclic(3));
  // top of order 3 over a value of order 2
  CHECK(order_of(w23, pw("x1 y1", w23)) == Order::fin(6));
  CHECK(order_of(w23, pw("x1", w23)) == Order::fin(2));
  Group wzz = Group::wreath(Group::free_abelian(1), Group::free_abelian(1));
  CHECK(order_of(wzz, pw("y1", wzz)) == Order::infinite());
  CHECK(order_of(wzz, pw("x1", wzz)) == Order::infinite());
}

TEST_CASE("cp is reflexive and symmetric on random inputs") {
  std::mt19937_64 rng(7);
  Group groups[] = {Group::free_abelian(2), Group::finite_cyclic(5),
                    Group::free_solvable(2, 2)};
  for (const Group& g : groups) {
    for (int i = 0; i < 40; ++i) {
      Word x = random_reduced_word(rng, g.ngens(), int(rng() % 8));
      Word y = random_reduced_word(rng, g.ngens(), int(rng() % 8));
      CHECK(cp(g, x, x));
      CHECK(cp(g, x, y) == cp(g, y, x));
    }
  }
}

TEST_CASE("csp output always verifies") {
  std::mt19937_64 rng(8);
  Group s22 = Group::free_solvable(2, 2);
  for (int i = 0; i < 25; ++i) {
    Word x = random_reduced_word(rng, 2, 1 + int(rng() % 8));
    Word s = random_reduced_word(rng, 2, int(rng() % 5));
    Word y = conj_by(s, x);
    auto z = csp(s22, x, y);
    REQUIRE(z);
    CHECK(wp(s22, concat(conj_by(*z, x), invert(y))));
  }
}

TEST_CASE("pp round trips: pp(y^n, y) recovers n") {
  std::mt19937_64 rng(9);
  Group groups[] = {Group::free_abelian(3), Group::free_solvable(2, 2)};
  for (const Group& g : groups) {
    for (int i = 0; i < 30; ++i) {
      Word y = random_reduced_word(rng, g.ngens(), 1 + int(rng() % 6));
      if (wp(g, y)) continue;
      long long n = static_cast<long long>(rng() % 11) - 5;
      auto got = pp(g, word_pow(y, n), y);
      REQUIRE(got);
      CHECK(*got == n);  // torsion-free: the exponent is unique
    }
  }
}

TEST_CASE("S(1,r) and Z^r oracles agree") {
  std::mt19937_64 rng(10);
  Group s1 = Group::free_solvable(1, 3);
  Group za = Group::free_abelian(3);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Word x = random_reduced_word(rng, 3, int(rng() % 10));
    Word y = random_reduced_word(rng, 3, int(rng() % 10));
    CHECK(wp(s1, x) == wp(za, x));
    CHECK(cp(s1, x, y) == cp(za, x, y));
    CHECK(pp(s1, x, y) == pp(za, x, y));
    CHECK(csp(s1, x, y).has_value() == csp(za, x, y).has_value());
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("pp in wreath products") {
  // finite order: scan within the order
  Group w23 = Group::wreath(Group::finite_cyclic(2), Group::finite_cyclic(3));
  Word gen = pw("x1 y1", w23);
  CHECK(pp(w23, pw("x1 y1 x1 y1", w23), gen) == 2);
  CHECK_FALSE(pp(w23, pw("x1", w23), pw("y1", w23)));
  CHECK(pp(w23, Word::identity(2), gen) == 0);

  // infinite-order top: the exponent comes from the projections
  Group wzz = Group::wreath(Group::free_abelian(1), Group::free_abelian(1));
  Word t = pw("x1 y1", wzz);
  for (long long n : {-3LL, -1LL, 0LL, 2LL, 4LL}) {
    auto got = pp(wzz, word_pow(t, n), t);
    REQUIRE(got);
    CHECK(wp(wzz, concat(word_pow(t, n), invert(word_pow(t, *got)))));
  }
  CHECK_FALSE(pp(wzz, pw("y1", wzz), pw("y1 y1", wzz)));

  // trivial top, pure function of infinite order: pointwise exponents
  Word f = pw("x1 y1 x1 Y1", wzz);  // values at two points
  auto got = pp(wzz, word_pow(f, 3), f);
  REQUIRE(got);
  CHECK(*got == 3);
  CHECK_FALSE(pp(wzz, pw("x1", wzz), f));

  // finite-order top over an infinite function part
  Group wz2 = Group::wreath(Group::free_abelian(1), Group::finite_cyclic(2));
  Word m = pw("x1 y1", wz2);
  for (long long n : {1LL, 2LL, 3LL, 5LL}) {
    auto r = pp(wz2, word_pow(m, n), m);
    REQUIRE(r);
    CHECK(wp(wz2, concat(word_pow(m, n), invert(word_pow(m, *r)))));
  }
}

TEST_CASE("canonical keys separate exactly the equal elements") {
  std::mt19937_64 rng(11);
  Group groups[] = {Group::free_abelian(2), Group::finite_cyclic(4), Group::free_solvable(2, 2),
                    Group::wreath(Group::finite_cyclic(2), Group::finite_cyclic(3))};
  for (const Group& g : groups) {
    for (int i = 0; i < 60; ++i) {
      Word x = random_reduced_word(rng, g.ngens(), int(rng() % 7));
      Word y = random_reduced_word(rng, g.ngens(), int(rng() % 7));
      CHECK((canonical_key(g, x) == canonical_key(g, y)) == elements_equal(g, x, y));
    }
  }
}
