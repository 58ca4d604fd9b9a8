#include <algorithm>
#include <random>

#include "doctest.h"
#include "lhull/backend.hpp"
#include "lhull/errors.hpp"
#include "lhull/rational.hpp"
#include "oracles.hpp"

using namespace lhull;

TEST_CASE("multiply examples") {
  PositiveCone z(1);
  CHECK(z.multiply({2}, {3}) == PositiveCone::Element{5});
  AxPlusB ab;
  CHECK(ab.multiply({1, 2}, {3, 4}) == AxPlusB::Element{7, 8});
  FreeMonoid f(2);
  CHECK(f.multiply("ab", "ba") == "abba");
  NumericalSemigroup n({2, 3});
  CHECK(n.multiply(2, 3) == 5);
}

TEST_CASE("left_divide examples") {
  PositiveCone z(1);
  CHECK(z.left_divide({2}, {5}) == PositiveCone::Element{3});
  FreeMonoid f(2);
  CHECK_FALSE(f.left_divide("ab", "ba").has_value());
  CHECK(f.left_divide("ab", "abba") == std::optional<std::string>("ba"));
  NumericalSemigroup n({2, 3});
  CHECK_FALSE(n.left_divide(2, 3).has_value());
  CHECK(n.left_divide(2, 5) == std::optional<std::int64_t>(3));
  AxPlusB ab;
  CHECK(ab.left_divide({1, 2}, {7, 8}) == std::optional<AxPlusB::Element>({3, 4}));
  CHECK_FALSE(ab.left_divide({0, 2}, {1, 2}).has_value());
}

TEST_CASE("preceq examples") {
  PositiveCone z(1);
  CHECK(preceq(z, {5}, {4}));
  CHECK_FALSE(preceq(z, {4}, {5}));
  PositiveCone z2(2);
  CHECK_FALSE(preceq(z2, {1, 0}, {0, 1}));
  CHECK_FALSE(preceq(z2, {0, 1}, {1, 0}));
  FreeMonoid f(2);
  for (auto const& w : f.enumerate_window(3)) {
    CHECK(preceq(f, w, f.identity()));
  }
  // Units of ax+b break antisymmetry.
  AxPlusB ab;
  CHECK(preceq(ab, {1, 1}, {0, 1}));
  CHECK(preceq(ab, {0, 1}, {1, 1}));
  CHECK_FALSE(ab.units_trivial());
}

TEST_CASE("embed examples") {
  PositiveCone z(1);
  CHECK(z.embed({3}) == PositiveCone::Group{3});
  AxPlusB ab;
  CHECK(ab.embed({1, 2}) == AxPlusB::Group{Rational(1), Rational(2)});
  FreeMonoid f(2);
  CHECK(f.format_group(f.embed("ab")) == "ab");
  CHECK(f.format_group(f.group_inverse(f.embed("ab"))) == "BA");
  CHECK(f.format_group(f.group_multiply(f.embed("ab"), f.group_inverse(f.embed("b")))) == "a");
}

TEST_CASE("enumerate_window examples") {
  PositiveCone z(1);
  std::vector<PositiveCone::Element> zw;
  for (std::int64_t i = 0; i <= 4; ++i) {
    zw.push_back({i});
  }
  CHECK(z.enumerate_window(4) == zw);
  FreeMonoid f(2);
  CHECK(f.enumerate_window(2)
        == std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});
  NumericalSemigroup n({2, 3});
  CHECK(n.enumerate_window(6) == std::vector<std::int64_t>{0, 2, 3, 4, 5, 6});
  FiniteTable t({{0, 1}, {1, 0}}, 0);
  CHECK(t.enumerate_window(0).size() == 2);
}

TEST_CASE("enumerate_window is prefix monotone and duplicate free") {
  auto check = [](auto const& b) {
    for (std::size_t k = 0; k < 5; ++k) {
      auto a = b.enumerate_window(k);
      auto c = b.enumerate_window(k + 1);
      REQUIRE(a.size() <= c.size());
      CHECK(std::equal(a.begin(), a.end(), c.begin()));
      auto s = a;
      std::sort(s.begin(), s.end());
      CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
      CHECK(a.front() == b.identity());
    }
  };
  check(FreeMonoid(2));
  check(PositiveCone(3));
  check(NumericalSemigroup({3, 5, 7}));
  check(AxPlusB{});
}

TEST_CASE("ax+b window bounds") {
  AxPlusB ab;
  auto w = ab.enumerate_window(2);
  CHECK(w.size() == 5 * 4);
  for (auto const& e : w) {
    CHECK(std::abs(e.b) <= 2);
    CHECK(std::abs(e.a) >= 1);
    CHECK(std::abs(e.a) <= 2);
  }
}

TEST_CASE("numerical membership agrees with brute force") {
  for (auto gens : std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 5}, {4, 6, 9}, {5, 7, 11}, {6, 10}}) {
    NumericalSemigroup n(gens);
    auto members = oracle::numerical_members(gens, 200);
    for (std::int64_t x = -3; x <= 200; ++x) {
      CHECK(n.is_member(x) == (members.count(x) == 1));
    }
  }
}

TEST_CASE("numerical semigroup conductor and normalization") {
  CHECK(NumericalSemigroup({2, 3}).conductor() == 2);
  CHECK(NumericalSemigroup({3, 5}).conductor() == 8);
  CHECK(NumericalSemigroup({6, 10}).conductor() == 2 * 8);
  CHECK(NumericalSemigroup({3, 2, 3}).generators() == std::vector<std::int64_t>{2, 3});
  CHECK_THROWS_AS(NumericalSemigroup({1, 3}), UsageError);
}

TEST_CASE("finite table validation") {
  FiniteTable z3({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0);
  CHECK(z3.group_inverse(1) == 2);
  CHECK(z3.left_divide(1, 0) == std::optional<std::size_t>(2));
  // Row 1 is not injective.
  try {
    FiniteTable bad({{0, 1}, {1, 1}}, 0);
    FAIL("accepted a table that is not left cancellative");
  } catch (PreconditionError const& e) {
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }
  CHECK_THROWS_AS(FiniteTable({{0, 1}, {1, 2}}, 0), PreconditionError);
  CHECK_THROWS_AS(FiniteTable({{1, 0}, {0, 1}}, 0), PreconditionError);
}

TEST_CASE("associativity and left cancellation on random triples") {
  std::mt19937_64 rng(7);
  auto run = [&](auto const& b) {
    auto w = b.enumerate_window(4);
    for (int i = 0; i < 300; ++i) {
      auto const& x = w[rng() % w.size()];
      auto const& y = w[rng() % w.size()];
      auto const& z = w[rng() % w.size()];
      CHECK(b.multiply(b.multiply(x, y), z) == b.multiply(x, b.multiply(y, z)));
      if (b.multiply(x, y) == b.multiply(x, z)) {
        CHECK(y == z);
      }
      CHECK(b.left_divide(x, b.multiply(x, y)) == std::optional(y));
      CHECK(b.embed(b.multiply(x, y)) == b.group_multiply(b.embed(x), b.embed(y)));
    }
  };
  run(FreeMonoid(3));
  run(PositiveCone(2));
  run(NumericalSemigroup({3, 5}));
  run(AxPlusB{});
  run(FiniteTable({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0));
}

TEST_CASE("rationals") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).den() == 2);
  CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational(98, 100).to_string() == "49/50");
  CHECK_THROWS(Rational(1, 0));
  CHECK(mod(-7, 3) == 2);
  CHECK(lcm(4, 6) == 12);
  CHECK_THROWS_AS(checked::mul(INT64_MAX, 2), std::overflow_error);
}

TEST_CASE("element parsing") {
  AxPlusB ab;
  CHECK(ab.parse_element("(1, -2)") == AxPlusB::Element{1, -2});
  CHECK_THROWS_AS(ab.parse_element("(1,0)"), UsageError);
  CHECK(ab.parse_group("(1/2,-3)") == AxPlusB::Group{Rational(1, 2), Rational(-3)});
  NumericalSemigroup n({2, 3});
  CHECK_THROWS_AS(n.parse_element("1"), UsageError);
  FreeMonoid f(2);
  CHECK(f.parse_element("1").empty());
  CHECK_THROWS(f.parse_element("abc"));
}
