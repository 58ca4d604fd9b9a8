#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "lhull/ideals.hpp"
#include "oracles.hpp"

using namespace lhull;

namespace {

  // Ideals of a numerical semigroup as membership bits on [0, L); every
  // ideal met here contains all integers >= L.
  constexpr std::int64_t L = 160;
  using Bits               = std::vector<bool>;

  struct NumOracle {
    std::set<std::int64_t> S;
    explicit NumOracle(std::vector<std::int64_t> const& gens)
        : S(oracle::numerical_members(gens, L + 64)) {}

    bool in(Bits const& X, std::int64_t y) const {
      return y >= L || (y >= 0 && X[y]);
    }
    Bits full() const {
      Bits X(L);
      for (std::int64_t y = 0; y < L; ++y) {
        X[y] = S.count(y);
      }
      return X;
    }
    Bits translate(std::int64_t s, Bits const& X) const {
      Bits Y(L);
      for (std::int64_t y = 0; y < L; ++y) {
        Y[y] = y - s >= 0 && in(X, y - s);
      }
      return Y;
    }
    Bits preimage(std::int64_t s, Bits const& X) const {
      Bits Y(L);
      for (std::int64_t t = 0; t < L; ++t) {
        Y[t] = S.count(t) && in(X, s + t);
      }
      return Y;
    }
    static Bits meet(Bits const& X, Bits const& Y) {
      Bits Z(L);
      for (std::int64_t y = 0; y < L; ++y) {
        Z[y] = X[y] && Y[y];
      }
      return Z;
    }

    std::set<Bits> closure(std::vector<std::int64_t> slots, std::size_t depth) const {
      slots.insert(slots.begin(), 0);
      std::set<Bits> fam{full()};
      std::vector<Bits> frontier{full()};
      for (std::size_t d = 0; d < depth; ++d) {
        std::vector<Bits> next;
        for (auto const& X : frontier) {
          for (auto s : slots) {
            for (auto t : slots) {
              auto Y = preimage(t, translate(s, X));
              if (fam.insert(Y).second) {
                next.push_back(Y);
              }
            }
          }
        }
        frontier = std::move(next);
      }
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Bits> v(fam.begin(), fam.end());
        for (auto const& X : v) {
          for (auto const& Y : v) {
            grew = fam.insert(meet(X, Y)).second || grew;
          }
        }
      }
      return fam;
    }
  };

  Bits as_bits(NumericalSemigroup const& b, NumericalSemigroup::Ideal const& X) {
    Bits out(L);
    for (std::int64_t y = 0; y < L; ++y) {
      out[y] = b.contains(X, y);
    }
    return out;
  }

}  // namespace

TEST_CASE("numerical ideal examples") {
  NumericalSemigroup b({2, 3});
  auto X = b.principal(5);
  CHECK(b.format_ideal(X) == "{5,7,8,9,...}");
  CHECK(b.format_ideal(preimage(b, 2, X)) == "{3,5,6,7,...}");
  CHECK(b.format_ideal(translate(b, 2, b.full())) == "{2,4,5,6,...}");
  CHECK(membership(b, 7, X));
  CHECK_FALSE(membership(b, 6, X));
  CHECK(b.format_ideal(b.intersect(b.principal(2), b.principal(3))) == "{5,6,7,...}");
  CHECK(b.format_ideal(b.full()) == "S");
  CHECK(b.format_ideal(b.empty()) == "empty");
}

TEST_CASE("numerical operations agree with the set oracle") {
  for (auto gens : std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 5}, {3, 4, 5}, {4, 6, 9}}) {
    NumericalSemigroup b(gens);
    NumOracle o(gens);
    std::mt19937_64 rng(11);
    auto members = b.enumerate_window(20);
    std::vector<NumericalSemigroup::Ideal> pool{b.full()};
    for (auto s : members) {
      pool.push_back(b.principal(s));
    }
    for (int i = 0; i < 400; ++i) {
      auto const& X = pool[rng() % pool.size()];
      auto const& Y = pool[rng() % pool.size()];
      auto s        = members[rng() % members.size()];
      auto bx       = as_bits(b, X);
      CHECK(as_bits(b, translate(b, s, X)) == o.translate(s, bx));
      CHECK(as_bits(b, preimage(b, s, X)) == o.preimage(s, bx));
      auto Z = b.intersect(X, Y);
      CHECK(as_bits(b, Z) == NumOracle::meet(bx, as_bits(b, Y)));
      if (pool.size() < 200) {
        pool.push_back(Z);
        pool.push_back(preimage(b, s, Z));
      }
    }
  }
}

TEST_CASE("constructible family of <2,3> matches the oracle closure") {
  NumericalSemigroup b({2, 3});
  std::vector<std::int64_t> gens{2, 3};
  NumOracle o(gens);
  // Frozen from the oracle.
  std::vector<std::size_t> expected{1, 7, 13, 19};
  for (std::size_t depth = 0; depth <= 3; ++depth) {
    auto fam     = constructible_closure(b, std::span<std::int64_t const>(gens), depth);
    auto ofam    = o.closure(gens, depth);
    std::set<Bits> lib;
    for (auto const& X : fam) {
      lib.insert(as_bits(b, X));
    }
    CHECK(lib == ofam);
    CHECK(fam.size() == ofam.size());
    CHECK(ofam.size() == expected[depth]);
    CHECK(std::is_sorted(fam.begin(), fam.end()));
  }
}

TEST_CASE("free monoid family is every word of length <= depth plus empty") {
  FreeMonoid b(2);
  std::vector<std::string> gens{"a", "b"};
  for (std::size_t depth = 1; depth <= 4; ++depth) {
    auto fam = constructible_closure(b, std::span<std::string const>(gens), depth);
    std::size_t words = (std::size_t{1} << (depth + 1)) - 1;
    CHECK(fam.size() == words + 1);
    CHECK(b.format_ideal(fam.front()) == "S");
    CHECK(b.format_ideal(fam.back()) == "empty");
  }
  auto fam = constructible_closure(b, std::span<std::string const>(gens), 2);
  CHECK(render_family(b, fam)
        == std::vector<std::string>{"S", "aS", "bS", "aaS", "abS", "baS", "bbS", "empty"});
}

TEST_CASE("cone family is the box of corners") {
  for (std::size_t n = 1; n <= 3; ++n) {
    PositiveCone b(n);
    auto gens = b.default_generators();
    for (std::size_t depth = 1; depth <= 3; ++depth) {
      auto fam = constructible_closure(b, std::span<PositiveCone::Element const>(gens), depth);
      std::size_t box = 1;
      for (std::size_t i = 0; i < n; ++i) {
        box *= depth + 1;
      }
      CHECK(fam.size() == box);
    }
  }
}

TEST_CASE("ax+b ideals against brute-force divisibility") {
  AxPlusB b;
  auto small = b.enumerate_window(3);
  // z in sS iff s x = z has an integral solution x = ((z.b - s.b)/s.a, z.a/s.a).
  auto in_principal = [](AxPlusB::Element const& s, AxPlusB::Element const& z) {
    return (z.b - s.b) % s.a == 0 && z.a % s.a == 0;
  };
  CHECK(b.principal({3, 2}) == b.principal({1, 2}));
  CHECK(b.format_ideal(b.principal({3, 2})) == "(1,2)S");
  CHECK(b.format_ideal(b.principal({5, 1})) == "S");
  CHECK(is_empty<AxPlusB>(b.intersect(b.principal({0, 2}), b.principal({1, 2}))));
  CHECK(b.intersect(b.principal({0, 2}), b.principal({0, 3})) == b.principal({0, 6}));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    auto s = small[rng() % small.size()];
    auto t = small[rng() % small.size()];
    auto X = b.intersect(b.principal(s), b.principal(t));
    auto P = preimage(b, t, b.principal(s));
    for (auto const& z : small) {
      CHECK(b.contains(b.principal(s), z) == in_principal(s, z));
      CHECK(b.contains(X, z) == (in_principal(s, z) && in_principal(t, z)));
      CHECK(b.contains(P, z) == in_principal(s, b.multiply(t, z)));
    }
  }
}

TEST_CASE("adjunction and right-ideal laws") {
  NumericalSemigroup b({3, 5});
  auto w = b.enumerate_window(25);
  std::vector<std::int64_t> gens{3, 5};
  auto fam = constructible_closure(b, std::span<std::int64_t const>(gens), 2);
  for (auto const& X : fam) {
    for (auto s : w) {
      for (auto t : w) {
        CHECK(b.contains(preimage(b, s, X), t) == b.contains(X, b.multiply(s, t)));
        if (b.contains(X, s)) {
          CHECK(b.contains(X, b.multiply(s, t)));
        }
      }
    }
  }
}

TEST_CASE("clifford verdicts") {
  CHECK(clifford_check(FreeMonoid(2)).outcome == Outcome::holds);
  CHECK(clifford_check(PositiveCone(2)).outcome == Outcome::holds);
  CHECK(clifford_check(AxPlusB{}).outcome == Outcome::holds);
  NumericalSemigroup b({2, 3});
  auto v = clifford_check(b);
  REQUIRE(v.outcome == Outcome::fails);
  CHECK(*v.s == 2);
  CHECK(*v.t == 3);
  CHECK(b.format_ideal(*v.intersection) == "{5,6,7,...}");
  // The oracle confirms {5,6,7,...} is no translate g+S.
  NumOracle o({2, 3});
  auto meet = NumOracle::meet(o.translate(2, o.full()), o.translate(3, o.full()));
  for (std::int64_t g = 0; g < 40; ++g) {
    CHECK(o.translate(g, o.full()) != meet);
  }
}

TEST_CASE("independence") {
  FreeMonoid f(2);
  std::vector<std::string> fg{"a", "b"};
  CHECK(independence_check(f, constructible_closure(f, std::span<std::string const>(fg), 2)).independent);
  PositiveCone c(2);
  auto cg = c.default_generators();
  CHECK(independence_check(c, constructible_closure(c, std::span<PositiveCone::Element const>(cg), 2)).independent);

  NumericalSemigroup b({2, 3});
  std::vector<std::int64_t> gens{2, 3};
  auto v = independence_check(b, constructible_closure(b, std::span<std::int64_t const>(gens), 3));
  REQUIRE_FALSE(v.independent);
  CHECK(b.format_ideal(*v.target) == "{2,3,4,...}");
  std::vector<std::string> parts;
  for (auto const& X : v.parts) {
    parts.push_back(b.format_ideal(X));
  }
  CHECK(parts == std::vector<std::string>{"{2,4,5,6,...}", "{3,5,6,7,...}"});
  // The union really is the target, checked pointwise.
  for (std::int64_t y = 0; y < L; ++y) {
    bool u = std::any_of(v.parts.begin(), v.parts.end(), [&](auto const& X) { return b.contains(X, y); });
    CHECK(u == b.contains(*v.target, y));
  }
}
