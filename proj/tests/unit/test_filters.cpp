#include <set>

#include "doctest.h"
#include "lhull/filters.hpp"
#include "lhull/ideals.hpp"

using namespace lhull;

namespace {

  // Meet table rebuilt from pointwise membership on a probe set, and
  // filters found by scanning every subset for 0-homomorphism indicators.
  template <Backend B>
  std::set<Filter> oracle_filters(B const& b,
                                  FiniteSemilattice<B> const& L,
                                  std::vector<typename B::Element> const& probe) {
    std::size_t n = L.size();
    std::vector<std::vector<bool>> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto const& x : probe) {
        bits[i].push_back(b.contains(L.elements[i], x));
      }
    }
    auto meet = [&](std::size_t i, std::size_t j) {
      std::vector<bool> m(probe.size());
      for (std::size_t k = 0; k < probe.size(); ++k) {
        m[k] = bits[i][k] && bits[j][k];
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (bits[c] == m) {
          return c;
        }
      }
      FAIL("meet outside the family");
      return n;
    };
    std::size_t top = n, zero = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::all_of(bits[i].begin(), bits[i].end(), [](bool x) { return x; })) {
        top = i;
      }
      if (std::none_of(bits[i].begin(), bits[i].end(), [](bool x) { return x; })) {
        zero = i;
      }
    }
    std::set<Filter> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      auto phi = [&](std::size_t i) { return (mask >> i) & 1u; };
      bool hom = phi(top) == 1 && phi(zero) == 0;
      for (std::size_t i = 0; i < n && hom; ++i) {
        for (std::size_t j = 0; j < n && hom; ++j) {
          hom = phi(meet(i, j)) == (phi(i) & phi(j));
        }
      }
      if (hom) {
        Filter f;
        for (std::size_t i = 0; i < n; ++i) {
          if (phi(i)) {
            f.push_back(i);
          }
        }
        out.insert(f);
      }
    }
    return out;
  }

  template <Backend B>
  void agree_with_oracle(B const& b,
                         std::vector<typename B::Element> const& gens,
                         std::size_t depth,
                         std::size_t probe_bound,
                         std::size_t expected) {
    auto fam = constructible_closure(b, std::span<typename B::Element const>(gens), depth);
    auto L   = truncate_semilattice(b, fam);
    auto fs  = enumerate_filters(L);
    std::set<Filter> lib(fs.begin(), fs.end());
    CHECK(lib.size() == fs.size());
    auto o = oracle_filters(b, L, b.enumerate_window(probe_bound));
    CHECK(lib == o);
    CHECK(o.size() == expected);
    for (auto const& f : fs) {
      CHECK(is_filter<B>(f, L));
    }
  }

}  // namespace

TEST_CASE("semilattice truncation examples") {
  PositiveCone z(1);
  std::vector<PositiveCone::Element> g{{1}};
  auto L = truncate_semilattice(z, constructible_closure(z, std::span<PositiveCone::Element const>(g), 3));
  CHECK(L.size() == 5);
  for (std::size_t i = 0; i + 1 < L.size(); ++i) {
    CHECK(L.below(i + 1, i));
  }
  auto T = truncate_semilattice(z, {z.full()});
  CHECK(T.size() == 2);
  CHECK(enumerate_filters(T) == std::vector<Filter>{{T.top}});
  FreeMonoid f(2);
  std::vector<std::string> fg{"a", "b"};
  auto F = truncate_semilattice(f, constructible_closure(f, std::span<std::string const>(fg), 1));
  CHECK(F.size() == 4);
  CHECK(F.meet[1][2] == F.zero);
  CHECK_THROWS_AS(truncate_semilattice(z, {z.principal({1})}), PreconditionError);
}

TEST_CASE("filters of a free monoid truncation") {
  FreeMonoid f(2);
  std::vector<std::string> fg{"a", "b"};
  auto L  = truncate_semilattice(f, constructible_closure(f, std::span<std::string const>(fg), 1));
  auto fs = enumerate_filters(L);
  std::vector<std::vector<std::string>> rendered;
  for (auto const& x : fs) {
    std::vector<std::string> r;
    for (auto i : x) {
      r.push_back(f.format_ideal(L.elements[i]));
    }
    rendered.push_back(r);
  }
  CHECK(rendered
        == std::vector<std::vector<std::string>>{{"S"}, {"S", "aS"}, {"S", "bS"}});
}

TEST_CASE("is_filter basics") {
  PositiveCone z(1);
  std::vector<PositiveCone::Element> g{{1}};
  auto L = truncate_semilattice(z, constructible_closure(z, std::span<PositiveCone::Element const>(g), 2));
  std::vector<std::size_t> top{L.top}, zero{L.zero}, gap{L.top, 2};
  CHECK(is_filter<PositiveCone>(top, L));
  CHECK_FALSE(is_filter<PositiveCone>(zero, L));
  CHECK_FALSE(is_filter<PositiveCone>(gap, L));
}

TEST_CASE("chain filter count is the chain length") {
  PositiveCone z(1);
  std::vector<PositiveCone::Element> g{{1}};
  for (std::size_t depth = 1; depth <= 8; ++depth) {
    auto L = truncate_semilattice(z, constructible_closure(z, std::span<PositiveCone::Element const>(g), depth));
    auto fs = enumerate_filters(L);
    CHECK(fs.size() == depth + 1);
    for (auto const& f : fs) {
      CHECK(minimal_elements<PositiveCone>(f, L).size() == 1);
    }
  }
}

TEST_CASE("filters agree with the 0-homomorphism oracle") {
  // Expected counts frozen from the oracle.
  agree_with_oracle(PositiveCone(1), {{1}}, 4, 12, 5);
  agree_with_oracle(PositiveCone(2), PositiveCone(2).default_generators(), 2, 8, 9);
  agree_with_oracle(FreeMonoid(2), {"a", "b"}, 2, 4, 7);
  agree_with_oracle(NumericalSemigroup({2, 3}), {2, 3}, 2, 30, 13);
  agree_with_oracle(FiniteTable({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0), {1, 2}, 2, 3, 1);
}

TEST_CASE("filters stay filters in a deeper truncation") {
  NumericalSemigroup b({2, 3});
  std::vector<std::int64_t> gens{2, 3};
  auto L2 = truncate_semilattice(b, constructible_closure(b, std::span<std::int64_t const>(gens), 2));
  auto L3 = truncate_semilattice(b, constructible_closure(b, std::span<std::int64_t const>(gens), 3));
  for (auto const& f : enumerate_filters(L2)) {
    // Every ideal of the deeper family that contains a member.
    Filter up;
    for (std::size_t c = 0; c < L3.size(); ++c) {
      for (auto i : f) {
        auto j = std::find(L3.elements.begin(), L3.elements.end(), L2.elements[i]) - L3.elements.begin();
        if (L3.below(j, c)) {
          up.push_back(c);
          break;
        }
      }
    }
    CHECK(is_filter<NumericalSemigroup>(up, L3));
  }
}

TEST_CASE("maximal representation matches independence") {
  NumericalSemigroup b({2, 3});
  std::vector<std::int64_t> gens{2, 3};
  for (std::size_t depth = 1; depth <= 3; ++depth) {
    auto fam = constructible_closure(b, std::span<std::int64_t const>(gens), depth);
    auto L   = truncate_semilattice(b, fam);
    CHECK(maximal_representation_check(b, L).independent == independence_check(b, fam).independent);
  }
  auto fam = constructible_closure(b, std::span<std::int64_t const>(gens), 3);
  auto v   = maximal_representation_check(b, truncate_semilattice(b, fam));
  CHECK_FALSE(v.independent);
  PositiveCone z(1);
  std::vector<PositiveCone::Element> g{{1}};
  CHECK(maximal_representation_check(z, truncate_semilattice(z, constructible_closure(z, std::span<PositiveCone::Element const>(g), 3))).independent);
  CHECK(maximal_representation_check(z, truncate_semilattice(z, {z.full()})).independent);
}
