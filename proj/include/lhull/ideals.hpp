#ifndef LHULL_IDEALS_HPP_
#define LHULL_IDEALS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lhull/backend.hpp"
#include "lhull/rational.hpp"

namespace lhull {

  template <Backend B>
  using IdealFamily = std::vector<typename B::Ideal>;

  // sX
  template <Backend B>
  typename B::Ideal translate(B const& b,
                              typename B::Element const& s,
                              typename B::Ideal const& X) {
    return b.image(b.embed(s), X);
  }

  // s^{-1}X = {t : st in X}
  template <Backend B>
  typename B::Ideal preimage(B const& b,
                             typename B::Element const& s,
                             typename B::Ideal const& X) {
    return b.restrict(b.full(), b.embed(s), X);
  }

  template <Backend B>
  bool membership(B const& b,
                  typename B::Element const& x,
                  typename B::Ideal const& X) {
    return b.contains(X, x);
  }

  inline std::int64_t lcm_integer(std::int64_t a, std::int64_t b) {
    return lcm(a, b);
  }

  // Closes under pairwise intersection and returns the sorted family.
  template <Backend B>
  IdealFamily<B> close_under_intersection(B const& b,
                                          std::set<typename B::Ideal> family) {
    std::vector<typename B::Ideal> frontier(family.begin(), family.end());
    while (!frontier.empty()) {
      std::vector<typename B::Ideal> next;
      std::vector<typename B::Ideal> snapshot(family.begin(), family.end());
      for (auto const& X : frontier) {
        for (auto const& Y : snapshot) {
          auto Z = b.intersect(X, Y);
          if (family.insert(Z).second) {
            next.push_back(Z);
          }
        }
      }
      frontier = std::move(next);
    }
    return {family.begin(), family.end()};
  }

  // Ideals t_1^{-1} s_1 ... t_k^{-1} s_k S with k <= depth and every slot in
  // gens or 1, closed under intersection.
  template <Backend B>
  IdealFamily<B> constructible_closure(B const& b,
                                       std::span<typename B::Element const> gens,
                                       std::size_t depth) {
    auto slots = slots_with_identity(b, gens);
    std::set<typename B::Ideal> family{b.full()};
    std::vector<typename B::Ideal> level{b.full()};
    for (std::size_t k = 0; k < depth; ++k) {
      std::vector<typename B::Ideal> next;
      for (auto const& X : level) {
        for (auto const& s : slots) {
          auto sX = translate(b, s, X);
          for (auto const& t : slots) {
            auto Y = preimage(b, t, sX);
            if (family.insert(Y).second) {
              next.push_back(Y);
            }
          }
        }
      }
      level = std::move(next);
    }
    return close_under_intersection(b, std::move(family));
  }

  template <Backend B>
  std::vector<std::string> render_family(B const& b, IdealFamily<B> const& family) {
    std::vector<std::string> out;
    for (auto const& X : family) {
      out.push_back(b.format_ideal(X));
    }
    return out;
  }

  template <Backend B>
  struct CliffordVerdict {
    Outcome outcome = Outcome::holds;
    std::string tag;  // proof tag, or the bound for inconclusive
    std::optional<typename B::Element> s, t;
    std::optional<typename B::Ideal> intersection;
  };

  namespace detail {
    // sS and tS meet in a non-principal nonempty ideal.
    template <Backend B>
    bool non_principal_meet(B const& b,
                            typename B::Element const& s,
                            typename B::Element const& t,
                            typename B::Ideal* meet) {
      auto X = b.intersect(b.principal(s), b.principal(t));
      *meet  = X;
      return !is_empty<B>(X) && !b.principal_generator(X).has_value();
    }
  }  // namespace detail

  inline CliffordVerdict<FreeMonoid> clifford_check(FreeMonoid const&) {
    return {Outcome::holds, "prefix: sS and tS are nested or disjoint", {}, {}, {}};
  }
  inline CliffordVerdict<PositiveCone> clifford_check(PositiveCone const&) {
    return {Outcome::holds, "coordinatewise max: sS meet tS = max(s,t)S", {}, {}, {}};
  }
  inline CliffordVerdict<AxPlusB> clifford_check(AxPlusB const&) {
    return {Outcome::holds, "Z is a GCD domain (lcm and CRT)", {}, {}, {}};
  }
  inline CliffordVerdict<FiniteTable> clifford_check(FiniteTable const&) {
    return {Outcome::holds, "group: every principal right ideal is S", {}, {}, {}};
  }

  // sS meet tS = s + (S meet (k+S)) with k = t - s, and k+S lies in S once k
  // reaches the conductor, so only gaps k below the conductor matter.  For
  // each such k the pair uses the smallest s with s, s+k in S.
  inline CliffordVerdict<NumericalSemigroup>
  clifford_check(NumericalSemigroup const& b) {
    std::int64_t d = b.gcd(), c = b.conductor();
    for (std::int64_t k = d; k < c; k += d) {
      for (std::int64_t s = 0; s <= c; s += d) {
        if (!b.is_member(s) || !b.is_member(s + k)) {
          continue;
        }
        NumericalSemigroup::Ideal X;
        if (detail::non_principal_meet(b, s, s + k, &X)) {
          return {Outcome::fails, "exact search below the conductor", s, s + k, X};
        }
        break;
      }
    }
    return {Outcome::holds,
            "exact: every gap below the conductor " + std::to_string(c)
                + " checked",
            {},
            {},
            {}};
  }

  template <Backend B>
  struct IndependenceVerdict {
    bool independent = true;
    std::vector<typename B::Ideal> parts;  // union equals target
    std::optional<typename B::Ideal> target;
  };

  namespace detail {
    template <Backend B>
    bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
      std::size_t k = idx.size();
      for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
          }
          return true;
        }
      }
      return false;
    }

    // Smallest subfamily of `candidates` covering Y; principal members are
    // tried first.  Falls back to dropping redundant members greedily when
    // the exact search gets large.
    template <Backend B>
    std::vector<typename B::Ideal>
    smallest_cover(B const& b,
                   std::vector<typename B::Ideal> candidates,
                   typename B::Ideal const& Y) {
      std::stable_partition(candidates.begin(), candidates.end(), [&](auto const& X) {
        return b.principal_generator(X).has_value();
      });
      std::size_t n = candidates.size();
      for (std::size_t k = 1; k <= std::min<std::size_t>(n, 4); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) {
          idx[i] = i;
        }
        do {
          std::vector<typename B::Ideal> pick;
          for (auto i : idx) {
            pick.push_back(candidates[i]);
          }
          if (b.covers(std::span<typename B::Ideal const>(pick), Y)) {
            return pick;
          }
        } while (next_combination<B>(idx, n));
      }
      for (std::size_t i = candidates.size(); i-- > 0;) {
        auto trial = candidates;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (b.covers(std::span<typename B::Ideal const>(trial), Y)) {
          candidates = std::move(trial);
        }
      }
      return candidates;
    }
  }  // namespace detail

  // First Y (in family order) that is the union of the members strictly
  // inside it.
  template <Backend B>
  IndependenceVerdict<B> independence_check(B const& b, IdealFamily<B> const& family) {
    for (auto const& Y : family) {
      if (is_empty<B>(Y)) {
        continue;
      }
      std::vector<typename B::Ideal> below;
      for (auto const& X : family) {
        if (X != Y && !is_empty<B>(X) && subset(b, X, Y)) {
          below.push_back(X);
        }
      }
      if (below.empty()
          || !b.covers(std::span<typename B::Ideal const>(below), Y)) {
        continue;
      }
      return {false, detail::smallest_cover(b, std::move(below), Y), Y};
    }
    return {};
  }

}  // namespace lhull

#endif  // LHULL_IDEALS_HPP_
