#ifndef LHULL_FILTERS_HPP_
#define LHULL_FILTERS_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lhull/backend.hpp"
#include "lhull/errors.hpp"
#include "lhull/ideals.hpp"

namespace lhull {

  // J(S) truncated to a family, with the empty ideal as zero.
  template <Backend B>
  struct FiniteSemilattice {
    std::vector<typename B::Ideal> elements;
    std::vector<std::vector<std::size_t>> meet;
    std::size_t top  = 0;
    std::size_t zero = 0;

    std::size_t size() const noexcept {
      return elements.size();
    }
    // a <= c iff ac = a
    bool below(std::size_t a, std::size_t c) const {
      return meet[a][c] == a;
    }
  };

  // Sorted member indices.
  using Filter = std::vector<std::size_t>;

  template <Backend B>
  FiniteSemilattice<B> truncate_semilattice(B const& b, IdealFamily<B> const& family) {
    FiniteSemilattice<B> L;
    L.elements = family;
    if (std::find(L.elements.begin(), L.elements.end(), b.full()) == L.elements.end()) {
      throw PreconditionError("family does not contain S");
    }
    if (std::find(L.elements.begin(), L.elements.end(), b.empty()) == L.elements.end()) {
      L.elements.push_back(b.empty());
    }
    std::sort(L.elements.begin(), L.elements.end());
    auto index = [&](typename B::Ideal const& X) {
      auto it = std::lower_bound(L.elements.begin(), L.elements.end(), X);
      if (it == L.elements.end() || *it != X) {
        throw PreconditionError("family is not closed under intersection: "
                                + b.format_ideal(X));
      }
      return static_cast<std::size_t>(it - L.elements.begin());
    };
    std::size_t n = L.elements.size();
    L.meet.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        L.meet[i][j] = L.meet[j][i] = index(b.intersect(L.elements[i], L.elements[j]));
      }
    }
    L.top  = index(b.full());
    L.zero = index(b.empty());
    return L;
  }

  template <Backend B>
  bool is_filter(std::span<std::size_t const> subset, FiniteSemilattice<B> const& L) {
    std::vector<bool> in(L.size(), false);
    for (auto i : subset) {
      if (i >= L.size()) {
        return false;
      }
      in[i] = true;
    }
    if (!in[L.top] || in[L.zero]) {
      return false;
    }
    for (std::size_t a = 0; a < L.size(); ++a) {
      if (!in[a]) {
        continue;
      }
      for (std::size_t c = 0; c < L.size(); ++c) {
        if (in[c] && !in[L.meet[a][c]]) {
          return false;
        }
        if (!in[c] && L.below(a, c)) {
          return false;
        }
      }
    }
    return true;
  }

  // A filter of a finite semilattice contains the meet of its members, so
  // it is the up-set of that meet; the minimal antichains are singletons
  // {a} with a nonzero.  Ordered by the minimal element.
  template <Backend B>
  std::vector<Filter> enumerate_filters(FiniteSemilattice<B> const& L) {
    std::vector<Filter> out;
    for (std::size_t a = 0; a < L.size(); ++a) {
      if (a == L.zero) {
        continue;
      }
      Filter f;
      for (std::size_t c = 0; c < L.size(); ++c) {
        if (L.below(a, c)) {
          f.push_back(c);
        }
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  template <Backend B>
  std::vector<std::size_t> minimal_elements(std::span<std::size_t const> subset,
                                            FiniteSemilattice<B> const& L) {
    std::vector<std::size_t> out;
    for (auto a : subset) {
      bool minimal = std::none_of(subset.begin(), subset.end(), [&](std::size_t c) {
        return c != a && L.below(c, a);
      });
      if (minimal) {
        out.push_back(a);
      }
    }
    return out;
  }

  // Condition: no nonzero b equals the union of the elements strictly below
  // it.  Same verdict shape as independence_check.
  template <Backend B>
  IndependenceVerdict<B> maximal_representation_check(B const& b,
                                                      FiniteSemilattice<B> const& L) {
    for (std::size_t y = 0; y < L.size(); ++y) {
      if (y == L.zero) {
        continue;
      }
      std::vector<typename B::Ideal> below;
      for (std::size_t a = 0; a < L.size(); ++a) {
        if (a != y && a != L.zero && L.below(a, y)) {
          below.push_back(L.elements[a]);
        }
      }
      auto const& Y = L.elements[y];
      if (below.empty() || !b.covers(std::span<typename B::Ideal const>(below), Y)) {
        continue;
      }
      return {false, detail::smallest_cover(b, std::move(below), Y), Y};
    }
    return {};
  }

}  // namespace lhull

#endif  // LHULL_FILTERS_HPP_
