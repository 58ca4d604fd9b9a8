#ifndef LHULL_BACKEND_HPP_
#define LHULL_BACKEND_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lhull/ax_plus_b.hpp"
#include "lhull/common.hpp"
#include "lhull/finite_table.hpp"
#include "lhull/free_monoid.hpp"
#include "lhull/numerical_semigroup.hpp"
#include "lhull/positive_cone.hpp"

namespace lhull {

  // A left cancellative monoid S together with an embedding into a group G
  // and an exact calculus of its constructible right ideals.
  //
  //   image(g, X)        = gX, required to lie inside S
  //   restrict(X, g, Y)  = {x in X : gx in Y}
  //   covers(parts, Y)   = Y is contained in the union of parts
  template <typename B>
  concept Backend = requires(B const& b,
                             typename B::Element const& s,
                             typename B::Group const& g,
                             typename B::Ideal const& X,
                             std::span<typename B::Ideal const> parts,
                             std::size_t n) {
    { B::kind } -> std::convertible_to<BackendKind>;
    { b.name() } -> std::convertible_to<std::string>;
    { b.identity() } -> std::convertible_to<typename B::Element>;
    { b.multiply(s, s) } -> std::convertible_to<typename B::Element>;
    { b.left_divide(s, s) }
    -> std::convertible_to<std::optional<typename B::Element>>;
    { b.units_trivial() } -> std::convertible_to<bool>;
    { b.enumerate_window(n) }
    -> std::convertible_to<std::vector<typename B::Element>>;
    { b.default_generators() }
    -> std::convertible_to<std::vector<typename B::Element>>;
    { b.embed(s) } -> std::convertible_to<typename B::Group>;
    { b.group_identity() } -> std::convertible_to<typename B::Group>;
    { b.group_multiply(g, g) } -> std::convertible_to<typename B::Group>;
    { b.group_inverse(g) } -> std::convertible_to<typename B::Group>;
    { b.from_group(g) }
    -> std::convertible_to<std::optional<typename B::Element>>;
    { b.full() } -> std::convertible_to<typename B::Ideal>;
    { b.empty() } -> std::convertible_to<typename B::Ideal>;
    { b.principal(s) } -> std::convertible_to<typename B::Ideal>;
    { b.image(g, X) } -> std::convertible_to<typename B::Ideal>;
    { b.restrict(X, g, X) } -> std::convertible_to<typename B::Ideal>;
    { b.intersect(X, X) } -> std::convertible_to<typename B::Ideal>;
    { b.contains(X, s) } -> std::convertible_to<bool>;
    { b.covers(parts, X) } -> std::convertible_to<bool>;
    { b.principal_generator(X) }
    -> std::convertible_to<std::optional<typename B::Element>>;
    { b.format_element(s) } -> std::convertible_to<std::string>;
    { b.format_group(g) } -> std::convertible_to<std::string>;
    { b.format_ideal(X) } -> std::convertible_to<std::string>;
    requires std::totally_ordered<typename B::Element>;
    requires std::totally_ordered<typename B::Group>;
    requires std::totally_ordered<typename B::Ideal>;
  };

  static_assert(Backend<FreeMonoid>);
  static_assert(Backend<PositiveCone>);
  static_assert(Backend<NumericalSemigroup>);
  static_assert(Backend<AxPlusB>);
  static_assert(Backend<FiniteTable>);

  using AnySemigroup = std::
      variant<FreeMonoid, PositiveCone, NumericalSemigroup, AxPlusB, FiniteTable>;

  template <Backend B>
  bool is_empty(typename B::Ideal const& X) {
    return X.kind == IdealKind::empty;
  }

  // s <= t in the algebraic preorder: s in tS.
  template <Backend B>
  bool preceq(B const& b,
              typename B::Element const& s,
              typename B::Element const& t) {
    return b.left_divide(t, s).has_value();
  }

  // X is contained in Y.
  template <Backend B>
  bool subset(B const& b, typename B::Ideal const& X, typename B::Ideal const& Y) {
    return b.intersect(X, Y) == X;
  }

  // Identity followed by the generators, duplicates removed, order kept.
  template <Backend B>
  std::vector<typename B::Element>
  slots_with_identity(B const& b, std::span<typename B::Element const> gens) {
    std::vector<typename B::Element> out{b.identity()};
    for (auto const& g : gens) {
      if (std::find(out.begin(), out.end(), g) == out.end()) {
        out.push_back(g);
      }
    }
    return out;
  }

}  // namespace lhull

#endif  // LHULL_BACKEND_HPP_
