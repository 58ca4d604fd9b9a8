#ifndef LHULL_FINITE_TABLE_HPP_
#define LHULL_FINITE_TABLE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lhull/common.hpp"

namespace lhull {

  // A finite monoid given by its Cayley table.  Construction rejects tables
  // that are not left cancellative; what survives is a group, so the only
  // right ideals are S and the empty set.
  class FiniteTable {
   public:
    static constexpr BackendKind kind = BackendKind::finite_table;

    using Element = std::size_t;
    using Group   = std::size_t;

    struct Ideal {
      IdealKind kind = IdealKind::full;

      bool operator==(Ideal const&) const = default;
      std::strong_ordering operator<=>(Ideal const&) const = default;
    };

    // Throws PreconditionError naming the offending row or triple.
    FiniteTable(std::vector<std::vector<std::size_t>> table,
                std::size_t identity);

    std::size_t order() const noexcept {
      return _table.size();
    }
    std::vector<std::vector<std::size_t>> const& table() const noexcept {
      return _table;
    }
    std::string name() const;

    Element identity() const {
      return _identity;
    }
    Element multiply(Element x, Element y) const;
    std::optional<Element> left_divide(Element s, Element t) const;
    bool units_trivial() const noexcept {
      return _table.size() == 1;
    }
    // The whole table, whatever the bound.
    std::vector<Element> enumerate_window(std::size_t bound) const;
    std::vector<Element> default_generators() const;

    Group embed(Element s) const {
      return s;
    }
    Group group_identity() const {
      return _identity;
    }
    Group group_multiply(Group g, Group h) const {
      return multiply(g, h);
    }
    Group group_inverse(Group g) const;
    std::optional<Element> from_group(Group g) const {
      return g;
    }

    Ideal full() const {
      return {};
    }
    Ideal empty() const {
      return {IdealKind::empty};
    }
    Ideal principal(Element) const {
      return full();
    }
    Ideal image(Group, Ideal const& X) const {
      return X;
    }
    Ideal restrict(Ideal const& X, Group, Ideal const& Y) const {
      return intersect(X, Y);
    }
    Ideal intersect(Ideal const& X, Ideal const& Y) const {
      return X.kind == IdealKind::empty ? X : Y;
    }
    bool contains(Ideal const& X, Element) const {
      return X.kind == IdealKind::full;
    }
    bool covers(std::span<Ideal const> parts, Ideal const& Y) const;
    std::optional<Element> principal_generator(Ideal const& X) const;

    std::string format_element(Element s) const;
    std::string format_group(Group g) const {
      return format_element(g);
    }
    std::string format_ideal(Ideal const& X) const;
    Element parse_element(std::string_view text) const;
    Group parse_group(std::string_view text) const {
      return parse_element(text);
    }

   private:
    std::vector<std::vector<std::size_t>> _table;
    std::vector<std::size_t> _inverse;
    std::size_t _identity;
  };

}  // namespace lhull

#endif  // LHULL_FINITE_TABLE_HPP_
