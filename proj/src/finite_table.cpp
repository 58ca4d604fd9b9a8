#include "lhull/finite_table.hpp"

#include <algorithm>

#include "lhull/errors.hpp"

namespace lhull {

  FiniteTable::FiniteTable(std::vector<std::vector<std::size_t>> table,
                           std::size_t identity)
      : _table(std::move(table)), _identity(identity) {
    std::size_t n = _table.size();
    if (n == 0) {
      throw PreconditionError("multiplication table is empty");
    }
    if (_identity >= n) {
      throw PreconditionError("identity index " + std::to_string(_identity)
                              + " is out of range");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (_table[i].size() != n) {
        throw PreconditionError("row " + std::to_string(i) + " has "
                                + std::to_string(_table[i].size())
                                + " entries, expected " + std::to_string(n));
      }
      for (auto v : _table[i]) {
        if (v >= n) {
          throw PreconditionError("row " + std::to_string(i)
                                  + " has out-of-range entry "
                                  + std::to_string(v));
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (_table[_identity][i] != i || _table[i][_identity] != i) {
        throw PreconditionError("index " + std::to_string(_identity)
                                + " is not an identity (fails at "
                                + std::to_string(i) + ")");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> seen(n, false);
      for (auto v : _table[i]) {
        if (seen[v]) {
          throw PreconditionError("row " + std::to_string(i)
                                  + " is not injective: not left cancellative");
        }
        seen[v] = true;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (_table[_table[a][b]][c] != _table[a][_table[b][c]]) {
            throw PreconditionError(
                "not associative at (" + std::to_string(a) + ","
                + std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
    _inverse.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto it     = std::find(_table[i].begin(), _table[i].end(), _identity);
      _inverse[i] = static_cast<std::size_t>(it - _table[i].begin());
    }
  }

  std::string FiniteTable::name() const {
    return "FiniteTable(" + std::to_string(_table.size()) + ")";
  }

  FiniteTable::Element FiniteTable::multiply(Element x, Element y) const {
    if (x >= _table.size() || y >= _table.size()) {
      throw UsageError("table index out of range");
    }
    return _table[x][y];
  }

  std::optional<FiniteTable::Element> FiniteTable::left_divide(Element s,
                                                               Element t) const {
    return multiply(group_inverse(s), t);
  }

  std::vector<FiniteTable::Element>
  FiniteTable::enumerate_window(std::size_t) const {
    std::vector<Element> out(_table.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = i;
    }
    return out;
  }

  std::vector<FiniteTable::Element> FiniteTable::default_generators() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (i != _identity) {
        out.push_back(i);
      }
    }
    return out;
  }

  FiniteTable::Group FiniteTable::group_inverse(Group g) const {
    if (g >= _table.size()) {
      throw UsageError("table index out of range");
    }
    return _inverse[g];
  }

  bool FiniteTable::covers(std::span<Ideal const> parts, Ideal const& Y) const {
    if (Y.kind == IdealKind::empty) {
      return true;
    }
    return std::any_of(parts.begin(), parts.end(), [](Ideal const& X) {
      return X.kind == IdealKind::full;
    });
  }

  std::optional<FiniteTable::Element>
  FiniteTable::principal_generator(Ideal const& X) const {
    if (X.kind == IdealKind::empty) {
      return std::nullopt;
    }
    return _identity;
  }

  std::string FiniteTable::format_element(Element s) const {
    return "#" + std::to_string(s);
  }

  std::string FiniteTable::format_ideal(Ideal const& X) const {
    return X.kind == IdealKind::empty ? "empty" : "S";
  }

  FiniteTable::Element FiniteTable::parse_element(std::string_view text) const {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '#') {
      t.erase(0, 1);
    }
    auto v = parse_int(t);
    if (v < 0 || static_cast<std::size_t>(v) >= _table.size()) {
      throw UsageError("'" + std::string(text) + "' is not a table index");
    }
    return static_cast<std::size_t>(v);
  }

}  // namespace lhull
