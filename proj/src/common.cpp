#include "lhull/common.hpp"

#include <cctype>
#include <charconv>

#include "lhull/errors.hpp"

namespace lhull {

  std::string_view to_string(BackendKind kind) {
    switch (kind) {
      case BackendKind::free_monoid:
        return "free_monoid";
      case BackendKind::positive_cone:
        return "positive_cone";
      case BackendKind::numerical:
        return "numerical";
      case BackendKind::ax_plus_b:
        return "ax_plus_b";
      case BackendKind::finite_table:
        return "finite_table";
    }
    return "?";
  }

  std::string_view to_string(Outcome outcome) {
    switch (outcome) {
      case Outcome::holds:
        return "holds";
      case Outcome::fails:
        return "fails";
      case Outcome::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  std::string trim(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
      return {};
    }
    auto last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
  }

  std::int64_t parse_int(std::string_view text) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '+') {
      t.erase(0, 1);
    }
    std::int64_t value = 0;
    auto [ptr, ec]     = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw UsageError("expected an integer, got '" + std::string(text) + "'");
    }
    return value;
  }

  std::vector<std::int64_t> parse_int_tuple(std::string_view text) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
      throw UsageError("expected a tuple like (1,2), got '" + std::string(text)
                       + "'");
    }
    std::vector<std::int64_t> out;
    std::string_view body(t.data() + 1, t.size() - 2);
    if (trim(body).empty()) {
      return out;
    }
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      out.push_back(parse_int(body.substr(start, comma - start)));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    return out;
  }

  std::string format_int_tuple(std::span<std::int64_t const> values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += std::to_string(values[i]);
    }
    return out + ")";
  }

}  // namespace lhull
