#ifndef LHULL_COMMON_HPP_
#define LHULL_COMMON_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lhull {

  enum class BackendKind {
    free_monoid,
    positive_cone,
    numerical,
    ax_plus_b,
    finite_table
  };

  std::string_view to_string(BackendKind kind);

  // Every ideal representation carries this tag first, so the default
  // ordering puts S first and the empty ideal last.
  enum class IdealKind : std::uint8_t { full, proper, empty };

  // Three-valued outcome shared by the decision procedures.
  enum class Outcome { holds, fails, inconclusive };

  std::string_view to_string(Outcome outcome);

  // "(1,-2,3)" <-> {1,-2,3}.  Whitespace is ignored.
  std::vector<std::int64_t> parse_int_tuple(std::string_view text);
  std::string format_int_tuple(std::span<std::int64_t const> values);

  std::int64_t parse_int(std::string_view text);

  std::string trim(std::string_view text);

}  // namespace lhull

#endif  // LHULL_COMMON_HPP_
