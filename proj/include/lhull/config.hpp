#ifndef LHULL_CONFIG_HPP_
#define LHULL_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lhull/backend.hpp"

namespace lhull {

  // Analysis sizes.  Config files may set them under `bounds`; command line
  // flags override.
  struct Bounds {
    std::size_t depth   = 2;
    std::size_t length  = 2;
    std::size_t window  = 30;
    std::uint64_t seed  = 20240611;
    std::size_t samples = 200;
  };

  struct Config {
    AnySemigroup semigroup{PositiveCone(1)};
    // Element texts in the backend's syntax; empty means default generators.
    std::vector<std::string> generators;
    Bounds bounds;
  };

  // Line-oriented `key = value` format; `#` starts a comment.
  //
  //   kind       = free_monoid | positive_cone | numerical | ax_plus_b
  //                | finite_table
  //   params     = 2                          (alphabet size / dimension)
  //              | 2, 3                       (numerical generators)
  //              | identity=0; 0 1; 1 0      (finite table rows)
  //   generators = a b | (1,0) (0,1) | 2 3 | (1,1) (0,2)
  //   bounds     = depth=3 length=2 window=12 seed=7 samples=200
  //
  // Throws ParseError with the line and field at fault.
  Config parse_config(std::istream& in);
  Config parse_config_text(std::string_view text);
  Config load_config(std::string const& path);

  // Splits on whitespace outside parentheses.
  std::vector<std::string> split_elements(std::string_view text);

  template <Backend B>
  std::vector<typename B::Element> generators_of(B const& b, Config const& cfg) {
    if (cfg.generators.empty()) {
      return b.default_generators();
    }
    std::vector<typename B::Element> out;
    for (auto const& text : cfg.generators) {
      out.push_back(b.parse_element(text));
    }
    return out;
  }

}  // namespace lhull

#endif  // LHULL_CONFIG_HPP_
