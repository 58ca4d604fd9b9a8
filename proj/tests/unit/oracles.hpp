#ifndef LHULL_TESTS_ORACLES_HPP_
#define LHULL_TESTS_ORACLES_HPP_

// Independent reference computations.  Nothing here calls the ideal or hull
// algebra; everything is brute force over explicit finite sets.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

  // Members of the submonoid of N generated by gens, up to bound.
  inline std::set<std::int64_t> numerical_members(std::vector<std::int64_t> const& gens,
                                                  std::int64_t bound) {
    std::set<std::int64_t> out{0};
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto x : std::set<std::int64_t>(out)) {
        for (auto g : gens) {
          if (x + g <= bound && out.insert(x + g).second) {
            grew = true;
          }
        }
      }
    }
    return out;
  }

  // Finite partial map on integers; used for Z+ and numerical semigroups.
  using IntMap = std::map<std::int64_t, std::int64_t>;

  // x -> t^{-1}(s + x) on the members of S inside [0, bound]; entries whose
  // intermediate leaves [0, bound] are dropped from both sides.
  inline IntMap word_map(std::set<std::int64_t> const& S,
                         std::vector<std::pair<std::int64_t, std::int64_t>> const& word,
                         std::int64_t bound) {
    IntMap out;
    for (auto x : S) {
      std::int64_t y = x;
      bool ok        = true;
      for (auto it = word.rbegin(); it != word.rend() && ok; ++it) {
        y += it->second;
        if (y > bound) {
          ok = false;
          break;
        }
        y -= it->first;
        ok = y >= 0 && S.count(y);
      }
      if (ok) {
        out[x] = y;
      }
    }
    return out;
  }

}  // namespace oracle

#endif  // LHULL_TESTS_ORACLES_HPP_
