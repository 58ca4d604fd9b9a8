#ifndef LHULL_WINDOW_HPP_
#define LHULL_WINDOW_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lhull/backend.hpp"

namespace lhull {

  // Ordered duplicate-free sequence with an index map.
  template <typename T>
  class Window {
   public:
    Window() = default;
    explicit Window(std::vector<T> items) {
      for (auto& x : items) {
        push_back(std::move(x));
      }
    }

    // Ignores duplicates.
    void push_back(T x) {
      if (_index.count(x)) {
        return;
      }
      _index.emplace(x, _items.size());
      _items.push_back(std::move(x));
    }

    std::optional<std::size_t> find(T const& x) const {
      auto it = _index.find(x);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }
    bool contains(T const& x) const {
      return _index.count(x) != 0;
    }

    std::size_t size() const noexcept {
      return _items.size();
    }
    T const& operator[](std::size_t i) const {
      return _items[i];
    }
    std::vector<T> const& items() const noexcept {
      return _items;
    }
    auto begin() const {
      return _items.begin();
    }
    auto end() const {
      return _items.end();
    }

   private:
    std::vector<T> _items;
    std::map<T, std::size_t> _index;
  };

  // The first `count` elements of the backend's enumeration order (all of a
  // finite backend if it is smaller).
  template <Backend B>
  Window<typename B::Element> first_elements(B const& b, std::size_t count) {
    std::vector<typename B::Element> items;
    for (std::size_t bound = 1;; bound *= 2) {
      items = b.enumerate_window(bound);
      if (items.size() >= count || B::kind == BackendKind::finite_table) {
        break;
      }
    }
    if (items.size() > count) {
      items.resize(count);
    }
    return Window<typename B::Element>(std::move(items));
  }

}  // namespace lhull

#endif  // LHULL_WINDOW_HPP_
