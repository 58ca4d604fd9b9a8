#ifndef LHULL_SPARSE_MATRIX_HPP_
#define LHULL_SPARSE_MATRIX_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lhull/rational.hpp"

namespace lhull {

  // Exact sparse matrix; zero entries are never stored.
  class SparseMatrix {
   public:
    using Key = std::pair<std::size_t, std::size_t>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols) {}

    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    std::size_t nnz() const noexcept {
      return _entries.size();
    }
    std::map<Key, Rational> const& entries() const noexcept {
      return _entries;
    }

    Rational get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Rational v);

    // Nonzero (row, value) pairs of column j, rows ascending.
    std::vector<std::pair<std::size_t, Rational>> column(std::size_t j) const;

    SparseMatrix transpose() const;
    SparseMatrix diagonal_part() const;

    friend SparseMatrix operator*(SparseMatrix const& a, SparseMatrix const& b);
    friend SparseMatrix operator+(SparseMatrix const& a, SparseMatrix const& b);
    friend SparseMatrix operator*(Rational const& c, SparseMatrix const& a);
    bool operator==(SparseMatrix const&) const = default;

    // `rows cols nnz` then `row col value`, row-major, 0-based.
    void write_coordinates(std::ostream& os) const;
    std::string to_coordinates() const;
    static SparseMatrix read_coordinates(std::istream& is);

   private:
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    std::map<Key, Rational> _entries;
  };

  // A matrix compressed to a window, with the columns on which it agrees
  // with the untruncated operator.
  struct TruncatedOperator {
    SparseMatrix matrix;
    std::vector<bool> safe;  // per column

    std::size_t safe_count() const;
  };

  // Product of two operators.  Column j stays safe when it is safe in the
  // right factor and every row it reaches is a safe column of the left one.
  TruncatedOperator operator*(TruncatedOperator const& a, TruncatedOperator const& b);

  TruncatedOperator conditional_expectation(TruncatedOperator const& m);

  struct CoreComparison {
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    std::optional<std::size_t> first_mismatch;
  };

  // Compares the columns that are safe on both sides.
  CoreComparison compare_on_core(TruncatedOperator const& a, TruncatedOperator const& b);

}  // namespace lhull

#endif  // LHULL_SPARSE_MATRIX_HPP_
