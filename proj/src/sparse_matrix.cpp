#include "lhull/sparse_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "lhull/errors.hpp"

namespace lhull {

  SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i, Rational(1));
    }
    return m;
  }

  Rational SparseMatrix::get(std::size_t i, std::size_t j) const {
    auto it = _entries.find({i, j});
    return it == _entries.end() ? Rational(0) : it->second;
  }

  void SparseMatrix::set(std::size_t i, std::size_t j, Rational v) {
    if (i >= _rows || j >= _cols) {
      throw UsageError("matrix index out of range");
    }
    if (v == Rational(0)) {
      _entries.erase({i, j});
    } else {
      _entries[{i, j}] = v;
    }
  }

  std::vector<std::pair<std::size_t, Rational>> SparseMatrix::column(std::size_t j) const {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (auto const& [k, v] : _entries) {
      if (k.second == j) {
        out.emplace_back(k.first, v);
      }
    }
    return out;
  }

  SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(_cols, _rows);
    for (auto const& [k, v] : _entries) {
      t._entries[{k.second, k.first}] = v;
    }
    return t;
  }

  SparseMatrix SparseMatrix::diagonal_part() const {
    SparseMatrix d(_rows, _cols);
    for (auto const& [k, v] : _entries) {
      if (k.first == k.second) {
        d._entries[k] = v;
      }
    }
    return d;
  }

  SparseMatrix operator*(SparseMatrix const& a, SparseMatrix const& b) {
    if (a._cols != b._rows) {
      throw UsageError("matrix shapes do not match");
    }
    // Group b by row for the inner index.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> brows(b._rows);
    for (auto const& [k, v] : b._entries) {
      brows[k.first].emplace_back(k.second, v);
    }
    std::map<SparseMatrix::Key, Rational> acc;
    for (auto const& [k, v] : a._entries) {
      for (auto const& [j, w] : brows[k.second]) {
        acc[{k.first, j}] += v * w;
      }
    }
    SparseMatrix out(a._rows, b._cols);
    for (auto const& [k, v] : acc) {
      if (v != Rational(0)) {
        out._entries[k] = v;
      }
    }
    return out;
  }

  SparseMatrix operator+(SparseMatrix const& a, SparseMatrix const& b) {
    if (a._rows != b._rows || a._cols != b._cols) {
      throw UsageError("matrix shapes do not match");
    }
    SparseMatrix out = a;
    for (auto const& [k, v] : b._entries) {
      out.set(k.first, k.second, out.get(k.first, k.second) + v);
    }
    return out;
  }

  SparseMatrix operator*(Rational const& c, SparseMatrix const& a) {
    SparseMatrix out(a._rows, a._cols);
    if (c == Rational(0)) {
      return out;
    }
    for (auto const& [k, v] : a._entries) {
      out._entries[k] = c * v;
    }
    return out;
  }

  void SparseMatrix::write_coordinates(std::ostream& os) const {
    os << _rows << ' ' << _cols << ' ' << _entries.size() << '\n';
    for (auto const& [k, v] : _entries) {
      os << k.first << ' ' << k.second << ' ' << v.to_string() << '\n';
    }
  }

  std::string SparseMatrix::to_coordinates() const {
    std::ostringstream os;
    write_coordinates(os);
    return os.str();
  }

  SparseMatrix SparseMatrix::read_coordinates(std::istream& is) {
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(is >> rows >> cols >> nnz)) {
      throw ParseError(1, "header", "expected 'rows cols nnz'");
    }
    SparseMatrix m(rows, cols);
    for (std::size_t n = 0; n < nnz; ++n) {
      std::size_t i = 0, j = 0;
      std::string v;
      if (!(is >> i >> j >> v)) {
        throw ParseError(n + 2, "entry", "expected 'row col value'");
      }
      m.set(i, j, Rational::parse(v));
    }
    return m;
  }

  std::size_t TruncatedOperator::safe_count() const {
    std::size_t n = 0;
    for (bool s : safe) {
      n += s ? 1 : 0;
    }
    return n;
  }

  TruncatedOperator operator*(TruncatedOperator const& a, TruncatedOperator const& b) {
    TruncatedOperator out{a.matrix * b.matrix, std::vector<bool>(b.matrix.cols(), false)};
    std::vector<bool> reaches_unsafe(b.matrix.cols(), false);
    for (auto const& [k, v] : b.matrix.entries()) {
      if (!a.safe[k.first]) {
        reaches_unsafe[k.second] = true;
      }
    }
    for (std::size_t j = 0; j < out.safe.size(); ++j) {
      out.safe[j] = b.safe[j] && !reaches_unsafe[j];
    }
    return out;
  }

  TruncatedOperator conditional_expectation(TruncatedOperator const& m) {
    if (m.matrix.rows() != m.matrix.cols()) {
      throw PreconditionError("conditional expectation needs a square matrix");
    }
    return {m.matrix.diagonal_part(), m.safe};
  }

  CoreComparison compare_on_core(TruncatedOperator const& a, TruncatedOperator const& b) {
    if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) {
      throw UsageError("operators act on different windows");
    }
    CoreComparison out;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> ca(a.matrix.cols()),
        cb(b.matrix.cols());
    for (auto const& [k, v] : a.matrix.entries()) {
      ca[k.second].emplace_back(k.first, v);
    }
    for (auto const& [k, v] : b.matrix.entries()) {
      cb[k.second].emplace_back(k.first, v);
    }
    for (std::size_t j = 0; j < a.matrix.cols(); ++j) {
      if (!a.safe[j] || !b.safe[j]) {
        continue;
      }
      ++out.checked;
      if (ca[j] != cb[j]) {
        ++out.mismatches;
        if (!out.first_mismatch) {
          out.first_mismatch = j;
        }
      }
    }
    return out;
  }

}  // namespace lhull
