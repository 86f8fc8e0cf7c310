#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lattisym/matrix.hpp"

namespace lattisym {

template <Scalar T>
struct RrefResult {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan reduced row-echelon form.
///
/// Exact mode takes the first nonzero entry of each column as pivot. Numeric
/// mode uses partial pivoting and treats an entry as zero when it is at most
/// `tol` times the max-abs entry of its originating row.
template <Scalar T>
RrefResult<T> rref(const Matrix<T>& m, double tol = kDefaultRelTol);

/// Basis of {x : m x = 0}, one column vector per free column in ascending
/// order, with the free variable set to 1 and the other free variables to 0.
template <Scalar T>
std::vector<Matrix<T>> nullspace(const Matrix<T>& m, double tol = kDefaultRelTol);

template <Scalar T>
std::size_t rank(const Matrix<T>& m, double tol = kDefaultRelTol);

/// Throws SingularMatrix.
template <Scalar T>
Matrix<T> inverse(const Matrix<T>& m, double tol = kDefaultRelTol);

template <Scalar T>
T determinant(const Matrix<T>& m);

/// Canonical basis of the row space of `rows` with respect to the trailing
/// coordinates: the unique basis that is the identity on the lexicographically
/// last independent coordinate set. For a kernel this coincides with the
/// free-variable basis produced by `nullspace`.
template <Scalar T>
RrefResult<T> trailing_canonical_form(const Matrix<T>& rows, double tol = kDefaultRelTol);

/// Incrementally maintained reduced row-echelon form of a growing stack of
/// rows. Rows are inserted one at a time; rows already in the span are
/// discarded. The final state depends only on the span of all rows inserted,
/// never on insertion order (exact mode).
template <Scalar T>
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols, double tol = kDefaultRelTol) : cols_(cols), tol_(tol) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full_rank() const { return rows_.size() == cols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<T>>& rows() const { return rows_; }

  /// Reduces `row` against the current pivot rows without modifying state.
  std::vector<T> reduce(std::vector<T> row) const;
  /// Inserts a row. Returns true if it increased the rank.
  bool insert(std::vector<T> row);

  Matrix<T> as_matrix() const;
  /// Free-variable kernel basis, ordered by free column.
  std::vector<std::vector<T>> kernel_basis() const;
  std::vector<std::size_t> free_columns() const;

 private:
  std::size_t cols_;
  double tol_;
  std::vector<std::vector<T>> rows_;       // sorted by pivot column
  std::vector<std::size_t> pivots_;        // pivots_[k] is the pivot of rows_[k]
};

}  // namespace lattisym
