#include "lattisym/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace lattisym {

namespace {

template <Scalar T>
double row_scale(std::span<const T> row) {
  double m = 0.0;
  for (const auto& x : row) m = std::max(m, ScalarTraits<T>::magnitude(x));
  return m;
}

template <Scalar T>
bool negligible(const T& x, double scale, double tol) {
  if constexpr (ScalarTraits<T>::kExact) {
    return x.is_zero();
  } else {
    return std::abs(x) <= tol * scale;
  }
}

template <Scalar T>
bool exact_zero(const T& x) {
  if constexpr (ScalarTraits<T>::kExact) {
    return x.is_zero();
  } else {
    return x == 0.0;
  }
}

// row_a -= f * row_b over columns [from, n).
template <Scalar T>
void axpy_row(std::span<T> a, const T& f, std::span<const T> b, std::size_t from) {
  for (std::size_t j = from; j < a.size(); ++j) {
    if (exact_zero(b[j])) continue;
    a[j] -= f * b[j];
  }
}

template <Scalar T>
Matrix<T> reverse_columns(const Matrix<T>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, m.cols() - 1 - j) = m(i, j);
  return out;
}

}  // namespace

template <Scalar T>
RrefResult<T> rref(const Matrix<T>& m, double tol) {
  Matrix<T> a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<double> scale(rows);
  for (std::size_t i = 0; i < rows; ++i) scale[i] = row_scale<T>(a.row(i));

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    if constexpr (ScalarTraits<T>::kExact) {
      for (std::size_t i = r; i < rows; ++i) {
        if (!a(i, c).is_zero()) {
          pivot = i;
          break;
        }
      }
    } else {
      double best = 0.0;
      for (std::size_t i = r; i < rows; ++i) {
        const double v = std::abs(a(i, c));
        if (!negligible(a(i, c), scale[i], tol) && v > best) {
          best = v;
          pivot = i;
        }
      }
      for (std::size_t i = r; i < rows; ++i)
        if (negligible(a(i, c), scale[i], tol)) a(i, c) = 0.0;
    }
    if (pivot == rows) continue;

    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
      std::swap(scale[pivot], scale[r]);
    }
    const T inv = ScalarTraits<T>::inverse(a(r, c));
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    a(r, c) = T(1);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || exact_zero(a(i, c))) continue;
      const T f = a(i, c);
      axpy_row<T>(a.row(i), f, a.row(r), c);
      a(i, c) = T(0);
    }
    pivots.push_back(c);
    ++r;
  }
  if constexpr (!ScalarTraits<T>::kExact) {
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = 0.0;
  }
  return {std::move(a), std::move(pivots)};
}

template <Scalar T>
std::vector<Matrix<T>> nullspace(const Matrix<T>& m, double tol) {
  const auto [red, pivots] = rref(m, tol);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Matrix<T>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Matrix<T> v(n, 1);
    v(f, 0) = T(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k], 0) = -red(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Scalar T>
std::size_t rank(const Matrix<T>& m, double tol) {
  return rref(m, tol).pivots.size();
}

template <Scalar T>
Matrix<T> inverse(const Matrix<T>& m, double tol) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const auto [red, pivots] = rref(aug, tol);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

template <Scalar T>
T determinant(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  Matrix<T> a = m;
  const std::size_t n = a.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    if constexpr (ScalarTraits<T>::kExact) {
      for (std::size_t i = c; i < n; ++i)
        if (!a(i, c).is_zero()) {
          pivot = i;
          break;
        }
    } else {
      double best = 0.0;
      for (std::size_t i = c; i < n; ++i)
        if (std::abs(a(i, c)) > best) {
          best = std::abs(a(i, c));
          pivot = i;
        }
    }
    if (pivot == n) return T(0);
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const T inv = ScalarTraits<T>::inverse(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (exact_zero(a(i, c))) continue;
      const T f = a(i, c) * inv;
      axpy_row<T>(a.row(i), f, a.row(c), c);
    }
  }
  return det;
}

template <Scalar T>
RrefResult<T> trailing_canonical_form(const Matrix<T>& rows, double tol) {
  auto [red, pivots] = rref(reverse_columns(rows), tol);
  const std::size_t n = rows.cols();
  Matrix<T> out = reverse_columns(red);
  std::vector<std::size_t> cols;
  for (auto p : pivots) cols.push_back(n - 1 - p);
  // Order rows by ascending distinguished column.
  std::vector<std::size_t> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return cols[a] < cols[b]; });
  Matrix<T> sorted(cols.size(), n);
  std::vector<std::size_t> sorted_cols;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) sorted(k, j) = out(order[k], j);
    sorted_cols.push_back(cols[order[k]]);
  }
  return {std::move(sorted), std::move(sorted_cols)};
}

template <Scalar T>
std::vector<T> RowReducer<T>::reduce(std::vector<T> row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (exact_zero(row[c])) continue;
    const T f = row[c];
    axpy_row<T>(std::span<T>(row), f, std::span<const T>(rows_[k]), c);
    row[c] = T(0);
  }
  return row;
}

template <Scalar T>
bool RowReducer<T>::insert(std::vector<T> row) {
  if (row.size() != cols_) throw DimensionMismatch("row length does not match reducer width");
  if (full_rank()) return false;
  const double scale = row_scale<T>(std::span<const T>(row));
  row = reduce(std::move(row));

  std::size_t pivot = cols_;
  if constexpr (ScalarTraits<T>::kExact) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!row[j].is_zero()) {
        pivot = j;
        break;
      }
  } else {
    double best = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (negligible(row[j], scale, tol_)) {
        row[j] = 0.0;
      } else if (std::abs(row[j]) > best) {
        best = std::abs(row[j]);
        pivot = j;
      }
    }
  }
  if (pivot == cols_) return false;

  const T inv = ScalarTraits<T>::inverse(row[pivot]);
  for (auto& x : row) x *= inv;
  row[pivot] = T(1);
  for (auto& existing : rows_) {
    if (exact_zero(existing[pivot])) continue;
    const T f = existing[pivot];
    axpy_row<T>(std::span<T>(existing), f, std::span<const T>(row), 0);
    existing[pivot] = T(0);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

template <Scalar T>
Matrix<T> RowReducer<T>::as_matrix() const {
  Matrix<T> m(rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = rows_[i][j];
  return m;
}

template <Scalar T>
std::vector<std::size_t> RowReducer<T>::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

template <Scalar T>
std::vector<std::vector<T>> RowReducer<T>::kernel_basis() const {
  std::vector<std::vector<T>> basis;
  for (std::size_t f : free_columns()) {
    std::vector<T> v(cols_, T(0));
    v[f] = T(1);
    for (std::size_t k = 0; k < rows_.size(); ++k) v[pivots_[k]] = -rows_[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

#define LATTISYM_INSTANTIATE_LINALG(T)                                              \
  template RrefResult<T> rref<T>(const Matrix<T>&, double);                         \
  template std::vector<Matrix<T>> nullspace<T>(const Matrix<T>&, double);           \
  template std::size_t rank<T>(const Matrix<T>&, double);                           \
  template Matrix<T> inverse<T>(const Matrix<T>&, double);                          \
  template T determinant<T>(const Matrix<T>&);                                      \
  template RrefResult<T> trailing_canonical_form<T>(const Matrix<T>&, double);      \
  template class RowReducer<T>;

LATTISYM_INSTANTIATE_LINALG(FieldElement)
LATTISYM_INSTANTIATE_LINALG(double)

#undef LATTISYM_INSTANTIATE_LINALG

}  // namespace lattisym
