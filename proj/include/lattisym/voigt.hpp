#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "lattisym/lattice.hpp"
#include "lattisym/matrix.hpp"

namespace lattisym {

/// Symmetric 3x3 tensor (strain or stress) in lab components.
template <Scalar T>
using SymTensor = Matrix<T>;

/// Components eps_1..eps_6 on the director tensor basis.
template <Scalar T>
using VoigtVector = std::array<T, 6>;

/// 6x6 matrix acting on normalized Voigt vectors.
template <Scalar T>
using VoigtTransform = Matrix<T>;

/// Director index pair behind shear slots 4, 5, 6 (zero-based): (l2,l3), (l1,l3), (l1,l2).
inline constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kShearPairs{
    {{1, 2}, {0, 2}, {0, 1}}};

/// Director pair (p, q) of Voigt slot k; for k < 3 this is (k, k).
constexpr std::pair<std::size_t, std::size_t> voigt_pair(std::size_t k) {
  return k < 3 ? std::pair<std::size_t, std::size_t>{k, k} : kShearPairs[k - 3];
}

/// Orthonormal basis Z_1..Z_6 of symmetric tensors built from the lattice
/// directors: Z_k = l_k (x) l_k for k <= 3, and the sqrt2-normalized
/// symmetrized dyads of the pairs in kShearPairs for k = 4, 5, 6.
template <Scalar T>
class TensorBasis {
 public:
  /// Throws NonOrthonormalDirectors.
  static TensorBasis build(const std::array<Vec3<T>, 3>& directors, double tol = kDefaultRelTol);
  static TensorBasis standard();

  const Matrix<T>& operator[](std::size_t k) const { return z_[k]; }
  const std::array<Vec3<T>, 3>& directors() const { return directors_; }

 private:
  std::array<Vec3<T>, 3> directors_{};
  std::array<Matrix<T>, 6> z_{};
};

/// Matrix of material coefficients on the director tensor basis.
template <Scalar T>
class ElasticityMatrix {
 public:
  ElasticityMatrix() : c_(6, 6) {}
  /// With `symmetric` set, throws AsymmetricInput unless C = C^T.
  explicit ElasticityMatrix(Matrix<T> c, bool symmetric = false, double tol = kDefaultRelTol);

  const Matrix<T>& matrix() const { return c_; }
  bool symmetric_mode() const { return symmetric_; }
  const T& operator()(std::size_t i, std::size_t j) const { return c_(i, j); }

  friend bool operator==(const ElasticityMatrix& a, const ElasticityMatrix& b) { return a.c_ == b.c_; }

 private:
  Matrix<T> c_;
  bool symmetric_ = false;
};

/// The 81 lab components C_abcd of the elasticity tensor.
template <Scalar T>
class FourthOrderTensor {
 public:
  FourthOrderTensor() { data_.fill(T(0)); }
  T& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return data_[((a * 3 + b) * 3 + c) * 3 + d];
  }
  const T& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return data_[((a * 3 + b) * 3 + c) * 3 + d];
  }
  friend bool operator==(const FourthOrderTensor& x, const FourthOrderTensor& y) { return x.data_ == y.data_; }

 private:
  std::array<T, 81> data_;
};

/// eps_k = t : Z_k. Throws AsymmetricInput.
template <Scalar T>
VoigtVector<T> to_voigt(const SymTensor<T>& t, const TensorBasis<T>& basis, double tol = kDefaultRelTol);

/// sum_k eps_k Z_k
template <Scalar T>
SymTensor<T> from_voigt(const VoigtVector<T>& v, const TensorBasis<T>& basis);

/// Induced transform of an isometry given on the director basis:
/// S_hat(j, k) = Z_j : (S Z_k S^T). Maps components on the transformed basis
/// (S Z_k S^T) to components on Z; its transpose is the inverse map.
template <Scalar T>
VoigtTransform<T> induced_transform(const Isometry<T>& s);

/// C_abcd = sum_ik C_ik Z_i^ab Z_k^cd
template <Scalar T>
FourthOrderTensor<T> to_fourth_order(const ElasticityMatrix<T>& c, const TensorBasis<T>& basis);

/// C_ik = Z_i : (CC : Z_k)
template <Scalar T>
Matrix<T> from_fourth_order(const FourthOrderTensor<T>& cc, const TensorBasis<T>& basis);

/// (CC : E)_ab = C_abcd E_cd
template <Scalar T>
SymTensor<T> contract(const FourthOrderTensor<T>& cc, const SymTensor<T>& e);

/// from_voigt(C to_voigt(E)), the stress for strain E.
template <Scalar T>
SymTensor<T> apply_c(const ElasticityMatrix<T>& c, const SymTensor<T>& e, const TensorBasis<T>& basis);

/// Interop with the engineering Voigt convention (order 11,22,33,23,13,12,
/// no sqrt2 weights) for director-aligned axes: C_voigt = W^-1 C W^-1 with
/// W = diag(1,1,1,sqrt2,sqrt2,sqrt2).
template <Scalar T>
Matrix<T> to_standard_voigt(const Matrix<T>& c);
template <Scalar T>
Matrix<T> from_standard_voigt(const Matrix<T>& c_voigt);

}  // namespace lattisym
