#include "lattisym/voigt.hpp"

namespace lattisym {

namespace {

template <Scalar T>
Matrix<T> dyad(const Vec3<T>& a, const Vec3<T>& b) {
  Matrix<T> m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = a[i] * b[j];
  return m;
}

template <Scalar T>
T double_dot(const Matrix<T>& a, const Matrix<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += a(i, j) * b(i, j);
  return s;
}

template <Scalar T>
T inv_sqrt2() {
  return ScalarTraits<T>::inverse(ScalarTraits<T>::sqrt2());
}

}  // namespace

template <Scalar T>
TensorBasis<T> TensorBasis<T>::build(const std::array<Vec3<T>, 3>& directors, double tol) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      T d = directors[i][0] * directors[j][0] + directors[i][1] * directors[j][1] +
            directors[i][2] * directors[j][2];
      if (!ScalarTraits<T>::is_zero(d - T(i == j ? 1 : 0), 1.0, tol)) {
        throw NonOrthonormalDirectors("directors are not orthonormal");
      }
    }
  }
  TensorBasis basis;
  basis.directors_ = directors;
  for (std::size_t k = 0; k < 3; ++k) basis.z_[k] = dyad(directors[k], directors[k]);
  const T w = inv_sqrt2<T>();
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [p, q] = kShearPairs[k];
    basis.z_[3 + k] = (dyad(directors[p], directors[q]) + dyad(directors[q], directors[p])) * w;
  }
  return basis;
}

template <Scalar T>
TensorBasis<T> TensorBasis<T>::standard() {
  std::array<Vec3<T>, 3> e{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) e[i][j] = T(i == j ? 1 : 0);
  return build(e);
}

template <Scalar T>
ElasticityMatrix<T>::ElasticityMatrix(Matrix<T> c, bool symmetric, double tol)
    : c_(std::move(c)), symmetric_(symmetric) {
  if (c_.rows() != 6 || c_.cols() != 6) throw DimensionMismatch("elasticity matrix must be 6x6");
  if (symmetric_ && !c_.is_symmetric(tol)) {
    throw AsymmetricInput("elasticity matrix declared symmetric but C != C^T");
  }
}

template <Scalar T>
VoigtVector<T> to_voigt(const SymTensor<T>& t, const TensorBasis<T>& basis, double tol) {
  if (t.rows() != 3 || t.cols() != 3) throw DimensionMismatch("tensor must be 3x3");
  if (!t.is_symmetric(tol)) throw AsymmetricInput("tensor is not symmetric");
  VoigtVector<T> v;
  for (std::size_t k = 0; k < 6; ++k) v[k] = double_dot(t, basis[k]);
  return v;
}

template <Scalar T>
SymTensor<T> from_voigt(const VoigtVector<T>& v, const TensorBasis<T>& basis) {
  SymTensor<T> t(3, 3);
  for (std::size_t k = 0; k < 6; ++k) t += basis[k] * v[k];
  return t;
}

template <Scalar T>
VoigtTransform<T> induced_transform(const Isometry<T>& iso) {
  const Matrix<T>& s = iso.matrix();
  const T r2 = ScalarTraits<T>::sqrt2();
  VoigtTransform<T> h(6, 6);
  for (std::size_t j = 0; j < 6; ++j) {
    const auto [p, q] = voigt_pair(j);
    for (std::size_t k = 0; k < 6; ++k) {
      const auto [u, v] = voigt_pair(k);
      if (j < 3 && k < 3) {
        h(j, k) = s(j, k) * s(j, k);
      } else if (j < 3) {
        h(j, k) = r2 * s(j, u) * s(j, v);
      } else if (k < 3) {
        h(j, k) = r2 * s(p, k) * s(q, k);
      } else {
        h(j, k) = s(p, u) * s(q, v) + s(p, v) * s(q, u);
      }
    }
  }
  return h;
}

template <Scalar T>
FourthOrderTensor<T> to_fourth_order(const ElasticityMatrix<T>& c, const TensorBasis<T>& basis) {
  FourthOrderTensor<T> cc;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t k = 0; k < 6; ++k) {
      const T& cik = c(i, k);
      if (ScalarTraits<T>::is_zero(cik, 1.0, 0.0)) continue;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
          const T zi = cik * basis[i](a, b);
          if (ScalarTraits<T>::is_zero(zi, 1.0, 0.0)) continue;
          for (std::size_t cidx = 0; cidx < 3; ++cidx)
            for (std::size_t d = 0; d < 3; ++d) cc(a, b, cidx, d) += zi * basis[k](cidx, d);
        }
    }
  }
  return cc;
}

template <Scalar T>
SymTensor<T> contract(const FourthOrderTensor<T>& cc, const SymTensor<T>& e) {
  SymTensor<T> t(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t d = 0; d < 3; ++d) t(a, b) += cc(a, b, c, d) * e(c, d);
  return t;
}

template <Scalar T>
Matrix<T> from_fourth_order(const FourthOrderTensor<T>& cc, const TensorBasis<T>& basis) {
  Matrix<T> c(6, 6);
  for (std::size_t k = 0; k < 6; ++k) {
    const SymTensor<T> image = contract(cc, basis[k]);
    for (std::size_t i = 0; i < 6; ++i) c(i, k) = double_dot(basis[i], image);
  }
  return c;
}

template <Scalar T>
SymTensor<T> apply_c(const ElasticityMatrix<T>& c, const SymTensor<T>& e, const TensorBasis<T>& basis) {
  const VoigtVector<T> eps = to_voigt(e, basis);
  VoigtVector<T> tau;
  for (std::size_t i = 0; i < 6; ++i) {
    tau[i] = T(0);
    for (std::size_t k = 0; k < 6; ++k) tau[i] += c(i, k) * eps[k];
  }
  return from_voigt(tau, basis);
}

template <Scalar T>
Matrix<T> to_standard_voigt(const Matrix<T>& c) {
  const T w = inv_sqrt2<T>();
  Matrix<T> out = c;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      if (i >= 3) out(i, j) *= w;
      if (j >= 3) out(i, j) *= w;
    }
  return out;
}

template <Scalar T>
Matrix<T> from_standard_voigt(const Matrix<T>& c_voigt) {
  const T w = ScalarTraits<T>::sqrt2();
  Matrix<T> out = c_voigt;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      if (i >= 3) out(i, j) *= w;
      if (j >= 3) out(i, j) *= w;
    }
  return out;
}

#define LATTISYM_INSTANTIATE_VOIGT(T)                                                              \
  template class TensorBasis<T>;                                                                   \
  template class ElasticityMatrix<T>;                                                              \
  template VoigtVector<T> to_voigt<T>(const SymTensor<T>&, const TensorBasis<T>&, double);         \
  template SymTensor<T> from_voigt<T>(const VoigtVector<T>&, const TensorBasis<T>&);               \
  template VoigtTransform<T> induced_transform<T>(const Isometry<T>&);                             \
  template FourthOrderTensor<T> to_fourth_order<T>(const ElasticityMatrix<T>&, const TensorBasis<T>&); \
  template Matrix<T> from_fourth_order<T>(const FourthOrderTensor<T>&, const TensorBasis<T>&);     \
  template SymTensor<T> contract<T>(const FourthOrderTensor<T>&, const SymTensor<T>&);             \
  template SymTensor<T> apply_c<T>(const ElasticityMatrix<T>&, const SymTensor<T>&, const TensorBasis<T>&); \
  template Matrix<T> to_standard_voigt<T>(const Matrix<T>&);                                       \
  template Matrix<T> from_standard_voigt<T>(const Matrix<T>&);

LATTISYM_INSTANTIATE_VOIGT(FieldElement)
LATTISYM_INSTANTIATE_VOIGT(double)

#undef LATTISYM_INSTANTIATE_VOIGT

}  // namespace lattisym
