#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lattisym/matrix.hpp"

namespace lattisym {

template <Scalar T>
using Vec3 = std::array<T, 3>;

/// 3x3 integer matrix acting on coordinates in the generator basis.
using IntMatrix3 = std::array<std::array<long, 3>, 3>;

IntMatrix3 multiply(const IntMatrix3& a, const IntMatrix3& b);
IntMatrix3 identity_int3();

/// Orthogonal map of R^3 with components on the lattice director basis.
template <Scalar T>
class Isometry {
 public:
  enum class Kind { kRotation, kImproper };

  /// Throws NotOrthogonal unless S^T S = I (exactly, or within tol).
  static Isometry from_matrix(Matrix<T> s, double tol = kDefaultRelTol);

  const Matrix<T>& matrix() const { return m_; }
  Kind kind() const { return kind_; }
  bool is_rotation() const { return kind_ == Kind::kRotation; }

  /// this * other (apply `other` first).
  Isometry compose(const Isometry& other) const;
  Isometry inverse() const;
  Isometry negated() const;

  friend bool operator==(const Isometry& a, const Isometry& b) { return a.m_ == b.m_; }

 private:
  Isometry(Matrix<T> m, Kind k) : m_(std::move(m)), kind_(k) {}
  Matrix<T> m_;
  Kind kind_ = Kind::kRotation;
};

template <Scalar T>
Isometry<T> identity_isometry() {
  return Isometry<T>::from_matrix(Matrix<T>::identity(3));
}

/// Rotation with cosine `c` and sine `s` about director `axis` (0, 1, 2),
/// counter-clockwise when looking down the axis.
template <Scalar T>
Isometry<T> axis_rotation(std::size_t axis, const T& c, const T& s);

/// Rotation represented by the quaternion (w, x, y, z); the quaternion need
/// not be normalized, so rational quaternions give exact rational rotations.
template <Scalar T>
Isometry<T> quaternion_rotation(const T& w, const T& x, const T& y, const T& z);

/// Orthonormal directors l1 || a1, l2 in span{a1, a2}, right-handed l3, from
/// Gram-Schmidt on the generators. Throws DegenerateGenerators, or
/// NormOutsideField in exact mode when a norm leaves Q(sqrt2, sqrt3).
template <Scalar T>
std::array<Vec3<T>, 3> compute_directors(const std::array<Vec3<T>, 3>& generators,
                                         double tol = kDefaultRelTol);

template <Scalar T>
class Lattice {
 public:
  static Lattice from_generators(std::array<Vec3<T>, 3> generators, double tol = kDefaultRelTol);

  const std::array<Vec3<T>, 3>& generators() const { return generators_; }
  const std::array<Vec3<T>, 3>& directors() const { return directors_; }
  /// G_ij = a_i . a_j
  const Matrix<T>& gram() const { return gram_; }
  /// Column j holds the components of a_j on the director basis (upper triangular).
  const Matrix<T>& generator_frame() const { return frame_; }
  double tolerance() const { return tol_; }

  /// Matrix of an isometry acting on generator coordinates: R^-1 S R.
  Matrix<T> to_generator_coords(const Isometry<T>& s) const;
  /// Director-basis matrix of the map with generator-coordinate matrix m.
  Matrix<T> from_generator_coords(const IntMatrix3& m) const;

 private:
  Lattice() = default;
  std::array<Vec3<T>, 3> generators_{};
  std::array<Vec3<T>, 3> directors_{};
  Matrix<T> gram_;
  Matrix<T> frame_;
  Matrix<T> frame_inv_;
  double tol_ = kDefaultRelTol;
};

template <Scalar T>
struct PointGroup {
  std::vector<Isometry<T>> elements;
  /// Same elements in generator coordinates; index-aligned with `elements`.
  std::vector<IntMatrix3> integer_forms;

  std::size_t order() const { return elements.size(); }
  bool contains(const IntMatrix3& m) const;
};

/// All orthogonal maps fixing the origin that send the lattice onto itself.
/// Candidate images are enumerated in parallel over the first generator's
/// images; output order matches enumerate_point_group_serial exactly.
template <Scalar T>
PointGroup<T> enumerate_point_group(const Lattice<T>& lat);

/// Single-threaded reference implementation.
template <Scalar T>
PointGroup<T> enumerate_point_group_serial(const Lattice<T>& lat);

/// True iff S maps every generator to an integer combination of generators.
template <Scalar T>
bool is_lattice_symmetry(const Lattice<T>& lat, const Isometry<T>& s);

/// Closure under composition and inversion, checked on integer forms.
template <Scalar T>
bool is_closed_group(const PointGroup<T>& group);

}  // namespace lattisym
