#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lattisym/lattice.hpp"
#include "lattisym/voigt.hpp"

namespace lattisym {

/// Coordinate space of candidate elasticity matrices: all 36 entries, or the
/// 21 upper-triangle entries of a symmetric C (row-major, i <= j).
enum class Ambient { kFull36, kSym21 };

std::string_view to_string(Ambient ambient);
Ambient parse_ambient(std::string_view text);
std::size_t ambient_dimension(Ambient ambient);

template <Scalar T>
std::vector<T> to_ambient_coordinates(const Matrix<T>& c, Ambient ambient);
template <Scalar T>
Matrix<T> from_ambient_coordinates(std::span<const T> x, Ambient ambient);

/// Linear expression in named parameters, such as "a - b" or "sqrt2*C41":
/// (name, coefficient) pairs in order of first appearance. "0" is empty.
using LinearForm = std::vector<std::pair<std::string, FieldElement>>;
LinearForm parse_linear_form(std::string_view text);

/// Matrix of C -> C S_hat - S_hat C, rows indexed by the 36 entries of the
/// commutator (row-major), columns by ambient coordinates of C.
template <Scalar T>
Matrix<T> commutation_operator(const VoigtTransform<T>& s_hat, Ambient ambient);

/// Linear subspace of elasticity matrices, stored in canonical form: basis
/// vector m is 1 at coordinate free_coordinates[m] and 0 at the other free
/// coordinates. Parameter p_{m+1} multiplies basis vector m.
template <Scalar T>
class ConstrainedSpace {
 public:
  ConstrainedSpace(Ambient ambient, std::vector<std::vector<T>> canonical_rows,
                   std::vector<std::size_t> free_coordinates);

  /// The whole ambient space.
  static ConstrainedSpace full(Ambient ambient);
  /// Canonical form of the span of arbitrary matrices.
  static ConstrainedSpace span_of(const std::vector<Matrix<T>>& matrices, Ambient ambient,
                                  double tol = kDefaultRelTol);

  Ambient ambient() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<std::size_t>& free_coordinates() const { return free_; }
  const std::vector<std::vector<T>>& coordinates() const { return rows_; }
  std::vector<std::string> parameter_names() const;

  ElasticityMatrix<T> basis_element(std::size_t m) const;
  std::vector<ElasticityMatrix<T>> basis() const;

  /// sum_m params[m] * basis_element(m)
  Matrix<T> instantiate(std::span<const T> params) const;
  /// 6x6 grid of linear expressions in p1..pd, e.g. "p1 - p2".
  std::array<std::array<std::string, 6>, 6> pattern() const;
  bool contains(const Matrix<T>& c, double tol = kDefaultRelTol) const;

  /// Exact: identical canonical forms. Numeric: same free coordinates and
  /// entries within tol.
  bool same_space(const ConstrainedSpace& other, double tol = 1e-8) const;

 private:
  Ambient ambient_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> free_;
};

/// {C : C S_hat_i = S_hat_i C for every generator}. Exact mode stacks the
/// commutation operators through an incremental exact RREF; numeric mode
/// extracts the kernel by SVD with 1e-9 relative thresholding. Per-generator
/// transforms and operator rows are built in parallel; the result is
/// identical to commutant_serial.
template <Scalar T>
ConstrainedSpace<T> commutant(std::span<const Isometry<T>> generators, Ambient ambient);

/// Single-threaded reference for commutant.
template <Scalar T>
ConstrainedSpace<T> commutant_serial(std::span<const Isometry<T>> generators, Ambient ambient);

/// Commutant of the lattice's full point group.
template <Scalar T>
ConstrainedSpace<T> constrain_by_lattice(const Lattice<T>& lat, Ambient ambient);

/// C S_hat = S_hat C exactly, or ||C S_hat - S_hat C||_F <= tol ||C||_F.
template <Scalar T>
bool is_material_symmetry(const Matrix<T>& c, const Isometry<T>& s, double tol = kDefaultRelTol);

/// ||C S_hat - S_hat C||_F / ||C||_F, as a double.
template <Scalar T>
double commutator_residual(const Matrix<T>& c, const Isometry<T>& s);

enum class ClassTag {
  kTriclinic,
  kMonoclinic,
  kOrthotropic,
  kTetragonal,
  kTransverselyIsotropic,
  kCubic,
  kIsotropic,
  kUnrecognized,
};

struct SymmetryClass {
  ClassTag tag = ClassTag::kUnrecognized;
  /// Distinguished director (0-based) for monoclinic, tetragonal and
  /// transversely isotropic classes.
  std::optional<std::size_t> axis;
  std::size_t dimension = 0;

  std::string name() const;
  friend bool operator==(const SymmetryClass&, const SymmetryClass&) = default;
};

std::string_view to_string(ClassTag tag);

/// A director-aligned reference class: its defining isometries and space.
template <Scalar T>
struct CanonicalClass {
  SymmetryClass cls;
  std::vector<Isometry<T>> generators;
  ConstrainedSpace<T> space;
};

/// Reference classes in match order (most symmetric first), including every
/// director choice for axial classes. Exact spaces are computed once.
template <Scalar T>
const std::vector<CanonicalClass<T>>& canonical_classes(Ambient ambient);

/// Class whose canonical space equals `space`, else Unrecognized(dimension).
template <Scalar T>
SymmetryClass classify(const ConstrainedSpace<T>& space, double tol = 1e-8);

/// Most specific non-triclinic class whose defining isometries are all
/// material symmetries of C (full-36 catalog), if any.
template <Scalar T>
std::optional<SymmetryClass> classify_matrix(const Matrix<T>& c, double tol = kDefaultRelTol);

/// Probes that commute with every element of constrain_by_lattice(lat) but are
/// not lattice symmetries.
template <Scalar T>
std::vector<Isometry<T>> material_group_exceeds_lattice_group(const Lattice<T>& lat,
                                                              std::span<const Isometry<T>> probes,
                                                              Ambient ambient = Ambient::kFull36,
                                                              double tol = kDefaultRelTol);

/// Relative Frobenius residual of C after orthogonal projection onto the
/// isotropic subspace span{P_vol, P_dev}. Throws ZeroMatrix.
template <Scalar T>
double isotropy_distance(const Matrix<T>& c);

/// Leading principal minors (exact) or eigenvalues above tol * max|eig|
/// (numeric). Throws AsymmetricInput.
template <Scalar T>
bool is_positive_definite(const Matrix<T>& c, double tol = kDefaultRelTol);

}  // namespace lattisym
