#include "lattisym/lattice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

#include "lattisym/linalg.hpp"

namespace lattisym {

IntMatrix3 multiply(const IntMatrix3& a, const IntMatrix3& b) {
  IntMatrix3 c{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix3 identity_int3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

namespace {

using IntVec3 = std::array<long, 3>;

template <Scalar T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <Scalar T>
Vec3<T> axpy(const Vec3<T>& y, const T& alpha, const Vec3<T>& x) {
  return {y[0] - alpha * x[0], y[1] - alpha * x[1], y[2] - alpha * x[2]};
}

template <Scalar T>
Vec3<T> scaled(const Vec3<T>& v, const T& k) {
  return {v[0] * k, v[1] * k, v[2] * k};
}

template <Scalar T>
Matrix<T> columns(const std::array<Vec3<T>, 3>& v) {
  Matrix<T> m(3, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = v[j][i];
  return m;
}

template <Scalar T>
T checked_norm(const T& norm_sq, const char* what) {
  auto root = ScalarTraits<T>::sqrt(norm_sq);
  if (!root) {
    throw NormOutsideField(std::string("norm of ") + what + " (squared norm " +
                           ScalarTraits<T>::to_string(norm_sq) +
                           ") is not in Q(sqrt2, sqrt3); use numeric mode");
  }
  return *root;
}

template <Scalar T>
bool near(const T& a, const T& b, double scale, double tol) {
  return ScalarTraits<T>::is_zero(a - b, scale, tol);
}

double smallest_singular_value(const Matrix<double>& a) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(m);
  return svd.singularValues()(2);
}

// Integer vectors n with n^T G n = G_ii, per generator i.
template <Scalar T>
struct Candidates {
  std::array<std::vector<IntVec3>, 3> vectors;
  std::array<std::vector<Vec3<T>>, 3> gram_times;  // G n for each candidate
};

IntVec3 make_int3(long a, long b, long c) { return {a, b, c}; }

template <Scalar T>
Candidates<T> candidate_images(const Lattice<T>& lat) {
  const Matrix<T>& g = lat.gram();
  const double tol = lat.tolerance();
  const double gscale = std::max(1.0, g.max_abs());

  Matrix<double> a(3, 3);
  double max_len = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) a(i, j) = ScalarTraits<T>::to_double(lat.generators()[j][i]);
    max_len = std::max(max_len, std::sqrt(ScalarTraits<T>::to_double(g(j, j))));
  }
  const double sigma_min = smallest_singular_value(a);
  if (!(sigma_min > 0.0)) throw DegenerateGenerators("generator matrix is singular");
  // Any n with |A n| = |a_i| satisfies |n| <= |a_i| / sigma_min; widened to over-cover.
  const double radius = 1.01 * max_len / sigma_min;
  const long bound = static_cast<long>(std::ceil(radius));

  Candidates<T> out;
  for (long n0 = -bound; n0 <= bound; ++n0) {
    for (long n1 = -bound; n1 <= bound; ++n1) {
      for (long n2 = -bound; n2 <= bound; ++n2) {
        if (n0 == 0 && n1 == 0 && n2 == 0) continue;
        const double len = std::sqrt(double(n0 * n0 + n1 * n1 + n2 * n2));
        if (len > radius) continue;
        const IntVec3 n = make_int3(n0, n1, n2);
        Vec3<T> gn;
        for (std::size_t i = 0; i < 3; ++i)
          gn[i] = g(i, 0) * T(n[0]) + g(i, 1) * T(n[1]) + g(i, 2) * T(n[2]);
        const T norm_sq = gn[0] * T(n[0]) + gn[1] * T(n[1]) + gn[2] * T(n[2]);
        for (std::size_t i = 0; i < 3; ++i) {
          if (near(norm_sq, g(i, i), gscale, tol)) {
            out.vectors[i].push_back(n);
            out.gram_times[i].push_back(gn);
          }
        }
      }
    }
  }
  return out;
}

template <Scalar T>
T pair_product(const Vec3<T>& gn, const IntVec3& m) {
  return gn[0] * T(m[0]) + gn[1] * T(m[1]) + gn[2] * T(m[2]);
}

// All integer matrices with columns (b1, b2, b3) drawn from the candidates,
// b1 fixed to candidate index `first`, preserving the Gram matrix.
template <Scalar T>
std::vector<IntMatrix3> matches_for_first(const Lattice<T>& lat, const Candidates<T>& c,
                                          std::size_t first) {
  const Matrix<T>& g = lat.gram();
  const double tol = lat.tolerance();
  const double gscale = std::max(1.0, g.max_abs());
  std::vector<IntMatrix3> out;
  const auto& b1 = c.vectors[0][first];
  const auto& gb1 = c.gram_times[0][first];
  for (std::size_t k2 = 0; k2 < c.vectors[1].size(); ++k2) {
    const auto& b2 = c.vectors[1][k2];
    if (!near(pair_product(gb1, b2), g(0, 1), gscale, tol)) continue;
    const auto& gb2 = c.gram_times[1][k2];
    for (std::size_t k3 = 0; k3 < c.vectors[2].size(); ++k3) {
      const auto& b3 = c.vectors[2][k3];
      if (!near(pair_product(gb1, b3), g(0, 2), gscale, tol)) continue;
      if (!near(pair_product(gb2, b3), g(1, 2), gscale, tol)) continue;
      IntMatrix3 m{};
      for (std::size_t i = 0; i < 3; ++i) {
        m[i][0] = b1[i];
        m[i][1] = b2[i];
        m[i][2] = b3[i];
      }
      out.push_back(m);
    }
  }
  return out;
}

template <Scalar T>
PointGroup<T> assemble(const Lattice<T>& lat, std::vector<IntMatrix3> forms) {
  // Identity first, otherwise enumeration order.
  std::stable_partition(forms.begin(), forms.end(),
                        [](const IntMatrix3& m) { return m == identity_int3(); });
  PointGroup<T> group;
  group.integer_forms = std::move(forms);
  group.elements.reserve(group.integer_forms.size());
  for (const auto& m : group.integer_forms) {
    group.elements.push_back(Isometry<T>::from_matrix(lat.from_generator_coords(m), lat.tolerance()));
  }
  if (!is_closed_group(group)) throw Error("enumerated point group is not closed");
  return group;
}

}  // namespace

template <Scalar T>
Isometry<T> Isometry<T>::from_matrix(Matrix<T> s, double tol) {
  if (s.rows() != 3 || s.cols() != 3) throw NotOrthogonal("isometry must be 3x3");
  const Matrix<T> sts = s.transpose() * s;
  if (!approx_equal(sts, Matrix<T>::identity(3), tol)) {
    throw NotOrthogonal("matrix is not orthogonal (S^T S != I)");
  }
  const int det_sign = ScalarTraits<T>::sign(determinant(s));
  return Isometry(std::move(s), det_sign > 0 ? Kind::kRotation : Kind::kImproper);
}

template <Scalar T>
Isometry<T> Isometry<T>::compose(const Isometry& other) const {
  const bool rot = (kind_ == Kind::kRotation) == (other.kind_ == Kind::kRotation);
  return Isometry(m_ * other.m_, rot ? Kind::kRotation : Kind::kImproper);
}

template <Scalar T>
Isometry<T> Isometry<T>::inverse() const {
  return Isometry(m_.transpose(), kind_);
}

template <Scalar T>
Isometry<T> Isometry<T>::negated() const {
  return Isometry(-m_, kind_ == Kind::kRotation ? Kind::kImproper : Kind::kRotation);
}

template <Scalar T>
Isometry<T> axis_rotation(std::size_t axis, const T& c, const T& s) {
  if (axis > 2) throw Error("axis index must be 0, 1 or 2");
  const std::size_t u = (axis + 1) % 3;
  const std::size_t v = (axis + 2) % 3;
  Matrix<T> m(3, 3);
  m(axis, axis) = T(1);
  m(u, u) = c;
  m(v, v) = c;
  m(u, v) = -s;
  m(v, u) = s;
  return Isometry<T>::from_matrix(std::move(m));
}

template <Scalar T>
Isometry<T> quaternion_rotation(const T& w, const T& x, const T& y, const T& z) {
  const T n = w * w + x * x + y * y + z * z;
  if (ScalarTraits<T>::is_zero(n, 1.0, 0.0)) throw Error("zero quaternion");
  const T inv = ScalarTraits<T>::inverse(n);
  const T two(2);
  Matrix<T> m{{w * w + x * x - y * y - z * z, two * (x * y - w * z), two * (x * z + w * y)},
              {two * (x * y + w * z), w * w - x * x + y * y - z * z, two * (y * z - w * x)},
              {two * (x * z - w * y), two * (y * z + w * x), w * w - x * x - y * y + z * z}};
  m *= inv;
  return Isometry<T>::from_matrix(std::move(m));
}

template <Scalar T>
std::array<Vec3<T>, 3> compute_directors(const std::array<Vec3<T>, 3>& a, double tol) {
  const double scale0 = ScalarTraits<T>::to_double(dot(a[0], a[0]));
  const double scale1 = ScalarTraits<T>::to_double(dot(a[1], a[1]));
  const double scale2 = ScalarTraits<T>::to_double(dot(a[2], a[2]));

  const T n1_sq = dot(a[0], a[0]);
  if (ScalarTraits<T>::is_zero(n1_sq, scale0, tol) || scale0 == 0.0) {
    throw DegenerateGenerators("generator a1 is zero");
  }
  const Vec3<T> l1 = scaled(a[0], ScalarTraits<T>::inverse(checked_norm(n1_sq, "a1")));

  const Vec3<T> w2 = axpy(a[1], dot(a[1], l1), l1);
  const T n2_sq = dot(w2, w2);
  if (ScalarTraits<T>::is_zero(n2_sq, scale1, tol) || scale1 == 0.0) {
    throw DegenerateGenerators("generators a1 and a2 are parallel");
  }
  const Vec3<T> l2 = scaled(w2, ScalarTraits<T>::inverse(checked_norm(n2_sq, "a2 - (a2.l1) l1")));

  Vec3<T> w3 = axpy(a[2], dot(a[2], l1), l1);
  w3 = axpy(w3, dot(a[2], l2), l2);
  const T n3_sq = dot(w3, w3);
  if (ScalarTraits<T>::is_zero(n3_sq, scale2, tol) || scale2 == 0.0) {
    throw DegenerateGenerators("generators are coplanar");
  }
  Vec3<T> l3 = scaled(w3, ScalarTraits<T>::inverse(checked_norm(n3_sq, "the a3 residual")));

  // Right-handed frame: flip l3 when (l1 x l2) . l3 < 0.
  const Vec3<T> cross{l1[1] * l2[2] - l1[2] * l2[1], l1[2] * l2[0] - l1[0] * l2[2],
                      l1[0] * l2[1] - l1[1] * l2[0]};
  if (ScalarTraits<T>::sign(dot(cross, l3)) < 0) l3 = scaled(l3, T(-1));
  return {l1, l2, l3};
}

template <Scalar T>
Lattice<T> Lattice<T>::from_generators(std::array<Vec3<T>, 3> generators, double tol) {
  Lattice lat;
  lat.tol_ = tol;
  lat.generators_ = std::move(generators);

  const Matrix<T> a = columns(lat.generators_);
  const T det = determinant(a);
  double prod = 1.0;
  for (const auto& g : lat.generators_) prod *= std::sqrt(ScalarTraits<T>::to_double(dot(g, g)));
  if (ScalarTraits<T>::is_zero(det, prod, tol) || prod == 0.0) {
    throw DegenerateGenerators("generators are linearly dependent");
  }

  lat.directors_ = compute_directors(lat.generators_, tol);
  lat.gram_ = a.transpose() * a;
  lat.frame_ = columns(lat.directors_).transpose() * a;
  // Below-diagonal entries vanish by construction; pin them in numeric mode.
  if constexpr (!ScalarTraits<T>::kExact) {
    lat.frame_(1, 0) = 0.0;
    lat.frame_(2, 0) = 0.0;
    lat.frame_(2, 1) = 0.0;
  }
  lat.frame_inv_ = inverse(lat.frame_, tol);
  return lat;
}

template <Scalar T>
Matrix<T> Lattice<T>::to_generator_coords(const Isometry<T>& s) const {
  return frame_inv_ * s.matrix() * frame_;
}

template <Scalar T>
Matrix<T> Lattice<T>::from_generator_coords(const IntMatrix3& m) const {
  Matrix<T> mm(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) mm(i, j) = T(m[i][j]);
  Matrix<T> s = frame_ * mm * frame_inv_;
  if constexpr (!ScalarTraits<T>::kExact) {
    // Snap roundoff so that exactly representable entries (0, +-1, 1/2) stay clean.
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (std::abs(s(i, j)) < 1e-15) s(i, j) = 0.0;
  }
  return s;
}

template <Scalar T>
bool PointGroup<T>::contains(const IntMatrix3& m) const {
  return std::find(integer_forms.begin(), integer_forms.end(), m) != integer_forms.end();
}

template <Scalar T>
PointGroup<T> enumerate_point_group_serial(const Lattice<T>& lat) {
  const Candidates<T> c = candidate_images(lat);
  std::vector<IntMatrix3> forms;
  for (std::size_t k = 0; k < c.vectors[0].size(); ++k) {
    auto found = matches_for_first(lat, c, k);
    forms.insert(forms.end(), found.begin(), found.end());
  }
  return assemble(lat, std::move(forms));
}

template <Scalar T>
PointGroup<T> enumerate_point_group(const Lattice<T>& lat) {
  const Candidates<T> c = candidate_images(lat);
  const long count = static_cast<long>(c.vectors[0].size());
  std::vector<std::vector<IntMatrix3>> per_first(c.vectors[0].size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    per_first[static_cast<std::size_t>(k)] = matches_for_first(lat, c, static_cast<std::size_t>(k));
  }
  std::vector<IntMatrix3> forms;
  for (auto& found : per_first) forms.insert(forms.end(), found.begin(), found.end());
  return assemble(lat, std::move(forms));
}

template <Scalar T>
bool is_lattice_symmetry(const Lattice<T>& lat, const Isometry<T>& s) {
  const Matrix<T> m = lat.to_generator_coords(s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!ScalarTraits<T>::as_integer(m(i, j), lat.tolerance())) return false;
  return true;
}

template <Scalar T>
bool is_closed_group(const PointGroup<T>& group) {
  std::set<IntMatrix3> members(group.integer_forms.begin(), group.integer_forms.end());
  if (members.size() != group.integer_forms.size()) return false;
  if (!members.contains(identity_int3())) return false;
  IntMatrix3 minus_id = identity_int3();
  for (std::size_t i = 0; i < 3; ++i) minus_id[i][i] = -1;
  if (!members.contains(minus_id)) return false;
  for (const auto& a : group.integer_forms) {
    bool has_inverse = false;
    for (const auto& b : group.integer_forms) {
      const IntMatrix3 ab = multiply(a, b);
      if (!members.contains(ab)) return false;
      if (ab == identity_int3()) has_inverse = true;
    }
    if (!has_inverse) return false;
  }
  return true;
}

#define LATTISYM_INSTANTIATE_LATTICE(T)                                                      \
  template class Isometry<T>;                                                                \
  template class Lattice<T>;                                                                 \
  template struct PointGroup<T>;                                                             \
  template Isometry<T> axis_rotation<T>(std::size_t, const T&, const T&);                    \
  template Isometry<T> quaternion_rotation<T>(const T&, const T&, const T&, const T&);       \
  template std::array<Vec3<T>, 3> compute_directors<T>(const std::array<Vec3<T>, 3>&, double); \
  template PointGroup<T> enumerate_point_group<T>(const Lattice<T>&);                        \
  template PointGroup<T> enumerate_point_group_serial<T>(const Lattice<T>&);                 \
  template bool is_lattice_symmetry<T>(const Lattice<T>&, const Isometry<T>&);               \
  template bool is_closed_group<T>(const PointGroup<T>&);

LATTISYM_INSTANTIATE_LATTICE(FieldElement)
LATTISYM_INSTANTIATE_LATTICE(double)

#undef LATTISYM_INSTANTIATE_LATTICE

}  // namespace lattisym
