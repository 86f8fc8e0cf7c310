#include "lattisym/symmetry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <omp.h>

#include "lattisym/linalg.hpp"

namespace lattisym {

namespace {

constexpr double kNumericSnap = 1e-12;
constexpr double kSvdRelTol = 1e-9;

// (i, j) pairs with i <= j, row-major.
const std::array<std::pair<std::size_t, std::size_t>, 21>& sym_pairs() {
  static const auto pairs = [] {
    std::array<std::pair<std::size_t, std::size_t>, 21> out{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i; j < 6; ++j) out[n++] = {i, j};
    return out;
  }();
  return pairs;
}

std::size_t coordinate_of(std::size_t i, std::size_t j, Ambient ambient) {
  if (ambient == Ambient::kFull36) return i * 6 + j;
  if (i > j) std::swap(i, j);
  // Offset of row i in the packed upper triangle.
  return i * 6 - i * (i - 1) / 2 + (j - i);
}

template <Scalar T>
bool exact_zero(const T& x) {
  if constexpr (ScalarTraits<T>::kExact) {
    return x.is_zero();
  } else {
    return x == 0.0;
  }
}

template <Scalar T>
Matrix<T> commutator(const Matrix<T>& c, const Matrix<T>& s_hat) {
  return c * s_hat - s_hat * c;
}

template <Scalar T>
std::vector<std::vector<T>> operator_rows(const VoigtTransform<T>& s_hat, Ambient ambient) {
  const Matrix<T> op = commutation_operator(s_hat, ambient);
  std::vector<std::vector<T>> rows;
  rows.reserve(op.rows());
  for (std::size_t r = 0; r < op.rows(); ++r) {
    auto span = op.row(r);
    if (std::all_of(span.begin(), span.end(), [](const T& x) { return exact_zero(x); })) continue;
    rows.emplace_back(span.begin(), span.end());
  }
  return rows;
}

// Distinct induced transforms in generator order; S and -S share one.
template <Scalar T>
std::vector<VoigtTransform<T>> distinct_transforms(std::vector<VoigtTransform<T>> hats) {
  std::vector<VoigtTransform<T>> out;
  for (auto& h : hats) {
    if (h == Matrix<T>::identity(6)) continue;
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
  }
  return out;
}

template <Scalar T>
ConstrainedSpace<T> from_kernel(const RowReducer<T>& reducer, Ambient ambient) {
  return ConstrainedSpace<T>(ambient, reducer.kernel_basis(), reducer.free_columns());
}

ConstrainedSpace<double> numeric_kernel(const std::vector<VoigtTransform<double>>& hats, Ambient ambient) {
  const std::size_t n = ambient_dimension(ambient);
  if (hats.empty()) return ConstrainedSpace<double>::full(ambient);
  Eigen::MatrixXd stacked(36 * hats.size(), n);
  for (std::size_t g = 0; g < hats.size(); ++g) {
    const Matrix<double> op = commutation_operator(hats[g], ambient);
    for (std::size_t r = 0; r < 36; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(36 * g + r, c) = op(r, c);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff = kSvdRelTol * (sigma.size() > 0 ? sigma(0) : 0.0);
  std::vector<Eigen::Index> kernel_cols;
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(n); ++k)
    if (k >= sigma.size() || sigma(k) <= cutoff) kernel_cols.push_back(k);
  std::vector<Matrix<double>> vectors;
  for (auto k : kernel_cols) {
    Matrix<double> m(1, n);
    for (std::size_t c = 0; c < n; ++c) m(0, c) = svd.matrixV()(static_cast<Eigen::Index>(c), k);
    vectors.push_back(std::move(m));
  }
  std::vector<std::vector<double>> rows;
  for (const auto& v : vectors) rows.emplace_back(v.values().begin(), v.values().end());
  if (rows.empty()) return ConstrainedSpace<double>(ambient, {}, {});
  Matrix<double> stacked_rows(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) stacked_rows(r, c) = rows[r][c];
  auto [canon, cols] = trailing_canonical_form(stacked_rows, kSvdRelTol);
  std::vector<std::vector<double>> out(canon.rows());
  for (std::size_t r = 0; r < canon.rows(); ++r) out[r].assign(canon.row(r).begin(), canon.row(r).end());
  return ConstrainedSpace<double>(ambient, std::move(out), std::move(cols));
}

template <Scalar T>
std::vector<VoigtTransform<T>> hats_serial(std::span<const Isometry<T>> generators) {
  std::vector<VoigtTransform<T>> hats;
  hats.reserve(generators.size());
  for (const auto& g : generators) hats.push_back(induced_transform(g));
  return hats;
}

template <Scalar T>
std::vector<VoigtTransform<T>> hats_parallel(std::span<const Isometry<T>> generators) {
  std::vector<VoigtTransform<T>> hats(generators.size());
  const auto count = static_cast<long>(generators.size());
#pragma omp parallel for schedule(dynamic)
  for (long g = 0; g < count; ++g) hats[g] = induced_transform(generators[g]);
  return hats;
}

std::string format_term(const FieldElement& coeff, std::size_t param, bool first) {
  const std::string name = "p" + std::to_string(param + 1);
  if (coeff.term_count() > 1) {
    return (first ? "" : " + ") + ("(" + coeff.to_string() + ")*") + name;
  }
  const bool negative = coeff.sign() < 0;
  const FieldElement mag = negative ? -coeff : coeff;
  std::string body = mag == FieldElement(1) ? name : mag.to_string() + "*" + name;
  if (first) return (negative ? "-" : "") + body;
  return (negative ? " - " : " + ") + body;
}

std::string format_term(double coeff, std::size_t param, bool first) {
  const std::string name = "p" + std::to_string(param + 1);
  const bool negative = coeff < 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", std::abs(coeff));
  const std::string mag(buf);
  std::string body = mag == "1" ? name : mag + "*" + name;
  if (first) return (negative ? "-" : "") + body;
  return (negative ? " - " : " + ") + body;
}

// Rotation by pi / divisor about director `axis`.
template <Scalar T>
Isometry<T> rotation_about(std::size_t axis, int divisor) {
  using Tr = ScalarTraits<T>;
  switch (divisor) {
    case 1:
      return axis_rotation<T>(axis, T(-1), T(0));
    case 2:
      return axis_rotation<T>(axis, T(0), T(1));
    default: {
      T s3;
      if constexpr (Tr::kExact) {
        s3 = FieldElement::sqrt3() * FieldElement(Rational(1, 2));
      } else {
        s3 = std::sqrt(3.0) / 2.0;
      }
      return axis_rotation<T>(axis, Tr::from_rational(Rational(1, 2)), s3);
    }
  }
}

template <Scalar T>
std::vector<CanonicalClass<T>> build_classes(Ambient ambient) {
  std::vector<CanonicalClass<T>> out;
  auto add = [&](ClassTag tag, std::optional<std::size_t> axis, std::vector<Isometry<T>> gens) {
    ConstrainedSpace<T> space = commutant<T>(gens, ambient);
    const std::size_t d = space.dimension();
    out.push_back({SymmetryClass{tag, axis, d}, std::move(gens), std::move(space)});
  };
  std::vector<Isometry<T>> half_turns, quarter_turns;
  for (std::size_t k = 0; k < 3; ++k) {
    half_turns.push_back(rotation_about<T>(k, 1));
    quarter_turns.push_back(rotation_about<T>(k, 2));
  }
  auto with = [](std::vector<Isometry<T>> base, Isometry<T> extra) {
    base.push_back(std::move(extra));
    return base;
  };
  add(ClassTag::kIsotropic, std::nullopt, with(quarter_turns, rotation_about<T>(2, 3)));
  add(ClassTag::kCubic, std::nullopt, quarter_turns);
  for (std::size_t k = 0; k < 3; ++k)
    add(ClassTag::kTransverselyIsotropic, k, with(half_turns, rotation_about<T>(k, 3)));
  for (std::size_t k = 0; k < 3; ++k) add(ClassTag::kTetragonal, k, with(half_turns, quarter_turns[k]));
  add(ClassTag::kOrthotropic, std::nullopt, half_turns);
  for (std::size_t k = 0; k < 3; ++k) add(ClassTag::kMonoclinic, k, {half_turns[k]});
  add(ClassTag::kTriclinic, std::nullopt, {});
  return out;
}

}  // namespace

std::string_view to_string(Ambient ambient) { return ambient == Ambient::kFull36 ? "full36" : "sym21"; }

Ambient parse_ambient(std::string_view text) {
  if (text == "full36") return Ambient::kFull36;
  if (text == "sym21") return Ambient::kSym21;
  throw ParseError("unknown ambient '" + std::string(text) + "' (expected full36 or sym21)");
}

std::size_t ambient_dimension(Ambient ambient) { return ambient == Ambient::kFull36 ? 36 : 21; }

template <Scalar T>
std::vector<T> to_ambient_coordinates(const Matrix<T>& c, Ambient ambient) {
  if (c.rows() != 6 || c.cols() != 6) throw DimensionMismatch("elasticity matrix must be 6x6");
  if (ambient == Ambient::kFull36) return {c.values().begin(), c.values().end()};
  std::vector<T> x;
  x.reserve(21);
  for (auto [i, j] : sym_pairs()) x.push_back(c(i, j));
  return x;
}

template <Scalar T>
Matrix<T> from_ambient_coordinates(std::span<const T> x, Ambient ambient) {
  if (x.size() != ambient_dimension(ambient)) throw DimensionMismatch("wrong number of ambient coordinates");
  Matrix<T> c(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) c(i, j) = x[coordinate_of(i, j, ambient)];
  return c;
}

template <Scalar T>
Matrix<T> commutation_operator(const VoigtTransform<T>& s_hat, Ambient ambient) {
  if (s_hat.rows() != 6 || s_hat.cols() != 6) throw DimensionMismatch("induced transform must be 6x6");
  Matrix<T> op(36, ambient_dimension(ambient));
  // (C S - S C)_ij picks up S_bj from C_ib and -S_ia from C_aj.
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const std::size_t r = i * 6 + j;
      for (std::size_t b = 0; b < 6; ++b) op(r, coordinate_of(i, b, ambient)) += s_hat(b, j);
      for (std::size_t a = 0; a < 6; ++a) op(r, coordinate_of(a, j, ambient)) -= s_hat(i, a);
    }
  }
  return op;
}

LinearForm parse_linear_form(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty linear expression");
  LinearForm form;
  auto add = [&](const std::string& name, const FieldElement& coeff) {
    auto it = std::find_if(form.begin(), form.end(), [&](const auto& t) { return t.first == name; });
    if (it == form.end()) {
      form.emplace_back(name, coeff);
    } else {
      it->second += coeff;
    }
  };
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && !((s[j] == '+' || s[j] == '-') && s[j - 1] != '*' && s[j - 1] != '/')) ++j;
    if (j == i) throw ParseError("malformed linear expression '" + s + "'");
    const std::string body = s.substr(i, j - i);
    FieldElement coeff(sign);
    std::string name;
    std::size_t start = 0;
    while (true) {
      const auto star = body.find('*', start);
      const std::string factor = body.substr(start, star == std::string::npos ? std::string::npos : star - start);
      const bool identifier = !factor.empty() && std::isalpha(static_cast<unsigned char>(factor[0])) &&
                              !factor.starts_with("sqrt");
      if (identifier) {
        if (!name.empty()) throw ParseError("nonlinear term '" + body + "'");
        name = factor;
      } else {
        coeff *= FieldElement::parse(factor);
      }
      if (star == std::string::npos) break;
      start = star + 1;
    }
    if (name.empty()) {
      if (!coeff.is_zero()) throw ParseError("constant term in linear expression '" + s + "'");
    } else {
      add(name, coeff);
    }
    i = j;
  }
  std::erase_if(form, [](const auto& t) { return t.second.is_zero(); });
  return form;
}

// ConstrainedSpace

template <Scalar T>
ConstrainedSpace<T>::ConstrainedSpace(Ambient ambient, std::vector<std::vector<T>> canonical_rows,
                                      std::vector<std::size_t> free_coordinates)
    : ambient_(ambient), rows_(std::move(canonical_rows)), free_(std::move(free_coordinates)) {
  if (rows_.size() != free_.size()) throw DimensionMismatch("basis and free coordinate counts differ");
  for (const auto& r : rows_)
    if (r.size() != ambient_dimension(ambient_)) throw DimensionMismatch("basis vector has wrong length");
  if constexpr (!ScalarTraits<T>::kExact) {
    for (auto& r : rows_)
      for (auto& x : r)
        if (std::abs(x) <= kNumericSnap) x = 0.0;
  }
}

template <Scalar T>
ConstrainedSpace<T> ConstrainedSpace<T>::full(Ambient ambient) {
  const std::size_t n = ambient_dimension(ambient);
  std::vector<std::vector<T>> rows(n, std::vector<T>(n, T(0)));
  std::vector<std::size_t> free(n);
  for (std::size_t k = 0; k < n; ++k) {
    rows[k][k] = T(1);
    free[k] = k;
  }
  return ConstrainedSpace(ambient, std::move(rows), std::move(free));
}

template <Scalar T>
ConstrainedSpace<T> ConstrainedSpace<T>::span_of(const std::vector<Matrix<T>>& matrices, Ambient ambient,
                                                 double tol) {
  const std::size_t n = ambient_dimension(ambient);
  if (matrices.empty()) return ConstrainedSpace(ambient, {}, {});
  Matrix<T> stacked(matrices.size(), n);
  for (std::size_t r = 0; r < matrices.size(); ++r) {
    const auto x = to_ambient_coordinates(matrices[r], ambient);
    for (std::size_t c = 0; c < n; ++c) stacked(r, c) = x[c];
  }
  auto [canon, cols] = trailing_canonical_form(stacked, tol);
  std::vector<std::vector<T>> rows(canon.rows());
  for (std::size_t r = 0; r < canon.rows(); ++r) rows[r].assign(canon.row(r).begin(), canon.row(r).end());
  return ConstrainedSpace(ambient, std::move(rows), std::move(cols));
}

template <Scalar T>
std::vector<std::string> ConstrainedSpace<T>::parameter_names() const {
  std::vector<std::string> names;
  for (std::size_t m = 0; m < rows_.size(); ++m) names.push_back("p" + std::to_string(m + 1));
  return names;
}

template <Scalar T>
ElasticityMatrix<T> ConstrainedSpace<T>::basis_element(std::size_t m) const {
  return ElasticityMatrix<T>(from_ambient_coordinates<T>(rows_.at(m), ambient_));
}

template <Scalar T>
std::vector<ElasticityMatrix<T>> ConstrainedSpace<T>::basis() const {
  std::vector<ElasticityMatrix<T>> out;
  for (std::size_t m = 0; m < rows_.size(); ++m) out.push_back(basis_element(m));
  return out;
}

template <Scalar T>
Matrix<T> ConstrainedSpace<T>::instantiate(std::span<const T> params) const {
  if (params.size() != rows_.size()) throw DimensionMismatch("parameter count does not match dimension");
  std::vector<T> x(ambient_dimension(ambient_), T(0));
  for (std::size_t m = 0; m < rows_.size(); ++m)
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!exact_zero(rows_[m][k])) x[k] += params[m] * rows_[m][k];
  return from_ambient_coordinates<T>(x, ambient_);
}

template <Scalar T>
std::array<std::array<std::string, 6>, 6> ConstrainedSpace<T>::pattern() const {
  std::array<std::array<std::string, 6>, 6> grid;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const std::size_t k = coordinate_of(i, j, ambient_);
      std::string expr;
      for (std::size_t m = 0; m < rows_.size(); ++m) {
        if (exact_zero(rows_[m][k])) continue;
        expr += format_term(rows_[m][k], m, expr.empty());
      }
      grid[i][j] = expr.empty() ? "0" : expr;
    }
  }
  return grid;
}

template <Scalar T>
bool ConstrainedSpace<T>::contains(const Matrix<T>& c, double tol) const {
  const auto x = to_ambient_coordinates(c, ambient_);
  if (ambient_ == Ambient::kSym21 && !approx_equal(c, c.transpose(), tol)) return false;
  std::vector<T> y(x.size(), T(0));
  for (std::size_t m = 0; m < rows_.size(); ++m) {
    const T& a = x[free_[m]];
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * rows_[m][k];
  }
  if constexpr (ScalarTraits<T>::kExact) {
    return x == y;
  } else {
    double scale = 1.0, diff = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      scale = std::max(scale, std::abs(x[k]));
      diff = std::max(diff, std::abs(x[k] - y[k]));
    }
    return diff <= tol * scale;
  }
}

template <Scalar T>
bool ConstrainedSpace<T>::same_space(const ConstrainedSpace& other, double tol) const {
  if (ambient_ != other.ambient_ || free_ != other.free_) return false;
  if constexpr (ScalarTraits<T>::kExact) {
    return rows_ == other.rows_;
  } else {
    for (std::size_t m = 0; m < rows_.size(); ++m)
      for (std::size_t k = 0; k < rows_[m].size(); ++k)
        if (std::abs(rows_[m][k] - other.rows_[m][k]) > tol * (1.0 + std::abs(rows_[m][k]))) return false;
    return true;
  }
}

// Commutant solvers

template <Scalar T>
ConstrainedSpace<T> commutant_serial(std::span<const Isometry<T>> generators, Ambient ambient) {
  auto hats = distinct_transforms<T>(hats_serial(generators));
  if constexpr (ScalarTraits<T>::kExact) {
    RowReducer<T> reducer(ambient_dimension(ambient));
    for (const auto& h : hats) {
      for (auto& row : operator_rows(h, ambient)) {
        reducer.insert(std::move(row));
        if (reducer.full_rank()) break;
      }
      if (reducer.full_rank()) break;
    }
    return from_kernel(reducer, ambient);
  } else {
    return numeric_kernel(hats, ambient);
  }
}

template <Scalar T>
ConstrainedSpace<T> commutant(std::span<const Isometry<T>> generators, Ambient ambient) {
  auto hats = distinct_transforms<T>(hats_parallel(generators));
  if constexpr (ScalarTraits<T>::kExact) {
    std::vector<std::vector<std::vector<T>>> blocks(hats.size());
    const auto count = static_cast<long>(hats.size());
#pragma omp parallel for schedule(dynamic)
    for (long g = 0; g < count; ++g) blocks[g] = operator_rows(hats[g], ambient);

    RowReducer<T> reducer(ambient_dimension(ambient));
    const bool pre_reduce = omp_get_max_threads() > 1;
    for (auto& block : blocks) {
      if (reducer.full_rank()) break;
      // Pre-reduce against the current echelon rows concurrently; insertion
      // stays sequential so the result matches commutant_serial.
      const auto rows = static_cast<long>(block.size());
#pragma omp parallel for schedule(dynamic) if (pre_reduce)
      for (long r = 0; r < (pre_reduce ? rows : 0); ++r) block[r] = reducer.reduce(std::move(block[r]));
      for (auto& row : block) {
        if (std::all_of(row.begin(), row.end(), [](const T& x) { return exact_zero(x); })) continue;
        reducer.insert(std::move(row));
        if (reducer.full_rank()) break;
      }
    }
    return from_kernel(reducer, ambient);
  } else {
    return numeric_kernel(hats, ambient);
  }
}

template <Scalar T>
ConstrainedSpace<T> constrain_by_lattice(const Lattice<T>& lat, Ambient ambient) {
  const PointGroup<T> group = enumerate_point_group(lat);
  return commutant<T>(group.elements, ambient);
}

template <Scalar T>
double commutator_residual(const Matrix<T>& c, const Isometry<T>& s) {
  const double norm = c.frobenius_norm();
  if (norm == 0.0) return 0.0;
  return commutator(c, induced_transform(s)).frobenius_norm() / norm;
}

template <Scalar T>
bool is_material_symmetry(const Matrix<T>& c, const Isometry<T>& s, double tol) {
  const Matrix<T> d = commutator(c, induced_transform(s));
  if constexpr (ScalarTraits<T>::kExact) {
    return d.is_zero();
  } else {
    return d.frobenius_norm() <= tol * c.frobenius_norm();
  }
}

// Classification

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::kTriclinic: return "Triclinic";
    case ClassTag::kMonoclinic: return "Monoclinic";
    case ClassTag::kOrthotropic: return "Orthotropic";
    case ClassTag::kTetragonal: return "Tetragonal";
    case ClassTag::kTransverselyIsotropic: return "TransverselyIsotropic";
    case ClassTag::kCubic: return "Cubic";
    case ClassTag::kIsotropic: return "Isotropic";
    case ClassTag::kUnrecognized: return "Unrecognized";
  }
  return "Unrecognized";
}

std::string SymmetryClass::name() const {
  std::string out(to_string(tag));
  if (tag == ClassTag::kUnrecognized) return out + "(" + std::to_string(dimension) + ")";
  if (axis) out += "(l" + std::to_string(*axis + 1) + ")";
  return out;
}

template <Scalar T>
const std::vector<CanonicalClass<T>>& canonical_classes(Ambient ambient) {
  static const std::array<std::vector<CanonicalClass<T>>, 2> cache{build_classes<T>(Ambient::kFull36),
                                                                   build_classes<T>(Ambient::kSym21)};
  return cache[ambient == Ambient::kFull36 ? 0 : 1];
}

template <Scalar T>
SymmetryClass classify(const ConstrainedSpace<T>& space, double tol) {
  for (const auto& c : canonical_classes<T>(space.ambient())) {
    if (c.space.dimension() == space.dimension() && c.space.same_space(space, tol)) return c.cls;
  }
  return SymmetryClass{ClassTag::kUnrecognized, std::nullopt, space.dimension()};
}

template <Scalar T>
std::optional<SymmetryClass> classify_matrix(const Matrix<T>& c, double tol) {
  for (const auto& k : canonical_classes<T>(Ambient::kFull36)) {
    if (k.cls.tag == ClassTag::kTriclinic) continue;
    const bool all = std::all_of(k.generators.begin(), k.generators.end(),
                                 [&](const Isometry<T>& g) { return is_material_symmetry(c, g, tol); });
    if (all) return k.cls;
  }
  return std::nullopt;
}

template <Scalar T>
std::vector<Isometry<T>> material_group_exceeds_lattice_group(const Lattice<T>& lat,
                                                              std::span<const Isometry<T>> probes,
                                                              Ambient ambient, double tol) {
  const ConstrainedSpace<T> space = constrain_by_lattice(lat, ambient);
  const auto basis = space.basis();
  std::vector<Isometry<T>> out;
  for (const auto& p : probes) {
    if (is_lattice_symmetry(lat, p)) continue;
    const bool material = std::all_of(basis.begin(), basis.end(), [&](const ElasticityMatrix<T>& b) {
      return is_material_symmetry(b.matrix(), p, tol);
    });
    if (material) out.push_back(p);
  }
  return out;
}

// Diagnostics

template <Scalar T>
double isotropy_distance(const Matrix<T>& c) {
  if (c.rows() != 6 || c.cols() != 6) throw DimensionMismatch("elasticity matrix must be 6x6");
  const T norm2 = c.frobenius_norm_squared();
  if (exact_zero(norm2)) throw ZeroMatrix("isotropy distance is undefined for C = 0");
  Matrix<T> p_vol(6, 6);
  const T third = ScalarTraits<T>::from_rational(Rational(1, 3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) p_vol(i, j) = third;
  const Matrix<T> p_dev = Matrix<T>::identity(6) - p_vol;
  T alpha(0), beta(0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      alpha += c(i, j) * p_vol(i, j);
      beta += c(i, j) * p_dev(i, j);
    }
  // ||P_vol||^2 = 1, ||P_dev||^2 = 5.
  beta *= ScalarTraits<T>::from_rational(Rational(1, 5));
  const Matrix<T> residual = c - p_vol * alpha - p_dev * beta;
  const double ratio = ScalarTraits<T>::to_double(residual.frobenius_norm_squared()) /
                       ScalarTraits<T>::to_double(norm2);
  return std::sqrt(std::max(0.0, ratio));
}

template <Scalar T>
bool is_positive_definite(const Matrix<T>& c, double tol) {
  if (!c.is_square()) throw DimensionMismatch("matrix must be square");
  if (!c.is_symmetric(tol)) throw AsymmetricInput("positive definiteness requires C = C^T");
  const std::size_t n = c.rows();
  if constexpr (ScalarTraits<T>::kExact) {
    for (std::size_t k = 1; k <= n; ++k) {
      Matrix<T> minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = c(i, j);
      if (determinant(minor).sign() <= 0) return false;
    }
    return true;
  } else {
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = c(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m, Eigen::EigenvaluesOnly);
    const auto& lambda = eig.eigenvalues();
    const double scale = lambda.cwiseAbs().maxCoeff();
    return lambda.minCoeff() > tol * scale;
  }
}

#define LATTISYM_INSTANTIATE_SYMMETRY(T)                                                             \
  template std::vector<T> to_ambient_coordinates<T>(const Matrix<T>&, Ambient);                      \
  template Matrix<T> from_ambient_coordinates<T>(std::span<const T>, Ambient);                       \
  template Matrix<T> commutation_operator<T>(const VoigtTransform<T>&, Ambient);                     \
  template class ConstrainedSpace<T>;                                                                \
  template ConstrainedSpace<T> commutant<T>(std::span<const Isometry<T>>, Ambient);                  \
  template ConstrainedSpace<T> commutant_serial<T>(std::span<const Isometry<T>>, Ambient);           \
  template ConstrainedSpace<T> constrain_by_lattice<T>(const Lattice<T>&, Ambient);                  \
  template bool is_material_symmetry<T>(const Matrix<T>&, const Isometry<T>&, double);               \
  template double commutator_residual<T>(const Matrix<T>&, const Isometry<T>&);                      \
  template const std::vector<CanonicalClass<T>>& canonical_classes<T>(Ambient);                      \
  template SymmetryClass classify<T>(const ConstrainedSpace<T>&, double);                            \
  template std::optional<SymmetryClass> classify_matrix<T>(const Matrix<T>&, double);                \
  template std::vector<Isometry<T>> material_group_exceeds_lattice_group<T>(                         \
      const Lattice<T>&, std::span<const Isometry<T>>, Ambient, double);                             \
  template double isotropy_distance<T>(const Matrix<T>&);                                            \
  template bool is_positive_definite<T>(const Matrix<T>&, double);

LATTISYM_INSTANTIATE_SYMMETRY(FieldElement)
LATTISYM_INSTANTIATE_SYMMETRY(double)

#undef LATTISYM_INSTANTIATE_SYMMETRY

}  // namespace lattisym
