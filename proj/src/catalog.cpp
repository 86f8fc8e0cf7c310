#include "lattisym/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "lattisym/linalg.hpp"

namespace lattisym {

namespace {

FieldElement fe(std::string_view text) { return FieldElement::parse(text); }

ExactMatrix mat3(std::initializer_list<std::string_view> entries) {
  ExactMatrix m(3, 3);
  std::size_t k = 0;
  for (auto e : entries) {
    m(k / 3, k % 3) = fe(e);
    ++k;
  }
  return m;
}

ExactMatrix rotation_matrix(std::size_t axis, std::string_view c, std::string_view s) {
  return axis_rotation<FieldElement>(axis, fe(c), fe(s)).matrix();
}

std::vector<IsometryPreset> build_presets() {
  std::vector<IsometryPreset> out;
  out.push_back({"I", "identity", ExactMatrix::identity(3)});
  out.push_back({"-I", "central inversion", -ExactMatrix::identity(3)});
  const std::array<std::string, 3> suffix{"_l1", "_l2", ""};
  for (std::size_t axis : {2u, 0u, 1u}) {
    const std::string about = "about l" + std::to_string(axis + 1);
    out.push_back({"Q_pi" + suffix[axis], "rotation by pi " + about, rotation_matrix(axis, "-1", "0")});
    out.push_back({"Q_pi2" + suffix[axis], "rotation by pi/2 " + about, rotation_matrix(axis, "0", "1")});
    out.push_back(
        {"Q_pi3" + suffix[axis], "rotation by pi/3 " + about, rotation_matrix(axis, "1/2", "1/2*sqrt3")});
  }
  out.push_back({"R1", "fcc reflection a1 -> -a1", mat3({"-1", "0", "0", "0", "1", "0", "0", "0", "1"})});
  out.push_back({"R2", "fcc reflection a2 -> -a2",
                 mat3({"1/2", "-1/2*sqrt3", "0", "-1/2*sqrt3", "-1/2", "0", "0", "0", "1"})});
  out.push_back({"Q_sum", "displayed rotation attributed to the a1+a2+a3 diagonal",
                 mat3({"1/4", "1/2 + 1/4*sqrt3", "1/4*sqrt2 - 1/4*sqrt6",  //
                       "-1/2 + 1/4*sqrt3", "-1/4", "-1/4*sqrt2 - 1/4*sqrt6",  //
                       "-1/4*sqrt2 - 1/4*sqrt6", "-1/4*sqrt2 + 1/4*sqrt6", "0"})});
  out.push_back({"Q_cyclic", "fcc rotation a1 -> a2 -> a3 -> a1",
                 mat3({"1/2", "1/6*sqrt3", "1/3*sqrt6",  //
                       "1/2*sqrt3", "-1/6", "-1/3*sqrt2",  //
                       "0", "2/3*sqrt2", "-1/3"})});
  for (const auto& p : out) Isometry<FieldElement>::from_matrix(p.matrix);
  return out;
}

Vec3<FieldElement> v3(std::string_view x, std::string_view y, std::string_view z) {
  return {fe(x), fe(y), fe(z)};
}

std::vector<NamedCase> build_cases() {
  using enum ClassTag;
  std::vector<NamedCase> out;
  out.push_back({"simple-cubic", "cubic pattern with constants a, b, c",
                 {v3("1", "0", "0"), v3("0", "1", "0"), v3("0", "0", "1")},
                 {kCubic, std::nullopt, 3}, 3, 3, 48});
  out.push_back({"tetragonal-prism", "tetragonal constraints from the pi/2 rotation about l3",
                 {v3("1", "0", "0"), v3("0", "1", "0"), v3("0", "0", "2")},
                 {kTetragonal, 2, 7}, 7, 6, 16});
  out.push_back({"orthorhombic", "orthotropy from three pi rotations",
                 {v3("1", "0", "0"), v3("0", "3/2", "0"), v3("0", "0", "2")},
                 {kOrthotropic, std::nullopt, 12}, 12, 9, 8});
  out.push_back({"monoclinic-prism", "monoclinic constraints from the pi rotation about l3",
                 {v3("1", "0", "0"), v3("1/3", "5/4", "0"), v3("0", "0", "2")},
                 {kMonoclinic, 2, 20}, 20, 13, 4});
  out.push_back({"hexagonal-prism", "transverse isotropy of the hexagonal prism lattice",
                 {v3("1", "0", "0"), v3("1/2", "1/2*sqrt3", "0"), v3("0", "0", "1")},
                 {kTransverselyIsotropic, 2, 6}, 6, 5, 24});
  out.push_back({"fcc-rhomboidal", "claimed FCC isotropy with two constants a, b",
                 {v3("1", "0", "0"), v3("1/2", "1/2*sqrt3", "0"), v3("1/2", "1/6*sqrt3", "1/3*sqrt6")},
                 {kIsotropic, std::nullopt, 2}, 2, 2, 48});
  return out;
}

using Grid = std::array<std::array<std::string, 6>, 6>;

std::vector<DisplayedPattern> build_patterns() {
  std::vector<DisplayedPattern> out;
  out.push_back({"C_cubic", "cubic form", {"a", "b", "c"},
                 Grid{{{"a", "b", "b", "0", "0", "0"},
                       {"b", "a", "b", "0", "0", "0"},
                       {"b", "b", "a", "0", "0", "0"},
                       {"0", "0", "0", "c", "0", "0"},
                       {"0", "0", "0", "0", "c", "0"},
                       {"0", "0", "0", "0", "0", "c"}}}});
  out.push_back({"C_trans", "transversely isotropic form about l3", {"a", "b", "c", "d", "d'", "e"},
                 Grid{{{"a", "a - b", "d", "0", "0", "0"},
                       {"a - b", "a", "d", "0", "0", "0"},
                       {"d'", "d'", "c", "0", "0", "0"},
                       {"0", "0", "0", "e", "0", "0"},
                       {"0", "0", "0", "0", "e", "0"},
                       {"0", "0", "0", "0", "0", "b"}}}});
  out.push_back({"C_8par", "eight-parameter form from the fcc reflections R1, R2",
                 {"C11", "C13", "C14", "C31", "C33", "C41", "C44", "C66"},
                 Grid{{{"C11", "C11 - C66", "C13", "C14", "0", "0"},
                       {"C11 - C66", "C11", "C13", "-C14", "0", "0"},
                       {"C31", "C31", "C33", "0", "0", "0"},
                       {"C41", "-C41", "0", "C44", "0", "0"},
                       {"0", "0", "0", "0", "C44", "sqrt2*C41"},
                       {"0", "0", "0", "0", "sqrt2*C14", "C66"}}}});
  out.push_back({"C_iso", "isotropic form", {"a", "b"},
                 Grid{{{"a", "a - b", "a - b", "0", "0", "0"},
                       {"a - b", "a", "a - b", "0", "0", "0"},
                       {"a - b", "a - b", "a", "0", "0", "0"},
                       {"0", "0", "0", "b", "0", "0"},
                       {"0", "0", "0", "0", "b", "0"},
                       {"0", "0", "0", "0", "0", "b"}}}});
  return out;
}

ExactMatrix grid6(const Grid& g, const FieldElement& scale = FieldElement(1)) {
  ExactMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = fe(g[i][j]) * scale;
  return m;
}

std::vector<DisplayedTransform> build_transforms() {
  std::vector<DisplayedTransform> out;
  out.push_back({"Q_pi", grid6(Grid{{{"1", "0", "0", "0", "0", "0"},
                                     {"0", "1", "0", "0", "0", "0"},
                                     {"0", "0", "1", "0", "0", "0"},
                                     {"0", "0", "0", "-1", "0", "0"},
                                     {"0", "0", "0", "0", "-1", "0"},
                                     {"0", "0", "0", "0", "0", "1"}}})});
  out.push_back({"Q_pi2", grid6(Grid{{{"0", "1", "0", "0", "0", "0"},
                                      {"1", "0", "0", "0", "0", "0"},
                                      {"0", "0", "1", "0", "0", "0"},
                                      {"0", "0", "0", "0", "1", "0"},
                                      {"0", "0", "0", "-1", "0", "0"},
                                      {"0", "0", "0", "0", "0", "-1"}}})});
  out.push_back({"Q_pi3", grid6(Grid{{{"1/4", "3/4", "0", "0", "0", "-sqrt6/4"},
                                      {"3/4", "1/4", "0", "0", "0", "sqrt6/4"},
                                      {"0", "0", "1", "0", "0", "0"},
                                      {"0", "0", "0", "1/2", "sqrt3/2", "0"},
                                      {"0", "0", "0", "-sqrt3/2", "1/2", "0"},
                                      {"sqrt6/4", "-sqrt6/4", "0", "0", "0", "-1/2"}}})});
  out.push_back(
      {"Q_sum",
       grid6(Grid{{{"1", "4*sqrt3 + 7", "8 - 4*sqrt3", "-2*sqrt3 - 2", "2 - 2*sqrt3", "2*sqrt2 + sqrt6"},
                   {"7 - 4*sqrt3", "1", "4*sqrt3 + 8", "2*sqrt3 + 2", "2*sqrt3 - 2", "2*sqrt2 - sqrt6"},
                   {"4*sqrt3 + 8", "8 - 4*sqrt3", "0", "0", "0", "-4*sqrt2"},
                   {"2*sqrt3 - 2", "2 - 2*sqrt3", "0", "-4", "4*sqrt3 + 8", "6*sqrt2 - 2*sqrt6"},
                   {"-2*sqrt3 - 2", "2*sqrt3 + 2", "0", "4*sqrt3 - 8", "4", "-6*sqrt2 - 2*sqrt6"},
                   {"sqrt6 - 2*sqrt2", "-2*sqrt2 - sqrt6", "4*sqrt2", "-6*sqrt2 - 2*sqrt6",
                    "2*sqrt6 - 6*sqrt2", "-2"}}},
             FieldElement(Rational(1, 16)))});
  return out;
}

}  // namespace

const std::vector<DisplayedPattern>& displayed_patterns() {
  static const std::vector<DisplayedPattern> patterns = build_patterns();
  return patterns;
}

const DisplayedPattern& find_displayed_pattern(std::string_view name) {
  const auto& all = displayed_patterns();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& p) { return p.name == name; });
  if (it == all.end()) throw Error("unknown pattern '" + std::string(name) + "'");
  return *it;
}

template <Scalar T>
Matrix<T> instantiate_pattern(const DisplayedPattern& pattern, std::span<const T> values) {
  if (values.size() != pattern.parameters.size()) throw DimensionMismatch("wrong number of pattern constants");
  Matrix<T> c(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      for (const auto& [name, coeff] : parse_linear_form(pattern.entries[i][j])) {
        auto it = std::find(pattern.parameters.begin(), pattern.parameters.end(), name);
        if (it == pattern.parameters.end()) throw ParseError("unknown constant '" + name + "'");
        c(i, j) += ScalarTraits<T>::from_field(coeff) * values[it - pattern.parameters.begin()];
      }
    }
  }
  return c;
}

template <Scalar T>
ConstrainedSpace<T> displayed_space(const DisplayedPattern& pattern, Ambient ambient) {
  const std::size_t d = pattern.parameters.size();
  std::vector<Matrix<T>> basis;
  for (std::size_t m = 0; m < d; ++m) {
    std::vector<T> unit(d, T(0));
    unit[m] = T(1);
    basis.push_back(instantiate_pattern<T>(pattern, unit));
  }
  if (ambient == Ambient::kSym21) {
    // Constants x with sum_m x_m (B_m - B_m^T) = 0.
    Matrix<T> skew(36, d);
    for (std::size_t m = 0; m < d; ++m) {
      const Matrix<T> a = basis[m] - basis[m].transpose();
      for (std::size_t k = 0; k < 36; ++k) skew(k, m) = a.values()[k];
    }
    std::vector<Matrix<T>> symmetric;
    for (const auto& x : nullspace(skew)) {
      Matrix<T> c(6, 6);
      for (std::size_t m = 0; m < d; ++m) c += basis[m] * x(m, 0);
      symmetric.push_back(std::move(c));
    }
    basis = std::move(symmetric);
  }
  return ConstrainedSpace<T>::span_of(basis, ambient);
}

const std::vector<DisplayedTransform>& displayed_transforms() {
  static const std::vector<DisplayedTransform> transforms = build_transforms();
  return transforms;
}

const std::vector<IsometryPreset>& isometry_presets() {
  static const std::vector<IsometryPreset> presets = build_presets();
  return presets;
}

const IsometryPreset& find_isometry_preset(std::string_view name) {
  const auto& all = isometry_presets();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& p) { return p.name == name; });
  if (it == all.end()) throw Error("unknown isometry preset '" + std::string(name) + "'");
  return *it;
}

template <Scalar T>
Isometry<T> preset_isometry(std::string_view name) {
  const ExactMatrix& m = find_isometry_preset(name).matrix;
  if constexpr (ScalarTraits<T>::kExact) {
    return Isometry<T>::from_matrix(m);
  } else {
    return Isometry<T>::from_matrix(to_numeric(m));
  }
}

Isometry<double> numeric_axis_rotation(std::size_t axis, double theta) {
  return axis_rotation<double>(axis, std::cos(theta), std::sin(theta));
}

Isometry<double> random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  double w = 0, x = 0, y = 0, z = 0;
  while (w * w + x * x + y * y + z * z < 1e-6) {
    w = normal(rng);
    x = normal(rng);
    y = normal(rng);
    z = normal(rng);
  }
  return quaternion_rotation<double>(w, x, y, z);
}

Isometry<double> random_reflection(std::mt19937_64& rng) { return random_rotation(rng).negated(); }

Isometry<FieldElement> random_rational_rotation(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> pick(-bound, bound);
  long w = 0, x = 0, y = 0, z = 0;
  while (w == 0 && x == 0 && y == 0 && z == 0) {
    w = pick(rng);
    x = pick(rng);
    y = pick(rng);
    z = pick(rng);
  }
  return quaternion_rotation<FieldElement>(w, x, y, z);
}

const std::vector<NamedCase>& list_cases() {
  static const std::vector<NamedCase> cases = build_cases();
  return cases;
}

const NamedCase& find_case(std::string_view name) {
  const auto& all = list_cases();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& c) { return c.name == name; });
  if (it == all.end()) throw Error("unknown catalog case '" + std::string(name) + "'");
  return *it;
}

template <Scalar T>
Lattice<T> case_lattice(const NamedCase& c) {
  std::array<Vec3<T>, 3> gens{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) gens[i][j] = ScalarTraits<T>::from_field(c.generators[i][j]);
  return Lattice<T>::from_generators(gens);
}

template <Scalar T>
std::vector<CaseReport> verify_all(Ambient ambient) {
  std::vector<CaseReport> out;
  for (const auto& c : list_cases()) {
    const Lattice<T> lat = case_lattice<T>(c);
    const PointGroup<T> group = enumerate_point_group(lat);
    const ConstrainedSpace<T> space = commutant<T>(group.elements, ambient);
    const SymmetryClass cls = classify(space);
    SymmetryClass expected = c.expected_class;
    expected.dimension = c.expected_dimension(ambient);

    CaseReport r;
    r.name = c.name;
    r.citation = c.citation;
    r.expected_class = expected.name();
    r.computed_class = cls.name();
    r.expected_dimension = expected.dimension;
    r.computed_dimension = space.dimension();
    r.expected_order = c.expected_order;
    r.computed_order = group.order();
    r.pattern = space.pattern();
    r.pass = cls.tag == expected.tag && cls.axis == expected.axis &&
             r.computed_dimension == r.expected_dimension && r.computed_order == r.expected_order;
    out.push_back(std::move(r));
  }
  return out;
}

template Isometry<FieldElement> preset_isometry<FieldElement>(std::string_view);
template Isometry<double> preset_isometry<double>(std::string_view);
template Lattice<FieldElement> case_lattice<FieldElement>(const NamedCase&);
template Lattice<double> case_lattice<double>(const NamedCase&);
template std::vector<CaseReport> verify_all<FieldElement>(Ambient);
template std::vector<CaseReport> verify_all<double>(Ambient);
template Matrix<FieldElement> instantiate_pattern<FieldElement>(const DisplayedPattern&,
                                                                std::span<const FieldElement>);
template Matrix<double> instantiate_pattern<double>(const DisplayedPattern&, std::span<const double>);
template ConstrainedSpace<FieldElement> displayed_space<FieldElement>(const DisplayedPattern&, Ambient);
template ConstrainedSpace<double> displayed_space<double>(const DisplayedPattern&, Ambient);

}  // namespace lattisym
