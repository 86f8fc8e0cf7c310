#include <gtest/gtest.h>

#include <array>
#include <random>
#include <set>

#include "lattisym/catalog.hpp"
#include "lattisym/lattice.hpp"
#include "support/oracles.hpp"

using lattisym::FieldElement;
using lattisym::IntMatrix3;
using lattisym::Isometry;
using lattisym::Lattice;
using lattisym::Matrix;
using lattisym::Rational;
using lattisym::Vec3;
using F = FieldElement;

namespace {

Lattice<F> exact_case(const char* name) { return lattisym::case_lattice<F>(lattisym::find_case(name)); }
Lattice<double> numeric_case(const char* name) { return lattisym::case_lattice<double>(lattisym::find_case(name)); }

// Gram matrix by explicit dot products, scaled to integers.
std::array<std::array<long, 3>, 3> integer_gram(const std::array<Vec3<F>, 3>& g) {
  std::array<std::array<Rational, 3>, 3> gram;
  mpz_class den = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      F dot(0);
      for (int k = 0; k < 3; ++k) dot += g[i][k] * g[j][k];
      EXPECT_TRUE(dot.is_rational());
      gram[i][j] = dot.p();
      den = lcm(den, gram[i][j].get_den());
    }
  std::array<std::array<long, 3>, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = Rational(gram[i][j] * den).get_num().get_si();
  return out;
}

std::set<IntMatrix3> as_set(const lattisym::PointGroup<F>& g) {
  return {g.integer_forms.begin(), g.integer_forms.end()};
}

IntMatrix3 random_unimodular(std::mt19937_64& rng) {
  IntMatrix3 u = lattisym::identity_int3();
  std::uniform_int_distribution<int> idx(0, 2), sgn(0, 1);
  for (int step = 0; step < 2; ++step) {
    const int i = idx(rng), j = (i + 1 + idx(rng) % 2) % 3;
    IntMatrix3 e = lattisym::identity_int3();
    e[i][j] = sgn(rng) ? 1 : -1;
    u = lattisym::multiply(u, e);
  }
  return u;
}

}  // namespace

TEST(Directors, AreOrthonormalRightHandedAndAligned) {
  for (const auto& c : lattisym::list_cases()) {
    const auto lat = lattisym::case_lattice<F>(c);
    const auto& l = lat.directors();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        F dot(0);
        for (int k = 0; k < 3; ++k) dot += l[i][k] * l[j][k];
        EXPECT_EQ(dot, F(i == j ? 1 : 0)) << c.name;
      }
    const F det = l[0][0] * (l[1][1] * l[2][2] - l[1][2] * l[2][1]) -
                  l[0][1] * (l[1][0] * l[2][2] - l[1][2] * l[2][0]) +
                  l[0][2] * (l[1][0] * l[2][1] - l[1][1] * l[2][0]);
    EXPECT_EQ(det, F(1)) << c.name;
    // l1 is parallel to a1 and l3 is orthogonal to a1, a2.
    const auto& a = lat.generators();
    F d1(0), d2(0), cross(0);
    for (int m = 0; m < 3; ++m) {
      d1 += l[2][m] * a[0][m];
      d2 += l[2][m] * a[1][m];
    }
    EXPECT_TRUE(d1.is_zero() && d2.is_zero()) << c.name;
    for (int m = 0; m < 3; ++m) cross += l[0][m] * a[0][m];
    EXPECT_EQ(cross.sign(), 1) << c.name;
  }
}

TEST(Directors, FccRhomboidalIsAlreadyOnTheStandardBasis) {
  const auto lat = exact_case("fcc-rhomboidal");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(lat.directors()[i][j], F(i == j ? 1 : 0));
}

TEST(Directors, Errors) {
  using G = std::array<Vec3<F>, 3>;
  const G collinear{{{F(1), F(0), F(0)}, {F(2), F(0), F(0)}, {F(0), F(0), F(1)}}};
  EXPECT_THROW(Lattice<F>::from_generators(collinear), lattisym::DegenerateGenerators);
  const G outside{{{F(1), F(2), F(0)}, {F(0), F(1), F(1)}, {F(0), F(0), F(1)}}};
  EXPECT_THROW(Lattice<F>::from_generators(outside), lattisym::NormOutsideField);
  std::array<Vec3<double>, 3> numeric{{{1, 2, 0}, {0, 1, 1}, {0, 0, 1}}};
  EXPECT_NO_THROW(Lattice<double>::from_generators(numeric));
}

TEST(PointGroup, OrdersOfThePresets) {
  EXPECT_EQ(lattisym::enumerate_point_group(exact_case("simple-cubic")).order(), 48u);
  EXPECT_EQ(lattisym::enumerate_point_group(exact_case("fcc-rhomboidal")).order(), 48u);
  EXPECT_EQ(lattisym::enumerate_point_group(exact_case("hexagonal-prism")).order(), 24u);
  EXPECT_EQ(lattisym::enumerate_point_group(exact_case("tetragonal-prism")).order(), 16u);
  EXPECT_EQ(lattisym::enumerate_point_group(exact_case("orthorhombic")).order(), 8u);
  EXPECT_EQ(lattisym::enumerate_point_group(exact_case("monoclinic-prism")).order(), 4u);
  EXPECT_EQ(lattisym::enumerate_point_group(numeric_case("fcc-rhomboidal")).order(), 48u);
}

TEST(PointGroup, MatchesIntegerGramOracle) {
  for (const auto& c : lattisym::list_cases()) {
    const auto lat = lattisym::case_lattice<F>(c);
    const auto oracle_group = oracle::integer_automorphisms(integer_gram(lat.generators()));
    EXPECT_EQ(as_set(lattisym::enumerate_point_group(lat)), oracle_group) << c.name;
    EXPECT_EQ(oracle_group.size(), c.expected_order) << c.name;
  }
}

TEST(PointGroup, ParallelMatchesSerial) {
  for (const auto& c : lattisym::list_cases()) {
    const auto lat = lattisym::case_lattice<F>(c);
    const auto par = lattisym::enumerate_point_group(lat);
    const auto ser = lattisym::enumerate_point_group_serial(lat);
    EXPECT_EQ(par.integer_forms, ser.integer_forms) << c.name;
    EXPECT_TRUE(par.elements == ser.elements) << c.name;
  }
}

TEST(PointGroup, ElementsAreLatticeSymmetries) {
  const auto lat = exact_case("hexagonal-prism");
  const auto g = lattisym::enumerate_point_group(lat);
  for (std::size_t i = 0; i < g.order(); ++i) {
    EXPECT_TRUE(lattisym::is_lattice_symmetry(lat, g.elements[i]));
    const Matrix<F> coords = lat.to_generator_coords(g.elements[i]);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) EXPECT_EQ(coords(r, c), F(g.integer_forms[i][r][c]));
    EXPECT_EQ(lat.from_generator_coords(g.integer_forms[i]), g.elements[i].matrix());
  }
  EXPECT_TRUE(lattisym::is_closed_group(g));
}

// Seeded property check: random unimodular basis changes and random rotations
// of the preset lattices keep the order and closure of the point group.
TEST(PointGroup, OrdersAndClosureUnderRandomPresentations) {
  const std::array<std::pair<const char*, std::size_t>, 5> presets{
      {{"simple-cubic", 48}, {"fcc-rhomboidal", 48}, {"hexagonal-prism", 24}, {"tetragonal-prism", 16},
       {"orthorhombic", 8}}};
  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    const auto& [name, order] = presets[static_cast<std::size_t>(k) % presets.size()];
    const auto base = lattisym::find_case(name).generators;
    const IntMatrix3 u = random_unimodular(rng);
    const auto rot = lattisym::random_rotation(rng).matrix();
    std::array<Vec3<double>, 3> g{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double x = 0;
        for (int m = 0; m < 3; ++m) x += static_cast<double>(u[m][i]) * base[m][j].to_double();
        for (int r = 0; r < 3; ++r) g[i][r] += rot(r, j) * x;
      }
    const auto lat = Lattice<double>::from_generators(g);
    const auto group = lattisym::enumerate_point_group(lat);
    EXPECT_EQ(group.order(), order) << name << " case " << k;
    EXPECT_TRUE(lattisym::is_closed_group(group));
  }
}

TEST(Isometry, RejectsNonOrthogonal) {
  const Matrix<F> shear{{F(1), F(1), F(0)}, {F(0), F(1), F(0)}, {F(0), F(0), F(1)}};
  EXPECT_THROW(Isometry<F>::from_matrix(shear), lattisym::NotOrthogonal);
  EXPECT_FALSE(Isometry<F>::from_matrix(-Matrix<F>::identity(3)).is_rotation());
}

TEST(Isometry, QuaternionRotationsAreExact) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 100; ++k) {
    const auto s = lattisym::random_rational_rotation(rng);
    EXPECT_EQ(s.matrix() * s.matrix().transpose(), Matrix<F>::identity(3));
    EXPECT_TRUE(s.is_rotation());
    EXPECT_EQ(s.compose(s.inverse()).matrix(), Matrix<F>::identity(3));
  }
}
