#pragma once

#include <array>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lattisym/lattice.hpp"
#include "lattisym/symmetry.hpp"

namespace lattisym {

/// Named isometry on the director basis, stored exactly.
struct IsometryPreset {
  std::string name;
  std::string description;
  ExactMatrix matrix;
};

/// All presets: I, -I, the pi, pi/2 and pi/3 rotations about each director
/// (unsuffixed names are about l3), the FCC reflections R1 and R2, Q_sum as
/// displayed in the source derivation, and Q_cyclic, the rotation taking
/// a1 -> a2 -> a3 -> a1 of the fcc-rhomboidal lattice.
const std::vector<IsometryPreset>& isometry_presets();

/// Throws Error for an unknown name.
const IsometryPreset& find_isometry_preset(std::string_view name);

template <Scalar T>
Isometry<T> preset_isometry(std::string_view name);

/// Rotation by theta about director `axis` in floating point.
Isometry<double> numeric_axis_rotation(std::size_t axis, double theta);

/// Uniformly distributed rotation (normalized Gaussian quaternion).
Isometry<double> random_rotation(std::mt19937_64& rng);
/// Random rotation composed with -I.
Isometry<double> random_reflection(std::mt19937_64& rng);
/// Exact rotation from a random integer quaternion with components in
/// [-bound, bound]; rational entries.
Isometry<FieldElement> random_rational_rotation(std::mt19937_64& rng, long bound = 5);

/// Elasticity pattern as displayed in the source derivation: a 6x6 grid of
/// linear expressions in named material constants.
struct DisplayedPattern {
  std::string name;
  std::string description;
  std::vector<std::string> parameters;
  std::array<std::array<std::string, 6>, 6> entries;
};

/// C_cubic, C_trans, C_8par (the {R1, R2} form) and C_iso.
const std::vector<DisplayedPattern>& displayed_patterns();
const DisplayedPattern& find_displayed_pattern(std::string_view name);

/// Pattern with the given constants substituted; `values` follows `parameters`.
template <Scalar T>
Matrix<T> instantiate_pattern(const DisplayedPattern& pattern, std::span<const T> values);

/// Span of the pattern; in sym21 its intersection with C = C^T.
template <Scalar T>
ConstrainedSpace<T> displayed_space(const DisplayedPattern& pattern, Ambient ambient);

/// Induced transform displayed for a preset isometry.
struct DisplayedTransform {
  std::string isometry;
  ExactMatrix hat;
};

/// Q_pi, Q_pi2, Q_pi3 and Q_sum.
const std::vector<DisplayedTransform>& displayed_transforms();

struct NamedCase {
  std::string name;
  std::string citation;
  std::array<Vec3<FieldElement>, 3> generators;
  SymmetryClass expected_class;
  std::size_t expected_dim_full36 = 0;
  std::size_t expected_dim_sym21 = 0;
  std::size_t expected_order = 0;

  std::size_t expected_dimension(Ambient ambient) const {
    return ambient == Ambient::kFull36 ? expected_dim_full36 : expected_dim_sym21;
  }
};

const std::vector<NamedCase>& list_cases();
/// Throws Error for an unknown name.
const NamedCase& find_case(std::string_view name);

template <Scalar T>
Lattice<T> case_lattice(const NamedCase& c);

struct CaseReport {
  std::string name;
  std::string citation;
  std::string expected_class;
  std::string computed_class;
  std::size_t expected_dimension = 0;
  std::size_t computed_dimension = 0;
  std::size_t expected_order = 0;
  std::size_t computed_order = 0;
  std::array<std::array<std::string, 6>, 6> pattern;
  bool pass = false;
};

/// Runs point-group enumeration, constrain_by_lattice and classify on every
/// case and compares with its expectations.
template <Scalar T>
std::vector<CaseReport> verify_all(Ambient ambient);

}  // namespace lattisym
