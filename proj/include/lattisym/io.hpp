#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "lattisym/catalog.hpp"
#include "lattisym/lattice.hpp"
#include "lattisym/symmetry.hpp"
#include "lattisym/voigt.hpp"

namespace lattisym::io {

using Json = nlohmann::ordered_json;

/// Throws ParseError on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);

/// The "mode" field; defaults to exact when absent.
Mode read_mode(const Json& doc);

/// Exact mode: FieldElement grammar strings or JSON integers. Numeric mode:
/// numbers, or strings in the FieldElement grammar evaluated in floating point.
template <Scalar T>
T read_scalar(const Json& value);

template <Scalar T>
std::array<Vec3<T>, 3> read_generators(const Json& doc);

template <Scalar T>
ElasticityMatrix<T> read_elasticity(const Json& doc);

template <Scalar T>
Json scalar_json(const T& x);

template <Scalar T>
Json matrix_json(const Matrix<T>& m);

template <Scalar T>
Json vectors_json(const std::array<Vec3<T>, 3>& v);

/// `{ "ambient", "dimension", "parameters", "pattern" }`
template <Scalar T>
Json space_json(const ConstrainedSpace<T>& space);

/// Standard Lattice JSON of a catalog case.
Json lattice_json(const NamedCase& c);

}  // namespace lattisym::io
