#include "lattisym/io.hpp"

#include <fstream>

namespace lattisym::io {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

Mode read_mode(const Json& doc) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  if (!doc.contains("mode")) return Mode::kExact;
  if (!doc["mode"].is_string()) throw ParseError("\"mode\" must be a string");
  return parse_mode(doc["mode"].get<std::string>());
}

template <Scalar T>
T read_scalar(const Json& value) {
  if (value.is_string()) {
    const FieldElement x = FieldElement::parse(value.get<std::string>());
    return ScalarTraits<T>::from_field(x);
  }
  if constexpr (ScalarTraits<T>::kExact) {
    if (value.is_number_integer()) return FieldElement(value.get<long>());
    throw ParseError("exact mode entries must be integers or FieldElement strings, got " + value.dump());
  } else {
    if (value.is_number()) return value.get<double>();
    throw ParseError("numeric mode entries must be numbers, got " + value.dump());
  }
}

template <Scalar T>
std::array<Vec3<T>, 3> read_generators(const Json& doc) {
  if (!doc.contains("generators")) throw ParseError("missing \"generators\"");
  const Json& g = doc["generators"];
  if (!g.is_array() || g.size() != 3) throw ParseError("\"generators\" must hold three vectors");
  std::array<Vec3<T>, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!g[i].is_array() || g[i].size() != 3) throw ParseError("each generator must have three components");
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = read_scalar<T>(g[i][j]);
  }
  return out;
}

template <Scalar T>
ElasticityMatrix<T> read_elasticity(const Json& doc) {
  if (!doc.contains("entries")) throw ParseError("missing \"entries\"");
  const Json& e = doc["entries"];
  if (!e.is_array() || e.size() != 6) throw ParseError("\"entries\" must be a 6x6 array");
  Matrix<T> c(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    if (!e[i].is_array() || e[i].size() != 6) throw ParseError("\"entries\" must be a 6x6 array");
    for (std::size_t j = 0; j < 6; ++j) c(i, j) = read_scalar<T>(e[i][j]);
  }
  bool symmetric = false;
  if (doc.contains("symmetric")) {
    if (!doc["symmetric"].is_boolean()) throw ParseError("\"symmetric\" must be a boolean");
    symmetric = doc["symmetric"].get<bool>();
  }
  return ElasticityMatrix<T>(std::move(c), symmetric);
}

template <Scalar T>
Json scalar_json(const T& x) {
  if constexpr (ScalarTraits<T>::kExact) {
    return x.to_string();
  } else {
    return x;
  }
}

template <Scalar T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Scalar T>
Json vectors_json(const std::array<Vec3<T>, 3>& v) {
  Json rows = Json::array();
  for (const auto& x : v) rows.push_back(Json::array({scalar_json(x[0]), scalar_json(x[1]), scalar_json(x[2])}));
  return rows;
}

template <Scalar T>
Json space_json(const ConstrainedSpace<T>& space) {
  Json pattern = Json::array();
  for (const auto& row : space.pattern()) pattern.push_back(row);
  return Json{{"ambient", std::string(to_string(space.ambient()))},
              {"dimension", space.dimension()},
              {"parameters", space.parameter_names()},
              {"pattern", std::move(pattern)}};
}

Json lattice_json(const NamedCase& c) {
  return Json{{"mode", "exact"}, {"generators", vectors_json(c.generators)}};
}

#define LATTISYM_INSTANTIATE_IO(T)                                          \
  template T read_scalar<T>(const Json&);                                   \
  template std::array<Vec3<T>, 3> read_generators<T>(const Json&);          \
  template ElasticityMatrix<T> read_elasticity<T>(const Json&);             \
  template Json scalar_json<T>(const T&);                                   \
  template Json matrix_json<T>(const Matrix<T>&);                           \
  template Json vectors_json<T>(const std::array<Vec3<T>, 3>&);             \
  template Json space_json<T>(const ConstrainedSpace<T>&);

LATTISYM_INSTANTIATE_IO(FieldElement)
LATTISYM_INSTANTIATE_IO(double)

#undef LATTISYM_INSTANTIATE_IO

}  // namespace lattisym::io
