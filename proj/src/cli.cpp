#include "lattisym/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lattisym/catalog.hpp"
#include "lattisym/io.hpp"

namespace lattisym::cli {

namespace {

using io::Json;

enum class Format { kText, kJson };

struct RunConfig {
  std::optional<Mode> mode;
  Ambient ambient = Ambient::kFull36;
  std::optional<double> tol;
  Format format = Format::kText;
  std::uint64_t seed = 20240611;
};

struct InvalidGenerator : Error {
  using Error::Error;
};

using Cells = std::vector<std::vector<std::string>>;

void print_grid(std::ostream& os, const Cells& cells, const std::string& indent = "  ") {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  for (const auto& row : cells) {
    std::string line = indent;
    for (std::size_t j = 0; j < row.size(); ++j) {
      line += row[j];
      if (j + 1 < row.size()) line += std::string(width[j] - row[j].size() + 2, ' ');
    }
    os << line << "\n";
  }
}

template <Scalar T>
Cells matrix_cells(const Matrix<T>& m) {
  Cells cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i].push_back(ScalarTraits<T>::to_string(m(i, j)));
  return cells;
}

Cells pattern_cells(const std::array<std::array<std::string, 6>, 6>& grid) {
  Cells cells;
  for (const auto& row : grid) cells.emplace_back(row.begin(), row.end());
  return cells;
}

template <Scalar T>
std::string vec_string(const Vec3<T>& v) {
  return "(" + ScalarTraits<T>::to_string(v[0]) + ", " + ScalarTraits<T>::to_string(v[1]) + ", " +
         ScalarTraits<T>::to_string(v[2]) + ")";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

// File mode governs; an explicit --mode must agree with it.
Mode resolve_file_mode(const RunConfig& cfg, const Json& doc) {
  const Mode file_mode = io::read_mode(doc);
  if (cfg.mode && *cfg.mode != file_mode) {
    throw ModeMismatch("--mode " + std::string(to_string(*cfg.mode)) + " conflicts with file mode " +
                       std::string(to_string(file_mode)));
  }
  return file_mode;
}

void check_tolerance(const RunConfig& cfg, Mode mode) {
  if (cfg.tol && mode == Mode::kExact) throw ParseError("--tol is only meaningful with --mode numeric");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw ParseError("--tol must be positive");
}

double tolerance(const RunConfig& cfg) { return cfg.tol.value_or(kDefaultRelTol); }

// directors

template <Scalar T>
int cmd_directors(const RunConfig& cfg, const Json& doc, std::ostream& out) {
  const Lattice<T> lat = Lattice<T>::from_generators(io::read_generators<T>(doc), tolerance(cfg));
  if (cfg.format == Format::kJson) {
    emit_json(out, Json{{"mode", std::string(to_string(ScalarTraits<T>::kMode))},
                        {"generators", io::vectors_json(lat.generators())},
                        {"directors", io::vectors_json(lat.directors())},
                        {"gram", io::matrix_json(lat.gram())}});
    return kOk;
  }
  out << "mode: " << to_string(ScalarTraits<T>::kMode) << "\n";
  out << "generators:\n";
  for (std::size_t i = 0; i < 3; ++i) out << "  a" << i + 1 << " = " << vec_string(lat.generators()[i]) << "\n";
  out << "directors:\n";
  for (std::size_t i = 0; i < 3; ++i) out << "  l" << i + 1 << " = " << vec_string(lat.directors()[i]) << "\n";
  out << "gram:\n";
  print_grid(out, matrix_cells(lat.gram()));
  return kOk;
}

// point-group

template <Scalar T>
int cmd_point_group(const RunConfig& cfg, const Json& doc, std::ostream& out) {
  const Lattice<T> lat = Lattice<T>::from_generators(io::read_generators<T>(doc), tolerance(cfg));
  const PointGroup<T> group = enumerate_point_group(lat);
  const bool closed = is_closed_group(group);
  if (cfg.format == Format::kJson) {
    Json elements = Json::array();
    for (std::size_t k = 0; k < group.order(); ++k) {
      const auto& e = group.elements[k];
      elements.push_back(Json{{"kind", e.is_rotation() ? "rotation" : "improper"},
                              {"matrix", io::matrix_json(e.matrix())},
                              {"generator_coords", group.integer_forms[k]}});
    }
    emit_json(out, Json{{"mode", std::string(to_string(ScalarTraits<T>::kMode))},
                        {"order", group.order()},
                        {"closed", closed},
                        {"elements", std::move(elements)}});
    return kOk;
  }
  out << "order: " << group.order() << "\n";
  out << "closed under composition and inversion: " << (closed ? "yes" : "no") << "\n";
  for (std::size_t k = 0; k < group.order(); ++k) {
    const auto& e = group.elements[k];
    out << "element " << k + 1 << " (" << (e.is_rotation() ? "rotation" : "improper") << "):\n";
    print_grid(out, matrix_cells(e.matrix()), "    ");
  }
  return kOk;
}

// constrain

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (!item.empty()) names.push_back(item);
  }
  return names;
}

template <Scalar T>
int cmd_constrain(const RunConfig& cfg, const Json& doc, const std::string& generator_list, std::ostream& out) {
  const Lattice<T> lat = Lattice<T>::from_generators(io::read_generators<T>(doc), tolerance(cfg));
  ConstrainedSpace<T> space = ConstrainedSpace<T>::full(cfg.ambient);
  std::string source;
  std::vector<std::string> names;
  if (generator_list.empty()) {
    const PointGroup<T> group = enumerate_point_group(lat);
    space = commutant<T>(group.elements, cfg.ambient);
    source = "full point group (order " + std::to_string(group.order()) + ")";
  } else {
    names = split_names(generator_list);
    std::vector<Isometry<T>> gens;
    for (const auto& name : names) {
      Isometry<T> iso = [&] {
        try {
          return preset_isometry<T>(name);
        } catch (const Error&) {
          throw InvalidGenerator("unknown generator '" + name + "'");
        }
      }();
      if (!is_lattice_symmetry(lat, iso)) throw InvalidGenerator("'" + name + "' is not a symmetry of the lattice");
      gens.push_back(std::move(iso));
    }
    space = commutant<T>(gens, cfg.ambient);
    source = join(names, ", ");
  }
  const SymmetryClass cls = classify(space);
  if (cfg.format == Format::kJson) {
    Json doc_out = io::space_json(space);
    doc_out["mode"] = std::string(to_string(ScalarTraits<T>::kMode));
    doc_out["generators"] = generator_list.empty() ? Json("point-group") : Json(names);
    doc_out["class"] = cls.name();
    emit_json(out, doc_out);
    return kOk;
  }
  out << "generators: " << source << "\n";
  out << "ambient: " << to_string(cfg.ambient) << "\n";
  out << "dimension: " << space.dimension() << "\n";
  out << "parameters: " << join(space.parameter_names(), ", ") << "\n";
  out << "pattern:\n";
  print_grid(out, pattern_cells(space.pattern()));
  out << "class: " << cls.name() << "\n";
  return kOk;
}

// classify

template <Scalar T>
int cmd_classify(const RunConfig& cfg, const Json& doc, std::ostream& out) {
  const double tol = tolerance(cfg);
  const ElasticityMatrix<T> c = io::read_elasticity<T>(doc);
  const Matrix<T>& m = c.matrix();
  std::vector<std::string> symmetries;
  for (const auto& p : isometry_presets())
    if (is_material_symmetry(m, preset_isometry<T>(p.name), tol)) symmetries.push_back(p.name);
  const auto cls = classify_matrix(m, tol);
  const std::string class_name = cls ? cls->name() : "Unrecognized";
  std::optional<bool> pd;
  if (m.is_symmetric(tol)) pd = is_positive_definite(m, tol);
  const double distance = isotropy_distance(m);
  if (cfg.format == Format::kJson) {
    emit_json(out, Json{{"mode", std::string(to_string(ScalarTraits<T>::kMode))},
                        {"symmetries", symmetries},
                        {"class", class_name},
                        {"positive_definite", pd ? Json(*pd) : Json(nullptr)},
                        {"isotropy_distance", distance}});
    return kOk;
  }
  out << "material symmetries among catalog isometries: " << join(symmetries, ", ") << "\n";
  out << "class: " << class_name << "\n";
  out << "positive definite: " << (pd ? (*pd ? "yes" : "no") : "n/a (not symmetric)") << "\n";
  out << "isotropy distance: " << ScalarTraits<double>::to_string(distance) << "\n";
  return kOk;
}

// hat

template <Scalar T>
int cmd_hat(const RunConfig& cfg, const std::string& name, std::ostream& out) {
  Isometry<T> iso = [&] {
    try {
      return preset_isometry<T>(name);
    } catch (const Error&) {
      throw InvalidGenerator("unknown isometry '" + name + "'");
    }
  }();
  const VoigtTransform<T> hat = induced_transform(iso);
  if (cfg.format == Format::kJson) {
    emit_json(out, Json{{"mode", std::string(to_string(ScalarTraits<T>::kMode))},
                        {"isometry", name},
                        {"matrix", io::matrix_json(iso.matrix())},
                        {"hat", io::matrix_json(hat)}});
    return kOk;
  }
  out << name << ":\n";
  print_grid(out, matrix_cells(iso.matrix()));
  out << "induced transform:\n";
  print_grid(out, matrix_cells(hat));
  return kOk;
}

// catalog

Json case_json(const NamedCase& c) {
  return Json{{"name", c.name},
              {"description", c.citation},
              {"expected_class", c.expected_class.name()},
              {"expected_dimension", Json{{"full36", c.expected_dim_full36}, {"sym21", c.expected_dim_sym21}}},
              {"expected_order", c.expected_order},
              {"lattice", io::lattice_json(c)}};
}

int cmd_catalog(const RunConfig& cfg, const std::string& name, std::ostream& out) {
  if (!name.empty()) {
    const auto& cases = list_cases();
    if (std::any_of(cases.begin(), cases.end(), [&](const auto& c) { return c.name == name; })) {
      emit_json(out, io::lattice_json(find_case(name)));
      return kOk;
    }
    const IsometryPreset& p = [&]() -> const IsometryPreset& {
      try {
        return find_isometry_preset(name);
      } catch (const Error&) {
        throw ParseError("no catalog entry named '" + name + "'");
      }
    }();
    if (cfg.format == Format::kJson) {
      emit_json(out, Json{{"name", p.name}, {"description", p.description}, {"matrix", io::matrix_json(p.matrix)}});
    } else {
      out << p.name << ": " << p.description << "\n";
      print_grid(out, matrix_cells(p.matrix));
    }
    return kOk;
  }
  if (cfg.format == Format::kJson) {
    Json cases = Json::array();
    for (const auto& c : list_cases()) cases.push_back(case_json(c));
    Json isos = Json::array();
    for (const auto& p : isometry_presets())
      isos.push_back(Json{{"name", p.name}, {"description", p.description}, {"matrix", io::matrix_json(p.matrix)}});
    emit_json(out, Json{{"cases", std::move(cases)}, {"isometries", std::move(isos)}});
    return kOk;
  }
  out << "lattices:\n";
  Cells rows{{"name", "expected class", "dim full36", "dim sym21", "order", "generators"}};
  for (const auto& c : list_cases()) {
    rows.push_back({c.name, c.expected_class.name(), std::to_string(c.expected_dim_full36),
                    std::to_string(c.expected_dim_sym21), std::to_string(c.expected_order),
                    vec_string(c.generators[0]) + " " + vec_string(c.generators[1]) + " " +
                        vec_string(c.generators[2])});
  }
  print_grid(out, rows);
  out << "isometries:\n";
  Cells iso_rows;
  for (const auto& p : isometry_presets()) iso_rows.push_back({p.name, p.description});
  print_grid(out, iso_rows);
  return kOk;
}

// verify-paper

struct Check {
  std::string name;
  std::string reference;
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<Check> reproduction_checks(const RunConfig& cfg) {
  using F = FieldElement;
  const Ambient amb = cfg.ambient;
  std::vector<Check> checks;

  for (const auto& r : verify_all<F>(amb)) {
    checks.push_back({"lattice " + r.name, r.citation,
                      r.expected_class + ", dim " + std::to_string(r.expected_dimension) + ", order " +
                          std::to_string(r.expected_order),
                      r.computed_class + ", dim " + std::to_string(r.computed_dimension) + ", order " +
                          std::to_string(r.computed_order),
                      r.pass});
  }

  for (const auto& t : displayed_transforms()) {
    const bool same = induced_transform(preset_isometry<F>(t.isometry)) == t.hat;
    checks.push_back({"induced transform of " + t.isometry, "displayed " + t.isometry + " hat matrix", "identical",
                      same ? "identical" : "differs", same});
  }

  auto space_check = [&](const std::string& name, const std::string& ref, const ConstrainedSpace<F>& got,
                         const std::string& pattern) {
    const ConstrainedSpace<F> want = displayed_space<F>(find_displayed_pattern(pattern), amb);
    const bool same = got.same_space(want);
    checks.push_back({name, ref, pattern + " (dim " + std::to_string(want.dimension()) + ")",
                      (same ? pattern : classify(got).name()) + " (dim " + std::to_string(got.dimension()) + ")",
                      same});
  };

  std::vector<Isometry<F>> chain{preset_isometry<F>("R1"), preset_isometry<F>("R2")};
  space_check("commutant of {R1, R2}", "eight-parameter form", commutant<F>(chain, amb), "C_8par");
  chain.push_back(preset_isometry<F>("Q_sum"));
  space_check("commutant of {R1, R2, Q_sum}", "two-constant form after adding Q_sum", commutant<F>(chain, amb),
              "C_iso");

  const Lattice<F> fcc = case_lattice<F>(find_case("fcc-rhomboidal"));
  const Lattice<F> cubic = case_lattice<F>(find_case("simple-cubic"));
  const Lattice<F> hex = case_lattice<F>(find_case("hexagonal-prism"));
  const bool q_sum_symmetric = is_lattice_symmetry(fcc, preset_isometry<F>("Q_sum"));
  checks.push_back({"Q_sum maps the FCC lattice onto itself", "cyclic permutation of the generators", "yes",
                    yes_no(q_sum_symmetric), q_sum_symmetric});
  space_check("FCC point-group commutant", "isotropic form C_iso", constrain_by_lattice(fcc, amb), "C_iso");
  space_check("simple cubic point-group commutant", "cubic form C_cubic", constrain_by_lattice(cubic, amb), "C_cubic");
  space_check("hexagonal prism point-group commutant", "transversely isotropic form C_trans",
              constrain_by_lattice(hex, amb), "C_trans");

  {
    const Isometry<F> probe = preset_isometry<F>("Q_pi3");
    const auto found = material_group_exceeds_lattice_group<F>(fcc, std::span(&probe, 1), amb);
    checks.push_back({"FCC witness Q_pi3 about l3", "material but not lattice symmetry", "returned",
                      found.empty() ? "not returned" : "returned", !found.empty()});
  }
  {
    const Lattice<double> hex_n = case_lattice<double>(find_case("hexagonal-prism"));
    const Isometry<double> probe = numeric_axis_rotation(2, 1.0);
    const ConstrainedSpace<double> space = constrain_by_lattice(hex_n, amb);
    double worst = 0.0;
    for (const auto& b : space.basis()) worst = std::max(worst, commutator_residual(b.matrix(), probe));
    const bool lattice_sym = is_lattice_symmetry(hex_n, probe);
    const bool pass = worst <= 1e-12 && !lattice_sym;
    checks.push_back({"hexagonal witness Q_theta, theta = 1 rad", "rotations of arbitrary angle about l3",
                      "residual <= 1e-12, not a lattice symmetry",
                      "residual " + ScalarTraits<double>::to_string(worst) +
                          (lattice_sym ? ", lattice symmetry" : ", not a lattice symmetry"),
                      pass});
  }
  {
    std::mt19937_64 rng(cfg.seed);
    const std::array<double, 2> ab{3.0, 1.0};
    const Matrix<double> c_iso = instantiate_pattern<double>(find_displayed_pattern("C_iso"), ab);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      worst = std::max(worst, commutator_residual(c_iso, random_rotation(rng)));
      worst = std::max(worst, commutator_residual(c_iso, random_reflection(rng)));
    }
    checks.push_back({"C_iso commutes with 200 random isometries", "any isometry is a material symmetry",
                      "residual <= 1e-12", "residual " + ScalarTraits<double>::to_string(worst), worst <= 1e-12});
  }
  return checks;
}

int cmd_verify_paper(const RunConfig& cfg, std::ostream& out) {
  const auto checks = reproduction_checks(cfg);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  if (cfg.format == Format::kJson) {
    Json rows = Json::array();
    for (const auto& c : checks) {
      rows.push_back(Json{{"check", c.name},
                          {"reference", c.reference},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass}});
    }
    emit_json(out, Json{{"mode", "exact"},
                        {"ambient", std::string(to_string(cfg.ambient))},
                        {"seed", cfg.seed},
                        {"pass", all},
                        {"checks", std::move(rows)}});
  } else {
    out << "reproduction report (exact mode, " << to_string(cfg.ambient) << ", seed " << cfg.seed << ")\n";
    Cells rows{{"status", "check", "reference", "expected", "computed"}};
    for (const auto& c : checks) rows.push_back({c.pass ? "PASS" : "FAIL", c.name, c.reference, c.expected, c.computed});
    print_grid(out, rows);
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
    out << (all ? "all checks passed" : std::to_string(failed) + " of " + std::to_string(checks.size()) +
                                             " checks failed")
        << "\n";
  }
  return all ? kOk : kVerificationFailed;
}

template <class F>
int dispatch(Mode mode, F&& f) {
  return mode == Mode::kExact ? f(FieldElement{}) : f(double{});
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Material symmetry of elasticity tensors induced by inclusion lattices", "lattisym"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string mode_text, ambient_text = "full36", format_text = "text";
  double tol_value = 0.0;
  std::uint64_t seed = RunConfig{}.seed;
  app.add_option("--mode", mode_text, "exact | numeric")->check(CLI::IsMember({"exact", "numeric"}));
  app.add_option("--ambient", ambient_text, "full36 | sym21")->check(CLI::IsMember({"full36", "sym21"}));
  auto* tol_opt = app.add_option("--tol", tol_value, "relative tolerance (numeric mode only)");
  app.add_option("--format", format_text, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for randomized probes");

  std::string file, name, generators;
  auto* directors = app.add_subcommand("directors", "generators, directors and Gram matrix of a lattice");
  directors->add_option("lattice", file, "Lattice JSON file")->required();
  auto* point_group = app.add_subcommand("point-group", "enumerate the lattice point group");
  point_group->add_option("lattice", file, "Lattice JSON file")->required();
  auto* constrain = app.add_subcommand("constrain", "elasticity pattern forced by lattice symmetries");
  constrain->add_option("lattice", file, "Lattice JSON file")->required();
  constrain->add_option("--generators", generators, "comma-separated catalog isometries, e.g. R1,R2");
  auto* classify_cmd = app.add_subcommand("classify", "symmetries, class and isotropy distance of a matrix");
  classify_cmd->add_option("matrix", file, "ElasticityMatrix JSON file")->required();
  auto* hat = app.add_subcommand("hat", "induced 6x6 transform of a catalog isometry");
  hat->add_option("isometry", name, "catalog isometry name")->required();
  auto* catalog = app.add_subcommand("catalog", "built-in lattices and isometries");
  catalog->add_option("name", name, "export one lattice as JSON or show one isometry");
  auto* verify = app.add_subcommand("verify-paper", "reproduction report of the reference derivations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    RunConfig cfg;
    if (!mode_text.empty()) cfg.mode = parse_mode(mode_text);
    cfg.ambient = parse_ambient(ambient_text);
    if (tol_opt->count() > 0) cfg.tol = tol_value;
    cfg.format = format_text == "json" ? Format::kJson : Format::kText;
    cfg.seed = seed;

    auto file_command = [&](auto body) {
      const Json doc = io::read_json_file(file);
      const Mode mode = resolve_file_mode(cfg, doc);
      check_tolerance(cfg, mode);
      return dispatch(mode, [&](auto tag) { return body(tag, doc); });
    };

    if (*directors) {
      return file_command([&]<class T>(T, const Json& doc) { return cmd_directors<T>(cfg, doc, out); });
    }
    if (*point_group) {
      return file_command([&]<class T>(T, const Json& doc) { return cmd_point_group<T>(cfg, doc, out); });
    }
    if (*constrain) {
      return file_command(
          [&]<class T>(T, const Json& doc) { return cmd_constrain<T>(cfg, doc, generators, out); });
    }
    if (*classify_cmd) {
      return file_command([&]<class T>(T, const Json& doc) { return cmd_classify<T>(cfg, doc, out); });
    }
    const Mode mode = cfg.mode.value_or(Mode::kExact);
    check_tolerance(cfg, mode);
    if (*hat) {
      return dispatch(mode, [&]<class T>(T) { return cmd_hat<T>(cfg, name, out); });
    }
    if (*catalog) return cmd_catalog(cfg, name, out);
    if (*verify) {
      if (mode != Mode::kExact) throw ParseError("verify-paper runs in exact mode only");
      return cmd_verify_paper(cfg, out);
    }
    return kParse;
  } catch (const InvalidGenerator& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidGenerator;
  } catch (const NormOutsideField& e) {
    err << "error: " << e.what() << "\nhint: rerun with --mode numeric\n";
    return kDegenerate;
  } catch (const DegenerateGenerators& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const ZeroMatrix& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ModeMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const AsymmetricInput& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const NotOrthogonal& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace lattisym::cli
