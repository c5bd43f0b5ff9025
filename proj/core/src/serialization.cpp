#include <fstream>

#include <json.hpp>

#include "bellforge/functional.hpp"
#include "bellforge/polyhedra.hpp"

namespace bellforge {
namespace {

using nlohmann::json;

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_file(const json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw FormatError(where + ": expected a number");
  return j.get<double>();
}

}  // namespace

void save_vertex_set(const VertexSet& set, const std::filesystem::path& path) {
  json verts = json::array();
  for (const UnitVec3& v : set.vertices()) {
    verts.push_back({v.x(), v.y(), v.z()});
  }
  write_file({{"schema", 1},
              {"name", set.name()},
              {"antipodal_reduced", set.antipodal_reduced()},
              {"vertices", std::move(verts)}},
             path);
}

VertexSet load_vertex_set(const std::filesystem::path& path) {
  const json doc = parse_file(path);
  if (!doc.contains("name") || !doc.contains("vertices")) {
    throw FormatError(path.string() + ": vertex set needs 'name' and 'vertices' fields");
  }
  std::vector<UnitVec3> verts;
  std::size_t i = 0;
  for (const json& row : doc.at("vertices")) {
    ++i;
    const std::string where = path.string() + ": vertex " + std::to_string(i);
    if (!row.is_array() || row.size() != 3) throw FormatError(where + ": expected [x, y, z]");
    const double x = number_at(row[0], where);
    const double y = number_at(row[1], where);
    const double z = number_at(row[2], where);
    try {
      verts.emplace_back(x, y, z);
    } catch (const InvalidInput&) {
      throw FormatError(where + ": not unit length");
    }
  }
  return VertexSet(doc.at("name").get<std::string>(), std::move(verts),
                   doc.value("antipodal_reduced", false));
}

void save_functional(const BellFunctional& f, const std::filesystem::path& path) {
  json coeffs = json::array();
  for (std::size_t r = 0; r < f.n_a(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < f.n_b(); ++c) row.push_back(f.coeffs(r, c));
    coeffs.push_back(std::move(row));
  }
  write_file({{"schema", 1},
              {"label", f.label},
              {"n_a", f.n_a()},
              {"n_b", f.n_b()},
              {"coeffs", std::move(coeffs)}},
             path);
}

BellFunctional load_functional(const std::filesystem::path& path) {
  const json doc = parse_file(path);
  for (const char* key : {"label", "n_a", "n_b", "coeffs"}) {
    if (!doc.contains(key)) {
      throw FormatError(path.string() + ": functional is missing field '" + key + "'");
    }
  }
  const auto n_a = doc.at("n_a").get<std::size_t>();
  const auto n_b = doc.at("n_b").get<std::size_t>();
  const json& coeffs = doc.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != n_a) {
    throw FormatError(path.string() + ": 'coeffs' must have n_a=" + std::to_string(n_a) + " rows");
  }
  Matrix m(n_a, n_b);
  for (std::size_t r = 0; r < n_a; ++r) {
    const json& row = coeffs[r];
    if (!row.is_array() || row.size() != n_b) {
      throw FormatError(path.string() + ": row " + std::to_string(r + 1) + " has " +
                        std::to_string(row.size()) + " entries, expected n_b=" + std::to_string(n_b));
    }
    for (std::size_t c = 0; c < n_b; ++c) {
      const double v = number_at(row[c], path.string() + ": coeff (" + std::to_string(r + 1) + "," +
                                             std::to_string(c + 1) + ")");
      if (!std::isfinite(v)) {
        throw FormatError(path.string() + ": coeff (" + std::to_string(r + 1) + "," +
                          std::to_string(c + 1) + ") is not finite");
      }
      m(r, c) = v;
    }
  }
  return {std::move(m), doc.at("label").get<std::string>()};
}

}  // namespace bellforge
