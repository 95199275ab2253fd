#include "stiefel/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace stiefel::io {

namespace {

bool is_scalar(const json& v) { return !v.is_array() && !v.is_object(); }

void write_number(std::ostream& os, double x) {
  if (!std::isfinite(x)) {
    os << "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  os << buf;
}

void write(std::ostream& os, const json& v, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (v.type()) {
    case json::value_t::number_float:
      write_number(os, v.get<double>());
      return;
    case json::value_t::array: {
      if (v.empty()) {
        os << "[]";
        return;
      }
      const bool flat = std::all_of(v.begin(), v.end(), is_scalar) ||
                        (v.front().size() <= 2 &&
                         std::all_of(v.begin(), v.end(), [](const json& e) {
                           return e.is_array() && std::all_of(e.begin(), e.end(), is_scalar);
                         }));
      if (flat) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) os << ", ";
          write(os, v[i], indent, depth + 1);
        }
        os << ']';
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << pad;
        write(os, v[i], indent, depth + 1);
        os << (i + 1 < v.size() ? ",\n" : "\n");
      }
      os << close_pad << ']';
      return;
    }
    case json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      std::size_t i = 0;
      for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        os << pad << json(it.key()).dump() << ": ";
        write(os, it.value(), indent, depth + 1);
        os << (i + 1 < v.size() ? ",\n" : "\n");
      }
      os << close_pad << '}';
      return;
    }
    default:
      os << v.dump();
  }
}

template <typename T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidParameter(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidParameter(std::string("field \"") + key + "\" has the wrong type");
  }
}

Complex entry_from_json(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw InvalidParameter("matrix entries must be [re, im] number pairs");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace

std::string dump(const json& value, int indent) {
  std::ostringstream os;
  write(os, value, indent, 0);
  os << '\n';
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidParameter("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write \"" + path + "\"");
  out << text;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    throw InvalidParameter("matrix must have " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw InvalidParameter("matrix row must have " + std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c) m(i, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json code_to_json(const StiefelCode& code, const json& metadata) {
  json mats = json::array();
  for (const auto& p : code.points()) mats.push_back(matrix_to_json(p));
  json j = json::object();
  j["schema_version"] = kSchemaVersion;
  j["field"] = std::string(to_string(code.field()));
  j["d"] = code.d();
  j["r"] = code.r();
  j["n"] = code.n();
  j["matrices"] = std::move(mats);
  if (!metadata.empty()) j["metadata"] = metadata;
  return j;
}

CodeFile code_from_json(const json& j) {
  if (!j.is_object()) throw InvalidParameter("code file must be a JSON object");
  if (require<int>(j, "schema_version") != kSchemaVersion) {
    throw InvalidParameter("unsupported schema_version");
  }
  const Field field = parse_field(require<std::string>(j, "field"));
  const auto d = require<Index>(j, "d");
  const auto r = require<Index>(j, "r");
  const auto n = require<Index>(j, "n");
  if (r < 1 || d < r || n < 2) throw InvalidParameter("need d >= r >= 1 and n >= 2");
  const json& mats = j.contains("matrices") ? j.at("matrices") : json();
  if (!mats.is_array() || static_cast<Index>(mats.size()) != n) {
    throw InvalidParameter("\"matrices\" must hold exactly n matrices");
  }
  std::vector<Matrix> pts;
  for (const auto& m : mats) pts.push_back(matrix_from_json(m, d, r));
  json meta = j.contains("metadata") ? j.at("metadata") : json::object();
  return {StiefelCode(field, std::move(pts)), std::move(meta)};
}

json report_to_json(const CodeReport& rep) {
  json j = json::object();
  j["field"] = std::string(to_string(rep.field));
  j["d"] = rep.d;
  j["r"] = rep.r;
  j["n"] = rep.n;
  j["classification"] = std::string(to_string(rep.classification));
  j["min_distance"] = rep.min_distance;
  j["min_distance_sq"] = rep.min_distance_sq;
  j["argmin_pair"] = {rep.argmin_pair.first, rep.argmin_pair.second};
  j["max_distance_sq"] = rep.max_distance_sq;
  j["max_real_inner"] = rep.max_real_inner;
  j["stiefel_defect"] = rep.stiefel_defect;
  j["sum_norm"] = rep.sum_norm;
  j["equiangular"] = rep.equiangular;
  j["centered"] = rep.centered;
  j["simplex_bound"] = rep.simplex_bound;
  j["orthoplex_bound"] = rep.orthoplex_bound;
  j["simplex_gap"] = rep.simplex_gap;
  j["orthoplex_gap"] = rep.orthoplex_gap;
  j["tol"] = rep.tol;
  return j;
}

DesignFile design_from_json(const json& j) {
  const int v = require<int>(j, "v");
  const auto blocks = require<std::vector<std::vector<int>>>(j, "blocks");
  DesignFile out{make_bibd(v, blocks), std::nullopt};
  if (j.contains("resolution")) {
    out.resolution = Resolution{require<std::vector<std::vector<int>>>(j, "resolution")};
  }
  return out;
}

json design_to_json(const BIBD& design, const std::optional<Resolution>& res) {
  json j = json::object();
  j["v"] = design.v;
  j["blocks"] = design.blocks;
  if (res) j["resolution"] = res->classes;
  return j;
}

std::vector<Matrix> hr_family_from_json(const json& j) {
  const json& list = j.is_object() ? (j.contains("matrices") ? j.at("matrices") : json()) : j;
  if (!list.is_array() || list.empty()) {
    throw InvalidParameter("generator file must hold a nonempty list of matrices");
  }
  const auto d = static_cast<Index>(list.front().size());
  std::vector<Matrix> out;
  for (const auto& m : list) out.push_back(matrix_from_json(m, d, d));
  return out;
}

}  // namespace stiefel::io
