// Copyright 2026 The edgelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgelab/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "edgelab/error.hpp"

namespace edgelab {

namespace {

Json real_rows(const Matrix& m, bool imaginary) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(imaginary ? m(r, c).imag() : m(r, c).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Accepts nested rows or a flat row-major list.
std::vector<double> flatten(const Json& j, const char* field, std::size_t dim) {
  if (!j.is_array()) {
    throw Error(ErrorKind::MalformedInput, std::string("field '") + field + "' must be an array");
  }
  std::vector<double> out;
  out.reserve(dim * dim);
  auto take = [&](const Json& v) {
    if (!v.is_number()) {
      throw Error(ErrorKind::MalformedInput, std::string("non-numeric entry in '") + field + "'");
    }
    out.push_back(v.get<double>());
  };
  if (!j.empty() && j.front().is_array()) {
    if (j.size() != dim) {
      throw Error(ErrorKind::MalformedInput, std::string("'") + field + "' has wrong row count");
    }
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != dim) {
        throw Error(ErrorKind::MalformedInput, std::string("'") + field + "' has a ragged row");
      }
      for (const auto& v : row) take(v);
    }
  } else {
    for (const auto& v : j) take(v);
  }
  if (out.size() != dim * dim) {
    throw Error(ErrorKind::MalformedInput,
                std::string("'") + field + "' does not hold (m*n)^2 entries");
  }
  return out;
}

void write_value(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + "  " + Json(it.key()).dump() + ": ";
        write_value(it.value(), out, indent + 2);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write_value(j[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad + "  ";
        write_value(j[i], out, indent + 2);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

Json matrix_to_json(const BipartiteOperator& s) {
  Json j;
  j["m"] = s.m;
  j["n"] = s.n;
  j["re"] = real_rows(s.mat, false);
  j["im"] = real_rows(s.mat, true);
  return j;
}

BipartiteOperator matrix_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::MalformedInput, "matrix file must be a JSON object");
  for (const char* key : {"m", "n", "re", "im"}) {
    if (!j.contains(key)) {
      throw Error(ErrorKind::MalformedInput, std::string("matrix file lacks field '") + key + "'");
    }
  }
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer()) {
    throw Error(ErrorKind::MalformedInput, "fields 'm' and 'n' must be integers");
  }
  const int m = j["m"].get<int>();
  const int n = j["n"].get<int>();
  if (m <= 0 || n <= 0) throw Error(ErrorKind::MalformedInput, "local dimensions must be positive");
  const auto dim = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  const std::vector<double> re = flatten(j["re"], "re", dim);
  const std::vector<double> im = flatten(j["im"], "im", dim);
  Matrix mat(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const double a = re[r * dim + c];
      const double b = im[r * dim + c];
      if (!std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorKind::MalformedInput, "matrix entries must be finite");
      }
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(a, b);
    }
  }
  return BipartiteOperator(m, n, std::move(mat));
}

BipartiteOperator read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const BipartiteOperator& s) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::MalformedInput, "cannot write " + path);
  out << dump_json(matrix_to_json(s)) << '\n';
}

Json vector_to_json(const Vector& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const Json& j) {
  std::string out;
  write_value(j, out, 0);
  return out;
}

}  // namespace edgelab
