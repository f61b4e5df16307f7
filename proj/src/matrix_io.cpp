#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "opineq/matcore.hpp"

namespace opineq::matcore {

namespace {

using nlohmann::json;

Matrix grid_from_json(const json& j, const char* key, int n) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("matrix JSON: missing array \"") + key + "\"");
  }
  const json& rows = j.at(key);
  if (static_cast<int>(rows.size()) != n) {
    throw ParseError(std::string("matrix JSON: \"") + key + "\" must have n rows");
  }
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError(std::string("matrix JSON: \"") + key +
                       "\" rows must each hold n numbers");
    }
    for (int k = 0; k < n; ++k) {
      const json& cell = row.at(k);
      if (!cell.is_number()) {
        throw ParseError(std::string("matrix JSON: \"") + key +
                         "\" entries must be numbers");
      }
      out(i, k) = Complex(cell.get<double>(), 0.0);
    }
  }
  return out;
}

ComplexMatrix from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON: top level must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw ParseError("matrix JSON: missing integer \"n\"");
  }
  const int n = j.at("n").get<int>();
  if (n < 1 || n > kMaxDim) {
    throw ParseError("matrix JSON: n must be in [1, 256]");
  }
  const Matrix re = grid_from_json(j, "re", n);
  const Matrix im = grid_from_json(j, "im", n);
  return ComplexMatrix(re + Complex(0, 1) * im);
}

}  // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
  return from_json(j);
}

ComplexMatrix read_matrix_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoFailure("read failed: " + path);
  return parse_matrix_json(buf.str());
}

std::string matrix_to_json(const ComplexMatrix& t) {
  const int n = t.dim();
  json re = json::array(), im = json::array();
  for (int i = 0; i < n; ++i) {
    json rrow = json::array(), irow = json::array();
    for (int k = 0; k < n; ++k) {
      rrow.push_back(t.raw()(i, k).real());
      irow.push_back(t.raw()(i, k).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  json j;
  j["n"] = n;
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump();
}

void write_matrix_json(const ComplexMatrix& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot open for write: " + path);
  out << matrix_to_json(t) << "\n";
  if (!out) throw IoFailure("write failed: " + path);
}

}  // namespace opineq::matcore
