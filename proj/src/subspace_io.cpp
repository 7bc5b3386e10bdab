#include "korn/subspace_io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace korn {

namespace {

using nlohmann::json;

Matrix matrix_from_flat(const json& flat, MatrixShape shape,
                        const char* what) {
  if (!flat.is_array() ||
      static_cast<int>(flat.size()) != shape.rows * shape.cols)
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(shape.rows * shape.cols) +
                                " row-major floats");
  Matrix m(shape.rows, shape.cols);
  for (int i = 0; i < shape.rows; ++i)
    for (int j = 0; j < shape.cols; ++j)
      m(i, j) = flat[i * shape.cols + j].get<double>();
  return m;
}

MatrixShape shape_from(const json& doc) {
  if (!doc.contains("shape") || !doc["shape"].is_array() ||
      doc["shape"].size() != 2)
    throw std::invalid_argument("subspace document: missing shape [m, d]");
  return {doc["shape"][0].get<int>(), doc["shape"][1].get<int>()};
}

}  // namespace

SubspaceLoadResult load_subspace(std::istream& in) {
  json doc = json::parse(in);
  const MatrixShape shape = shape_from(doc);
  if (!doc.contains("basis") || !doc["basis"].is_array())
    throw std::invalid_argument("subspace document: missing basis");
  std::vector<Matrix> spanning;
  for (const json& flat : doc["basis"])
    spanning.push_back(matrix_from_flat(flat, shape, "basis entry"));
  int dropped = 0;
  MatrixSubspace sub = orthonormalize(spanning, shape, &dropped);
  return {std::move(sub), dropped};
}

SubspaceLoadResult load_subspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open subspace file: " + path);
  return load_subspace(in);
}

void save_subspace(std::ostream& out, const MatrixSubspace& subspace) {
  json doc;
  doc["shape"] = {subspace.shape().rows, subspace.shape().cols};
  json basis = json::array();
  for (const Matrix& b : subspace.basis()) {
    json flat = json::array();
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) flat.push_back(b(i, j));
    basis.push_back(std::move(flat));
  }
  doc["basis"] = std::move(basis);
  out << doc.dump(2) << "\n";
}

Laminate load_laminate_trace(std::istream& in) {
  json doc = json::parse(in);
  const MatrixShape shape = shape_from(doc);
  if (!doc.contains("root"))
    throw std::invalid_argument("laminate document: missing root");
  Laminate lam(matrix_from_flat(doc["root"], shape, "root"));
  for (const json& rec : doc.value("splits", json::array())) {
    lam = split(lam, rec.at("atom").get<int>(),
                matrix_from_flat(rec.at("B"), shape, "split B"),
                matrix_from_flat(rec.at("C"), shape, "split C"),
                rec.at("t").get<double>());
  }
  return lam;
}

Laminate load_laminate_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open laminate file: " + path);
  return load_laminate_trace(in);
}

}  // namespace korn
