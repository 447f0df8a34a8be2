#include "renyi/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "renyi/error.hpp"

namespace renyi::io {

std::size_t max_dim_from_env() {
  const char* raw = std::getenv("RENYI_MAX_DIM");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxDim;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultMaxDim;
  return static_cast<std::size_t>(v);
}

Json to_json(const MatrixFile& file) {
  Json j;
  j["dim"] = file.dim;
  if (file.dims) j["dims"] = Json::array({file.dims->a, file.dims->b});
  Json rows = Json::array();
  for (std::size_t i = 0; i < file.dim; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < file.dim; ++k) {
      const Complex z = file.matrix(i, k);
      row.push_back(Json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

Json to_json(const DistributionFile& file) {
  Json j;
  j["p"] = file.p;
  return j;
}

namespace {

[[noreturn]] void bad(const std::string& message, const std::string& field) {
  throw Error(ErrorCode::ParseError, message, field);
}

double number(const Json& j, const std::string& field) {
  if (!j.is_number()) bad("expected a number", field);
  return j.get<double>();
}

std::size_t positive_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) bad("expected a positive integer", field);
  return j.get<std::size_t>();
}

}  // namespace

MatrixFile matrix_file_from_json(const Json& j, std::size_t max_dim) {
  if (!j.is_object()) bad("matrix file must be an object", "matrix");
  if (!j.contains("dim")) bad("missing key", "dim");
  if (!j.contains("matrix")) bad("missing key", "matrix");
  MatrixFile f;
  f.dim = positive_int(j.at("dim"), "dim");
  if (f.dim > max_dim)
    throw Error(ErrorCode::DimensionTooLarge,
                "dimension " + std::to_string(f.dim) + " exceeds the cap " + std::to_string(max_dim), "dim");
  if (j.contains("dims")) {
    const Json& d = j.at("dims");
    if (!d.is_array() || d.size() != 2) bad("dims must be [d_A, d_B]", "dims");
    f.dims = BipartiteDims{positive_int(d[0], "dims"), positive_int(d[1], "dims")};
    if (f.dims->a * f.dims->b != f.dim)
      throw Error(ErrorCode::DimensionMismatch, "d_A * d_B must equal dim", "dims");
  }
  const Json& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != f.dim) bad("matrix must have dim rows", "matrix");
  std::vector<Complex> entries;
  entries.reserve(f.dim * f.dim);
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != f.dim) bad("matrix rows must have dim entries", "matrix");
    for (const Json& z : row) {
      if (!z.is_array() || z.size() != 2) bad("entries must be [re, im] pairs", "matrix");
      entries.emplace_back(number(z[0], "matrix"), number(z[1], "matrix"));
    }
  }
  f.matrix = ComplexMatrix(f.dim, std::move(entries));
  return f;
}

DistributionFile distribution_file_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p")) bad("distribution file needs key p", "p");
  const Json& p = j.at("p");
  if (!p.is_array() || p.empty()) bad("p must be a non-empty array", "p");
  DistributionFile f;
  for (const Json& x : p) f.p.push_back(number(x, "p"));
  return f;
}

MatrixFile matrix_file(const HermitianMatrix& m, std::optional<BipartiteDims> dims) {
  return MatrixFile{m.dim(), dims, m.matrix()};
}

MatrixFile matrix_file(const DensityMatrix& rho) { return matrix_file(rho.matrix(), rho.dims()); }

std::string serialize(const Json& j) { return j.dump() + "\n"; }

Json parse(const std::string& text, const std::string& field) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what(), field);
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string(), path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string(), path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string(), path.string());
}

MatrixFile read_matrix_file(const std::filesystem::path& path, std::size_t max_dim) {
  return matrix_file_from_json(parse(read_text(path), path.string()), max_dim);
}

DistributionFile read_distribution_file(const std::filesystem::path& path) {
  return distribution_file_from_json(parse(read_text(path), path.string()));
}

}  // namespace renyi::io
