#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "renyi/matrix.hpp"
#include "renyi/quantum_entropy.hpp"

namespace renyi::io {

using Json = nlohmann::ordered_json;

// {"dim": n, "dims": [dA, dB] (optional), "matrix": [[[re, im], ...], ...]}
struct MatrixFile {
  std::size_t dim = 0;
  std::optional<BipartiteDims> dims;
  ComplexMatrix matrix;
};

// {"p": [p1, ..., pn]}
struct DistributionFile {
  std::vector<double> p;
};

inline constexpr std::size_t kDefaultMaxDim = 64;

// RENYI_MAX_DIM, or kDefaultMaxDim when unset or unparsable.
std::size_t max_dim_from_env();

Json to_json(const MatrixFile& file);
Json to_json(const DistributionFile& file);
MatrixFile matrix_file_from_json(const Json& j, std::size_t max_dim = kDefaultMaxDim);
DistributionFile distribution_file_from_json(const Json& j);

MatrixFile matrix_file(const HermitianMatrix& m, std::optional<BipartiteDims> dims = std::nullopt);
MatrixFile matrix_file(const DensityMatrix& rho);

// Compact JSON followed by a newline. Doubles use the shortest decimal that
// round-trips, so parse(serialize(x)) reproduces x exactly.
std::string serialize(const Json& j);
Json parse(const std::string& text, const std::string& field = "input");

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

MatrixFile read_matrix_file(const std::filesystem::path& path, std::size_t max_dim = kDefaultMaxDim);
DistributionFile read_distribution_file(const std::filesystem::path& path);

}  // namespace renyi::io
