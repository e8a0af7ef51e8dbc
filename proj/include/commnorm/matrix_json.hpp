#pragma once

#include <json.hpp>

#include <filesystem>

#include "commnorm/schatten.hpp"

namespace commnorm {

// {"rows":d,"cols":d,"entries":[[re,im],...]} with entries in row-major order.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
// Validates the entry count and finiteness; throws InputError otherwise.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace commnorm
