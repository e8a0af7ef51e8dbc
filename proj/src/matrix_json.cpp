#include "commnorm/matrix_json.hpp"

#include <cmath>
#include <fstream>

#include "commnorm/errors.hpp"

namespace commnorm {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw InputError("matrix JSON needs rows, cols and entries");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
    throw InputError("matrix rows/cols must be integers");
  }
  const auto rows = j["rows"].get<long long>();
  const auto cols = j["cols"].get<long long>();
  if (rows <= 0 || cols <= 0) throw InputError("matrix rows/cols must be positive");
  const auto& entries = j["entries"];
  if (!entries.is_array() || static_cast<long long>(entries.size()) != rows * cols) {
    throw InputError("matrix entries must hold rows*cols values");
  }
  ComplexMatrix m(rows, cols);
  for (long long k = 0; k < rows * cols; ++k) {
    const auto& e = entries[static_cast<std::size_t>(k)];
    double re = 0.0;
    double im = 0.0;
    if (e.is_number()) {
      re = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      re = e[0].get<double>();
      im = e[1].get<double>();
    } else {
      throw InputError("matrix entry " + std::to_string(k) + " is not [re, im]");
    }
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw InputError("matrix entry " + std::to_string(k) + " is not finite");
    }
    m(k / cols, k % cols) = Complex(re, im);
  }
  return m;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace commnorm
