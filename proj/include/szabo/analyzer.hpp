#pragma once

#include "szabo/io.hpp"
#include "szabo/spectral.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace szabo {

/// Exit-status contract: clean, validation failure, schema error, and
/// quarantine-triggering runs are distinguishable by status alone.
enum class AnalysisStatus : int {
  Clean = 0,
  ValidationFailure = 2,
  SchemaError = 3,
  Quarantine = 4,
};

struct AnalysisOptions {
  int samples{100};
  std::uint64_t seed{0};
  double tol{1e-9};
  double euclidean_bound{10.0};
};

/// Deterministic per (input, options); no timestamps.
nlohmann::json analyze_tensor(const TensorFile& input, const AnalysisOptions& opts,
                              AnalysisStatus* status);

/// Random projected tensor file; scale 0 gives the zero tensor.
TensorFile generate_tensor(Signature sig, std::uint64_t seed, double scale);

/// Exact dimension table: per m the two symmetry-class dimensions and the
/// Szabo-map kernel dimension for every signature with p+q = m.
nlohmann::json dimension_table(int max_m);

std::string render_text_report(const nlohmann::json& report);

}  // namespace szabo
