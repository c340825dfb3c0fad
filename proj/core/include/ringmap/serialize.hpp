#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ringmap/curve.hpp"
#include "ringmap/harmonic_map.hpp"
#include "ringmap/minimize.hpp"

namespace ringmap {

// Curve descriptor: { "modes": [[m, re, im], ...] } with the full band
// -M..M in ascending order. Angles are radians, lengths dimensionless.
std::string curve_to_json(const JordanCurve& curve, int indent = 2);
JordanCurve curve_from_json(std::string_view text);

// Harmonic map: { "rho": r, "a0": [re, im], "b0": [re, im],
//                 "a": [[k, re, im], ...], "b": [[k, re, im], ...] }
// with the full band k in [-N, N] \ {0}. Extra keys (e.g. "meta") are
// ignored on input.
std::string map_to_json(const HarmonicMap& map, int indent = 2);
HarmonicMap map_from_json(std::string_view text);

// Boundary reparameterization: { "psi": [...], "offset": s }.
std::string reparam_to_json(const BoundaryReparam& reparam, int indent = 2);
BoundaryReparam reparam_from_json(std::string_view text);

// Minimization problem document; unknown keys rejected, omitted optional
// keys take the defaults from ringmap/defaults.hpp. "label" is an optional
// benchmark identifier echoed into reports.
struct ProblemConfig {
  MinimizationProblem problem;
  std::string label;
  bool swap_boundaries = false;
};
std::string problem_to_json(const ProblemConfig& config, int indent = 2);
ProblemConfig problem_from_json(std::string_view text);

// File helpers; wrap failures as ErrorCode::io_failure.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64-bit hash as fixed-width hex; used for input provenance records.
std::string fnv1a_hex(std::string_view bytes);

} // namespace ringmap
