/// @file report.hpp
/// @brief JSON serialization for matrices, tensors, configurations, bracket
/// stacks, check reports, and run manifests.
///
/// Schemas (entries always use the exact scalar string format):
///   matrix  {"rows": r, "cols": c, "entries": ["...", ...]}   row-major
///   tensor  {"dims": [d1, d2, d3], "entries": [...]}          storage order
///   config  {"d":, "n":, "conserves":, "momenta": [[...], ...]}
///   stack   {"d":, "n":, "symmetry": {"S": "sym|skew", "T": "sym|skew"},
///            "S": matrix, "T": [matrix, ...]}
///   report  {"d":, "n":, "seed":, "checks": [{"name","rule","pass","witness"}]}

#pragma once

#include <cstdint>
#include <string>

#include "kinvar/brackets.hpp"
#include "kinvar/check.hpp"
#include "kinvar/kinematics.hpp"
#include "kinvar/tensor.hpp"

namespace kinvar {

inline constexpr const char* kVersion = "1.0.0";

std::string matrix_to_json(const QMat& m);
QMat matrix_from_json(const std::string& text);

std::string tensor_to_json(const Tensor3<Q>& t);
Tensor3<Q> tensor_from_json(const std::string& text);

std::string config_to_json(const KinematicConfiguration& cfg);
KinematicConfiguration config_from_json(const std::string& text);

std::string bracket_tensor_to_json(const BracketTensor& bt);
BracketTensor bracket_tensor_from_json(const std::string& text);

std::string report_to_json(const SuiteReport& report);

/// Provenance stamp for every CLI run. timing_ms stays 0 unless timing was
/// explicitly requested, keeping default output byte-deterministic.
struct RunManifest {
  std::string command;
  std::string version = kVersion;
  uint64_t seed = 0;
  int d = 0;
  int n = 0;
  std::string mode;
  long timing_ms = 0;
  int checks_total = 0;
  int checks_failed = 0;
};

std::string manifest_to_json(const RunManifest& m);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace kinvar
