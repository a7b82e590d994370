#pragma once

#include <filesystem>
#include <string>

#include "orbitrace/io.hpp"

namespace orbitrace::report {

using json = nlohmann::json;

enum class Kind { Seifert, S1CW, T2CW };

/// Throws SchemaError for unknown names.
Kind parse_kind(const std::string& name);
std::string kind_name(Kind kind);
/// Optional top-level "kind" field, otherwise inferred from the document shape.
Kind detect_kind(const json& input);

struct Outcome {
  json report;
  bool agreement = false;
};

/// Runs every pipeline for one input. Schema problems raise SchemaError,
/// failed computations raise other orbitrace::Error types.
Outcome run(Kind kind, const json& input);

struct CrosscheckResult {
  json summary;
  int passed = 0;
  int failed = 0;
  int errors = 0;
};

/// Runs every *.json file in dir, sorted by name.
CrosscheckResult crosscheck(const std::filesystem::path& dir);

/// Indented plain-text rendering of a report.
std::string render_text(const json& report);

}  // namespace orbitrace::report
