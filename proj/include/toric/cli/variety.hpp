#pragma once

// Variety descriptions: a JSON document with keys name, dim, rays, max_cones
// and divisor, parsed into a validated smooth complete fan plus divisor.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/fan.hpp"

namespace toric::cli {

struct VarietySpec {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::vector<Integer>> rays;
  std::vector<std::vector<std::size_t>> max_cones;
  std::vector<Integer> divisor;

  friend bool operator==(const VarietySpec&, const VarietySpec&) = default;
};

/// Parses and validates. Throws SchemaError (with line/column or field path),
/// FanInvalid, NotSmooth or NotComplete.
VarietySpec parse_variety(std::string_view text);

/// Canonical JSON text; parse_variety(serialize(s)) == s.
std::string serialize(const VarietySpec& spec);

/// Everything the reports need, built from a validated spec.
struct Variety {
  VarietySpec spec;
  Fan fan;
  TorusDivisor divisor;
  SupportFunction phi;
  SectionPolytope polytope;
};

Variety build_variety(const VarietySpec& spec);

/// Names of the bundled fixtures, in a fixed order.
std::vector<std::string> fixture_names();
/// Canonical text of a bundled fixture; SchemaError for an unknown name.
std::string fixture_text(std::string_view name);

/// A bundled fixture name or a path to a variety file.
VarietySpec load_variety(const std::string& name_or_path);

/// Whole-file read; SchemaError if the file cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace toric::cli
