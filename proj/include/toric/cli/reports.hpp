#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/cli/variety.hpp"
#include "toric/sections.hpp"

namespace toric::cli {

inline constexpr const char* kVersion = TORIC_VERSION;

struct CheckReport {
  bool smooth = false;
  bool complete = false;
  std::vector<LatticeVector> cartier;
  bool convex = false;
  bool strictly_convex = false;
  bool basepoint_free = false;
  bool ample = false;
  bool very_ample = false;
  bool very_ample_certified = false;
  std::optional<std::vector<LatticeVector>> vertices;
  int polytope_dim = -1;
  bool faces_simplicial = false;
  /// faces_simplicial == strictly_convex
  bool cross_check_agrees = false;
};

CheckReport run_check(const Variety& v);
std::string format_check(const Variety& v, const CheckReport& r);

struct SectionsRow {
  unsigned degree = 0;
  std::size_t count = 0;
  std::vector<LatticeVector> exponents;
};

/// Degree slices of the section ring for d = 0..d_max.
std::vector<SectionsRow> run_sections(const Variety& v, unsigned d_max);

/// Comma-separated table with a "# seed=... version=..." first line.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::string render(std::uint64_t seed) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Shortest round-trip decimal form; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double v);

CsvTable sections_table(const std::vector<SectionsRow>& rows, bool list_exponents);

}  // namespace toric::cli
