#include "toric/cli/reports.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "toric/errors.hpp"

namespace toric::cli {

CheckReport run_check(const Variety& v) {
  CheckReport r;
  r.smooth = is_smooth(v.fan);
  r.complete = is_complete(v.fan);
  r.cartier.assign(v.phi.cartier().begin(), v.phi.cartier().end());
  r.convex = is_convex(v.phi);
  r.strictly_convex = is_strictly_convex(v.phi);
  r.basepoint_free = is_basepoint_free(v.phi);
  r.ample = is_ample(v.phi);
  r.very_ample = is_very_ample(v.phi);
  r.very_ample_certified = very_ample_certified(v.phi);
  if (v.polytope.has_vertices())
    r.vertices.emplace(v.polytope.vertices().begin(), v.polytope.vertices().end());
  r.polytope_dim = v.polytope.dim();
  r.faces_simplicial = proper_faces_simplicial(lifted_cone(v.phi));
  r.cross_check_agrees = r.faces_simplicial == r.strictly_convex;
  return r;
}

std::string format_check(const Variety& v, const CheckReport& r) {
  auto yn = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream out;
  out << "variety: " << v.spec.name << " (dim " << v.spec.dim << ", " << v.spec.rays.size()
      << " rays, " << v.spec.max_cones.size() << " maximal cones)\n";
  out << "smooth: " << yn(r.smooth) << "\n";
  out << "complete: " << yn(r.complete) << "\n";
  out << "cartier data:\n";
  for (std::size_t k = 0; k < r.cartier.size(); ++k) {
    out << "  cone " << k << " [";
    const auto& c = v.spec.max_cones[k];
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << c[i];
    out << "]: m = " << r.cartier[k].str() << "\n";
  }
  out << "convex: " << yn(r.convex) << "\n";
  out << "strictly convex: " << yn(r.strictly_convex) << "\n";
  out << "basepoint-free: " << yn(r.basepoint_free) << "\n";
  out << "ample: " << yn(r.ample) << "\n";
  out << "very ample: " << yn(r.very_ample) << " (vertex-chart certificate: "
      << yn(r.very_ample_certified) << ")\n";
  if (r.vertices) {
    out << "polytope vertices:";
    for (const auto& m : *r.vertices) out << " " << m.str();
    out << "\n";
  } else {
    out << "polytope vertices: unavailable (not basepoint-free)\n";
  }
  out << "polytope dimension: " << r.polytope_dim << "\n";
  out << "lifted cone proper faces simplicial: " << yn(r.faces_simplicial)
      << " (cross-check with strict convexity: " << (r.cross_check_agrees ? "agree" : "DISAGREE")
      << ")\n";
  return out.str();
}

std::vector<SectionsRow> run_sections(const Variety& v, unsigned d_max) {
  const LiftedCone cone = lifted_cone(v.phi);
  std::vector<SectionsRow> rows;
  for (unsigned d = 0; d <= d_max; ++d) {
    SectionsRow row;
    row.degree = d;
    for (auto& g : graded_slice(cone, d)) row.exponents.push_back(std::move(g.exponent));
    row.count = row.exponents.size();
    rows.push_back(std::move(row));
  }
  return rows;
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size())
    throw DimensionMismatch("CsvTable: row has " + std::to_string(row.size()) + " fields, header " +
                            std::to_string(header_.size()));
  rows_.push_back(std::move(row));
}

std::string CsvTable::render(std::uint64_t seed) const {
  std::string out = "# seed=" + std::to_string(seed) + " version=" + kVersion + "\n";
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += fields[i];
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

CsvTable sections_table(const std::vector<SectionsRow>& rows, bool list_exponents) {
  std::vector<std::string> header = {"d", "count"};
  if (list_exponents) header.emplace_back("exponents");
  CsvTable t(std::move(header));
  for (const auto& r : rows) {
    std::vector<std::string> fields = {std::to_string(r.degree), std::to_string(r.count)};
    if (list_exponents) {
      // Coordinates separated by spaces, exponents by semicolons.
      std::string s;
      for (std::size_t k = 0; k < r.exponents.size(); ++k) {
        if (k) s += ';';
        const auto c = r.exponents[k].coords();
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + c[i].str();
      }
      fields.push_back(std::move(s));
    }
    t.add_row(std::move(fields));
  }
  return t;
}

}  // namespace toric::cli
