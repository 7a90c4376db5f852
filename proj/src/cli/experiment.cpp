#include "toric/cli/experiment.hpp"

#include <algorithm>

#include "json.hpp"
#include "toric/errors.hpp"
#include "toric/lelong/lab.hpp"

namespace toric::cli {

namespace {

using nlohmann::json;
namespace ll = toric::lelong;

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw SchemaError("experiment " + path + ": " + msg);
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) schema(path, "expected a number, got " + j.dump());
  return j.get<double>();
}

std::uint64_t count_at(const json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
    schema(path, "expected a nonnegative integer, got " + j.dump());
  return j.get<std::uint64_t>();
}

std::vector<std::pair<std::vector<long>, std::complex<double>>> terms_at(const json& j,
                                                                         const std::string& path) {
  if (!j.is_array() || j.empty()) schema(path, "expected a nonempty array of [exponent, coefficient]");
  std::vector<std::pair<std::vector<long>, std::complex<double>>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    const auto& t = j[i];
    if (!t.is_array() || t.size() != 2 || !t[0].is_array())
      schema(p, "expected [exponent, coefficient]");
    std::vector<long> m;
    for (std::size_t k = 0; k < t[0].size(); ++k) {
      if (!t[0][k].is_number_integer()) schema(p + "/0/" + std::to_string(k), "expected an integer");
      m.push_back(t[0][k].get<long>());
    }
    std::complex<double> c;
    if (t[1].is_number()) {
      c = t[1].get<double>();
    } else if (t[1].is_array() && t[1].size() == 2) {
      c = {number_at(t[1][0], p + "/1/0"), number_at(t[1][1], p + "/1/1")};
    } else {
      schema(p + "/1", "expected a number or [re, im]");
    }
    out.emplace_back(std::move(m), c);
  }
  return out;
}

TargetSpec target_at(const json& j, const std::string& path) {
  TargetSpec t;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "psi") return t;
    if (s == "lambda") {
      t.kind = TargetSpec::Kind::lambda;
      return t;
    }
    schema(path, "unknown target '" + s + "'");
  }
  if (!j.is_object() || j.size() != 1) schema(path, "expected \"psi\", \"lambda\" or a one-key object");
  if (j.contains("section")) {
    const auto& s = j["section"];
    t.kind = TargetSpec::Kind::section;
    if (!s.is_object() || !s.contains("terms")) schema(path + "/section", "expected {degree, terms}");
    t.degree = s.contains("degree") ? static_cast<unsigned>(count_at(s["degree"], path + "/section/degree")) : 1;
    t.terms = terms_at(s["terms"], path + "/section/terms");
    return t;
  }
  if (j.contains("log_polynomial")) {
    const auto& s = j["log_polynomial"];
    t.kind = TargetSpec::Kind::log_polynomial;
    if (!s.is_object() || !s.contains("terms")) schema(path + "/log_polynomial", "expected {terms, scale}");
    t.terms = terms_at(s["terms"], path + "/log_polynomial/terms");
    if (s.contains("scale")) t.poly_scale = number_at(s["scale"], path + "/log_polynomial/scale");
    return t;
  }
  schema(path, "unknown target form " + j.dump());
}

ll::WeightFn build_target(const Variety& v, const TargetSpec& t) {
  ll::WeightFn w;
  const std::size_t n = v.spec.dim;
  auto lattice_terms = [&](const std::string& path) {
    std::vector<std::pair<LatticeVector, std::complex<double>>> out;
    for (const auto& [m, c] : t.terms) {
      if (m.size() != n) schema(path, "exponent length differs from the variety dimension");
      out.emplace_back(LatticeVector(std::vector<Integer>(m.begin(), m.end())), c);
    }
    return out;
  };
  switch (t.kind) {
    case TargetSpec::Kind::psi:
      w = ll::psi_weight(v.polytope);
      break;
    case TargetSpec::Kind::lambda:
      w = ll::lambda_weight(v.polytope);
      break;
    case TargetSpec::Kind::section:
      w = ll::section_weight(ll::PolySection(v.polytope, t.degree, lattice_terms("/target/section/terms")));
      break;
    case TargetSpec::Kind::log_polynomial:
      w = ll::log_polynomial_weight(ll::LaurentPolynomial(n, lattice_terms("/target/log_polynomial/terms")),
                                    t.poly_scale);
      break;
  }
  return t.scale == 1.0 ? w : ll::scaled_weight(std::move(w), t.scale);
}

std::vector<std::optional<ll::PolySection>> build_sequence(const Variety& v, const ExperimentSpec& e) {
  if (e.sequence.kind == SequenceSpec::Kind::vertex_monomials)
    return ll::vertex_monomial_sequence(v.polytope, e.j_max, e.sequence.factor);
  const auto net = ll::direction_net(v.polytope, e.sequence.size, e.seed);
  return ll::net_power_sequence(net, e.j_max);
}

std::vector<std::string> point_header(std::size_t n) {
  std::vector<std::string> h;
  for (std::size_t k = 0; k < n; ++k) h.push_back("x" + std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) h.push_back("theta" + std::to_string(k));
  return h;
}

CsvTable points_table(const ll::WeightGrid& grid, const std::vector<std::string>& columns) {
  auto header = point_header(grid.dim());
  header.insert(header.end(), columns.begin(), columns.end());
  CsvTable t(std::move(header));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto p = grid.point(i);
    std::vector<std::string> row;
    for (double x : p.x) row.push_back(format_double(x));
    for (double th : p.theta) row.push_back(format_double(th));
    for (const auto& c : columns) row.push_back(format_double(grid.column(c)[i]));
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace

ExperimentSpec parse_experiment(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("experiment: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("/", "expected an object");
  static const char* known[] = {"kind",  "seed",  "grid",    "target",   "scale",  "d_max",
                                "coeff_budget", "adapted_directions", "j_max", "sequence", "output"};
  for (const auto& [key, value] : doc.items())
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) schema("/" + key, "unknown key");

  ExperimentSpec e;
  if (!doc.contains("kind") || !doc["kind"].is_string()) schema("/kind", "missing or not a string");
  e.kind = doc["kind"].get<std::string>();
  static const char* kinds[] = {"envelope", "limsup", "growth", "chern", "sections"};
  if (std::find(std::begin(kinds), std::end(kinds), e.kind) == std::end(kinds))
    schema("/kind", "unknown experiment kind '" + e.kind + "'");

  if (doc.contains("seed")) e.seed = count_at(doc["seed"], "/seed");
  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    if (!g.is_object()) schema("/grid", "expected an object");
    for (const auto& [key, value] : g.items()) {
      if (key == "radius") {
        e.grid.radius = number_at(value, "/grid/radius");
      } else if (key == "cells") {
        e.grid.cells = count_at(value, "/grid/cells");
      } else if (key == "phases") {
        e.grid.phases = count_at(value, "/grid/phases");
      } else {
        schema("/grid/" + key, "unknown key");
      }
    }
    if (!(e.grid.radius > 0) || e.grid.cells == 0 || e.grid.phases == 0)
      schema("/grid", "radius, cells and phases must be positive");
  }
  if (doc.contains("target")) {
    e.target = target_at(doc["target"], "/target");
  } else if (e.kind == "growth") {
    schema("/target", "growth needs a target weight u");
  } else if (e.kind == "chern") {
    e.target.kind = TargetSpec::Kind::lambda;
  }
  if (doc.contains("scale")) {
    e.target.scale = number_at(doc["scale"], "/scale");
    if (!(e.target.scale > 0)) schema("/scale", "must be positive");
  }
  if (doc.contains("d_max")) e.d_max = static_cast<unsigned>(count_at(doc["d_max"], "/d_max"));
  if (e.kind == "envelope" && e.d_max == 0) schema("/d_max", "must be at least 1");
  if (doc.contains("coeff_budget")) e.coeff_budget = count_at(doc["coeff_budget"], "/coeff_budget");
  if (doc.contains("adapted_directions")) {
    if (!doc["adapted_directions"].is_boolean()) schema("/adapted_directions", "expected a boolean");
    e.adapted_directions = doc["adapted_directions"].get<bool>();
  }
  if (doc.contains("j_max")) e.j_max = count_at(doc["j_max"], "/j_max");
  if ((e.kind == "limsup" || e.kind == "chern") && e.j_max == 0) schema("/j_max", "must be at least 1");
  if (doc.contains("sequence")) {
    const auto& s = doc["sequence"];
    if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string())
      schema("/sequence", "expected an object with a string kind");
    const auto k = s["kind"].get<std::string>();
    if (k == "vertex_monomials") {
      e.sequence.kind = SequenceSpec::Kind::vertex_monomials;
      if (s.contains("factor")) e.sequence.factor = number_at(s["factor"], "/sequence/factor");
      if (!(e.sequence.factor > 0)) schema("/sequence/factor", "must be positive");
    } else if (k == "direction_net") {
      e.sequence.kind = SequenceSpec::Kind::direction_net;
      if (s.contains("size")) e.sequence.size = count_at(s["size"], "/sequence/size");
      if (e.sequence.size == 0) schema("/sequence/size", "must be positive");
    } else {
      schema("/sequence/kind", "unknown sequence '" + k + "'");
    }
  }
  if (doc.contains("output")) {
    const auto& o = doc["output"];
    if (!o.is_string() || (o != "summary" && o != "points"))
      schema("/output", "expected \"summary\" or \"points\"");
    e.points = o == "points";
  }
  return e;
}

CsvTable run_experiment(const Variety& v, const ExperimentSpec& e, ll::Exec exec) {
  ll::GridSpec gs = e.grid;
  gs.dim = v.spec.dim;

  if (e.kind == "sections") {
    return sections_table(run_sections(v, e.d_max), false);
  }

  const ll::WeightGrid grid(gs);
  if (e.kind == "envelope") {
    ll::EnvelopeOptions o{e.d_max, e.coeff_budget, e.seed, e.adapted_directions, exec};
    const auto r = ll::envelope_reconstruct(build_target(v, e.target), v.polytope, grid, o);
    if (e.points) return points_table(r.grid, {"log_target", "log_envelope"});
    std::size_t total = 0;
    for (auto c : r.candidates_per_degree) total += c;
    CsvTable t({"d_max", "candidates", "max_log_deviation"});
    t.add_row({std::to_string(e.d_max), std::to_string(total), format_double(r.max_log_deviation)});
    return t;
  }
  if (e.kind == "growth") {
    ll::GrowthOptions o;
    o.exec = exec;
    const auto r = ll::growth_check(build_target(v, e.target), v.polytope, grid, o);
    CsvTable t({"radius", "sup_u_minus_psi", "bounded", "c_estimate"});
    for (const auto& [rad, sup] : r.schedule)
      t.add_row({format_double(rad), format_double(sup), r.bounded ? "true" : "false",
                 format_double(r.c_estimate)});
    return t;
  }
  const auto seq = build_sequence(v, e);
  if (e.kind == "limsup") {
    const auto r = ll::limsup_weight(seq, e.j_max, grid, exec);
    if (e.points) return points_table(r.grid, {"log_limsup", "log_limsup_regularized"});
    CsvTable t({"J", "min_log_limsup", "max_log_limsup"});
    for (std::size_t j = 0; j < r.table.by_j.size(); ++j) {
      const auto& col = r.table.by_j[j];
      const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
      t.add_row({std::to_string(j + 1), format_double(*lo), format_double(*hi)});
    }
    return t;
  }
  // chern
  const auto rows = ll::chern_convergence(build_target(v, e.target), seq, e.j_max, grid, exec);
  CsvTable t({"J", "sup_deviation", "l1_deviation", "excluded"});
  for (const auto& r : rows)
    t.add_row({std::to_string(r.j), format_double(r.sup_deviation), format_double(r.l1_deviation),
               std::to_string(r.excluded)});
  return t;
}

}  // namespace toric::cli
