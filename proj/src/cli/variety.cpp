#include "toric/cli/variety.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "toric/errors.hpp"

namespace toric::cli {

namespace {

using nlohmann::json;

struct Fixture {
  const char* name;
  std::size_t dim;
  std::vector<std::vector<long>> rays;
  std::vector<std::vector<std::size_t>> cones;
  std::vector<long> divisor;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"p1_o1", 1, {{1}, {-1}}, {{0}, {1}}, {0, 1}},
      {"p1_o2", 1, {{1}, {-1}}, {{0}, {1}}, {0, 2}},
      {"p2_o1", 2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}, {0, 0, 1}},
      {"p2_o2", 2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}, {0, 0, 2}},
      {"p1xp1_o11", 2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
       {0, 0, 1, 1}},
      {"hirzebruch1_fiber", 2, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
       {1, 0, 0, 0}},
      {"p2_antiample", 2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}, {0, 0, -1}},
  };
  return all;
}

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw SchemaError("variety " + path + ": " + msg);
}

Integer integer_at(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  schema(path, "expected an integer, got " + j.dump());
}

std::size_t index_at(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    schema(path, "expected a nonnegative integer index, got " + j.dump());
  return j.get<std::size_t>();
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  return j;
}

std::string cone_text(const std::vector<std::size_t>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + std::to_string(c[i]);
  return s + "]";
}

void validate_geometry(const VarietySpec& spec) {
  std::vector<LatticeVector> rays;
  for (const auto& r : spec.rays) rays.emplace_back(r);
  std::vector<Cone> cones;
  for (const auto& c : spec.max_cones) cones.push_back(Cone{c});
  const Fan fan(std::move(rays), std::move(cones));  // FanInvalid

  for (std::size_t k = 0; k < fan.maximal_cones().size(); ++k) {
    const Integer d = det(fan.generator_matrix(fan.maximal_cone(k)));
    if (d != 1 && d != -1)
      throw NotSmooth("variety /max_cones/" + std::to_string(k) + " " + cone_text(spec.max_cones[k]) +
                      " is not smooth: |det| = " + Integer(abs(d)).str());
  }
  for (const auto& fp : facet_pairs(fan)) {
    if (!fp.second)
      throw NotComplete("variety: facet " + cone_text(fp.facet) + " of /max_cones/" +
                        std::to_string(fp.first) + " " + cone_text(spec.max_cones[fp.first]) +
                        " lies in no other maximal cone");
  }
}

}  // namespace

VarietySpec parse_variety(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError("variety line " + std::to_string(line) + " column " + std::to_string(col) +
                      ": malformed JSON");
  }
  if (!doc.is_object()) schema("/", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    static const char* known[] = {"name", "dim", "rays", "max_cones", "divisor"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      schema("/" + key, "unknown key");
  }
  for (const char* key : {"name", "dim", "rays", "max_cones", "divisor"})
    if (!doc.contains(key)) schema("/" + std::string(key), "missing required key");

  VarietySpec spec;
  if (!doc["name"].is_string()) schema("/name", "expected a string");
  spec.name = doc["name"].get<std::string>();
  spec.dim = index_at(doc["dim"], "/dim");
  if (spec.dim == 0) schema("/dim", "must be positive");

  const auto& rays = array_at(doc["rays"], "/rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string path = "/rays/" + std::to_string(i);
    const auto& r = array_at(rays[i], path);
    if (r.size() != spec.dim)
      schema(path, "expected " + std::to_string(spec.dim) + " coordinates, got " + std::to_string(r.size()));
    std::vector<Integer> v;
    for (std::size_t k = 0; k < r.size(); ++k) v.push_back(integer_at(r[k], path + "/" + std::to_string(k)));
    if (std::all_of(v.begin(), v.end(), [](const Integer& c) { return c == 0; })) schema(path, "zero ray");
    spec.rays.push_back(std::move(v));
  }

  const auto& cones = array_at(doc["max_cones"], "/max_cones");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string path = "/max_cones/" + std::to_string(i);
    const auto& c = array_at(cones[i], path);
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const std::string p = path + "/" + std::to_string(k);
      const std::size_t v = index_at(c[k], p);
      if (v >= spec.rays.size()) schema(p, "ray index " + std::to_string(v) + " out of range");
      idx.push_back(v);
    }
    spec.max_cones.push_back(std::move(idx));
  }

  const auto& div = array_at(doc["divisor"], "/divisor");
  if (div.size() != spec.rays.size())
    schema("/divisor", "expected " + std::to_string(spec.rays.size()) + " coefficients, got " +
                           std::to_string(div.size()));
  for (std::size_t k = 0; k < div.size(); ++k)
    spec.divisor.push_back(integer_at(div[k], "/divisor/" + std::to_string(k)));

  validate_geometry(spec);
  return spec;
}

std::string serialize(const VarietySpec& spec) {
  auto ints = [](const auto& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      if constexpr (std::is_same_v<std::decay_t<decltype(v[i])>, Integer>) {
        s += v[i].str();
      } else {
        s += std::to_string(v[i]);
      }
    }
    return s + "]";
  };
  auto nested = [&](const auto& vv) {
    std::string s = "[";
    for (std::size_t i = 0; i < vv.size(); ++i) s += (i ? ", " : "") + ints(vv[i]);
    return s + "]";
  };
  std::ostringstream out;
  out << "{\n"
      << "  \"name\": " << json(spec.name).dump() << ",\n"
      << "  \"dim\": " << spec.dim << ",\n"
      << "  \"rays\": " << nested(spec.rays) << ",\n"
      << "  \"max_cones\": " << nested(spec.max_cones) << ",\n"
      << "  \"divisor\": " << ints(spec.divisor) << "\n"
      << "}\n";
  return out.str();
}

Variety build_variety(const VarietySpec& spec) {
  std::vector<LatticeVector> rays;
  for (const auto& r : spec.rays) rays.emplace_back(r);
  std::vector<Cone> cones;
  for (const auto& c : spec.max_cones) cones.push_back(Cone{c});
  Fan fan(std::move(rays), std::move(cones));
  TorusDivisor divisor(spec.divisor);
  SupportFunction phi = cartier_data(fan, divisor);
  SectionPolytope p = polytope(phi);
  return Variety{spec, std::move(fan), std::move(divisor), std::move(phi), std::move(p)};
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixtures()) out.emplace_back(f.name);
  return out;
}

std::string fixture_text(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (name != f.name) continue;
    VarietySpec s;
    s.name = f.name;
    s.dim = f.dim;
    for (const auto& r : f.rays) s.rays.emplace_back(r.begin(), r.end());
    s.max_cones = f.cones;
    s.divisor.assign(f.divisor.begin(), f.divisor.end());
    return serialize(s);
  }
  throw SchemaError("unknown fixture '" + std::string(name) + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VarietySpec load_variety(const std::string& name_or_path) {
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end())
    return parse_variety(fixture_text(name_or_path));
  return parse_variety(read_text_file(name_or_path));
}

}  // namespace toric::cli
