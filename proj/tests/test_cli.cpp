#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "toric/cli/experiment.hpp"
#include "toric/cli/reports.hpp"
#include "toric/cli/variety.hpp"
#include "toric/errors.hpp"

namespace toric::cli {
namespace {

std::string expect_throw_message(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  ADD_FAILURE() << "no exception";
  return {};
}

TEST(ParseVariety, Fixture) {
  const auto s = load_variety("p2_o1");
  EXPECT_EQ(s.name, "p2_o1");
  EXPECT_EQ(s.dim, 2u);
  EXPECT_EQ(s.rays.size(), 3u);
  EXPECT_EQ(s.divisor, (std::vector<Integer>{0, 0, 1}));
}

TEST(ParseVariety, RoundTripIsIdempotent) {
  for (const auto& name : fixture_names()) {
    const auto text = fixture_text(name);
    const auto once = serialize(parse_variety(text));
    EXPECT_EQ(once, text) << name;
    EXPECT_EQ(serialize(parse_variety(once)), once) << name;
  }
  const auto messy = R"({"divisor":[0,1],"max_cones":[[0],[1]],"rays":[[1],[-1]],"dim":1,"name":"x"})";
  const auto canon = serialize(parse_variety(messy));
  EXPECT_EQ(serialize(parse_variety(canon)), canon);
}

TEST(ParseVariety, BundledFilesMatchEmbeddedFixtures) {
  for (const auto& name : fixture_names()) {
    const auto path = std::filesystem::path(TORIC_SOURCE_DIR) / "fixtures" / (name + ".json");
    EXPECT_EQ(read_text_file(path.string()), fixture_text(name)) << name;
  }
}

TEST(ParseVariety, SchemaErrorsCarryLocation) {
  auto msg = expect_throw_message([] { parse_variety("{\n  \"name\": \"x\",\n  \"dim\": 1,\n  oops\n}"); });
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;

  msg = expect_throw_message([] {
    parse_variety(R"({"name":"x","dim":2,"rays":[[1,0],[0]],"max_cones":[[0,1]],"divisor":[0,0]})");
  });
  EXPECT_NE(msg.find("/rays/1"), std::string::npos) << msg;

  msg = expect_throw_message([] {
    parse_variety(R"({"name":"x","dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]],"divisor":[0,1.5]})");
  });
  EXPECT_NE(msg.find("/divisor/1"), std::string::npos) << msg;

  msg = expect_throw_message([] {
    parse_variety(R"({"name":"x","dim":1,"rays":[[1],[-1]],"max_cones":[[0],[7]],"divisor":[0,1]})");
  });
  EXPECT_NE(msg.find("/max_cones/1/0"), std::string::npos) << msg;

  EXPECT_THROW(parse_variety(R"({"name":"x","dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]]})"), SchemaError);
  EXPECT_THROW(parse_variety(R"({"name":"x","dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]],"divisor":[0,1],"extra":1})"),
               SchemaError);
  EXPECT_THROW(parse_variety(R"({"name":"x","dim":1,"rays":[[0],[-1]],"max_cones":[[0],[1]],"divisor":[0,1]})"),
               SchemaError);
  EXPECT_THROW(parse_variety("[]"), SchemaError);
}

TEST(ParseVariety, NotSmoothNamesCone) {
  const auto msg = expect_throw_message([] {
    parse_variety(
        R"({"name":"x","dim":2,"rays":[[1,0],[1,2],[-1,0],[0,-1]],"max_cones":[[0,1],[1,2],[2,3],[3,0]],"divisor":[0,0,0,0]})");
  });
  EXPECT_NE(msg.find("/max_cones/0"), std::string::npos) << msg;
  EXPECT_NE(msg.find("|det| = 2"), std::string::npos) << msg;
  EXPECT_THROW(
      parse_variety(
          R"({"name":"x","dim":2,"rays":[[1,0],[1,2],[-1,0],[0,-1]],"max_cones":[[0,1],[1,2],[2,3],[3,0]],"divisor":[0,0,0,0]})"),
      NotSmooth);
}

TEST(ParseVariety, NotCompleteNamesFacet) {
  const auto text = R"({"name":"x","dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2]],"divisor":[0,0,1]})";
  EXPECT_THROW(parse_variety(text), NotComplete);
  const auto msg = expect_throw_message([&] { parse_variety(text); });
  EXPECT_NE(msg.find("facet [0]"), std::string::npos) << msg;
}

TEST(ParseVariety, FanInvalidNamesPair) {
  const auto msg = expect_throw_message([] {
    parse_variety(
        R"({"name":"x","dim":2,"rays":[[1,0],[0,1],[1,1],[-1,0]],"max_cones":[[0,1],[2,3]],"divisor":[0,0,0,0]})");
  });
  EXPECT_NE(msg.find("cone{0,1}"), std::string::npos) << msg;
  EXPECT_NE(msg.find("cone{2,3}"), std::string::npos) << msg;
}

TEST(ParseVariety, UnknownFixture) {
  EXPECT_THROW(fixture_text("p3_o1"), SchemaError);
  EXPECT_THROW(load_variety("/nonexistent/file.json"), SchemaError);
}

TEST(RunCheck, P2) {
  const auto v = build_variety(load_variety("p2_o1"));
  const auto r = run_check(v);
  EXPECT_TRUE(r.smooth && r.complete && r.ample && r.very_ample && r.basepoint_free);
  EXPECT_TRUE(r.cross_check_agrees);
  ASSERT_TRUE(r.vertices.has_value());
  EXPECT_EQ(*r.vertices, (std::vector<LatticeVector>{{0, 0}, {0, 1}, {1, 0}}));
  const auto text = format_check(v, r);
  EXPECT_NE(text.find("ample: true"), std::string::npos);
  EXPECT_NE(text.find("agree"), std::string::npos);
}

TEST(RunCheck, AllFixturesCrossCheck) {
  for (const auto& name : fixture_names()) {
    const auto r = run_check(build_variety(load_variety(name)));
    EXPECT_TRUE(r.cross_check_agrees) << name;
    EXPECT_EQ(r.very_ample_certified, r.very_ample) << name;
  }
}

TEST(RunSections, P2Counts) {
  const auto rows = run_sections(build_variety(load_variety("p2_o1")), 3);
  std::vector<std::size_t> counts;
  for (const auto& r : rows) counts.push_back(r.count);
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 3, 6, 10}));
  const auto t = sections_table(rows, true).render(0);
  EXPECT_EQ(t.substr(0, t.find('\n')), std::string("# seed=0 version=") + kVersion);
  EXPECT_NE(t.find("1,3,0 0;0 1;1 0\n"), std::string::npos) << t;
}

TEST(Csv, DoubleFormatting) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(-0.0), "-0");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(std::stod(format_double(0.1 + 0.2)), 0.1 + 0.2);
  CsvTable t({"a", "b"});
  EXPECT_THROW(t.add_row({"1"}), DimensionMismatch);
}

TEST(ParseExperiment, Defaults) {
  const auto e = parse_experiment(R"({"kind": "envelope"})");
  EXPECT_EQ(e.kind, "envelope");
  EXPECT_EQ(e.grid.cells, 64u);
  EXPECT_EQ(e.grid.phases, 16u);
  EXPECT_DOUBLE_EQ(e.grid.radius, 8.0);
  EXPECT_EQ(e.d_max, 1u);
}

TEST(ParseExperiment, Targets) {
  auto e = parse_experiment(R"({"kind":"growth","target":{"section":{"degree":2,"terms":[[[2],1],[[0],[0,-1]]]}}})");
  EXPECT_EQ(e.target.kind, TargetSpec::Kind::section);
  EXPECT_EQ(e.target.degree, 2u);
  EXPECT_EQ(e.target.terms[1].second, std::complex<double>(0, -1));
  e = parse_experiment(R"({"kind":"envelope","target":"lambda","scale":2})");
  EXPECT_EQ(e.target.kind, TargetSpec::Kind::lambda);
  EXPECT_DOUBLE_EQ(e.target.scale, 2.0);
}

TEST(ParseExperiment, Errors) {
  EXPECT_THROW(parse_experiment(R"({"kind":"nope"})"), SchemaError);
  EXPECT_THROW(parse_experiment(R"({"kind":"growth"})"), SchemaError);
  EXPECT_THROW(parse_experiment(R"({"kind":"envelope","grid":{"cells":0}})"), SchemaError);
  EXPECT_THROW(parse_experiment(R"({"kind":"envelope","bogus":1})"), SchemaError);
  EXPECT_THROW(parse_experiment(R"({"kind":"envelope","target":"phi"})"), SchemaError);
  EXPECT_THROW(parse_experiment(R"({"kind":"envelope","scale":-1})"), SchemaError);
  EXPECT_THROW(parse_experiment(R"({"kind":"chern","sequence":{"kind":"direction_net","size":0}})"), SchemaError);
  EXPECT_THROW(parse_experiment("{"), SchemaError);
  const auto msg = expect_throw_message([] { parse_experiment(R"({"kind":"envelope","grid":{"radius":"8"}})"); });
  EXPECT_NE(msg.find("/grid/radius"), std::string::npos) << msg;
}

TEST(RunExperiment, EnvelopeLambda) {
  const auto v = build_variety(load_variety("p1_o1"));
  const auto t = run_experiment(v, parse_experiment(R"({"kind":"envelope","target":"lambda","d_max":1})"));
  ASSERT_EQ(t.rows().size(), 1u);
  EXPECT_LE(std::stod(t.rows()[0][2]), 1e-6);
}

TEST(RunExperiment, KindsProduceTables) {
  const auto v = build_variety(load_variety("p1_o1"));
  const auto sections = run_experiment(v, parse_experiment(R"({"kind":"sections","d_max":3})"));
  EXPECT_EQ(sections.rows().size(), 4u);
  const auto growth = run_experiment(
      v, parse_experiment(R"({"kind":"growth","target":{"log_polynomial":{"terms":[[[2],1],[[0],-1]],"scale":0.5}}})"));
  EXPECT_EQ(growth.rows().back()[2], "true");
  const auto limsup = run_experiment(
      v, parse_experiment(R"({"kind":"limsup","j_max":5,"grid":{"cells":8,"phases":2},"output":"points"})"));
  EXPECT_EQ(limsup.rows().size(), 9u * 2u);
  EXPECT_EQ(limsup.header().back(), "log_limsup_regularized");
  const auto chern = run_experiment(v, parse_experiment(R"({"kind":"chern","j_max":8,"grid":{"phases":1}})"));
  EXPECT_EQ(chern.rows().size(), 8u);
  EXPECT_THROW(run_experiment(build_variety(load_variety("p2_antiample")), parse_experiment(R"({"kind":"envelope"})")),
               VerticesUnavailable);
}

TEST(RunExperiment, ByteIdenticalReruns) {
  const auto v = build_variety(load_variety("p1_o2"));
  const auto e = parse_experiment(
      R"({"kind":"envelope","seed":77,"target":"lambda","d_max":2,"coeff_budget":12,"grid":{"cells":16,"phases":4},"output":"points"})");
  const auto a = run_experiment(v, e).render(e.seed);
  const auto b = run_experiment(v, e).render(e.seed);
  const auto c = run_experiment(v, e, lelong::Exec::serial).render(e.seed);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a.substr(0, a.find('\n')), std::string("# seed=77 version=") + kVersion);
}

// ---------------------------------------------------------------- binary

int run_tool(const std::string& args) {
  const std::string cmd = std::string(TORIC_LAB_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Tool, ExitCodes) {
  EXPECT_EQ(run_tool("check p2_o1 --assert-ample"), 0);
  EXPECT_EQ(run_tool("check hirzebruch1_fiber --assert-ample"), 1);
  EXPECT_EQ(run_tool("check hirzebruch1_fiber --assert-bpf"), 0);
  EXPECT_EQ(run_tool("check p2_antiample --assert-bpf"), 1);
  EXPECT_EQ(run_tool("check /nonexistent.json"), 2);
  EXPECT_EQ(run_tool("sections p2_o1 --dmax 3 --list-exponents"), 0);
  EXPECT_EQ(run_tool("sections p2_o1"), 2);
  EXPECT_EQ(run_tool("fixtures list"), 0);
  EXPECT_EQ(run_tool("bogus"), 2);

  const auto dir = std::filesystem::temp_directory_path() / "toric_lab_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.json";
  std::ofstream(bad) << R"({"name":"x","dim":2,"rays":[[1,0],[1,2],[-1,0],[0,-1]],"max_cones":[[0,1],[1,2],[2,3],[3,0]],"divisor":[0,0,0,0]})";
  EXPECT_EQ(run_tool("check " + bad.string()), 2);

  const auto exp = dir / "growth.json";
  std::ofstream(exp) << R"({"kind":"growth","target":{"log_polynomial":{"terms":[[[1],1]],"scale":2}}})";
  const auto out = dir / "out.csv";
  EXPECT_EQ(run_tool("experiment p1_o1 " + exp.string() + " --out " + out.string()), 0);
  EXPECT_TRUE(std::filesystem::exists(out));
  EXPECT_EQ(run_tool("experiment p2_antiample " + exp.string() + " --out " + out.string()), 2);
  std::filesystem::remove_all(dir);
}

TEST(Tool, InvalidFixturesAreInputErrors) {
  const std::string base = std::string(TORIC_SOURCE_DIR) + "/fixtures/invalid/";
  for (const char* f : {"not_smooth.json", "not_complete.json", "bad_index.json"})
    EXPECT_EQ(run_tool("check " + base + f), 2) << f;
  EXPECT_THROW(load_variety(base + "not_smooth.json"), NotSmooth);
  EXPECT_THROW(load_variety(base + "not_complete.json"), NotComplete);
  EXPECT_THROW(load_variety(base + "bad_index.json"), SchemaError);
}

}  // namespace
}  // namespace toric::cli
