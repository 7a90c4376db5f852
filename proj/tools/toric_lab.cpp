// toric_lab: command-line front end.
//
// Exit codes: 0 success, 1 asserted verdict false (or the analysis could not
// reach a verdict), 2 input error.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "toric/cli/experiment.hpp"
#include "toric/cli/reports.hpp"
#include "toric/cli/variety.hpp"
#include "toric/errors.hpp"

namespace {

using namespace toric;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInput = 2;

int run_check_cmd(const std::string& file, bool assert_ample, bool assert_bpf) {
  const auto v = cli::build_variety(cli::load_variety(file));
  const auto r = cli::run_check(v);
  std::cout << cli::format_check(v, r);
  if (assert_ample && !r.ample) return kFalse;
  if (assert_bpf && !r.basepoint_free) return kFalse;
  return kOk;
}

int run_sections_cmd(const std::string& file, unsigned dmax, bool list) {
  const auto v = cli::build_variety(cli::load_variety(file));
  std::cout << cli::sections_table(cli::run_sections(v, dmax), list).render(0);
  return kOk;
}

int run_experiment_cmd(const std::string& variety, const std::string& experiment,
                       const std::string& out, int threads, bool serial) {
  const auto v = cli::build_variety(cli::load_variety(variety));
  const auto e = cli::parse_experiment(cli::read_text_file(experiment));
  if (threads > 0) omp_set_num_threads(threads);
  const auto table =
      cli::run_experiment(v, e, serial ? lelong::Exec::serial : lelong::Exec::parallel);
  const auto text = table.render(e.seed);
  if (out == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw SchemaError("cannot write '" + out + "'");
  f << text;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric divisor toolkit and weight laboratory"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);

  std::string file;
  bool assert_ample = false;
  bool assert_bpf = false;
  auto* check = app.add_subcommand("check", "Smoothness, completeness and positivity report");
  check->add_option("variety", file, "Variety file or bundled fixture name")->required();
  auto* aa = check->add_flag("--assert-ample", assert_ample, "Exit 1 unless the divisor is ample");
  check->add_flag("--assert-bpf", assert_bpf, "Exit 1 unless the divisor is basepoint-free")->excludes(aa);

  unsigned dmax = 0;
  bool list = false;
  auto* sections = app.add_subcommand("sections", "Section counts per degree");
  sections->add_option("variety", file, "Variety file or bundled fixture name")->required();
  sections->add_option("--dmax", dmax, "Largest degree")->required();
  sections->add_flag("--list-exponents", list, "Also list the exponents of each degree");

  std::string experiment_file;
  std::string out;
  int threads = 0;
  bool serial = false;
  auto* experiment = app.add_subcommand("experiment", "Run a numerical experiment and write a CSV table");
  experiment->add_option("variety", file, "Variety file or bundled fixture name")->required();
  experiment->add_option("experiment", experiment_file, "Experiment file")->required();
  experiment->add_option("--out", out, "Output CSV path, '-' for stdout")->required();
  experiment->add_option("--threads", threads, "OpenMP thread count (default: runtime choice)");
  experiment->add_flag("--serial", serial, "Use the serial reference kernels");

  std::string fixture_name;
  auto* fixtures = app.add_subcommand("fixtures", "Bundled varieties");
  fixtures->require_subcommand(1);
  auto* fx_list = fixtures->add_subcommand("list", "List bundled fixture names");
  auto* fx_show = fixtures->add_subcommand("show", "Print a bundled fixture");
  fx_show->add_option("name", fixture_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*check) return run_check_cmd(file, assert_ample, assert_bpf);
    if (*sections) return run_sections_cmd(file, dmax, list);
    if (*experiment) return run_experiment_cmd(file, experiment_file, out, threads, serial);
    if (*fx_list) {
      for (const auto& n : cli::fixture_names()) std::cout << n << "\n";
      return kOk;
    }
    if (*fx_show) {
      std::cout << cli::fixture_text(fixture_name);
      return kOk;
    }
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const FanInvalid& e) {
    std::cerr << "invalid fan: " << e.what() << "\n";
    return kInput;
  } catch (const NotSmooth& e) {
    std::cerr << "not smooth: " << e.what() << "\n";
    return kInput;
  } catch (const NotComplete& e) {
    std::cerr << "not complete: " << e.what() << "\n";
    return kInput;
  } catch (const InvalidSection& e) {
    std::cerr << "invalid section: " << e.what() << "\n";
    return kInput;
  } catch (const VerticesUnavailable& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "analysis failed: " << e.what() << "\n";
    return kFalse;
  }
  return kOk;
}
