#pragma once

// Experiment descriptions (JSON) and their dispatch to the numerics.
//
//   {
//     "kind": "envelope" | "limsup" | "growth" | "chern" | "sections",
//     "seed": 7,
//     "grid": {"radius": 8, "cells": 64, "phases": 16},
//     "target": "psi" | "lambda"
//             | {"section": {"degree": 2, "terms": [[[2], 1], [[0], -1]]}}
//             | {"log_polynomial": {"terms": [...], "scale": 0.5}},
//     "scale": 2.0,                       // target becomes scale * H
//     "d_max": 1, "coeff_budget": 0, "adapted_directions": true,
//     "j_max": 64,
//     "sequence": {"kind": "vertex_monomials", "factor": 1}
//               | {"kind": "direction_net", "size": 32},
//     "output": "summary" | "points"
//   }
//
// Coefficients are numbers or [re, im] pairs.

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toric/cli/reports.hpp"
#include "toric/cli/variety.hpp"
#include "toric/lelong/grid.hpp"
#include "toric/lelong/kernels.hpp"

namespace toric::cli {

struct TargetSpec {
  enum class Kind { psi, lambda, section, log_polynomial };
  Kind kind = Kind::psi;
  unsigned degree = 1;  // section only
  std::vector<std::pair<std::vector<long>, std::complex<double>>> terms;
  double poly_scale = 1.0;  // log_polynomial only
  double scale = 1.0;       // multiplies H
};

struct SequenceSpec {
  enum class Kind { vertex_monomials, direction_net };
  Kind kind = Kind::vertex_monomials;
  double factor = 1.0;
  std::size_t size = 32;
};

struct ExperimentSpec {
  std::string kind;
  std::uint64_t seed = 0;
  lelong::GridSpec grid;  // dim comes from the variety
  TargetSpec target;
  unsigned d_max = 1;
  std::size_t coeff_budget = 0;
  bool adapted_directions = true;
  std::size_t j_max = 64;
  SequenceSpec sequence;
  bool points = false;
};

/// Throws SchemaError with the offending field path.
ExperimentSpec parse_experiment(std::string_view text);

CsvTable run_experiment(const Variety& v, const ExperimentSpec& e,
                        lelong::Exec exec = lelong::Exec::parallel);

}  // namespace toric::cli
