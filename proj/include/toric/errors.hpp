#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TORIC_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& what) : Error(what) {}   \
  }

// exact_lattice
TORIC_DEFINE_ERROR(ZeroVector);
TORIC_DEFINE_ERROR(NotSquare);
TORIC_DEFINE_ERROR(NotUnimodular);
TORIC_DEFINE_ERROR(DimensionMismatch);

// fan_geometry
TORIC_DEFINE_ERROR(FanInvalid);

// divisor_support
TORIC_DEFINE_ERROR(OutsideSupport);
TORIC_DEFINE_ERROR(VerticesUnavailable);

// sections_graded_ring
TORIC_DEFINE_ERROR(Unbounded);
TORIC_DEFINE_ERROR(ConventionMismatch);
TORIC_DEFINE_ERROR(GenerationFailure);

// lelong_numerics
TORIC_DEFINE_ERROR(EmptyFamily);
TORIC_DEFINE_ERROR(InconclusiveGrowth);
TORIC_DEFINE_ERROR(InvalidSection);

// cli_reports
TORIC_DEFINE_ERROR(SchemaError);
TORIC_DEFINE_ERROR(NotSmooth);
TORIC_DEFINE_ERROR(NotComplete);

#undef TORIC_DEFINE_ERROR

}  // namespace toric
