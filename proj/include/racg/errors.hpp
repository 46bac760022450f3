#pragma once

#include <stdexcept>
#include <string>

namespace racg {

// How a failure should surface to a command-line caller.
enum class ErrorKind { BadInput, Numerical, Verification };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), kind_(kind), name_(std::move(name)) {}
  ErrorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

#define RACG_DEFINE_ERROR(Type, Kind)                                   \
  class Type : public Error {                                           \
   public:                                                              \
    explicit Type(const std::string& detail = "") : Error(ErrorKind::Kind, #Type, detail) {} \
  };

RACG_DEFINE_ERROR(DimensionMismatch, BadInput)
RACG_DEFINE_ERROR(DegenerateNormal, BadInput)
RACG_DEFINE_ERROR(NotUnitSpacelike, BadInput)
RACG_DEFINE_ERROR(NotUnitNormal, BadInput)
RACG_DEFINE_ERROR(CoincidentHyperplanes, BadInput)
RACG_DEFINE_ERROR(MixedTypePair, BadInput)
RACG_DEFINE_ERROR(IndexOutOfRange, BadInput)
RACG_DEFINE_ERROR(ParameterOutOfRange, BadInput)
RACG_DEFINE_ERROR(OverlappingConstraint, BadInput)
RACG_DEFINE_ERROR(NotRepresentable, BadInput)
RACG_DEFINE_ERROR(NotFormPreserving, BadInput)
RACG_DEFINE_ERROR(InvalidGroup, BadInput)
RACG_DEFINE_ERROR(PatternViolation, BadInput)
RACG_DEFINE_ERROR(BasisNotClosed, BadInput)
RACG_DEFINE_ERROR(BasisNotAdapted, BadInput)
RACG_DEFINE_ERROR(InvalidRepresentation, BadInput)
RACG_DEFINE_ERROR(AmbiguousNearThreshold, Numerical)
RACG_DEFINE_ERROR(IllConditioned, Numerical)
RACG_DEFINE_ERROR(NoConvergence, Numerical)
RACG_DEFINE_ERROR(SliceDegenerate, Numerical)
RACG_DEFINE_ERROR(SingularNormalization, Verification)

#undef RACG_DEFINE_ERROR

}  // namespace racg
