#pragma once

#include <stdexcept>
#include <string>

namespace tb {

enum class ErrorCode {
  InvalidRank,
  InvalidWeights,
  NotSpherical,
  UnsupportedBond,
  InvalidWord,
  DegenerateLattice,
  SideMismatch,
  RankError,
  NotPanel,
  TrivialSubspace,
  NotInImage,
  NotUnitary,
  NonProjector,
  WeightMismatch,
  NotSpecial,
  NotOpposite,
  NotReduced,
  DistanceMismatch,
  SymbolicDegree,
  Parse,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tb
