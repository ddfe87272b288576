#include "twinbuild/error.hpp"

namespace tb {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRank: return "invalid-rank";
    case ErrorCode::InvalidWeights: return "invalid-weights";
    case ErrorCode::NotSpherical: return "not-spherical";
    case ErrorCode::UnsupportedBond: return "unsupported-bond";
    case ErrorCode::InvalidWord: return "invalid-word";
    case ErrorCode::DegenerateLattice: return "degenerate-lattice";
    case ErrorCode::SideMismatch: return "side-mismatch";
    case ErrorCode::RankError: return "rank-error";
    case ErrorCode::NotPanel: return "not-panel";
    case ErrorCode::TrivialSubspace: return "trivial-subspace";
    case ErrorCode::NotInImage: return "not-in-image";
    case ErrorCode::NotUnitary: return "not-unitary";
    case ErrorCode::NonProjector: return "non-projector";
    case ErrorCode::WeightMismatch: return "weight-mismatch";
    case ErrorCode::NotSpecial: return "not-special";
    case ErrorCode::NotOpposite: return "not-opposite";
    case ErrorCode::NotReduced: return "not-reduced";
    case ErrorCode::DistanceMismatch: return "distance-mismatch";
    case ErrorCode::SymbolicDegree: return "symbolic-degree";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace tb
