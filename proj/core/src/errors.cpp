#include "hochster/errors.hpp"

namespace hochster {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_vertex: return "InvalidVertex";
    case ErrorCode::invalid_complex: return "InvalidComplex";
    case ErrorCode::not_a_simplex: return "NotASimplex";
    case ErrorCode::not_subcomplex: return "NotSubcomplex";
    case ErrorCode::not_found: return "NotFound";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unsupported_size: return "UnsupportedSize";
    case ErrorCode::invalid_connected_sum: return "InvalidConnectedSum";
    case ErrorCode::not_a_sphere: return "NotASphere";
    case ErrorCode::not_a_pseudomanifold: return "NotAPseudomanifold";
    case ErrorCode::no_fundamental_class: return "NoFundamentalClass";
    case ErrorCode::no_top_degree: return "NoTopDegree";
    case ErrorCode::not_poincare_candidate: return "NotPoincareCandidate";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_homogeneous: return "NotHomogeneous";
    case ErrorCode::torsion_unsupported: return "TorsionUnsupported";
    case ErrorCode::no_solution: return "NoSolution";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::internal_inconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace hochster
