#include "supcoh/errors.hpp"

namespace supcoh {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_hermitian: return "NotHermitian";
    case errc::not_unit_diagonal: return "NotUnitDiagonal";
    case errc::not_positive_definite: return "NotPositiveDefinite";
    case errc::convergence_failure: return "ConvergenceFailure";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::gram_mismatch: return "GramMismatch";
    case errc::zero_vector: return "ZeroVector";
    case errc::overlap_out_of_range: return "OverlapOutOfRange";
    case errc::overlap_out_of_golden_range: return "OverlapOutOfGoldenRange";
    case errc::not_uniform_overlap: return "NotUniformOverlap";
    case errc::not_maximally_coherent: return "NotMaximallyCoherent";
    case errc::not_normalized: return "NotNormalized";
    case errc::invalid_density: return "InvalidDensity";
    case errc::zero_eta: return "ZeroEta";
    case errc::empty_range: return "EmptyRange";
    case errc::bad_input: return "BadInput";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

bool is_validation_error(errc c) {
  switch (c) {
    case errc::convergence_failure:
    case errc::internal:
      return false;
    default:
      return true;
  }
}

Error::Error(errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code) {}

void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace supcoh
