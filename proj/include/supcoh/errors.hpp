#pragma once

#include <stdexcept>
#include <string>

namespace supcoh {

enum class errc {
  not_hermitian,
  not_unit_diagonal,
  not_positive_definite,
  convergence_failure,
  dimension_mismatch,
  gram_mismatch,
  zero_vector,
  overlap_out_of_range,
  overlap_out_of_golden_range,
  not_uniform_overlap,
  not_maximally_coherent,
  not_normalized,
  invalid_density,
  zero_eta,
  empty_range,
  bad_input,
  internal,
};

const char* errc_name(errc c);

/// True for errors caused by bad inputs (CLI exit 2), false for
/// numerical/internal failures (exit 1).
bool is_validation_error(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg);
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

}  // namespace supcoh
