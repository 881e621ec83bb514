#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include <json.hpp>

#include "supcoh/gram.hpp"
#include "supcoh/measures.hpp"
#include "supcoh/states.hpp"

namespace supcoh {

/// Parses an overlap-matrix document. Accepts
///   {"kind": "matrix", "re": [[..]], "im": [[..]]}   (im optional)
///   {"kind": "uniform", "d": n, "s": x}
/// and validates the result as a Gram matrix.
std::shared_ptr<const GramMatrix> parse_gram(const nlohmann::json& j,
                                             double eps_pd = kDefaultEpsPd);

/// A state document bundles coefficients with a basis tag; states in the
/// nonorthogonal basis carry their overlap matrix inline.
struct LoadedState {
  BasisTag basis;
  Vec coefficients;
  std::shared_ptr<const GramMatrix> gram;  // null for lowdin-basis states
};

/// Parses {"basis": "nonorthogonal"|"lowdin",
///         "coefficients": {"re": [..], "im": [..]},   (im optional)
///         "overlap": <gram document>}                  (iff nonorthogonal)
/// Coefficients come back exactly as written; normalization policy is the
/// caller's (the CLI normalizes through the state factories and reports
/// the applied scale).
LoadedState parse_state(const nlohmann::json& j, double eps_pd = kDefaultEpsPd);

nlohmann::json gram_to_json(const GramMatrix& g);
nlohmann::json state_to_json(const SuperpositionState& psi);
nlohmann::json state_to_json(const CoherentState& bar);

/// Square complex matrix as {"re": [[..]], "im": [[..]]}; the "im" block
/// is dropped when every entry is exactly real.
nlohmann::json matrix_to_json(const Mat& m);

/// Fixed-significant-digit decimal rendering ("%.{digits}g") used by the
/// text formatter and the CSV writer so output is stable across platforms.
std::string format_real(double x, int digits);
std::string format_complex(Complex z, int digits);

/// Writes "s,m_l1_superposition,m_l1_coherent" plus one row per sweep
/// point, values rendered at nine significant digits.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

/// Reads a whole JSON document from a file, mapping parse failures and
/// missing files to bad_input.
nlohmann::json load_json_file(const std::string& path);

}  // namespace supcoh
