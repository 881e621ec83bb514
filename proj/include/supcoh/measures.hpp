#pragma once

#include <utility>
#include <vector>

#include "supcoh/states.hpp"

namespace supcoh {

/// One row of the l1 comparison sweep at overlap s.
struct SweepRow {
  double s;
  double m_l1_sup;  // l1 measure of the superposition state
  double m_l1_coh;  // l1 measure of its image in the Lowdin basis
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<double> skipped;  // s values near the normalization singularity
};

/// l1 measure: sum of absolute off-diagonal density coefficients,
/// in whichever basis the coefficients are tagged with.
double l1_measure(const DensityCoefficients& rho);

/// Qubit closed forms for a real S-normalized pair (psi0, psi1):
/// returns (2|psi0 psi1|, |2 psi0 psi1 + s (psi0^2 + psi1^2)|). The
/// second component equals the l1 measure of the forward-mapped state.
std::pair<double, double> l1_pair_qubit(double psi0, double psi1, double s);

/// Relative entropy of coherence S(rho_diag) - S(rho) in nats, for a
/// density in the Lowdin basis (Hermitian, unit trace, positive
/// semidefinite within 1e-10). In [0, log d].
double rel_entropy_coherence(const DensityCoefficients& rho);

/// Overlap s = -2 eta / (eta^2 + 1) at which the qubit state
/// x (eta, 1) maps to an incoherent state. |eta| = 1 hits the excluded
/// boundary s = -/+ 1.
double zero_coherence_overlap(double eta);

/// Sweeps s over [s_min, s_max] in the given step for the family
/// psi = x (eta, 1) with x^2 = 1/(eta^2 + 2 s eta + 1), emitting both
/// l1 values per row. Rows whose normalization denominator is <= 1e-9
/// are skipped and reported.
SweepResult sweep_l1(double eta, double s_min, double s_max, double step);

}  // namespace supcoh
