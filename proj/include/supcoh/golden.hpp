#pragma once

#include "supcoh/lso.hpp"

namespace supcoh {

enum class GoldenSign { plus, minus };

/// Parameters of a maximal-superposition (golden) state for a uniform
/// overlap. plus requires s in (1/(1-d), 0]; minus is defined for d = 2
/// with s in [0, 1).
struct GoldenSpec {
  int d;
  double s;
  GoldenSign sign = GoldenSign::plus;
};

/// |Phi_d> = (1/sqrt(d)) sum_k e^{i theta_k} |l_k>. Phases default to
/// zero.
CoherentState maximally_coherent(int d, const RealVec& phases = RealVec());

/// Uniform-amplitude golden state (|c_0> + ... + |c_{d-1}>) /
/// sqrt(d (1 + (d-1) s)), maximal for s in (1/(1-d), 0].
SuperpositionState golden_plus(int d, double s);

/// (|c_0> - |c_1>) / sqrt(2 (1 - s)), maximal for d = 2 with s in [0, 1).
SuperpositionState golden_minus_2d(double s);

/// Backward map of a maximally coherent state; rejects inputs whose
/// squared moduli deviate from 1/d by more than 1e-10.
SuperpositionState golden_from_coherent(const LowdinMap& map,
                                        const CoherentState& phi);

/// Dispatch on the sign of a validated GoldenSpec.
SuperpositionState make_golden(const GoldenSpec& spec);

}  // namespace supcoh
