#pragma once

#include "supcoh/lso.hpp"

namespace supcoh {

/// Probabilities within 1e-12 of an endpoint are snapped to it, so the
/// deterministic flag and the reported probability agree exactly.
inline constexpr double kProbSnapTol = 1e-12;

struct TransformReport {
  double probability;      // in [0, 1]
  bool deterministic;      // probability == 1
  CoherentState source_bar;
  CoherentState target_bar;
  int binding_index;       // tail index attaining the min; 0 when deterministic
};

/// True iff every tail sum of p dominates the corresponding tail sum of
/// q (within 1e-12), i.e. p is majorized by q -- the condition for
/// deterministic conversion p -> q. Vectors of different length are
/// zero-padded to the common dimension.
bool majorizes(const RealVec& p, const RealVec& q);

/// Optimal single-copy probability of converting src into tgt under
/// incoherent operations: the minimum over tail indices j >= 1 of
/// min{1, tail_src(j) / tail_tgt(j)} on the sorted squared moduli.
/// Zero target tails are non-binding.
TransformReport max_coherence_transform_prob(const CoherentState& src,
                                             const CoherentState& tgt);

/// Three-stage pipeline: map both states to the Lowdin basis, convert
/// there, map back. The probability equals that of the coherent-state
/// conversion.
TransformReport superposition_transform(const LowdinMap& map,
                                        const SuperpositionState& psi,
                                        const SuperpositionState& phi);

/// Probability of distilling the maximally coherent state from bar:
/// d times the smallest squared modulus.
double distill_coherence_prob(const CoherentState& bar);

/// Distillation pipeline targeting the golden state: requires a uniform
/// overlap with s <= 0. The report's target_bar is the maximally
/// coherent state; the distilled superposition state is its backward map.
TransformReport superposition_distill(const LowdinMap& map,
                                      const SuperpositionState& psi);

}  // namespace supcoh
