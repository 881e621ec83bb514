#include "supcoh/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "supcoh/golden.hpp"

namespace supcoh {

namespace {

// Suffix sums accumulated right to left: tails[j] = sum_{i >= j} p[i].
RealVec tail_sums(const RealVec& p) {
  const int d = static_cast<int>(p.size());
  RealVec tails(d);
  double acc = 0.0;
  for (int j = d - 1; j >= 0; --j) {
    acc += p(j);
    tails(j) = acc;
  }
  return tails;
}

RealVec zero_pad(const RealVec& p, int d) {
  if (p.size() == d) return p;
  RealVec out = RealVec::Zero(d);
  out.head(p.size()) = p;
  return out;
}

void check_sorted_probs(const RealVec& p, const char* what) {
  for (int i = 0; i + 1 < p.size(); ++i) {
    if (p(i) < p(i + 1)) {
      fail(errc::bad_input,
           std::string(what) + " must be sorted non-increasing");
    }
  }
  if (p.size() > 0 && std::abs(p.sum() - 1.0) > kStateNormTol) {
    std::ostringstream os;
    os << what << " sums to " << p.sum() << ", expected 1";
    fail(errc::not_normalized, os.str());
  }
}

double snap_probability(double p) {
  if (std::abs(p - 1.0) <= kProbSnapTol) return 1.0;
  if (std::abs(p) <= kProbSnapTol) return 0.0;
  if (p < 0.0 || p > 1.0) {
    std::ostringstream os;
    os << "probability " << p << " escaped [0, 1] beyond the snap tolerance";
    fail(errc::internal, os.str());
  }
  return p;
}

}  // namespace

bool majorizes(const RealVec& p, const RealVec& q) {
  check_sorted_probs(p, "source probabilities");
  check_sorted_probs(q, "target probabilities");
  const int d = static_cast<int>(std::max(p.size(), q.size()));
  const RealVec tp = tail_sums(zero_pad(p, d));
  const RealVec tq = tail_sums(zero_pad(q, d));
  for (int j = 0; j < d; ++j) {
    if (tp(j) < tq(j) - 1e-12) return false;
  }
  return true;
}

TransformReport max_coherence_transform_prob(const CoherentState& src,
                                             const CoherentState& tgt) {
  const int d = static_cast<int>(std::max(src.dim(), tgt.dim()));
  const RealVec ps = zero_pad(sorted_probs(src), d);
  const RealVec pt = zero_pad(sorted_probs(tgt), d);
  const RealVec ts = tail_sums(ps);
  const RealVec tt = tail_sums(pt);

  // p = min_{j in [1, d-1]} min{1, tail_src(j) / tail_tgt(j)}; a zero
  // target tail cannot bind (the ratio tends to +infinity there).
  double p = 1.0;
  int binding = 0;
  for (int j = 1; j < d; ++j) {
    if (tt(j) <= 0.0) continue;
    const double ratio = ts(j) / tt(j);
    if (ratio < p) {
      p = ratio;
      binding = j;
    }
  }

  TransformReport report{snap_probability(p), false, src, tgt, binding};
  report.deterministic = report.probability == 1.0;
  if (report.deterministic) report.binding_index = 0;
  return report;
}

TransformReport superposition_transform(const LowdinMap& map,
                                        const SuperpositionState& psi,
                                        const SuperpositionState& phi) {
  if (!same_gram(psi.gram(), phi.gram()) ||
      !same_gram(psi.gram(), *map.gram)) {
    fail(errc::gram_mismatch,
         "transformation is defined between states over one overlap matrix");
  }
  return max_coherence_transform_prob(forward(map, psi), forward(map, phi));
}

double distill_coherence_prob(const CoherentState& bar) {
  const double min_prob = bar.coefficients().cwiseAbs2().minCoeff();
  return snap_probability(bar.dim() * min_prob);
}

TransformReport superposition_distill(const LowdinMap& map,
                                      const SuperpositionState& psi) {
  if (!same_gram(psi.gram(), *map.gram)) {
    fail(errc::gram_mismatch,
         "distillation state and map use different overlap matrices");
  }
  const auto [is_uniform, s] = uniform_overlap_of(*map.gram);
  if (!is_uniform) {
    fail(errc::not_uniform_overlap,
         "distillation to the golden state needs a uniform overlap");
  }
  if (s > 0.0) {
    std::ostringstream os;
    os << "s = " << s << "; the uniform-amplitude target is only maximal "
       << "for s <= 0";
    fail(errc::overlap_out_of_golden_range, os.str());
  }

  const int d = map.dim();
  CoherentState bar = forward(map, psi);
  const double p = distill_coherence_prob(bar);

  // The binding tail for a uniform target is the single smallest
  // probability, i.e. the last index.
  TransformReport report{p, p == 1.0, std::move(bar), maximally_coherent(d),
                         p == 1.0 ? 0 : d - 1};
  return report;
}

}  // namespace supcoh
