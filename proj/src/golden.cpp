#include "supcoh/golden.hpp"

#include <cmath>
#include <memory>
#include <sstream>

namespace supcoh {

namespace {

void check_golden_range(int d, double s, bool plus) {
  if (d < 2) {
    fail(errc::bad_input, "need d >= 2, got " + std::to_string(d));
  }
  if (plus) {
    const double lower = 1.0 / (1.0 - d);
    if (!(s > lower && s <= 0.0)) {
      std::ostringstream os;
      os << "s = " << s << " outside (" << lower
         << ", 0]; the uniform-amplitude state is only maximal there";
      fail(errc::overlap_out_of_golden_range, os.str());
    }
  } else {
    if (!(s >= 0.0 && s < 1.0)) {
      std::ostringstream os;
      os << "s = " << s << " outside [0, 1) for the sign-alternating state";
      fail(errc::overlap_out_of_golden_range, os.str());
    }
  }
}

}  // namespace

CoherentState maximally_coherent(int d, const RealVec& phases) {
  if (d < 2) {
    fail(errc::bad_input, "need d >= 2, got " + std::to_string(d));
  }
  if (phases.size() != 0 && phases.size() != d) {
    fail(errc::dimension_mismatch,
         "expected " + std::to_string(d) + " phases, got " +
             std::to_string(phases.size()));
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  Vec coeffs(d);
  for (int k = 0; k < d; ++k) {
    const double theta = phases.size() ? phases(k) : 0.0;
    coeffs(k) = amp * Complex(std::cos(theta), std::sin(theta));
  }
  return CoherentState::from_normalized(std::move(coeffs));
}

SuperpositionState golden_plus(int d, double s) {
  check_golden_range(d, s, /*plus=*/true);
  auto gram = std::make_shared<const GramMatrix>(UniformOverlap(d, s).to_gram());
  const double amp = 1.0 / std::sqrt(d * (1.0 + (d - 1) * s));
  return SuperpositionState::from_normalized(Vec::Constant(d, Complex(amp, 0.0)),
                                             std::move(gram));
}

SuperpositionState golden_minus_2d(double s) {
  check_golden_range(2, s, /*plus=*/false);
  auto gram = std::make_shared<const GramMatrix>(UniformOverlap(2, s).to_gram());
  const double amp = 1.0 / std::sqrt(2.0 * (1.0 - s));
  Vec coeffs(2);
  coeffs << Complex(amp, 0.0), Complex(-amp, 0.0);
  return SuperpositionState::from_normalized(std::move(coeffs),
                                             std::move(gram));
}

SuperpositionState golden_from_coherent(const LowdinMap& map,
                                        const CoherentState& phi) {
  if (phi.dim() != map.dim()) {
    fail(errc::dimension_mismatch,
         "state dimension " + std::to_string(phi.dim()) +
             " does not match overlap dimension " + std::to_string(map.dim()));
  }
  const double want = 1.0 / map.dim();
  for (int k = 0; k < phi.dim(); ++k) {
    const double got = std::norm(phi.coefficients()(k));
    if (std::abs(got - want) > 1e-10) {
      std::ostringstream os;
      os << "|coefficient " << k << "|^2 = " << got << ", expected 1/d = "
         << want;
      fail(errc::not_maximally_coherent, os.str());
    }
  }
  return backward(map, phi);
}

SuperpositionState make_golden(const GoldenSpec& spec) {
  if (spec.sign == GoldenSign::plus) {
    return golden_plus(spec.d, spec.s);
  }
  if (spec.d != 2) {
    fail(errc::bad_input,
         "the sign-alternating golden state is a two-dimensional "
         "construction, got d = " + std::to_string(spec.d));
  }
  return golden_minus_2d(spec.s);
}

}  // namespace supcoh
