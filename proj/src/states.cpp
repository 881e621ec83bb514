#include "supcoh/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace supcoh {

namespace {

void check_dim(int have, int want, const char* what) {
  if (have != want) {
    std::ostringstream os;
    os << what << " has dimension " << have << ", expected " << want;
    fail(errc::dimension_mismatch, os.str());
  }
}

double s_norm_sq(const Vec& coeffs, const GramMatrix& g) {
  return (coeffs.adjoint() * g.entries() * coeffs)(0, 0).real();
}

}  // namespace

SuperpositionState SuperpositionState::from_normalized(
    Vec coeffs, std::shared_ptr<const GramMatrix> gram) {
  check_dim(static_cast<int>(coeffs.size()), gram->dim(), "coefficient vector");
  const double n = s_norm_sq(coeffs, *gram);
  if (std::abs(n - 1.0) > kStateNormTol) {
    std::ostringstream os;
    os << "psi^dag S psi = " << n << ", expected 1 within " << kStateNormTol;
    fail(errc::not_normalized, os.str());
  }
  return SuperpositionState(std::move(coeffs), std::move(gram), 1.0);
}

CoherentState CoherentState::from_normalized(Vec coeffs) {
  const double n = coeffs.squaredNorm();
  if (std::abs(n - 1.0) > kStateNormTol) {
    std::ostringstream os;
    os << "squared norm = " << n << ", expected 1 within " << kStateNormTol;
    fail(errc::not_normalized, os.str());
  }
  return CoherentState(std::move(coeffs), 1.0);
}

SuperpositionState make_superposition(const Vec& coeffs,
                                      std::shared_ptr<const GramMatrix> gram) {
  check_dim(static_cast<int>(coeffs.size()), gram->dim(), "coefficient vector");
  const double n = s_norm_sq(coeffs, *gram);
  // S is positive definite, so psi^dag S psi = 0 only for psi = 0; tiny
  // positive values are amplified noise and rejected the same way.
  if (n <= 1e-24) {
    fail(errc::zero_vector, "cannot normalize a zero state");
  }
  const double scale = 1.0 / std::sqrt(n);
  return SuperpositionState(scale * coeffs, std::move(gram), scale);
}

CoherentState make_coherent(const Vec& coeffs) {
  const double n = coeffs.squaredNorm();
  if (n <= 1e-24) {
    fail(errc::zero_vector, "cannot normalize a zero state");
  }
  const double scale = 1.0 / std::sqrt(n);
  return CoherentState(scale * coeffs, scale);
}

RealVec sorted_probs(const CoherentState& state) {
  RealVec p = state.coefficients().cwiseAbs2();
  std::sort(p.begin(), p.end(), std::greater<double>());
  return p;
}

Complex s_inner(const SuperpositionState& a, const SuperpositionState& b) {
  if (!same_gram(a.gram(), b.gram())) {
    fail(errc::gram_mismatch,
         "states are expressed against different overlap matrices");
  }
  return (a.coefficients().adjoint() * a.gram().entries() *
          b.coefficients())(0, 0);
}

DensityCoefficients make_density(
    const Mat& rho, BasisTag basis,
    const std::shared_ptr<const GramMatrix>& gram) {
  if (rho.rows() != rho.cols()) {
    fail(errc::invalid_density, "density coefficients must be square");
  }
  const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    std::ostringstream os;
    os << "density not Hermitian, asymmetry " << asym;
    fail(errc::invalid_density, os.str());
  }
  Mat h = 0.5 * (rho + rho.adjoint());

  double tr = 0.0;
  if (basis == BasisTag::lowdin) {
    tr = h.trace().real();
  } else {
    if (!gram) {
      fail(errc::invalid_density,
           "nonorthogonal-basis density needs its overlap matrix for the "
           "trace condition Tr[rho S] = 1");
    }
    check_dim(static_cast<int>(h.rows()), gram->dim(), "density");
    tr = (h * gram->entries()).trace().real();
  }
  if (std::abs(tr - 1.0) > kStateNormTol) {
    std::ostringstream os;
    os << (basis == BasisTag::lowdin ? "Tr[rho] = " : "Tr[rho S] = ") << tr
       << ", expected 1 within " << kStateNormTol;
    fail(errc::invalid_density, os.str());
  }
  return DensityCoefficients(std::move(h), basis);
}

DensityCoefficients pure_density(const SuperpositionState& psi) {
  const Vec& c = psi.coefficients();
  return make_density(c * c.adjoint(), BasisTag::nonorthogonal,
                      psi.gram_ptr());
}

DensityCoefficients pure_density(const CoherentState& bar) {
  const Vec& c = bar.coefficients();
  return make_density(c * c.adjoint(), BasisTag::lowdin);
}

}  // namespace supcoh
