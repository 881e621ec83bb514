#include "supcoh/measures.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace supcoh {

namespace {

// -sum p ln p over the entries, treating p <= 0 as contributing nothing.
// Entries below -tol were rejected upstream; the clamp here only absorbs
// eigensolver noise around zero.
double entropy_nats(const RealVec& p) {
  double h = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) h -= p(i) * std::log(p(i));
  }
  return h;
}

}  // namespace

double l1_measure(const DensityCoefficients& rho) {
  const Mat& m = rho.rho();
  double sum = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i != j) sum += std::abs(m(i, j));
    }
  }
  return sum;
}

std::pair<double, double> l1_pair_qubit(double psi0, double psi1, double s) {
  if (!(s > -1.0 && s < 1.0)) {
    std::ostringstream os;
    os << "s = " << s << " outside (-1, 1)";
    fail(errc::overlap_out_of_range, os.str());
  }
  const double norm = psi0 * psi0 + psi1 * psi1 + 2.0 * s * psi0 * psi1;
  if (std::abs(norm - 1.0) > kStateNormTol) {
    std::ostringstream os;
    os << "psi^dag S psi = " << norm << ", expected 1 for overlap s = " << s;
    fail(errc::not_normalized, os.str());
  }
  const double cross = 2.0 * psi0 * psi1;
  return {std::abs(cross),
          std::abs(cross + s * (psi0 * psi0 + psi1 * psi1))};
}

double rel_entropy_coherence(const DensityCoefficients& rho) {
  if (rho.basis() != BasisTag::lowdin) {
    fail(errc::invalid_density,
         "relative entropy of coherence is defined for orthonormal-basis "
         "coefficients; map the state first");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.rho());
  if (es.info() != Eigen::Success) {
    fail(errc::convergence_failure, "density eigensolver did not converge");
  }
  const double lambda_min = es.eigenvalues().minCoeff();
  if (lambda_min < -1e-10) {
    std::ostringstream os;
    os << "density has eigenvalue " << lambda_min << " < 0";
    fail(errc::invalid_density, os.str());
  }

  const double h_diag = entropy_nats(rho.rho().diagonal().real());
  const double h_state = entropy_nats(es.eigenvalues());
  const double c = h_diag - h_state;
  if (c < -1e-10) {
    std::ostringstream os;
    os << "entropy difference " << c << " is negative beyond rounding";
    fail(errc::internal, os.str());
  }
  return std::max(c, 0.0);
}

double zero_coherence_overlap(double eta) {
  if (eta == 0.0) {
    fail(errc::zero_eta, "the zero-coherence locus needs eta != 0");
  }
  const double s = -2.0 * eta / (eta * eta + 1.0);
  if (!(s > -1.0 && s < 1.0)) {
    std::ostringstream os;
    os << "eta = " << eta << " lands on the excluded boundary s = " << s;
    fail(errc::overlap_out_of_range, os.str());
  }
  return s;
}

SweepResult sweep_l1(double eta, double s_min, double s_max, double step) {
  if (step <= 0.0) {
    fail(errc::bad_input, "step must be positive");
  }
  if (s_min > s_max) {
    std::ostringstream os;
    os << "empty range [" << s_min << ", " << s_max << "]";
    fail(errc::empty_range, os.str());
  }
  if (!(s_min > -1.0 && s_max < 1.0)) {
    std::ostringstream os;
    os << "range [" << s_min << ", " << s_max << "] not inside (-1, 1)";
    fail(errc::overlap_out_of_range, os.str());
  }

  SweepResult result;
  // k * step rather than repeated addition, so long sweeps do not drift.
  const long long n_steps =
      static_cast<long long>(std::floor((s_max - s_min) / step + 1e-9));
  for (long long k = 0; k <= n_steps; ++k) {
    const double s = s_min + k * step;
    const double denom = eta * eta + 2.0 * s * eta + 1.0;
    if (denom <= 1e-9) {
      result.skipped.push_back(s);
      continue;
    }
    const double x = 1.0 / std::sqrt(denom);
    const auto [m_sup, m_coh] = l1_pair_qubit(x * eta, x, s);
    result.rows.push_back(SweepRow{s, m_sup, m_coh});
  }
  return result;
}

}  // namespace supcoh
