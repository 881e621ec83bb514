#include "supcoh/lso.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace supcoh {

namespace {

void require_same_gram(const GramMatrix& a, const GramMatrix& b,
                       const char* op) {
  if (!same_gram(a, b)) {
    fail(errc::gram_mismatch,
         std::string(op) + ": state and map use different overlap matrices");
  }
}

void check_uniform_range(int d, double s, errc code) {
  if (d < 2) {
    fail(errc::bad_input, "need d >= 2, got " + std::to_string(d));
  }
  const double lower = 1.0 / (1.0 - d);
  if (!(s > lower && s < 1.0)) {
    std::ostringstream os;
    os << "s = " << s << " outside (" << lower << ", 1) for d = " << d;
    fail(code, os.str());
  }
}

}  // namespace

LowdinMap LowdinMap::build(std::shared_ptr<const GramMatrix> g) {
  LowdinMap map;
  map.gram = std::move(g);
  map.eigen = spectral_decompose(*map.gram);

  // Both roots from one decomposition, so they are exact inverses up to
  // rounding even in degenerate eigenspaces.
  const Mat& u = map.eigen.eigenvectors;
  RealVec root = map.eigen.eigenvalues.cwiseSqrt();
  map.sqrt_s = u * root.cast<Complex>().asDiagonal() * u.adjoint();
  map.inv_sqrt_s =
      u * root.cwiseInverse().cast<Complex>().asDiagonal() * u.adjoint();

  const int d = map.gram->dim();
  const double ortho_resid =
      (map.inv_sqrt_s * map.gram->entries() * map.inv_sqrt_s -
       Mat::Identity(d, d))
          .cwiseAbs()
          .maxCoeff();
  const double inverse_resid =
      (map.sqrt_s * map.inv_sqrt_s - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
  if (ortho_resid > kResidualTol || inverse_resid > kResidualTol) {
    std::ostringstream os;
    os << "root residuals " << ortho_resid << " / " << inverse_resid
       << " exceed " << kResidualTol;
    fail(errc::convergence_failure, os.str());
  }
  return map;
}

CoherentState forward(const LowdinMap& map, const SuperpositionState& psi) {
  require_same_gram(psi.gram(), *map.gram, "forward");
  // psi^dag S psi = ||S^{1/2} psi||^2, so the image is Euclidean-normalized.
  return CoherentState::from_normalized(map.sqrt_s * psi.coefficients());
}

SuperpositionState backward(const LowdinMap& map, const CoherentState& bar) {
  if (bar.dim() != map.dim()) {
    fail(errc::dimension_mismatch,
         "backward: state dimension " + std::to_string(bar.dim()) +
             " does not match overlap dimension " + std::to_string(map.dim()));
  }
  return SuperpositionState::from_normalized(
      map.inv_sqrt_s * bar.coefficients(), map.gram);
}

UniformClosedForm uniform_mu_kappa(int d, double s) {
  check_uniform_range(d, s, errc::overlap_out_of_range);
  const double inv_large = 1.0 / std::sqrt(1.0 + (d - 1) * s);
  const double inv_small = 1.0 / std::sqrt(1.0 - s);

  UniformClosedForm cf;
  cf.d = d;
  cf.s = s;
  cf.mu = (inv_large + (d - 1) * inv_small) / d;
  cf.kappa = (inv_large - inv_small) / d;
  if (d == 2) {
    cf.alpha = cf.mu;
    cf.beta = cf.kappa;
  }
  return cf;
}

CoherentState uniform_g(const SuperpositionState& x, int d, double s) {
  check_uniform_range(d, s, errc::overlap_out_of_range);
  if (x.dim() != d) {
    fail(errc::dimension_mismatch,
         "state dimension " + std::to_string(x.dim()) +
             " does not match d = " + std::to_string(d));
  }
  const auto [is_uniform, found_s] = uniform_overlap_of(x.gram());
  if (!is_uniform || found_s != s) {
    fail(errc::gram_mismatch,
         "state is not expressed against the uniform overlap (d, s)");
  }

  const auto cf = uniform_mu_kappa(d, s);
  const double root = std::sqrt((1.0 + (d - 1) * s) * (1.0 - s));
  const Complex total = x.coefficients().sum();

  Vec g(d);
  for (int i = 0; i < d; ++i) {
    const Complex xi = x.coefficients()(i);
    g(i) = root * ((cf.mu + (d - 2) * cf.kappa) * xi -
                   cf.kappa * (total - xi));
  }
  return CoherentState::from_normalized(std::move(g));
}

double lowdin_distance(const Mat& gram_entries, const Mat& t) {
  const int d = static_cast<int>(gram_entries.rows());
  if (t.rows() != d || t.cols() != d) {
    fail(errc::dimension_mismatch, "orthonormalization has the wrong shape");
  }
  return 2.0 * d - 2.0 * (gram_entries * t).trace().real();
}

Mat random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat ginibre(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      ginibre(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Mat> qr(ginibre);
  Mat q = qr.householderQ() * Mat::Identity(d, d);
  // Fix the R-diagonal phases so the distribution is Haar rather than
  // biased by the QR sign convention.
  const Vec diag = qr.matrixQR().diagonal();
  for (int j = 0; j < d; ++j) {
    const double a = std::abs(diag(j));
    q.col(j) *= (a > 0.0) ? diag(j) / a : Complex(1.0, 0.0);
  }
  return q;
}

MinimalityCheck verify_minimality(const GramMatrix& g, int samples,
                                  std::uint64_t seed) {
  if (samples < 1) {
    fail(errc::bad_input, "need at least one sample");
  }
  const Mat inv_sqrt = matrix_inv_sqrt(g);
  const double base = lowdin_distance(g.entries(), inv_sqrt);

  std::mt19937_64 rng(seed);
  double max_excess = -std::numeric_limits<double>::infinity();
  for (int n = 0; n < samples; ++n) {
    const Mat w = random_unitary(g.dim(), rng);
    const double alt = lowdin_distance(g.entries(), inv_sqrt * w);
    max_excess = std::max(max_excess, base - alt);
  }
  return MinimalityCheck{samples, seed, max_excess, max_excess <= 1e-10};
}

}  // namespace supcoh
