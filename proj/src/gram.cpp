#include "supcoh/gram.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace supcoh {

namespace {

// Largest |S_ij - conj(S_ji)| over all pairs.
double asymmetry(const Mat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::SelfAdjointEigenSolver<Mat> solve_hermitian(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  if (es.info() != Eigen::Success) {
    fail(errc::convergence_failure,
         "eigensolver did not converge for d=" + std::to_string(m.rows()));
  }
  return es;
}

// U f(lambda) U^dag for a validated Gram matrix. Working with matrix
// functions of the full spectrum keeps degenerate eigenspaces harmless:
// any unitary mixing within a degenerate block cancels in U f(L) U^dag.
Mat apply_spectral(const GramMatrix& g, double (*f)(double)) {
  const auto es = solve_hermitian(g.entries());
  RealVec fx = es.eigenvalues().unaryExpr(f);
  return es.eigenvectors() * fx.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

GramMatrix GramMatrix::validate(const Mat& raw, double eps_pd) {
  if (raw.rows() != raw.cols()) {
    fail(errc::bad_input, "overlap matrix must be square, got " +
                              std::to_string(raw.rows()) + "x" +
                              std::to_string(raw.cols()));
  }
  if (raw.rows() < 2) {
    fail(errc::bad_input,
         "overlap matrix needs dimension >= 2, got " +
             std::to_string(raw.rows()));
  }

  const double asym = asymmetry(raw);
  if (asym > kHermitianTol) {
    std::ostringstream os;
    os << "max |S_ij - conj(S_ji)| = " << asym << " exceeds " << kHermitianTol;
    fail(errc::not_hermitian, os.str());
  }
  // Asymmetry at rounding level is repaired; anything larger errored above.
  Mat s = 0.5 * (raw + raw.adjoint());

  for (int i = 0; i < s.rows(); ++i) {
    if (std::abs(s(i, i) - Complex(1.0, 0.0)) > kUnitDiagTol) {
      std::ostringstream os;
      os << "S_" << i << i << " = " << s(i, i).real();
      if (s(i, i).imag() != 0.0) os << (s(i, i).imag() < 0 ? "-" : "+")
                                    << std::abs(s(i, i).imag()) << "i";
      os << ", basis states must be normalized";
      fail(errc::not_unit_diagonal, os.str());
    }
    s(i, i) = Complex(1.0, 0.0);
  }

  const auto es = solve_hermitian(s);
  const double lambda_min = es.eigenvalues().minCoeff();
  if (lambda_min <= eps_pd) {
    std::ostringstream os;
    os << "smallest eigenvalue " << lambda_min << " <= " << eps_pd
       << "; basis is numerically linearly dependent";
    fail(errc::not_positive_definite, os.str());
  }
  return GramMatrix(std::move(s), lambda_min);
}

bool same_gram(const GramMatrix& a, const GramMatrix& b) {
  return a.dim() == b.dim() && a.entries() == b.entries();
}

UniformOverlap::UniformOverlap(int d_, double s_) : d(d_), s(s_) {
  if (d < 2) {
    fail(errc::bad_input,
         "uniform overlap needs d >= 2, got " + std::to_string(d));
  }
  const double lower = 1.0 / (1.0 - d);
  if (!(s > lower && s < 1.0)) {
    std::ostringstream os;
    os << "s = " << s << " outside (" << lower << ", 1) for d = " << d;
    fail(errc::overlap_out_of_range, os.str());
  }
}

Mat UniformOverlap::expand() const {
  Mat m = Mat::Constant(d, d, Complex(s, 0.0));
  m.diagonal().setConstant(Complex(1.0, 0.0));
  return m;
}

GramMatrix UniformOverlap::to_gram(double eps_pd) const {
  return GramMatrix::validate(expand(), eps_pd);
}

std::pair<bool, double> uniform_overlap_of(const GramMatrix& g, double tol) {
  const Mat& m = g.entries();
  const int d = g.dim();
  const Complex s0 = m(0, 1);
  if (std::abs(s0.imag()) > tol) return {false, 0.0};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      if (std::abs(m(i, j) - s0) > tol) return {false, 0.0};
    }
  }
  return {true, s0.real()};
}

EigenSystem spectral_decompose(const GramMatrix& g) {
  const auto es = solve_hermitian(g.entries());
  EigenSystem sys{es.eigenvalues(), es.eigenvectors()};
  const Mat recon = sys.eigenvectors *
                    sys.eigenvalues.cast<Complex>().asDiagonal() *
                    sys.eigenvectors.adjoint();
  const double resid = (recon - g.entries()).cwiseAbs().maxCoeff();
  if (resid > kResidualTol) {
    std::ostringstream os;
    os << "spectral reconstruction residual " << resid;
    fail(errc::convergence_failure, os.str());
  }
  return sys;
}

Mat matrix_sqrt(const GramMatrix& g) {
  return apply_spectral(g, [](double x) { return std::sqrt(x); });
}

Mat matrix_inv_sqrt(const GramMatrix& g) {
  return apply_spectral(g, [](double x) { return 1.0 / std::sqrt(x); });
}

}  // namespace supcoh
