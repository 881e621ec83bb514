#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "supcoh/errors.hpp"

namespace supcoh {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Below this smallest eigenvalue the basis is treated as numerically
/// linearly dependent.
inline constexpr double kDefaultEpsPd = 1e-9;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitDiagTol = 1e-12;
inline constexpr double kResidualTol = 1e-10;
inline constexpr double kStateNormTol = 1e-10;

/// Overlap matrix S of a normalized, linearly independent basis set,
/// S_ij = <c_i|c_j>. Hermitian, unit diagonal, positive definite.
class GramMatrix {
public:
  /// Checks all three invariants. Asymmetry up to 1e-12 is repaired by
  /// symmetrization; anything larger is an error.
  static GramMatrix validate(const Mat& raw, double eps_pd = kDefaultEpsPd);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Mat& entries() const { return entries_; }
  /// Smallest eigenvalue found during validation.
  double min_eigenvalue() const { return lambda_min_; }

private:
  GramMatrix(Mat entries, double lambda_min)
      : entries_(std::move(entries)), lambda_min_(lambda_min) {}

  Mat entries_;
  double lambda_min_;
};

/// Exact entrywise equality; cross-Gram operations are rejected rather
/// than reinterpreted.
bool same_gram(const GramMatrix& a, const GramMatrix& b);

/// All off-diagonal overlaps equal to a single real s in (1/(1-d), 1).
struct UniformOverlap {
  int d;
  double s;

  UniformOverlap(int d, double s);

  Mat expand() const;
  GramMatrix to_gram(double eps_pd = kDefaultEpsPd) const;
};

/// Detects whether a validated Gram matrix is a uniform overlap within
/// the given tolerance; returns the overlap value if so.
std::pair<bool, double> uniform_overlap_of(const GramMatrix& g,
                                           double tol = 1e-12);

struct EigenSystem {
  RealVec eigenvalues;  // ascending
  Mat eigenvectors;     // unitary, columns
};

/// Diagonalizes S = U diag(lambda) U^dag with reconstruction residual
/// at most 1e-10 in max-norm.
EigenSystem spectral_decompose(const GramMatrix& g);

/// S^{1/2} = U diag(sqrt(lambda)) U^dag. Hermitian by construction.
Mat matrix_sqrt(const GramMatrix& g);

/// S^{-1/2} = U diag(1/sqrt(lambda)) U^dag, so that
/// S^{-1/2} S S^{-1/2} = I within 1e-10.
Mat matrix_inv_sqrt(const GramMatrix& g);

}  // namespace supcoh
