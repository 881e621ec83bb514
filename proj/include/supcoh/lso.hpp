#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "supcoh/states.hpp"

namespace supcoh {

/// Precomputed change of basis between the nonorthogonal basis and its
/// Lowdin orthonormal basis: |l_i> has c-basis coefficients given by
/// column i of S^{-1/2}. Coefficient vectors map as
/// psi_bar = S^{1/2} psi and psi = S^{-1/2} psi_bar.
struct LowdinMap {
  std::shared_ptr<const GramMatrix> gram;
  EigenSystem eigen;
  Mat sqrt_s;
  Mat inv_sqrt_s;

  static LowdinMap build(std::shared_ptr<const GramMatrix> g);
  int dim() const { return gram->dim(); }
};

/// Nonorthogonal -> Lowdin basis (LSO in the forward direction).
CoherentState forward(const LowdinMap& map, const SuperpositionState& psi);

/// Lowdin -> nonorthogonal basis (LSO in the opposite direction).
SuperpositionState backward(const LowdinMap& map, const CoherentState& bar);

/// Closed forms for a uniform overlap: S^{-1/2} has diagonal mu and
/// off-diagonal kappa. For d = 2 these are the usual alpha and beta.
struct UniformClosedForm {
  int d;
  double s;
  double mu;
  double kappa;
  std::optional<double> alpha;  // d == 2 only
  std::optional<double> beta;   // d == 2 only
};

UniformClosedForm uniform_mu_kappa(int d, double s);

/// Closed-form forward map for a uniform overlap,
/// g_i = sqrt(lambda_{d-1} lambda_0) [(mu + (d-2) kappa) x_i
///       - kappa sum_{j != i} x_j].
/// The state must be expressed against the uniform overlap (d, s).
CoherentState uniform_g(const SuperpositionState& x, int d, double s);

/// Total squared displacement sum_i ||c_i - t_i||^2 of the
/// orthonormalization whose columns hold the new basis coefficients
/// (t_i = sum_j T_ji c_j), evaluated from the Gram matrix alone:
/// D(T) = sum_i [2 - 2 Re((S T)_ii)] = 2d - 2 Re tr(S T).
double lowdin_distance(const Mat& gram_entries, const Mat& t);

/// Haar-random unitary via QR of a complex Ginibre matrix.
Mat random_unitary(int d, std::mt19937_64& rng);

struct MinimalityCheck {
  int samples;
  std::uint64_t seed;
  double max_excess;  // max over samples of D(S^{-1/2}) - D(W S^{-1/2})
  bool passed;        // max_excess <= 1e-10
};

/// Samples alternative orthonormalizations T = S^{-1/2} W for random
/// unitaries W (the full family with T^dag S T = I) and checks that the
/// symmetric choice W = I attains the minimum displacement.
MinimalityCheck verify_minimality(const GramMatrix& g, int samples,
                                  std::uint64_t seed);

}  // namespace supcoh
