#pragma once

#include <memory>

#include "supcoh/gram.hpp"

namespace supcoh {

/// Pure state over the nonorthogonal basis {|c_i>}, normalized so that
/// psi^dag S psi = 1.
class SuperpositionState {
public:
  const Vec& coefficients() const { return coeffs_; }
  const GramMatrix& gram() const { return *gram_; }
  const std::shared_ptr<const GramMatrix>& gram_ptr() const { return gram_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  /// Scale factor applied at construction (1 if the input was already
  /// normalized).
  double applied_scale() const { return scale_; }

  /// Wraps coefficients that are already S-normalized within 1e-10,
  /// without rescaling them.
  static SuperpositionState from_normalized(
      Vec coeffs, std::shared_ptr<const GramMatrix> gram);

private:
  SuperpositionState(Vec coeffs, std::shared_ptr<const GramMatrix> gram,
                     double scale)
      : coeffs_(std::move(coeffs)), gram_(std::move(gram)), scale_(scale) {}
  friend SuperpositionState make_superposition(
      const Vec&, std::shared_ptr<const GramMatrix>);

  Vec coeffs_;
  std::shared_ptr<const GramMatrix> gram_;
  double scale_ = 1.0;
};

/// Pure state over the orthonormal (Lowdin) basis {|l_k>},
/// Euclidean-normalized.
class CoherentState {
public:
  const Vec& coefficients() const { return coeffs_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  double applied_scale() const { return scale_; }

  /// Wraps coefficients with Euclidean norm 1 within 1e-10, without
  /// rescaling them.
  static CoherentState from_normalized(Vec coeffs);

private:
  CoherentState(Vec coeffs, double scale)
      : coeffs_(std::move(coeffs)), scale_(scale) {}
  friend CoherentState make_coherent(const Vec&);

  Vec coeffs_;
  double scale_ = 1.0;
};

enum class BasisTag { nonorthogonal, lowdin };

/// Density-operator coefficients rho_ij in either basis. Hermitian;
/// unit trace for the lowdin tag, Tr[rho S] = 1 for the nonorthogonal
/// tag.
class DensityCoefficients {
public:
  const Mat& rho() const { return rho_; }
  BasisTag basis() const { return basis_; }
  int dim() const { return static_cast<int>(rho_.rows()); }

private:
  DensityCoefficients(Mat rho, BasisTag basis)
      : rho_(std::move(rho)), basis_(basis) {}
  friend DensityCoefficients make_density(
      const Mat&, BasisTag, const std::shared_ptr<const GramMatrix>&);

  Mat rho_;
  BasisTag basis_;
};

/// Normalizes the coefficients under S (rescales iff psi^dag S psi > 0;
/// the applied scale is recorded on the state).
SuperpositionState make_superposition(const Vec& coeffs,
                                      std::shared_ptr<const GramMatrix> gram);

/// Normalizes the coefficients to Euclidean norm 1.
CoherentState make_coherent(const Vec& coeffs);

/// Squared moduli |coef_i|^2 sorted non-increasing.
RealVec sorted_probs(const CoherentState& state);

/// a^dag S b. Both states must refer to the same Gram matrix.
Complex s_inner(const SuperpositionState& a, const SuperpositionState& b);

/// Validates Hermiticity and the trace condition for the tag. The Gram
/// matrix is required for the nonorthogonal tag (Tr[rho S] = 1).
DensityCoefficients make_density(
    const Mat& rho, BasisTag basis,
    const std::shared_ptr<const GramMatrix>& gram = nullptr);

DensityCoefficients pure_density(const SuperpositionState& psi);
DensityCoefficients pure_density(const CoherentState& bar);

}  // namespace supcoh
