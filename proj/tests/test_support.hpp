#pragma once

// Seeded generators shared by the test binaries. Everything here is
// deterministic given the RNG state handed in.

#include <memory>
#include <random>

#include "supcoh/states.hpp"

namespace supcoh::testutil {

inline Vec random_complex_vec(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v;
}

// A A^dag with a few extra columns is Hermitian positive definite and
// comfortably conditioned; rescaling rows/columns by the diagonal makes
// the diagonal exactly 1 without breaking either property.
inline Mat random_gram_entries(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat a(d, d + 2);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d + 2; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Mat s = a * a.adjoint();
  RealVec diag = s.diagonal().real();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      s(i, j) /= std::sqrt(diag(i) * diag(j));
    }
    s(i, i) = Complex(1.0, 0.0);
  }
  return s;
}

inline std::shared_ptr<const GramMatrix> random_gram(int d,
                                                     std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    try {
      return std::make_shared<const GramMatrix>(
          GramMatrix::validate(random_gram_entries(d, rng)));
    } catch (const Error&) {
      // near-singular draw; try again
    }
  }
  throw std::runtime_error("could not draw a positive definite Gram matrix");
}

inline SuperpositionState random_superposition(
    std::shared_ptr<const GramMatrix> gram, std::mt19937_64& rng) {
  const int d = gram->dim();  // before the move: argument order is unspecified
  return make_superposition(random_complex_vec(d, rng), std::move(gram));
}

inline CoherentState random_coherent(int d, std::mt19937_64& rng) {
  return make_coherent(random_complex_vec(d, rng));
}

// Largest coefficient difference after rotating both states so their
// largest-modulus entries are real positive.
inline double distance_up_to_phase(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return 1e300;
  int pivot = 0;
  a.cwiseAbs().maxCoeff(&pivot);
  const Complex pa = a(pivot) / std::abs(a(pivot));
  const Complex pb = b(pivot) / std::abs(b(pivot));
  return (a / pa - b / pb).cwiseAbs().maxCoeff();
}

}  // namespace supcoh::testutil
