#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "supcoh/golden.hpp"
#include "supcoh/transform.hpp"
#include "test_support.hpp"

using namespace supcoh;
using doctest::Approx;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::internal;
}

std::shared_ptr<const GramMatrix> uniform(int d, double s) {
  return std::make_shared<const GramMatrix>(UniformOverlap(d, s).to_gram());
}

RealVec phases01pi() {
  RealVec ph(2);
  ph << 0.0, std::numbers::pi;
  return ph;
}

}  // namespace

TEST_CASE("maximally_coherent") {
  SUBCASE("default phases give the uniform real state") {
    const auto bar = maximally_coherent(2);
    const double amp = 1.0 / std::sqrt(2.0);
    CHECK(bar.coefficients()(0) == Complex(amp, 0));
    CHECK(bar.coefficients()(1) == Complex(amp, 0));
  }

  SUBCASE("phases (0, pi) give the antisymmetric state") {
    const auto bar = maximally_coherent(2, phases01pi());
    const double amp = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(bar.coefficients()(0) - Complex(amp, 0)) <= 1e-15);
    CHECK(std::abs(bar.coefficients()(1) - Complex(-amp, 0)) <= 1e-15);
  }

  SUBCASE("every squared modulus is 1/d regardless of phases") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int d = 2; d <= 8; ++d) {
      RealVec ph(d);
      for (int k = 0; k < d; ++k) ph(k) = angle(rng);
      const auto bar = maximally_coherent(d, ph);
      for (int k = 0; k < d; ++k) {
        CHECK(std::norm(bar.coefficients()(k)) ==
              Approx(1.0 / d).epsilon(1e-14));
      }
      CHECK(distill_coherence_prob(bar) == 1.0);
    }
  }

  SUBCASE("phase vector length must match the dimension") {
    CHECK(code_of([] { maximally_coherent(3, RealVec::Zero(2)); }) ==
          errc::dimension_mismatch);
  }
}

TEST_CASE("golden_plus") {
  SUBCASE("orthonormal limit is the maximally coherent amplitude") {
    const auto psi = golden_plus(2, 0.0);
    CHECK(psi.coefficients()(0).real() ==
          Approx(0.7071067811865476).epsilon(1e-15));
  }

  SUBCASE("d=2 s=-0.5 normalizes to unit coefficients") {
    const auto psi = golden_plus(2, -0.5);
    CHECK(psi.coefficients()(0).real() == Approx(1.0).epsilon(1e-14));
    CHECK(psi.coefficients()(1).real() == Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("d=3 s=-0.25") {
    const auto psi = golden_plus(3, -0.25);
    for (int k = 0; k < 3; ++k) {
      CHECK(psi.coefficients()(k).real() ==
            Approx(0.8164965809277261).epsilon(1e-14));
    }
  }

  SUBCASE("permutation symmetric and S-normalized across the range") {
    for (int d = 2; d <= 8; ++d) {
      const double lower = 1.0 / (1.0 - d);
      for (int k = 0; k < 8; ++k) {
        const double s = lower + (k + 1) * (0.0 - lower) / 9.0;
        const auto psi = golden_plus(d, s);
        for (int i = 1; i < d; ++i) {
          CHECK(psi.coefficients()(i) == psi.coefficients()(0));
        }
        const Complex n = s_inner(psi, psi);
        CHECK(std::abs(n - Complex(1, 0)) <= 1e-12);
      }
    }
  }

  SUBCASE("the overlap must sit in the maximality window") {
    CHECK(code_of([] { golden_plus(2, 0.1); }) ==
          errc::overlap_out_of_golden_range);
    CHECK(code_of([] { golden_plus(3, -0.5); }) ==
          errc::overlap_out_of_golden_range);
    CHECK(code_of([] { golden_plus(2, -1.0); }) ==
          errc::overlap_out_of_golden_range);
  }
}

TEST_CASE("golden_minus_2d") {
  SUBCASE("orthonormal limit") {
    const auto psi = golden_minus_2d(0.0);
    CHECK(psi.coefficients()(0).real() ==
          Approx(0.7071067811865476).epsilon(1e-15));
    CHECK(psi.coefficients()(1).real() ==
          Approx(-0.7071067811865476).epsilon(1e-15));
  }

  SUBCASE("s=0.5 normalizes to unit coefficients") {
    const auto psi = golden_minus_2d(0.5);
    CHECK(psi.coefficients()(0).real() == Approx(1.0).epsilon(1e-14));
    CHECK(psi.coefficients()(1).real() == Approx(-1.0).epsilon(1e-14));
  }

  SUBCASE("negative overlaps are out of range for the minus sign") {
    CHECK(code_of([] { golden_minus_2d(-0.2); }) ==
          errc::overlap_out_of_golden_range);
    CHECK(code_of([] { golden_minus_2d(1.0); }) ==
          errc::overlap_out_of_golden_range);
  }
}

TEST_CASE("golden states mirror maximally coherent states") {
  SUBCASE("plus sign, negative overlaps") {
    for (int d = 2; d <= 8; ++d) {
      const double lower = 1.0 / (1.0 - d);
      for (int k = 0; k < 6; ++k) {
        const double s = (lower + 0.05) * (1.0 - k / 6.0);
        const auto map = LowdinMap::build(uniform(d, s));
        const auto want = golden_plus(d, s);

        // pulling the flat coherent state back lands on the golden state
        const auto psi = backward(map, maximally_coherent(d));
        CHECK((psi.coefficients() - want.coefficients()).cwiseAbs()
                  .maxCoeff() <= 1e-10);

        // pushing the golden state forward gives flat squared moduli
        const auto bar = forward(map, want);
        for (int i = 0; i < d; ++i) {
          CHECK(std::abs(std::norm(bar.coefficients()(i)) - 1.0 / d) <=
                1e-10);
        }
      }
    }
  }

  SUBCASE("minus sign, positive qubit overlaps") {
    for (double s : {0.0, 0.2, 0.5, 0.9}) {
      const auto map = LowdinMap::build(uniform(2, s));
      const auto want = golden_minus_2d(s);
      const auto psi = backward(map, maximally_coherent(2, phases01pi()));
      CHECK((psi.coefficients() - want.coefficients()).cwiseAbs()
                .maxCoeff() <= 1e-10);

      const auto bar = forward(map, want);
      CHECK(std::abs(bar.coefficients()(0) -
                     Complex(0.7071067811865476, 0)) <= 1e-10);
      CHECK(std::abs(bar.coefficients()(1) -
                     Complex(-0.7071067811865476, 0)) <= 1e-10);
    }
  }
}

TEST_CASE("golden_from_coherent") {
  SUBCASE("recovers golden_plus for flat inputs") {
    for (auto [d, s] : {std::pair{2, -0.3}, std::pair{4, -0.1}}) {
      const auto map = LowdinMap::build(uniform(d, s));
      const auto psi = golden_from_coherent(map, maximally_coherent(d));
      const auto want = golden_plus(d, s);
      CHECK((psi.coefficients() - want.coefficients()).cwiseAbs()
                .maxCoeff() <= 1e-10);
    }
  }

  SUBCASE("orthonormal overlap changes nothing") {
    const auto map = LowdinMap::build(uniform(3, 0.0));
    const auto bar = maximally_coherent(3);
    const auto psi = golden_from_coherent(map, bar);
    CHECK((psi.coefficients() - bar.coefficients()).cwiseAbs().maxCoeff() <=
          1e-12);
  }

  SUBCASE("rejects inputs that are not maximally coherent") {
    const auto map = LowdinMap::build(uniform(2, -0.3));
    Vec v(2);
    v << Complex(std::sqrt(0.9), 0), Complex(std::sqrt(0.1), 0);
    CHECK(code_of([&] {
            golden_from_coherent(map, CoherentState::from_normalized(v));
          }) == errc::not_maximally_coherent);
  }
}

TEST_CASE("make_golden") {
  SUBCASE("dispatches on the sign") {
    const auto plus = make_golden({3, -0.2, GoldenSign::plus});
    CHECK(plus.coefficients()
              .cwiseEqual(golden_plus(3, -0.2).coefficients())
              .all());
    const auto minus = make_golden({2, 0.4, GoldenSign::minus});
    CHECK(minus.coefficients()
              .cwiseEqual(golden_minus_2d(0.4).coefficients())
              .all());
  }

  SUBCASE("the minus sign only exists for qubits") {
    CHECK(code_of([] { make_golden({3, 0.2, GoldenSign::minus}); }) ==
          errc::bad_input);
  }
}
