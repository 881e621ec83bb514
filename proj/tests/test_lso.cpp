#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "supcoh/lso.hpp"
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

Vec rvec(std::initializer_list<double> xs) {
  Vec v(static_cast<int>(xs.size()));
  int i = 0;
  for (double x : xs) v(i++) = Complex(x, 0.0);
  return v;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("LowdinMap::build") {
  SUBCASE("identity overlap gives identity roots") {
    auto g = std::make_shared<const GramMatrix>(
        GramMatrix::validate(Mat::Identity(3, 3)));
    const auto map = LowdinMap::build(g);
    CHECK(max_abs(map.sqrt_s - Mat::Identity(3, 3)) <= 1e-14);
    CHECK(max_abs(map.inv_sqrt_s - Mat::Identity(3, 3)) <= 1e-14);
  }

  SUBCASE("d=2 s=0.5 reproduces the alpha/beta matrix") {
    const auto map = LowdinMap::build(uniform(2, 0.5));
    CHECK(map.inv_sqrt_s(0, 0).real() == Approx(1.115355).epsilon(1e-5));
    CHECK(map.inv_sqrt_s(0, 1).real() == Approx(-0.298858).epsilon(1e-5));
  }

  SUBCASE("map invariants hold on random complex overlaps") {
    std::mt19937_64 rng(3);
    for (int d = 2; d <= 8; ++d) {
      const auto map = LowdinMap::build(testutil::random_gram(d, rng));
      const Mat id = Mat::Identity(d, d);
      CHECK(max_abs(map.inv_sqrt_s * map.gram->entries() * map.inv_sqrt_s -
                    id) <= 1e-10);
      CHECK(max_abs(map.sqrt_s * map.inv_sqrt_s - id) <= 1e-10);
    }
  }
}

TEST_CASE("forward") {
  const auto map = LowdinMap::build(uniform(2, 0.5));

  SUBCASE("(3,1)/sqrt(13) lands on the printed squared moduli") {
    const auto psi = make_superposition(rvec({3, 1}), map.gram);
    const auto bar = forward(map, psi);
    const RealVec p = bar.coefficients().cwiseAbs2();
    CHECK(p(0) == Approx(0.766469).epsilon(1e-4));
    CHECK(p(1) == Approx(0.233531).epsilon(1e-4));
    // full-precision pin of the same numbers
    CHECK(p(0) == Approx(0.7664693550105965).epsilon(1e-12));
    CHECK(p(1) == Approx(0.23353064498940346).epsilon(1e-12));
    CHECK(bar.coefficients().squaredNorm() == Approx(1.0).epsilon(1e-10));
  }

  SUBCASE("(4,1)/sqrt(21) likewise") {
    const auto phi = make_superposition(rvec({4, 1}), map.gram);
    const RealVec p = forward(map, phi).coefficients().cwiseAbs2();
    CHECK(p(0) == Approx(0.809295).epsilon(1e-4));
    CHECK(p(1) == Approx(0.190705).epsilon(1e-4));
  }

  SUBCASE("zero overlap is the identity map") {
    auto id = std::make_shared<const GramMatrix>(
        GramMatrix::validate(Mat::Identity(2, 2)));
    const auto id_map = LowdinMap::build(id);
    const auto psi = make_superposition(rvec({0.6, 0.8}), id);
    const auto bar = forward(id_map, psi);
    CHECK(bar.coefficients()(0) == psi.coefficients()(0));
    CHECK(bar.coefficients()(1) == psi.coefficients()(1));
  }

  SUBCASE("rejects a state over a different overlap") {
    const auto psi = make_superposition(rvec({3, 1}), uniform(2, 0.4));
    CHECK(code_of([&] { forward(map, psi); }) == errc::gram_mismatch);
  }
}

TEST_CASE("backward") {
  SUBCASE("a Lowdin basis vector pulls back to a column of S^{-1/2}") {
    const auto map = LowdinMap::build(uniform(2, 0.5));
    const auto psi = backward(map, CoherentState::from_normalized(rvec({1, 0})));
    CHECK(std::abs(psi.coefficients()(0) - map.inv_sqrt_s(0, 0)) <= 1e-14);
    CHECK(std::abs(psi.coefficients()(1) - map.inv_sqrt_s(1, 0)) <= 1e-14);
  }

  SUBCASE("uniform coherent state pulls back to 1/sqrt(2(1+s))") {
    for (double s : {-0.7, -0.2, 0.0, 0.3, 0.8}) {
      const auto map = LowdinMap::build(uniform(2, s));
      const auto bar = make_coherent(rvec({1, 1}));
      const auto psi = backward(map, bar);
      const double want = 1.0 / std::sqrt(2.0 * (1.0 + s));
      CHECK(psi.coefficients()(0).real() == Approx(want).epsilon(1e-12));
      CHECK(psi.coefficients()(1).real() == Approx(want).epsilon(1e-12));
    }
  }

  SUBCASE("round trips in both directions") {
    std::mt19937_64 rng(17);
    for (int d = 2; d <= 6; ++d) {
      const auto gram = testutil::random_gram(d, rng);
      const auto map = LowdinMap::build(gram);

      const auto psi = testutil::random_superposition(gram, rng);
      const auto back = backward(map, forward(map, psi));
      CHECK((back.coefficients() - psi.coefficients()).cwiseAbs().maxCoeff() <=
            1e-10);

      const auto bar = testutil::random_coherent(d, rng);
      const auto there = forward(map, backward(map, bar));
      CHECK((there.coefficients() - bar.coefficients()).cwiseAbs().maxCoeff() <=
            1e-10);
    }
  }

  SUBCASE("dimension mismatch is rejected") {
    const auto map = LowdinMap::build(uniform(2, 0.5));
    CHECK(code_of([&] {
            backward(map, make_coherent(rvec({1, 1, 1})));
          }) == errc::dimension_mismatch);
  }
}

TEST_CASE("forward preserves inner products") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 20; ++rep) {
    const int d = 2 + rep % 5;
    const auto gram = testutil::random_gram(d, rng);
    const auto map = LowdinMap::build(gram);
    const auto a = testutil::random_superposition(gram, rng);
    const auto b = testutil::random_superposition(gram, rng);
    const Complex mapped =
        forward(map, a).coefficients().dot(forward(map, b).coefficients());
    CHECK(std::abs(mapped - s_inner(a, b)) <= 1e-10);
  }
}

TEST_CASE("uniform_mu_kappa") {
  SUBCASE("zero overlap collapses to the identity map") {
    const auto cf = uniform_mu_kappa(3, 0.0);
    CHECK(cf.mu == 1.0);
    CHECK(cf.kappa == 0.0);
  }

  SUBCASE("d=2 s=0.5 matches the two-level closed form") {
    const auto cf = uniform_mu_kappa(2, 0.5);
    CHECK(cf.mu == Approx(1.1153550716504106).epsilon(1e-14));
    CHECK(cf.kappa == Approx(-0.2988584907226844).epsilon(1e-14));
    REQUIRE(cf.alpha.has_value());
    REQUIRE(cf.beta.has_value());
    CHECK(*cf.alpha == cf.mu);
    CHECK(*cf.beta == cf.kappa);
  }

  SUBCASE("d=3 s=0.3") {
    const auto cf = uniform_mu_kappa(3, 0.3);
    CHECK(cf.mu == Approx(1.0603422112369607).epsilon(1e-14));
    CHECK(cf.kappa == Approx(-0.13488639809743294).epsilon(1e-14));
    CHECK_FALSE(cf.alpha.has_value());
  }

  SUBCASE("spectral identities across a (d, s) grid") {
    for (int d = 2; d <= 8; ++d) {
      const double lower = 1.0 / (1.0 - d);
      for (int k = 1; k <= 12; ++k) {
        const double s = lower + k * (1.0 - lower) / 13.0;
        const auto cf = uniform_mu_kappa(d, s);
        CHECK(cf.mu + (d - 1) * cf.kappa ==
              Approx(1.0 / std::sqrt(1.0 + (d - 1) * s)).epsilon(1e-12));
        CHECK(cf.mu - cf.kappa ==
              Approx(1.0 / std::sqrt(1.0 - s)).epsilon(1e-12));
      }
    }
  }

  SUBCASE("matrix inverse root shows the mu/kappa pattern") {
    for (int d : {2, 3, 5}) {
      for (double frac : {0.15, 0.5, 0.85}) {
        const double lower = 1.0 / (1.0 - d);
        const double s = lower + frac * (1.0 - lower);
        const auto cf = uniform_mu_kappa(d, s);
        const Mat inv = matrix_inv_sqrt(UniformOverlap(d, s).to_gram());
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) {
            const double want = i == j ? cf.mu : cf.kappa;
            CHECK(std::abs(inv(i, j) - Complex(want, 0.0)) <= 1e-10);
          }
        }
      }
    }
  }

  SUBCASE("range validation") {
    CHECK(code_of([] { uniform_mu_kappa(3, -0.5); }) ==
          errc::overlap_out_of_range);
    CHECK(code_of([] { uniform_mu_kappa(2, 1.0); }) ==
          errc::overlap_out_of_range);
  }
}

TEST_CASE("uniform_g closed form") {
  SUBCASE("zero overlap returns the input exactly") {
    const auto psi = make_superposition(rvec({0.6, 0.8}), uniform(2, 0.0));
    const auto g = uniform_g(psi, 2, 0.0);
    CHECK(g.coefficients()(0) == psi.coefficients()(0));
    CHECK(g.coefficients()(1) == psi.coefficients()(1));
  }

  SUBCASE("worked d=2 example") {
    const auto psi = make_superposition(rvec({3, 1}), uniform(2, 0.5));
    const RealVec p = uniform_g(psi, 2, 0.5).coefficients().cwiseAbs2();
    CHECK(p(0) == Approx(0.766469).epsilon(1e-4));
    CHECK(p(1) == Approx(0.233531).epsilon(1e-4));
  }

  SUBCASE("agrees with the matrix path componentwise") {
    std::mt19937_64 rng(53);
    for (int d : {2, 3, 5}) {
      const double lower = 1.0 / (1.0 - d);
      for (double frac : {0.2, 0.5, 0.9}) {
        const double s = lower + frac * (1.0 - lower);
        const auto gram = uniform(d, s);
        const auto map = LowdinMap::build(gram);
        for (int rep = 0; rep < 25; ++rep) {
          const auto psi = testutil::random_superposition(gram, rng);
          const Vec closed = uniform_g(psi, d, s).coefficients();
          const Vec numeric = forward(map, psi).coefficients();
          CHECK((closed - numeric).cwiseAbs().maxCoeff() <= 1e-10);
        }
      }
    }
  }

  SUBCASE("state must live on the uniform overlap it claims") {
    const auto psi = make_superposition(rvec({3, 1}), uniform(2, 0.4));
    CHECK(code_of([&] { uniform_g(psi, 2, 0.5); }) == errc::gram_mismatch);
    CHECK(code_of([&] { uniform_g(psi, 3, 0.4); }) ==
          errc::dimension_mismatch);
  }
}

TEST_CASE("lowdin_distance") {
  SUBCASE("orthonormal input needs no displacement") {
    const Mat id = Mat::Identity(3, 3);
    CHECK(lowdin_distance(id, id) == Approx(0.0).epsilon(1e-14));
  }

  SUBCASE("d=2 s=0.5 symmetric distance") {
    const auto g = UniformOverlap(2, 0.5).to_gram();
    const double d0 = lowdin_distance(g.entries(), matrix_inv_sqrt(g));
    CHECK(d0 == Approx(0.1362966948437272).epsilon(1e-12));
  }
}

TEST_CASE("random_unitary is unitary and reproducible") {
  std::mt19937_64 rng(99);
  for (int d : {2, 4, 7}) {
    const Mat u = random_unitary(d, rng);
    CHECK(max_abs(u.adjoint() * u - Mat::Identity(d, d)) <= 1e-12);
  }
  std::mt19937_64 a(5), b(5);
  CHECK(random_unitary(3, a).cwiseEqual(random_unitary(3, b)).all());
}

TEST_CASE("symmetric orthogonalization minimizes the displacement") {
  SUBCASE("uniform overlaps") {
    for (int d : {2, 3, 4}) {
      const double lower = 1.0 / (1.0 - d);
      for (double frac : {0.25, 0.6, 0.9}) {
        const double s = lower + frac * (1.0 - lower);
        const auto check =
            verify_minimality(UniformOverlap(d, s).to_gram(), 200, 42);
        CHECK(check.passed);
        CHECK(check.max_excess <= 1e-10);
      }
    }
  }

  SUBCASE("random complex overlap") {
    std::mt19937_64 rng(61);
    const auto g = testutil::random_gram(4, rng);
    const auto check = verify_minimality(*g, 300, 7);
    CHECK(check.passed);
  }

  SUBCASE("deterministic for a fixed seed") {
    const auto g = UniformOverlap(3, 0.2).to_gram();
    const auto a = verify_minimality(g, 50, 123);
    const auto b = verify_minimality(g, 50, 123);
    CHECK(a.max_excess == b.max_excess);
  }

  SUBCASE("sample count is validated") {
    const auto g = UniformOverlap(2, 0.2).to_gram();
    CHECK(code_of([&] { verify_minimality(g, 0, 1); }) == errc::bad_input);
  }
}
