#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "polycub/errors.hpp"
#include "polycub/harmonics.hpp"

using namespace polycub;

TEST_CASE("harmonic values") {
  CHECK(eval_harmonic({0, 1}, 1.7) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
  CHECK(eval_harmonic({1, 1}, 0.0) == doctest::Approx(0.5641895835477563).epsilon(1e-15));
  CHECK(eval_harmonic({2, 2}, kPi / 4) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-15));
  CHECK(eval_harmonic({3, 2}, 0.4) == doctest::Approx(oracle::harmonic(3, 2, 0.4)).epsilon(1e-15));
}

TEST_CASE("invalid harmonic index") {
  CHECK_THROWS_AS(eval_harmonic({0, 2}, 0.0), DomainError);
  CHECK_THROWS_AS(eval_harmonic({1, 3}, 0.0), DomainError);
  CHECK_THROWS_AS(eval_harmonic({-1, 1}, 0.0), DomainError);
  CHECK(harmonics_up_to(3).size() == 7);
}

TEST_CASE("angular grid") {
  CHECK_THROWS_AS(AngularGrid(8), ParameterError);
  CHECK_THROWS_AS(AngularGrid(1), ParameterError);
  const AngularGrid grid(9);
  CHECK(grid.size() == 9);
  CHECK(grid.angle(1) == doctest::Approx(2 * kPi / 9));
  CHECK(grid.angle(9) == doctest::Approx(2 * kPi));
  // the s = M angle coincides with 0 modulo 2 pi
  CHECK(std::abs(std::sin(grid.angle(9))) < 1e-15);
}

TEST_CASE("dft examples") {
  const AngularGrid grid(9);
  std::vector<double> constant(9, 2.5), cosine, sine2;
  for (double phi : grid.angles()) {
    cosine.push_back(std::cos(phi));
    sine2.push_back(std::sin(2 * phi));
  }
  CHECK(dft_coefficient(constant, grid, {0, 1}) == doctest::Approx(2.5 * std::sqrt(2 * kPi)));
  CHECK(dft_coefficient(cosine, grid, {1, 1}) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(std::abs(dft_coefficient(sine2, grid, {1, 1})) < 1e-15);
  CHECK_THROWS_AS(dft_coefficient(std::vector<double>(8, 1.0), grid, {0, 1}), DimensionError);
}

TEST_CASE("discrete orthonormality") {
  for (int m : {3, 9, 25, 63}) {
    const AngularGrid grid(m);
    const auto idx = harmonics_up_to((m - 1) / 2);
    for (auto a : idx) {
      const auto ya = grid.harmonic_values(a);
      for (auto b : idx) {
        const double v = dft_coefficient(ya, grid, b);
        CHECK(std::abs(v - (a == b ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("dft of a trigonometric polynomial equals the continuous coefficient") {
  // f = 0.3 + 1.1 cos phi - 0.7 sin 3 phi + 0.2 cos 4 phi, degree 4 < 9/2
  auto f = [](double phi) {
    return 0.3 + 1.1 * std::cos(phi) - 0.7 * std::sin(3 * phi) + 0.2 * std::cos(4 * phi);
  };
  const AngularGrid grid(9);
  std::vector<double> samples;
  for (double phi : grid.angles()) samples.push_back(f(phi));
  for (auto idx : harmonics_up_to(4)) {
    const double exact = oracle::simpson(
        [&](double phi) { return f(phi) * oracle::harmonic(idx.k, idx.ell, phi); }, 0.0, 2 * kPi,
        4000);
    CHECK(std::abs(dft_coefficient(samples, grid, idx) - exact) < 1e-12);
  }
}

TEST_CASE("dft linearity") {
  const AngularGrid grid(25);
  std::vector<double> u, v, w;
  for (int s = 0; s < 25; ++s) {
    u.push_back(std::sin(1.3 * s + 0.2));
    v.push_back(std::cos(0.7 * s * s));
    w.push_back(2.0 * u.back() - 3.0 * v.back());
  }
  for (auto idx : harmonics_up_to(12)) {
    const double lhs = dft_coefficient(w, grid, idx);
    const double rhs = 2.0 * dft_coefficient(u, grid, idx) - 3.0 * dft_coefficient(v, grid, idx);
    CHECK(std::abs(lhs - rhs) < 1e-13);
  }
}
