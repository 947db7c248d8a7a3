#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace otprh;

TEST_CASE("Szego constant") {
  CHECK(szego_constant(make_weight("const")) == 0.0);
  const double closed = oracle::szego_constant_cos(0.5);
  const double brute = oracle::riemann(
      [](double t) { return std::log(1.0 + 0.5 * std::cos(t)); }, 1000000) / (4.0 * oracle::kPi);
  REQUIRE(std::abs(closed - brute) < 1e-13);
  CHECK(std::abs(szego_constant(make_weight("cos:0.5")) - closed) < 1e-14);
  CHECK(closed == doctest::Approx(-0.0346682).epsilon(1e-6));
  CHECK(std::abs(SzegoData(make_weight("cos:0.5")).constant() - closed) < 1e-14);
  CHECK(std::abs(szego_constant(make_weight("const").scaled(2.0)) - 0.5 * std::log(2.0)) < 1e-15);
  CHECK(std::abs(szego_constant(make_weight("poisson:0.4")) - 0.5 * std::log(0.84)) < 1e-14);
}

TEST_CASE("unit weight: Gamma = 0 and all Szego functions are 1") {
  const SzegoData sd(make_weight("const"));
  for (Complex z : {Complex(0.2, 0.5), Complex(1.0, -3.0), Complex(4.0, 0.0)}) {
    if (z.imag() != 0.0) CHECK(std::abs(sd.gamma(z)) < 1e-15);
    CHECK(std::abs(sd.frak_d(+1, z) - 1.0) < 1e-15);
    CHECK(std::abs(sd.frak_d(-1, z) - 1.0) < 1e-15);
  }
  CHECK(std::abs(sd.d_plus({0.0, 1.0}) - 1.0) < 1e-15);
  CHECK(std::abs(sd.d_minus({0.0, -1.0}) - 1.0) < 1e-15);
}

TEST_CASE("Gamma tends to +-C and agrees with direct quadrature") {
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const SzegoData sd(w);
    CHECK(std::abs(sd.gamma({0.3, 10.0}) - sd.constant()) < 1e-4);
    CHECK(std::abs(sd.gamma({0.3, -10.0}) + sd.constant()) < 1e-4);
  }
  const auto w = make_weight("cos:0.5");
  const SzegoData sd(w);
  const Complex z(1.0, 0.8);
  const Complex direct =
      oracle::cauchy_by_kernel([&](double t) { return Complex(std::log(w(t))); }, z, 8192);
  CHECK(std::abs(gamma(sd, z) - direct) < 1e-9);
}

TEST_CASE("D+ and D-") {
  const auto w = make_weight("cos:0.5");
  const SzegoData sd(w);
  CHECK(std::abs(d_plus(sd, {0.4, 10.0}) - 1.0) < 1e-4);
  CHECK(std::abs(d_minus(sd, {0.4, -10.0}) - 1.0) < 1e-4);
  CHECK_THROWS(sd.d_plus({0.4, -0.1}));
  CHECK_THROWS(sd.d_minus({0.4, 0.1}));
  const double scale = std::exp(-2.0 * sd.constant());
  for (int j = 0; j < 64; ++j) {
    const double x = kTwoPi * j / 64;
    CHECK(std::abs(sd.d_plus_boundary(x) * sd.d_minus_boundary(x) - scale * w(x)) < 1e-12);
  }
  // Periodicity off the axis.
  CHECK(std::abs(sd.d_plus({0.4 + kTwoPi, 0.3}) - sd.d_plus({0.4, 0.3})) < 1e-13);
}

TEST_CASE("frak D extensions") {
  const auto w = make_weight("cos:0.5");
  const SzegoData sd(w);
  const Complex z(0.3, -0.4);
  const Complex expect = std::exp(-2.0 * sd.constant()) * w(z) / sd.d_minus(z);
  CHECK(std::abs(frak_d(sd, +1, z) - expect) < 1e-14);
  const Complex zc = std::conj(z);
  CHECK(std::abs(frak_d(sd, -1, zc) - std::exp(-2.0 * sd.constant()) * w(zc) / sd.d_plus(zc)) < 1e-14);
  CHECK_THROWS(sd.frak_d(+1, {0.0, -1.4}));
  CHECK_THROWS(sd.frak_d(-1, {0.0, 1.4}));
}

TEST_CASE("product identity on a 256-point axis grid") {
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const SzegoData sd(w);
    double worst = 0.0;
    for (int j = 0; j < 256; ++j) {
      const double x = kTwoPi * j / 256;
      worst = std::max(worst, std::abs(sd.frak_d(+1, x) * sd.frak_d(-1, x) -
                                       std::exp(-2.0 * sd.constant()) * w(x)));
    }
    CAPTURE(spec);
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("strip properties of frak D") {
  std::mt19937 rng(17);
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const SzegoData sd(w);
    const double rho = std::min(w.strip_radius(), 3.0);
    std::uniform_real_distribution<double> ux(0.0, kTwoPi), uy(-0.9 * rho, 0.9 * rho);
    for (int i = 0; i < 40; ++i) {
      const Complex z(ux(rng), uy(rng));
      CAPTURE(spec);
      CAPTURE(z);
      for (int s : {+1, -1}) {
        if (s * z.imag() <= -0.9 * rho) continue;
        const Complex v = sd.frak_d(s, z);
        CHECK(std::abs(v) > 0.0);
        CHECK(std::abs(sd.frak_d(s, z + kTwoPi) - v) < 1e-12 * std::max(1.0, std::abs(v)));
      }
      CHECK(std::abs(sd.frak_d(-1, std::conj(z)) - std::conj(sd.frak_d(+1, z))) <
            1e-12 * std::max(1.0, std::abs(sd.frak_d(+1, z))));
    }
    CHECK(std::abs(sd.frak_d(+1, {0.7, 12.0}) - 1.0) < 1e-4);
    CHECK(std::abs(sd.frak_d(-1, {0.7, -12.0}) - 1.0) < 1e-4);
  }
}
