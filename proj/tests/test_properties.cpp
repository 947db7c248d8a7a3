#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace otprh;
using support::dist;

namespace {

TrigPoly random_poly(std::mt19937& rng, int degree, bool real) {
  std::normal_distribution<double> g;
  VectorXc a(degree + 1), b(degree + 1);
  for (int k = 0; k <= degree; ++k) {
    a(k) = real ? Complex(g(rng)) : Complex(g(rng), g(rng));
    b(k) = real ? Complex(g(rng)) : Complex(g(rng), g(rng));
  }
  return TrigPoly::from_cos_sin(a, b);
}

}  // namespace

TEST_CASE("inner product is symmetric and bilinear") {
  std::mt19937 rng(31);
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    for (int i = 0; i < 10; ++i) {
      const TrigPoly f = random_poly(rng, 4, true), g = random_poly(rng, 5, true),
                     h = random_poly(rng, 3, true);
      const double fg = inner_product(f, g, w);
      CHECK(std::abs(fg - inner_product(g, f, w)) < 1e-12 * std::max(1.0, std::abs(fg)));
      const double lhs = inner_product(f * Complex(2.0) + h, g, w);
      const double rhs = 2.0 * fg + inner_product(h, g, w);
      CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(rhs)));
      CHECK(inner_product(f, f, w) > 0.0);
    }
  }
}

TEST_CASE("Cauchy transform is linear in the density") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> ux(0.0, kTwoPi), uy(0.05, 1.0);
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const TrigPoly f = random_poly(rng, 4, false), g = random_poly(rng, 3, false);
    const auto cf = build_cauchy(f, w), cg = build_cauchy(g, w);
    const auto cs = build_cauchy(f + g * Complex(0.0, 3.0), w);
    for (int i = 0; i < 10; ++i) {
      const Complex z(ux(rng), (i % 2 ? 1.0 : -1.0) * uy(rng));
      const Complex expect = eval_cauchy(cf, z) + Complex(0.0, 3.0) * eval_cauchy(cg, z);
      CHECK(std::abs(eval_cauchy(cs, z) - expect) < 1e-12 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST_CASE("batched and scalar Fourier extraction agree on random data") {
  std::mt19937 rng(43);
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const TrigPoly f = random_poly(rng, 6, false);
    const auto s = fourier_series([&](double t) { return f(t) * w(t); }, 10);
    for (int k = -10; k <= 10; ++k) {
      const Complex c = fourier_coefficient([&](double t) { return f(t) * w(t); }, k).value;
      CHECK(std::abs(s[k] - c) < 1e-13 * std::max(1.0, s.coeffs.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("Szego functions are invariant under scaling of the weight") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> ux(0.0, kTwoPi), uy(-0.5, 0.5), us(0.1, 10.0);
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const double s = us(rng);
    const SzegoData a(w), b(w.scaled(s));
    CHECK(std::abs(b.constant() - a.constant() - 0.5 * std::log(s)) < 1e-13);
    for (int i = 0; i < 10; ++i) {
      const Complex z(ux(rng), uy(rng));
      for (int sign : {+1, -1}) {
        CHECK(std::abs(b.frak_d(sign, z) - a.frak_d(sign, z)) < 1e-12 * std::abs(a.frak_d(sign, z)));
      }
    }
  }
}

TEST_CASE("all jumps hold for random contour placements") {
  std::mt19937 rng(53);
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const OtpSystem sys(w, 6);
    const SzegoData sd(w);
    const double rmax = std::min(w.strip_radius(), 2.0);
    std::uniform_real_distribution<double> ur(0.1 * rmax, 0.9 * rmax);
    for (int trial = 0; trial < 3; ++trial) {
      ContourConfig cc;
      cc.r = ur(rng);
      cc.epsilon = cc.r * std::uniform_real_distribution<double>(0.05, 0.45)(rng);
      cc.validate(w.strip_radius());
      const int n = 2 + trial * 2;
      const RhChain chain(sys, sd, n, cc);
      double worst = verify_R(chain).max_jump_residual;
      for (const auto& r : verify_chain(chain)) worst = std::max(worst, r.max_jump_residual);
      CAPTURE(spec);
      CAPTURE(cc.r);
      CAPTURE(n);
      CHECK(worst < 1e-8);
    }
  }
}

TEST_CASE("k does not depend on the contour height") {
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const OtpSystem sys(w, 5);
    const SzegoData sd(w);
    const ContourConfig cc = ContourConfig::for_weight(w);
    const RhChain chain(sys, sd, 3, cc);
    const Matrix2 base = k_integral(chain).k;
    for (double f : {0.6, 0.8, 1.2}) {
      CAPTURE(spec);
      CAPTURE(f);
      CHECK(dist(k_integral(chain, f * cc.r).k, base) < 1e-8);
    }
  }
}

TEST_CASE("e^{inz} det Y - cos z is one constant in both half planes") {
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> ux(0.0, kTwoPi), uy(0.1, 2.0);
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const OtpSystem sys(w, 5);
    for (int n = 2; n <= 5; ++n) {
      auto offset = [&](const Complex& z) {
        return std::exp(kI * double(n) * z) * assemble_Y(sys, n, z).determinant() - std::cos(z);
      };
      const Complex b = offset({0.4, 0.5});
      for (int i = 0; i < 8; ++i) {
        const Complex z(ux(rng), (i % 2 ? 1.0 : -1.0) * uy(rng));
        CAPTURE(spec);
        CAPTURE(n);
        CAPTURE(z);
        CHECK(std::abs(offset(z) - b) < 1e-10 * std::max(1.0, std::abs(std::cos(z))));
      }
      if (spec == "const") CHECK(std::abs(b) < 1e-12);
    }
  }
}
