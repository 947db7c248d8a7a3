#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace otprh;
using support::dist;

namespace {

ContourConfig contours(double r, double eps) {
  ContourConfig cc;
  cc.r = r;
  cc.epsilon = eps;
  return cc;
}

}  // namespace

TEST_CASE("every consistent-chain stage has jump residual below 1e-8") {
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const OtpSystem sys(w, 6);
    const SzegoData sd(w);
    const ContourConfig cc = ContourConfig::for_weight(w);
    for (int n : {2, 4, 6}) {
      const RhChain chain(sys, sd, n, cc);
      auto reports = verify_chain(chain);
      reports.push_back(verify_R(chain));
      CHECK(reports.size() == 7);
      for (const auto& r : reports) {
        CAPTURE(spec);
        CAPTURE(n);
        CAPTURE(r.stage);
        CHECK(r.max_jump_residual < 1e-8);
        CHECK(r.max_jump_residual >= 0.0);
        CHECK_FALSE(r.jump_samples.empty());
      }
    }
  }
}

TEST_CASE("R jump and growth for the unit weight") {
  const auto w = make_weight("const");
  const OtpSystem sys(w, 2);
  const SzegoData sd(w);
  const ResidualReport rep = verify_R(sys, sd, 2, contours(0.5, 0.1));
  CHECK(rep.stage == "R_jump");
  CHECK(rep.max_jump_residual < 1e-8);
  CHECK(rep.max_growth_residual < 1e-2);
  const RhChain chain(sys, sd, 2, contours(0.5, 0.1));
  const Matrix2 lo = chain.R({0.0, -8.0}, Region::B1minus);
  CHECK(dist(lo, r_limit_lower()) < 1e-3);
  const Complex top(0.0, 8.0);
  const Matrix2 up = std::exp(kI * top) * chain.R(top, Region::B2minus);
  CHECK(dist(up, r_limit_upper_scaled(sd, Convention::consistent)) < 1e-2);
  // Stated limits, recorded as gaps: I at -i inf and [[0,-2],[1/2,0]] at +i inf.
  for (const auto& [label, value] : rep.scalars) {
    if (label == "gap_to_identity_at_-8i") CHECK(value == doctest::Approx(0.75).epsilon(1e-3));
    if (label == "gap_to_model_at_+8i") CHECK(value == doctest::Approx(1.5).epsilon(1e-2));
  }
}

TEST_CASE("derived growth limits hold for every weight") {
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const OtpSystem sys(w, 4);
    const SzegoData sd(w);
    const RhChain chain(sys, sd, 4, ContourConfig::for_weight(w));
    for (const auto& r : verify_chain(chain)) {
      if (r.stage == "F_jump") CHECK(r.max_growth_residual < 1e-2);
    }
    CHECK(verify_R(chain).max_growth_residual < 1e-2);
  }
}

TEST_CASE("unit weight R in the band matches the closed form") {
  const auto w = make_weight("const");
  const OtpSystem sys(w, 8);
  const SzegoData sd(w);
  for (int n = 2; n <= 8; ++n) {
    const RhChain chain(sys, sd, n, contours(0.5, 0.1));
    for (Complex z : {Complex(0.2, 0.3), Complex(2.0, -0.4), Complex(5.0, 0.0)}) {
      CHECK(dist(chain.R_band(z), oracle::unit_weight::R_band(z)) < 1e-12);
    }
  }
}

TEST_CASE("G norm decays like e^{-(2n-1) r}") {
  for (const auto& spec : support::kCatalog) {
    const auto w = make_weight(spec);
    const OtpSystem sys(w, 10);
    const SzegoData sd(w);
    const ContourConfig cc = ContourConfig::for_weight(w);
    std::vector<double> x, y;
    for (int n = 2; n <= 10; ++n) {
      const RhChain chain(sys, sd, n, cc);
      x.push_back(2.0 * n - 1.0);
      y.push_back(std::log(contour_g_norm(chain, cc.r).max()));
    }
    CAPTURE(spec);
    CHECK(std::abs(fit_slope(x, y) + cc.r) <= 0.05 * cc.r);
  }
}

TEST_CASE("k integral") {
  SUBCASE("triangular structure of the two legs") {
    const auto w = make_weight("cos:0.5");
    const OtpSystem sys(w, 4);
    const SzegoData sd(w);
    const KIntegral k = k_integral(sys, sd, 3, ContourConfig::for_weight(w));
    CHECK(k.upper_leg(0, 0) == 0.0);
    CHECK(k.upper_leg(1, 0) == 0.0);
    CHECK(k.lower_leg(0, 1) == 0.0);
    CHECK(k.lower_leg(1, 1) == 0.0);
    CHECK(dist(k.k, Matrix2(k.upper_leg + k.lower_leg)) == 0.0);
    CHECK(k.converged);
  }
  SUBCASE("entrywise reconstruction by a fixed Riemann sum") {
    for (const auto& spec : support::kCatalog) {
      const auto w = make_weight(spec);
      const OtpSystem sys(w, 5);
      const SzegoData sd(w);
      const ContourConfig cc = ContourConfig::for_weight(w);
      const RhChain chain(sys, sd, 4, cc);
      const double h = cc.r;
      const Matrix2 id = Matrix2::Identity();
      const Matrix2 up = oracle::riemann(
          [&](double x) {
            const Complex t(x, h);
            return Matrix2(chain.R(t, Region::A2plus) * (chain.G(t, Side::upper) - id));
          },
          2048);
      const Matrix2 lo = oracle::riemann(
          [&](double x) {
            const Complex t(x, -h);
            return Matrix2(chain.R(t, Region::A1minus) * (chain.G(t, Side::lower) - id));
          },
          2048);
      const Matrix2 expect = (lo - up) / (4.0 * oracle::kPi);
      CAPTURE(spec);
      CHECK(dist(k_integral(chain).k, expect) < 1e-13);
    }
  }
  SUBCASE("unit weight gives k = 0 for every n") {
    const auto w = make_weight("const");
    const OtpSystem sys(w, 8);
    const SzegoData sd(w);
    for (int n = 2; n <= 8; ++n) {
      const KIntegral k = k_integral(sys, sd, n, contours(0.5, 0.1));
      CHECK(mat2_norm(k.k) < 1e-12);
      CHECK(k.distance_to_minus_half == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
  SUBCASE("deformation invariance") {
    for (const auto& spec : support::kCatalog) {
      const auto w = make_weight(spec);
      const OtpSystem sys(w, 6);
      const SzegoData sd(w);
      const ContourConfig cc = ContourConfig::for_weight(w);
      for (int n = 2; n <= 6; ++n) {
        const RhChain chain(sys, sd, n, cc);
        const Matrix2 a = k_integral(chain).k;
        const Matrix2 b = k_integral(chain, cc.r + 0.5 * cc.epsilon).k;
        CHECK(dist(a, b) < 1e-8);
      }
    }
  }
  SUBCASE("H tends to +-k at +-i infinity") {
    const auto w = make_weight("cos:0.5");
    const OtpSystem sys(w, 3);
    const SzegoData sd(w);
    const RhChain chain(sys, sd, 3, ContourConfig::for_weight(w));
    const Matrix2 k = k_integral(chain).k;
    CHECK(dist(h_diagnostic(chain, {0.3, 30.0}), k) < 1e-12);
    CHECK(dist(h_diagnostic(chain, {0.3, -30.0}), Matrix2(-k)) < 1e-12);
  }
}

TEST_CASE("band residual report") {
  SUBCASE("collar norm for the unit weight at n = 5") {
    const auto w = make_weight("const");
    const OtpSystem sys(w, 8);
    const SzegoData sd(w);
    const BandResidualReport t = band_residual_check(sys, sd, 5, 8, contours(0.5, 0.1));
    CHECK(t.collar_norm == doctest::Approx(2.0 * std::exp(-3.6)).epsilon(1e-12));
    CHECK(t.collar_norm == doctest::Approx(0.0546).epsilon(1e-3));
    CHECK(t.self_convergence < 1e-12);
    CHECK(t.K_eps > 0.0);
    CHECK(t.delta == doctest::Approx(1.0 / (2.0 * t.K_eps + 1.0)));
    CHECK(std::isfinite(t.literal_residual));
    CHECK(std::isfinite(t.r_minus_norm));
    CHECK(std::isfinite(t.d_eps));
    CHECK(std::isfinite(mat2_norm(t.w_upper_scaled)));
  }
  SUBCASE("self-convergence ratio stays bounded") {
    for (const auto& spec : support::kCatalog) {
      const auto w = make_weight(spec);
      const OtpSystem sys(w, 8);
      const SzegoData sd(w);
      const ContourConfig cc = ContourConfig::for_weight(w);
      const RhChain ref(sys, sd, 8, cc);
      for (int n = 3; n <= 7; ++n) {
        const BandResidualReport t = band_residual_check(RhChain(sys, sd, n, cc), ref);
        CAPTURE(spec);
        CAPTURE(n);
        CHECK(t.eta_hat < 1.0);
        CHECK(t.collar_norm > 0.0);
      }
    }
  }
}

TEST_CASE("asymptotic prediction") {
  SUBCASE("unit weight") {
    const auto w = make_weight("const");
    const OtpSystem sys(w, 16);
    const SzegoData sd(w);
    const ContourConfig cc = ContourConfig::for_weight(w);
    for (int n = 4; n <= 8; ++n) {
      for (double x : {0.1, 1.0, 2.5, 4.0}) {
        const Prediction p = asymptotic_prediction(sys, sd, n, x, cc);
        CHECK(p.error < 1e-6);
        CHECK(std::abs(p.actual - std::cos(n * x)) < 1e-12);
      }
    }
  }
  SUBCASE("cos:0.5 error decreases and tracks the G norm") {
    const auto w = make_weight("cos:0.5");
    const OtpSystem sys(w, 16);
    const SzegoData sd(w);
    const ContourConfig cc = ContourConfig::for_weight(w);
    const RhChain ref(sys, sd, 16, cc);
    double prev = std::numeric_limits<double>::infinity();
    std::vector<double> ratios;
    for (int n = 3; n <= 8; ++n) {
      const RhChain chain(sys, sd, n, cc);
      const Prediction p = asymptotic_prediction(chain, ref, 1.0);
      CHECK(p.error < prev);
      prev = p.error;
      ratios.push_back(p.error / contour_g_norm(chain, cc.r).max());
    }
    for (double r : ratios) CHECK(r <= 10.0 * ratios.front());
  }
}

TEST_CASE("fit_slope") {
  CHECK(fit_slope({1, 2, 3}, {2, 4, 6}) == doctest::Approx(2.0));
  CHECK_THROWS(fit_slope({1}, {1}));
}
