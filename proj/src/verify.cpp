#include "otprh/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace otprh {

void ResidualReport::add_jump(const Complex& z, double r) {
  if (jump_samples.empty() || r > max_jump_residual) {
    max_jump_residual = r;
    worst_point = z;
  }
  jump_samples.push_back({z, r});
}

void ResidualReport::add_growth(const Complex& z, double r) {
  growth_samples.push_back({z, r});
  max_growth_residual = std::max(max_growth_residual, r);
}

Matrix2 f_limit() {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = 0.25;
  m(1, 1) = 1.0;
  return m;
}

Matrix2 r_limit_lower() { return f_limit(); }

Matrix2 r_limit_upper_scaled(const SzegoData& sd, Convention conv) {
  Matrix2 m = Matrix2::Zero();
  m(0, 1) = conv == Convention::consistent ? -0.5 * std::exp(4.0 * sd.constant()) : -0.5;
  m(1, 0) = 0.5;
  return m;
}

Matrix2 model_term(const SzegoData& sd, const Complex& z) {
  Matrix2 m = Matrix2::Zero();
  m(0, 1) = -2.0;
  m(1, 0) = 0.5;
  return std::exp(-2.0 * sd.constant() - kI * z) * m;
}

namespace {

std::vector<double> axis_grid(int count) {
  std::vector<double> xs(count);
  for (int j = 0; j < count; ++j) xs[j] = kTwoPi * j / count;
  return xs;
}

std::vector<double> linspace(double a, double b, int count) {
  if (count == 1) return {0.5 * (a + b)};
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = a + (b - a) * i / (count - 1);
  return v;
}

constexpr int kGrowthPoints = 16;

std::string grid_text(const std::string& where, int count) {
  return where + " x" + std::to_string(count);
}

}  // namespace

ResidualReport verify_Y(const ExactSolution& y, const PeriodicWeight& w, const ContourConfig& cc) {
  ResidualReport rep;
  rep.stage = "Y";
  rep.grid = grid_text("axis", cc.axis_points) + "; growth Im z = +-8, +-12 x16";
  const int n = y.n();
  const double nd = static_cast<double>(n);

  for (double x : axis_grid(cc.axis_points)) {
    const Complex z(x, 0.0);
    const Complex j12 = std::exp(-kI * (nd * x)) * w(x);
    if (y.has_second_row()) {
      Matrix2 jump = Matrix2::Identity();
      jump(0, 1) = j12;
      const Matrix2 res = y(z, Side::upper) - y(z, Side::lower) * jump;
      rep.add_jump(z, max_norm(res));
    } else {
      const Eigen::RowVector2cd up = y.first_row(z, Side::upper);
      const Eigen::RowVector2cd lo = y.first_row(z, Side::lower);
      Eigen::RowVector2cd res = up - lo;
      res(1) -= lo(0) * j12;
      rep.add_jump(z, max_norm(res));
    }
  }

  for (double h : {8.0, 12.0}) {
    for (double x : axis_grid(kGrowthPoints)) {
      for (Side side : {Side::upper, Side::lower}) {
        const Complex z(x + 0.1, side == Side::upper ? h : -h);
        const auto [xi1, xi2] = growth_matrices(n, z);
        const Matrix2& xi = side == Side::upper ? xi1 : xi2;
        double res;
        Matrix2 val;
        if (y.has_second_row()) {
          val = y(z, side) * xi;
          res = max_norm(Matrix2(val - Matrix2::Identity()));
        } else {
          const Eigen::RowVector2cd row = y.first_row(z, side) * xi;
          val = Matrix2::Zero();
          val.row(0) = row;
          res = std::max(std::abs(row(0) - 1.0), std::abs(row(1)));
        }
        rep.add_growth(z, res);
        if (x == 0.0) {
          const std::string tag = (side == Side::upper ? "Y Xi1 at 0.1+" : "Y Xi2 at 0.1-") +
                                  std::to_string(static_cast<int>(h)) + "i";
          rep.limits.emplace_back(tag, val);
        }
      }
    }
  }
  rep.scalars.emplace_back("dropped_modes", y.dropped_modes());
  rep.scalars.emplace_back("second_row_solvable", y.has_second_row() ? 1.0 : 0.0);
  return rep;
}

ResidualReport verify_Y(const OtpSystem& sys, int n, const ContourConfig& cc) {
  return verify_Y(ExactSolution(sys, n), sys.weight(), cc);
}

std::vector<ResidualReport> verify_chain(const RhChain& chain) {
  const SzegoData& sd = chain.szego();
  const ContourConfig& cc = chain.contours();
  const Convention conv = chain.convention();
  const int n = chain.n();
  const double r = cc.r;
  const std::string axis = grid_text("axis", cc.axis_points);
  const std::string legs = grid_text("L_{+-r}", cc.contour_points);

  ResidualReport fj, fac, su, sa, sl, rc;
  fj.stage = "F_jump";
  fj.grid = axis;
  fac.stage = "F_factorization";
  fac.grid = axis;
  su.stage = "S_jump_upper";
  su.grid = legs;
  sa.stage = "S_jump_axis";
  sa.grid = axis;
  sl.stage = "S_jump_lower";
  sl.grid = legs;
  rc.stage = "R_axis_continuity";
  rc.grid = axis;

  const Matrix2 ups = upsilon(sd, conv);
  for (double x : axis_grid(cc.axis_points)) {
    const Complex z(x, 0.0);
    const Matrix2 j3 = axis_jump_F(sd, n, x);
    fj.add_jump(z, max_norm(Matrix2(chain.F(z, Side::upper) - chain.F(z, Side::lower) * j3)));
    const Matrix2 prod = lower_factor(sd, n, z) * middle_factor(sd, x, conv) * upper_factor(sd, n, z);
    fac.add_jump(z, max_norm(Matrix2(prod - j3)));
    const Matrix2 s_up = chain.S(z, Region::A2plus);
    sa.add_jump(z, max_norm(Matrix2(chain.S(z, Region::A1minus) - s_up * ups)));
    rc.add_jump(z, max_norm(Matrix2(chain.R(z, Region::A2plus) - chain.R(z, Region::A1minus))));
  }
  for (double x : axis_grid(cc.contour_points)) {
    const Complex tu(x, r), tl(x, -r);
    su.add_jump(tu, max_norm(Matrix2(chain.S(tu, Region::A2minus) -
                                     chain.S(tu, Region::A2plus) * upper_factor(sd, n, tu))));
    sl.add_jump(tl, max_norm(Matrix2(chain.S(tl, Region::A1minus) -
                                     chain.S(tl, Region::A1plus) * lower_factor(sd, n, tl))));
  }

  for (double x : axis_grid(kGrowthPoints)) {
    const Complex up(x + 0.1, 8.0), lo(x + 0.1, -8.0);
    const Matrix2 f_up = chain.F(up, Side::upper), f_lo = chain.F(lo, Side::lower);
    fj.add_growth(up, max_norm(Matrix2(f_up - f_limit())));
    fj.add_growth(lo, max_norm(Matrix2(f_lo - f_limit())));
    if (x == 0.0) {
      fj.limits.emplace_back("F at 0.1+8i", f_up);
      fj.limits.emplace_back("F at 0.1-8i", f_lo);
      sa.limits.emplace_back("S at 0.1-8i", chain.S(lo, Region::A1plus));
      sa.limits.emplace_back("e^{iz} S at 0.1+8i",
                             Matrix2(std::exp(kI * up) * chain.S(up, Region::A2minus)));
    }
  }
  return {fj, fac, su, sa, sl, rc};
}

ResidualReport verify_R(const RhChain& chain) {
  const SzegoData& sd = chain.szego();
  const ContourConfig& cc = chain.contours();
  const double r = cc.r;
  ResidualReport rep;
  rep.stage = "R_jump";
  rep.grid = grid_text("L_{+-r}", cc.contour_points) + "; growth Im z = +-8 x16";

  for (double x : axis_grid(cc.contour_points)) {
    const Complex tu(x, r), tl(x, -r);
    const Matrix2 gu = chain.G(tu, Side::upper);
    rep.add_jump(tu, max_norm(Matrix2(chain.R(tu, Region::A2minus) - chain.R(tu, Region::A2plus) * gu)));
    const Matrix2 gl = chain.G(tl, Side::lower);
    rep.add_jump(tl, max_norm(Matrix2(chain.R(tl, Region::A1plus) - chain.R(tl, Region::A1minus) * gl)));
  }

  Matrix2 unit_model = Matrix2::Zero();
  unit_model(0, 1) = -2.0;
  unit_model(1, 0) = 0.5;
  const Matrix2 derived_upper = r_limit_upper_scaled(sd, chain.convention());
  double identity_gap = 0.0, model_gap = 0.0;
  for (double x : axis_grid(kGrowthPoints)) {
    const Complex up(x + 0.1, 8.0), lo(x + 0.1, -8.0);
    const Matrix2 r_lo = chain.R(lo, Region::B1minus);
    const Matrix2 r_up =
        std::exp(2.0 * sd.constant() + kI * up) * chain.R(up, Region::B2minus);
    rep.add_growth(lo, max_norm(Matrix2(r_lo - r_limit_lower())));
    rep.add_growth(up, max_norm(Matrix2(r_up - derived_upper)));
    identity_gap = std::max(identity_gap, max_norm(Matrix2(r_lo - Matrix2::Identity())));
    model_gap = std::max(model_gap, max_norm(Matrix2(r_up - unit_model)));
    if (x == 0.0) {
      rep.limits.emplace_back("R at 0.1-8i", r_lo);
      rep.limits.emplace_back("e^{2C+iz} R at 0.1+8i", r_up);
    }
  }
  rep.scalars.emplace_back("gap_to_identity_at_-8i", identity_gap);
  rep.scalars.emplace_back("gap_to_model_at_+8i", model_gap);
  return rep;
}

ResidualReport verify_R(const OtpSystem& sys, const SzegoData& sd, int n, const ContourConfig& cc,
                        Convention conv) {
  return verify_R(RhChain(sys, sd, n, cc, conv));
}

GNorms contour_g_norm(const RhChain& chain, double height) {
  GNorms g;
  const Matrix2 id = Matrix2::Identity();
  for (double x : axis_grid(chain.contours().contour_points)) {
    g.upper = std::max(g.upper, max_norm(Matrix2(chain.G({x, height}, Side::upper) - id)));
    g.lower = std::max(g.lower, max_norm(Matrix2(chain.G({x, -height}, Side::lower) - id)));
  }
  return g;
}

double collar_g_norm(const RhChain& chain) {
  const ContourConfig& cc = chain.contours();
  const Matrix2 id = Matrix2::Identity();
  double m = 0.0;
  for (double y : linspace(cc.r - cc.epsilon, cc.r + cc.epsilon, cc.band_y)) {
    for (double x : axis_grid(cc.band_x)) {
      m = std::max(m, max_norm(Matrix2(chain.G({x, y}, Side::upper) - id)));
      m = std::max(m, max_norm(Matrix2(chain.G({x, -y}, Side::lower) - id)));
    }
  }
  return m;
}

KIntegral k_integral(const RhChain& chain, double height) {
  const double h = height > 0.0 ? height : chain.contours().r;
  const QuadratureConfig& q = chain.contours().quad;
  const Matrix2 id = Matrix2::Identity();
  auto upper = [&](double x) -> Matrix2 {
    const Complex t(x, h);
    return chain.R(t, Region::A2plus) * (chain.G(t, Side::upper) - id);
  };
  auto lower = [&](double x) -> Matrix2 {
    const Complex t(x, -h);
    return chain.R(t, Region::A1minus) * (chain.G(t, Side::lower) - id);
  };
  const auto iu = periodic_trapezoid(upper, q);
  const auto il = periodic_trapezoid(lower, q);

  KIntegral out;
  out.height = h;
  // L_h runs right to left, L_{-h}^- left to right.
  out.upper_leg = -iu.value / (4.0 * kPi);
  out.lower_leg = il.value / (4.0 * kPi);
  out.k = out.upper_leg + out.lower_leg;
  out.distance_to_minus_half = max_norm(Matrix2(out.k + 0.5 * id));
  out.g_norm = contour_g_norm(chain, h).max();
  out.converged = iu.converged && il.converged;
  return out;
}

KIntegral k_integral(const OtpSystem& sys, const SzegoData& sd, int n, const ContourConfig& cc,
                    Convention conv) {
  return k_integral(RhChain(sys, sd, n, cc, conv));
}

Matrix2 h_diagnostic(const RhChain& chain, const Complex& z) {
  const double h = chain.contours().r;
  const QuadratureConfig& q = chain.contours().quad;
  const Matrix2 id = Matrix2::Identity();
  auto cot = [](const Complex& u) { return std::cos(u) / std::sin(u); };
  auto upper = [&](double x) -> Matrix2 {
    const Complex t(x, h);
    return chain.R(t, Region::A2plus) * (chain.G(t, Side::upper) - id) * cot((t - z) / 2.0);
  };
  auto lower = [&](double x) -> Matrix2 {
    const Complex t(x, -h);
    return chain.R(t, Region::A1minus) * (chain.G(t, Side::lower) - id) * cot((t - z) / 2.0);
  };
  const Matrix2 total = -periodic_trapezoid(upper, q).value + periodic_trapezoid(lower, q).value;
  return total / (4.0 * kPi * kI);
}

BandResidualReport band_residual_check(const RhChain& chain, const RhChain& reference) {
  const SzegoData& sd = chain.szego();
  const ContourConfig& cc = chain.contours();
  const double r = cc.r, eps = cc.epsilon;
  const Matrix2 half = 0.5 * Matrix2::Identity();

  BandResidualReport t;
  t.n = chain.n();
  t.n_ref = reference.n();
  for (double y : linspace(-0.5 * r, 0.5 * r, cc.band_y)) {
    for (double x : axis_grid(cc.band_x)) {
      const Complex z(x, y);
      const Matrix2 rn = chain.R_band(z);
      const Matrix2 w = rn - model_term(sd, z);
      t.literal_residual = std::max(t.literal_residual, max_norm(Matrix2(w - half)));
      t.self_convergence = std::max(t.self_convergence, max_norm(Matrix2(rn - reference.R_band(z))));
    }
  }
  t.collar_norm = collar_g_norm(chain);
  t.eta_hat = t.collar_norm > 0.0 ? t.self_convergence / t.collar_norm : 0.0;

  for (double y : linspace(r - eps, r + eps, cc.band_y)) {
    for (double x : axis_grid(cc.band_x)) {
      for (double s : {1.0, -1.0}) {
        const Complex z(x, s * y);
        t.d_eps = std::max(t.d_eps, max_norm(Matrix2(model_term(sd, z) + half)));
      }
    }
  }

  const std::vector<double> xs = axis_grid(cc.contour_points);
  const double he = r + 0.5 * eps;
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      for (double xt : xs) {
        for (double xu : xs) {
          const Complex u = (Complex(xu, s2 * he) - Complex(xt, s1 * r)) / 2.0;
          t.K_eps = std::max(t.K_eps, std::abs(std::cos(u) / std::sin(u)));
        }
      }
    }
  }
  t.delta = 1.0 / (2.0 * t.K_eps + 1.0);
  t.below_delta = t.collar_norm < t.delta;

  for (double x : xs) {
    t.r_minus_norm = std::max(t.r_minus_norm, max_norm(chain.R({x, r}, Region::A2plus)));
    t.r_minus_norm = std::max(t.r_minus_norm, max_norm(chain.R({x, -r}, Region::A1minus)));
  }
  const Complex top(0.0, 8.0);
  t.w_upper_scaled =
      std::exp(kI * top) * (chain.R(top, Region::B2minus) - model_term(sd, top));
  return t;
}

BandResidualReport band_residual_check(const OtpSystem& sys, const SzegoData& sd, int n, int n_ref,
                                const ContourConfig& cc, Convention conv) {
  return band_residual_check(RhChain(sys, sd, n, cc, conv), RhChain(sys, sd, n_ref, cc, conv));
}

Prediction asymptotic_prediction(const RhChain& chain, const RhChain& reference, double x) {
  const SzegoData& sd = chain.szego();
  const Complex z(x, 0.0);
  const Matrix2 r_hat = reference.R(z, Region::A2plus);
  const Matrix2 m = matrix_M(sd, Side::upper, chain.convention());
  const Matrix2 v_inv = mat2_inverse(matrix_V(sd, chain.n(), z, Region::A2plus));
  const Matrix2 u_inv = mat2_inverse(chain.U(z, Side::upper));
  Prediction p;
  p.predicted = (r_hat * m * v_inv * u_inv)(0, 0);
  p.actual = chain.solution().first_row(z, Side::upper)(0);
  p.error = std::abs(p.predicted - p.actual);
  return p;
}

Prediction asymptotic_prediction(const OtpSystem& sys, const SzegoData& sd, int n, double x,
                                 const ContourConfig& cc, int n_ref) {
  const int ref = n_ref > 0 ? n_ref : sys.max_degree();
  return asymptotic_prediction(RhChain(sys, sd, n, cc), RhChain(sys, sd, ref, cc), x);
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_slope: need at least two matching points");
  }
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace otprh
