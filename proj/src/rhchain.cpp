#include "otprh/rhchain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace otprh {

const char* region_name(Region r) {
  switch (r) {
    case Region::A1plus: return "A1plus";
    case Region::A1minus: return "A1minus";
    case Region::A2plus: return "A2plus";
    case Region::A2minus: return "A2minus";
    case Region::Bplus: return "Bplus";
    case Region::B1minus: return "B1minus";
    case Region::B2minus: return "B2minus";
  }
  return "?";
}

const char* convention_name(Convention c) {
  return c == Convention::consistent ? "consistent" : "literal";
}

ContourConfig ContourConfig::for_weight(const PeriodicWeight& w) {
  ContourConfig cc;
  cc.r = std::min(0.5 * w.strip_radius(), 1.0);
  cc.epsilon = cc.r / 5.0;
  return cc;
}

void ContourConfig::validate(double rho) const {
  if (!(r > 0.0 && r < rho)) {
    throw std::invalid_argument("contour radius r = " + std::to_string(r) + " must lie in (0, rho = " +
                                std::to_string(rho) + ")");
  }
  if (!(epsilon > 0.0 && epsilon < 0.5 * r)) {
    throw std::invalid_argument("collar width epsilon = " + std::to_string(epsilon) +
                                " must lie in (0, r/2)");
  }
  if (axis_points < 1 || contour_points < 1 || band_x < 1 || band_y < 1) {
    throw std::invalid_argument("grid sizes must be positive");
  }
  quad.validate();
}

Matrix2 mat2_inverse(const Matrix2& a) {
  const Complex det = a.determinant();
  if (!(std::abs(det) > 1e-300)) throw std::domain_error("mat2_inverse: singular matrix");
  Matrix2 inv;
  inv << a(1, 1), -a(0, 1), -a(1, 0), a(0, 0);
  return inv / det;
}

std::pair<Matrix2, Matrix2> growth_matrices(int n, const Complex& z) {
  const Complex c = std::cos(static_cast<double>(n) * z);
  if (std::abs(c) < 1e-12) throw std::domain_error("growth_matrices: cos nz vanishes");
  Matrix2 x1 = Matrix2::Zero(), x2 = Matrix2::Zero();
  x1(0, 0) = x2(0, 0) = 1.0 / c;
  x1(1, 1) = std::exp(kI * z);
  x2(1, 1) = std::exp(kI * (static_cast<double>(2 * n - 1) * z));
  return {x1, x2};
}

Region classify_region(const Complex& z, const ContourConfig& cc, Partition p) {
  const double y = z.imag();
  const double r = cc.r;
  if (y == r || y == -r) throw std::domain_error("classify_region: point on L_{+-r}");
  if (p == Partition::M) {
    if (y > r) return Region::B2minus;
    if (y < -r) return Region::B1minus;
    return Region::Bplus;
  }
  if (y == 0.0) throw std::domain_error("classify_region: point on the real axis");
  if (y < -r) return Region::A1plus;
  if (y < 0.0) return Region::A1minus;
  if (y < r) return Region::A2plus;
  return Region::A2minus;
}

// ---------------------------------------------------------------------------

ExactSolution::ExactSolution(const OtpSystem& sys, int n) : n_(n) {
  if (n < 1 || n > sys.max_degree()) {
    throw std::invalid_argument("ExactSolution: n = " + std::to_string(n) + " outside 1.." +
                                std::to_string(sys.max_degree()));
  }
  const QuadratureConfig& cfg = sys.quadrature();
  p1_ = sys.monic_first(n);
  ct1_ = build_cauchy(p1_, sys.weight(), cfg);
  if (n >= 2) {
    p2_ = sys.monic_second(n);
    ct2_ = build_cauchy(p2_, sys.weight(), cfg);
    a_ = *sys.a_const(n);
  }
}

Eigen::RowVector2cd ExactSolution::first_row(const Complex& z, Side side) const {
  Eigen::RowVector2cd row;
  row(0) = p1_(z);
  row(1) = side == Side::upper ? ct1_.upper(z, n_, n_) : ct1_.lower(z, n_, n_);
  return row;
}

Matrix2 ExactSolution::operator()(const Complex& z, Side side) const {
  if (!has_second_row()) {
    throw std::domain_error("Y: the second row has no solution for n = 1");
  }
  Matrix2 y;
  y.row(0) = first_row(z, side);
  y(1, 0) = a_ * p2_(z);
  y(1, 1) = a_ * (side == Side::upper ? ct2_.upper(z, n_ - 1, n_) : ct2_.lower(z, n_ - 1, n_));
  return y;
}

double ExactSolution::dropped_modes() const {
  double d = ct1_.dropped_modes(n_);
  if (has_second_row()) d = std::max(d, std::abs(a_) * ct2_.dropped_modes(n_ - 1));
  return d;
}

Matrix2 assemble_Y(const OtpSystem& sys, int n, const Complex& z) {
  if (n < 2) throw std::invalid_argument("assemble_Y: the second row has no solution for n = 1");
  if (z.imag() == 0.0) throw std::domain_error("assemble_Y: z on the real axis");
  const ExactSolution y(sys, n);
  return y(z, z.imag() > 0.0 ? Side::upper : Side::lower);
}

// ---------------------------------------------------------------------------

Matrix2 matrix_U(const SzegoData& sd, int n, const Complex& z, Side side) {
  Matrix2 u = Matrix2::Zero();
  if (side == Side::upper) {
    const Complex d = sd.frak_d(+1, z);
    u(0, 0) = std::exp(kI * (static_cast<double>(n) * z)) * d / 2.0;
    u(1, 1) = std::exp(kI * z) / d;
  } else {
    const Complex d = sd.frak_d(-1, z);
    u(0, 0) = std::exp(-kI * (static_cast<double>(n) * z)) * d / 2.0;
    u(1, 1) = std::exp(kI * (static_cast<double>(2 * n - 1) * z)) / d;
  }
  return u;
}

Matrix2 matrix_U(const SzegoData& sd, int n, const Complex& z) {
  if (z.imag() == 0.0) throw std::domain_error("matrix_U: z on the real axis");
  return matrix_U(sd, n, z, z.imag() > 0.0 ? Side::upper : Side::lower);
}

Matrix2 lower_factor(const SzegoData& sd, int n, const Complex& z) {
  const Complex d = sd.frak_d(-1, z);
  Matrix2 l = Matrix2::Identity();
  l(1, 0) = 0.5 * std::exp(-kI * (static_cast<double>(2 * n - 1) * z)) * d * d / sd.weight()(z);
  return l;
}

Matrix2 upper_factor(const SzegoData& sd, int n, const Complex& z) {
  const Complex d = sd.frak_d(+1, z);
  Matrix2 l = Matrix2::Identity();
  l(1, 0) = 0.5 * std::exp(kI * (static_cast<double>(2 * n - 1) * z)) * d * d / sd.weight()(z);
  return l;
}

Matrix2 matrix_V(const SzegoData& sd, int n, const Complex& z, Region region) {
  switch (region) {
    case Region::A1plus:
      return Matrix2::Identity();
    case Region::A1minus:
      return lower_factor(sd, n, z);
    case Region::A2plus: {
      Matrix2 v = upper_factor(sd, n, z);
      v(1, 0) = -v(1, 0);
      return std::exp(-kI * z) * v;
    }
    case Region::A2minus:
      return std::exp(-kI * z) * Matrix2::Identity();
    default:
      throw std::invalid_argument("matrix_V: region is not part of the V partition");
  }
}

Matrix2 matrix_V(const SzegoData& sd, int n, const Complex& z, const ContourConfig& cc) {
  return matrix_V(sd, n, z, classify_region(z, cc, Partition::V));
}

Matrix2 matrix_M(const SzegoData& sd, Side side, Convention conv) {
  if (side == Side::lower) return Matrix2::Identity();
  const double e2c = std::exp(2.0 * sd.constant());
  Matrix2 m = Matrix2::Zero();
  if (conv == Convention::consistent) {
    m(0, 1) = 2.0 * e2c;
    m(1, 0) = -0.5 / e2c;
  } else {
    m(0, 1) = 2.0 * e2c;
    m(1, 0) = -0.5 * e2c;
  }
  return m;
}

Matrix2 matrix_M(const SzegoData& sd, const Complex& z, Convention conv) {
  if (z.imag() == 0.0) throw std::domain_error("matrix_M: z on the real axis");
  return matrix_M(sd, z.imag() > 0.0 ? Side::upper : Side::lower, conv);
}

Matrix2 axis_jump_F(const SzegoData& sd, int n, double x) {
  const Complex dp = sd.frak_d(+1, Complex(x, 0.0));
  const Complex dm = sd.frak_d(-1, Complex(x, 0.0));
  const double w = sd.weight()(x);
  const double e2c = std::exp(2.0 * sd.constant());
  Matrix2 j = Matrix2::Zero();
  j(0, 0) = e2c * std::exp(kI * (2.0 * n * x)) * dp * dp / w;
  j(0, 1) = e2c * 2.0 * std::exp(kI * x);
  j(1, 1) = e2c * std::exp(-kI * (2.0 * (n - 1) * x)) * dm * dm / w;
  return j;
}

Matrix2 middle_factor(const SzegoData& sd, double x, Convention conv) {
  return std::exp(kI * x) * matrix_M(sd, Side::upper, conv);
}

Matrix2 upsilon(const SzegoData& sd, Convention conv) {
  return mat2_inverse(matrix_M(sd, Side::upper, conv));
}

Matrix2 jump_G_formula(const SzegoData& sd, int n, const Complex& t, Side leg, Convention conv) {
  Matrix2 g = Matrix2::Identity();
  const double m = static_cast<double>(2 * n - 1);
  if (leg == Side::upper) {
    const Complex d = sd.frak_d(+1, t);
    const double scale = conv == Convention::consistent ? std::exp(4.0 * sd.constant()) : 1.0;
    g(0, 1) = -2.0 * scale * std::exp(kI * (m * t)) * d * d / sd.weight()(t);
  } else {
    const Complex d = sd.frak_d(-1, t);
    g(1, 0) = -0.5 * std::exp(-kI * (m * t)) * d * d / sd.weight()(t);
  }
  return g;
}

Matrix2 jump_G(const SzegoData& sd, int n, const Complex& t, const ContourConfig& cc,
               Convention conv) {
  constexpr double kOnContour = 1e-12;
  if (std::abs(t.imag() - cc.r) <= kOnContour) return jump_G_formula(sd, n, t, Side::upper, conv);
  if (std::abs(t.imag() + cc.r) <= kOnContour) return jump_G_formula(sd, n, t, Side::lower, conv);
  throw std::domain_error("jump_G: t is not on L_r or L_{-r}");
}

// ---------------------------------------------------------------------------

RhChain::RhChain(const OtpSystem& sys, const SzegoData& sd, int n, ContourConfig cc,
                 Convention conv)
    : sd_(&sd), cc_(cc), conv_(conv), y_(sys, n) {
  cc_.validate(sd.strip_radius());
}

Matrix2 RhChain::F(const Complex& z, Side side) const { return Y(z, side) * U(z, side); }

Matrix2 RhChain::S(const Complex& z, Region region) const {
  const Side side =
      (region == Region::A2plus || region == Region::A2minus) ? Side::upper : Side::lower;
  return F(z, side) * matrix_V(*sd_, n(), z, region);
}

Matrix2 RhChain::R(const Complex& z, Region region) const {
  switch (region) {
    case Region::Bplus:
      return R_band(z);
    case Region::B1minus:
      region = Region::A1plus;
      break;
    case Region::B2minus:
      region = Region::A2minus;
      break;
    default:
      break;
  }
  const Side side =
      (region == Region::A2plus || region == Region::A2minus) ? Side::upper : Side::lower;
  return S(z, region) * mat2_inverse(matrix_M(*sd_, side, conv_));
}

Matrix2 RhChain::R_band(const Complex& z) const {
  return R(z, z.imag() >= 0.0 ? Region::A2plus : Region::A1minus);
}

ChainValues RhChain::at(const Complex& z) const {
  ChainValues v;
  if (z.imag() == 0.0) {
    v.on_axis = true;
    v.region = Region::A2plus;
    v.Y = Y(z, Side::upper);
    v.F = F(z, Side::upper);
    v.S = S(z, Region::A2plus);
    v.R = R(z, Region::A2plus);
    const Matrix2 below = R(z, Region::A1minus);
    const double gap = max_norm(Matrix2(v.R - below));
    if (gap > 1e-8 * std::max(1.0, max_norm(v.R))) {
      throw std::runtime_error("transform_chain: R is discontinuous across the axis (gap " +
                               std::to_string(gap) + ")");
    }
    return v;
  }
  v.region = classify_region(z, cc_, Partition::V);
  const Side side = z.imag() > 0.0 ? Side::upper : Side::lower;
  v.Y = Y(z, side);
  v.F = F(z, side);
  v.S = S(z, v.region);
  v.R = R(z, v.region);
  return v;
}

ChainValues transform_chain(const OtpSystem& sys, const SzegoData& sd, int n, const Complex& z,
                            const ContourConfig& cc, Convention conv) {
  return RhChain(sys, sd, n, cc, conv).at(z);
}

}  // namespace otprh
