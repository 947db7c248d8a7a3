#pragma once

#include <string>
#include <utility>
#include <vector>

#include "otprh/cauchy.hpp"
#include "otprh/szego.hpp"
#include "otprh/trigpoly.hpp"
#include "otprh/types.hpp"

namespace otprh {

/// Which normalization of the constant matrix M (and therefore of the axis
/// jump of S and the jump G of R) is used.
///
/// consistent: M = [[0, 2 e^{2C}], [-e^{-2C}/2, 0]] above the axis. This is
///   the only choice for which S M^{-1} is continuous across the axis when
///   C != 0; G on L_r then carries a factor e^{4C}.
/// literal: M = e^{2C} [[0, 2], [-1/2, 0]], G without the e^{4C}. Kept so
///   its axis mismatch can be measured. Both agree when C = 0.
enum class Convention { consistent, literal };

enum class Side { upper, lower };

enum class Region { A1plus, A1minus, A2plus, A2minus, Bplus, B1minus, B2minus };
enum class Partition { V, M };

const char* region_name(Region r);
const char* convention_name(Convention c);

/// Contour placement and sampling grids.
///
/// L_r runs from 2pi + ir to ir, L_{-r} from 2pi - ir to -ir. The collar
/// Omega_eps is the pair of bands |Im z -+ r| <= eps.
struct ContourConfig {
  double r = 0.5;
  double epsilon = 0.1;
  int axis_points = 128;
  int contour_points = 128;
  int band_x = 64;
  int band_y = 8;
  QuadratureConfig quad;

  /// r = min(rho/2, 1), eps = r/5.
  static ContourConfig for_weight(const PeriodicWeight& w);
  /// Throws std::invalid_argument unless 0 < eps < r/2 and r < rho.
  void validate(double rho) const;
};

/// Checked inverse; throws std::domain_error if |det| <= 1e-300.
Matrix2 mat2_inverse(const Matrix2& a);
inline double mat2_norm(const Matrix2& a) { return max_norm(a); }

/// (Xi_1, Xi_2) = (diag(1/cos nz, e^{iz}), diag(1/cos nz, e^{i(2n-1)z})).
/// Throws std::domain_error when |cos nz| < 1e-12.
std::pair<Matrix2, Matrix2> growth_matrices(int n, const Complex& z);

/// Throws std::domain_error for points on a contour of the partition
/// (Im z in {0, +-r} for V, Im z in {+-r} for M).
Region classify_region(const Complex& z, const ContourConfig& cc, Partition p);

/// The explicit solution Y of the periodic Riemann-Hilbert problem
///
///   Y = [[varpi_{2n},        e^{-inz} C[varpi_{2n}]],
///        [a_n varpi_{2n-1},  a_n e^{-inz} C[varpi_{2n-1}]]]
///
/// The Cauchy transforms are evaluated with the modes that vanish by
/// orthogonality removed (|k| < n in row one, |k| < n-1 in row two), so the
/// growth at the strip ends is not polluted by rounding in those modes.
/// For n = 1 only the first row exists.
class ExactSolution {
 public:
  ExactSolution(const OtpSystem& sys, int n);

  int n() const { return n_; }
  bool has_second_row() const { return n_ >= 2; }
  Complex a() const { return a_; }
  const CauchyTransform& first_transform() const { return ct1_; }
  const CauchyTransform& second_transform() const { return ct2_; }

  Eigen::RowVector2cd first_row(const Complex& z, Side side) const;
  /// Full matrix; the side picks the series for the (1,2) and (2,2) entries.
  Matrix2 operator()(const Complex& z, Side side) const;
  /// Largest Fourier coefficient dropped by the restricted series.
  double dropped_modes() const;

 private:
  int n_;
  TrigPoly p1_, p2_;
  CauchyTransform ct1_, ct2_;
  Complex a_{};
};

/// Y at an off-axis point. Throws for n = 1 and for real z.
Matrix2 assemble_Y(const OtpSystem& sys, int n, const Complex& z);

Matrix2 matrix_U(const SzegoData& sd, int n, const Complex& z, Side side);
Matrix2 matrix_U(const SzegoData& sd, int n, const Complex& z);

/// L1 = [[1, 0], [e^{-i(2n-1)z} frakD-^2 / (2w), 1]].
Matrix2 lower_factor(const SzegoData& sd, int n, const Complex& z);
/// L2 = [[1, 0], [e^{i(2n-1)z} frakD+^2 / (2w), 1]].
Matrix2 upper_factor(const SzegoData& sd, int n, const Complex& z);

/// V by region tag: A1plus I, A1minus L1, A2plus e^{-iz} L2^{-1}, A2minus e^{-iz} I.
Matrix2 matrix_V(const SzegoData& sd, int n, const Complex& z, Region region);
Matrix2 matrix_V(const SzegoData& sd, int n, const Complex& z, const ContourConfig& cc);

Matrix2 matrix_M(const SzegoData& sd, Side side, Convention conv = Convention::consistent);
Matrix2 matrix_M(const SzegoData& sd, const Complex& z, Convention conv = Convention::consistent);

/// Closed-form axis jump of F: e^{2C} [[e^{2inx} frakD+^2/w, 2e^{ix}], [0, e^{-2i(n-1)x} frakD-^2/w]].
Matrix2 axis_jump_F(const SzegoData& sd, int n, double x);
/// Middle factor of the axis factorization L1 * middle * L2.
Matrix2 middle_factor(const SzegoData& sd, double x, Convention conv = Convention::consistent);
/// Axis jump of S from the upper band to the lower band.
Matrix2 upsilon(const SzegoData& sd, Convention conv = Convention::consistent);

/// The jump of R as an analytic function of t: the L_r formula for
/// leg == upper, the L_{-r} formula for leg == lower.
Matrix2 jump_G_formula(const SzegoData& sd, int n, const Complex& t, Side leg,
                       Convention conv = Convention::consistent);
/// G at a point of L_r or L_{-r}; throws std::domain_error off the contour.
Matrix2 jump_G(const SzegoData& sd, int n, const Complex& t, const ContourConfig& cc,
               Convention conv = Convention::consistent);

struct ChainValues {
  Matrix2 Y, F, S, R;
  Region region;      ///< V-partition region used for S
  bool on_axis = false;
};

/// Y -> F = Y U -> S = F V -> R = S M^{-1} for one weight and degree.
class RhChain {
 public:
  RhChain(const OtpSystem& sys, const SzegoData& sd, int n, ContourConfig cc,
          Convention conv = Convention::consistent);

  int n() const { return y_.n(); }
  const ContourConfig& contours() const { return cc_; }
  const SzegoData& szego() const { return *sd_; }
  const ExactSolution& solution() const { return y_; }
  Convention convention() const { return conv_; }

  Matrix2 Y(const Complex& z, Side side) const { return y_(z, side); }
  Matrix2 U(const Complex& z, Side side) const { return matrix_U(*sd_, n(), z, side); }
  Matrix2 F(const Complex& z, Side side) const;
  /// Region formulas; each is analytic up to and slightly past its region.
  Matrix2 S(const Complex& z, Region region) const;
  Matrix2 R(const Complex& z, Region region) const;
  /// R inside the band |Im z| < r (upper formula for Im z >= 0).
  Matrix2 R_band(const Complex& z) const;
  Matrix2 G(const Complex& t, Side leg) const { return jump_G_formula(*sd_, n(), t, leg, conv_); }

  /// Classifies z and evaluates the whole chain; on the axis R is taken
  /// from both sides and must agree to 1e-8.
  ChainValues at(const Complex& z) const;

 private:
  const SzegoData* sd_;
  ContourConfig cc_;
  Convention conv_;
  ExactSolution y_;
};

ChainValues transform_chain(const OtpSystem& sys, const SzegoData& sd, int n, const Complex& z,
                            const ContourConfig& cc, Convention conv = Convention::consistent);

}  // namespace otprh
