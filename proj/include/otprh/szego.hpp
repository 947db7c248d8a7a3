#pragma once

#include "otprh/cauchy.hpp"
#include "otprh/quadrature.hpp"
#include "otprh/types.hpp"
#include "otprh/weights.hpp"

namespace otprh {

/// Szego data of a weight: Gamma = periodic Cauchy transform of ln w with
/// unit multiplier, C = (1/4 pi) int ln w, and
///
///   D+(z) = exp(Gamma(z) - C),   Im z > 0
///   D-(z) = exp(-Gamma(z) - C),  Im z < 0
///
/// frak D+ equals D+ above the axis and e^{-2C} w / D- on (-rho, 0];
/// frak D- equals D- below the axis and e^{-2C} w / D+ on [0, rho).
class SzegoData {
 public:
  explicit SzegoData(PeriodicWeight w, const QuadratureConfig& cfg = {});

  const PeriodicWeight& weight() const { return w_; }
  double constant() const { return C_; }
  double strip_radius() const { return w_.strip_radius(); }
  const CauchyTransform& gamma_transform() const { return gamma_; }

  Complex gamma(const Complex& z) const;
  Complex d_plus(const Complex& z) const;
  Complex d_minus(const Complex& z) const;
  /// Limits of D+ from above and D- from below at real x.
  Complex d_plus_boundary(double x) const;
  Complex d_minus_boundary(double x) const;
  /// sign > 0: frak D+, sign < 0: frak D-.
  Complex frak_d(int sign, const Complex& z) const;

 private:
  PeriodicWeight w_;
  CauchyTransform gamma_;
  double C_ = 0.0;
};

/// (1/4 pi) int_0^{2pi} ln w, by the trapezoid rule.
double szego_constant(const PeriodicWeight& w, const QuadratureConfig& cfg = {});

inline Complex gamma(const SzegoData& sd, const Complex& z) { return sd.gamma(z); }
inline Complex d_plus(const SzegoData& sd, const Complex& z) { return sd.d_plus(z); }
inline Complex d_minus(const SzegoData& sd, const Complex& z) { return sd.d_minus(z); }
inline Complex frak_d(const SzegoData& sd, int sign, const Complex& z) { return sd.frak_d(sign, z); }

}  // namespace otprh
