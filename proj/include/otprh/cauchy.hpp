#pragma once

#include <functional>
#include <utility>

#include "otprh/quadrature.hpp"
#include "otprh/trigpoly.hpp"
#include "otprh/types.hpp"
#include "otprh/weights.hpp"

namespace otprh {

/// Periodic Cauchy transform (1/4 pi i) int_0^{2pi} f(t) w(t) cot((t - z)/2) dt
/// held as the Fourier coefficients g_k of the density f w.
///
///   Im z > 0:   g_0/2 + sum_{k>=1} g_k e^{ikz}
///   Im z < 0:  -g_0/2 - sum_{k>=1} g_{-k} e^{-ikz}
///
/// Both series converge in the whole strip of analyticity of the density,
/// so each half-plane representation continues a little past the axis.
class CauchyTransform {
 public:
  /// Coefficient cutoff relative to max |g_k|.
  static constexpr double kTailTolerance = 1e-14;
  static constexpr int kMaxModes = 4096;

  CauchyTransform() = default;
  CauchyTransform(VectorXc coeffs, double tail, bool converged);

  int truncation() const { return K_; }
  Complex coeff(int k) const { return std::abs(k) <= K_ ? g_(k + K_) : Complex{}; }
  const VectorXc& coeffs() const { return g_; }
  /// Largest discarded |g_k| relative to max |g_k|.
  double tail() const { return tail_; }
  bool converged() const { return converged_; }

  /// Upper series restricted to modes k >= min_mode and multiplied by
  /// e^{-i shift z}: sum_{k>=min_mode} h_k g_k e^{i(k - shift) z}, h_0 = 1/2.
  Complex upper(const Complex& z, int min_mode = 0, int shift = 0) const;
  /// -sum_{k>=min_mode} h_k g_{-k} e^{-i(k + shift) z}.
  Complex lower(const Complex& z, int min_mode = 0, int shift = 0) const;

  /// max_{0<=k<min_mode} max(|g_k|, |g_{-k}|): what the restricted series drop.
  double dropped_modes(int min_mode) const;

 private:
  VectorXc g_ = VectorXc::Zero(1);
  int K_ = 0;
  double tail_ = 0.0;
  bool converged_ = true;
};

CauchyTransform build_cauchy(const std::function<Complex(double)>& density,
                             const QuadratureConfig& cfg = {});
CauchyTransform build_cauchy(const TrigPoly& f, const PeriodicWeight& w,
                             const QuadratureConfig& cfg = {});

/// Throws std::domain_error for real z; use boundary_values there.
Complex eval_cauchy(const CauchyTransform& ct, const Complex& z);

/// (limit from above, limit from below) at real x.
std::pair<Complex, Complex> boundary_values(const CauchyTransform& ct, double x);

/// +g_0/2 for sign > 0, -g_0/2 for sign < 0.
Complex cauchy_at_infinity(const CauchyTransform& ct, int sign);

}  // namespace otprh
