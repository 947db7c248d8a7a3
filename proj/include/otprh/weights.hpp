#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "otprh/quadrature.hpp"
#include "otprh/types.hpp"

namespace otprh {

enum class WeightKind { constant, cosine_perturbed, poisson, exp_trig };

/// Strictly positive analytic 2pi-periodic weight from a fixed catalog.
///
/// Grammar: `const` | `cos:<a>` | `poisson:<rho>` | `exptrig:<c1>[,<c2>,...]`.
///
///   const          w = 1
///   cos:a          w = 1 + a cos x                          |a| < 1
///   poisson:p      w = (1 - p^2) / (1 - 2 p cos x + p^2)    0 < p < 1
///   exptrig:c...   w = exp(sum_k c_k cos kx)
///
/// The strip radius is the half-width of {|Im z| < rho} on which w is
/// analytic and zero-free, capped at kStripCap for entire weights.
class PeriodicWeight {
 public:
  static constexpr double kStripCap = 8.0;

  PeriodicWeight(WeightKind kind, std::vector<double> params, std::string spec);

  WeightKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }
  double strip_radius() const { return strip_radius_; }
  /// The spec string this weight was parsed from, echoed verbatim in reports.
  const std::string& spec() const { return spec_; }

  /// Analytic continuation; throws std::domain_error outside the strip.
  Complex operator()(const Complex& z) const;
  double operator()(double x) const;

  /// Same formula without the strip check (for validation sampling).
  Complex eval_unchecked(const Complex& z) const;

  /// factor * w, same strip. Not reachable from the weight-spec grammar; used to
  /// test scaling covariance. Throws std::invalid_argument unless factor > 0.
  PeriodicWeight scaled(double factor) const;
  double scale() const { return scale_; }

 private:
  Complex eval_shape(const Complex& z) const;

  WeightKind kind_;
  std::vector<double> params_;
  double strip_radius_;
  std::string spec_;
  double scale_ = 1.0;
};

/// Parses the weight-spec grammar and validates positivity on a 4096-point
/// grid plus non-vanishing at |Im z| = rho/2 and 3 rho/4.
/// Throws std::invalid_argument on any failure.
PeriodicWeight make_weight(std::string_view spec);

Complex eval_weight(const PeriodicWeight& w, const Complex& z);

/// Fourier coefficients (1/2pi) int ln w(t) e^{-ikt} dt for k = -K..K,
/// stored at index k + K.
VectorXc log_weight_fourier(const PeriodicWeight& w, int K,
                            const QuadratureConfig& cfg = {});

/// Fourier moments mu_k = (1/2pi) int w(t) e^{-ikt} dt for k = -K..K.
VectorXc weight_moments(const PeriodicWeight& w, int K,
                        const QuadratureConfig& cfg = {});

}  // namespace otprh
