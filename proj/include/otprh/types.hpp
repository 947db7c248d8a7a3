#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace otprh {

using Complex = std::complex<double>;

/// 2x2 complex matrix carrying every object of the Riemann-Hilbert chain.
using Matrix2 = Eigen::Matrix2cd;

using VectorXc = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Entrywise max-modulus norm; the sampled sup-norms all reduce to this.
template <typename Derived>
double max_norm(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

inline double max_norm(const Complex& z) { return std::abs(z); }
inline double max_norm(double x) { return std::abs(x); }

}  // namespace otprh
