#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "otprh/types.hpp"

namespace otprh {

/// Discretization settings for every integral over one period.
struct QuadratureConfig {
  int n = 32;               ///< starting node count, power of two, >= 8
  double tol = 1e-12;       ///< relative agreement between successive doublings
  int n_max = 1 << 16;      ///< doubling cap

  /// Throws std::invalid_argument if the invariants N >= 8, power of two,
  /// tol > 0, N <= N_max do not hold.
  void validate() const;
};

/// Default tolerance, honouring the OTP_RH_QUAD_TOL environment override.
double default_quadrature_tolerance();

template <typename T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  int nodes = 0;
  bool converged = false;
  /// (N, |I_N - I_{N/2}|) for every doubling performed.
  std::vector<std::pair<int, double>> history;
};

namespace detail {

inline int next_pow2_at_least(int v) {
  int p = 8;
  while (p < v) p <<= 1;
  return p;
}

}  // namespace detail

/// Equispaced trapezoid rule on [0, 2pi). Doubles N until two successive
/// values agree within tol relative to max(|I|, int |f|); reports, but does
/// not throw on, non-convergence at N_max. Works for scalar, complex and
/// Eigen-matrix valued integrands.
template <typename F>
auto periodic_trapezoid(F&& f, const QuadratureConfig& cfg = {})
    -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  cfg.validate();

  QuadratureResult<T> out;
  int n = cfg.n;
  const T first = f(0.0);
  T sum = first;
  double abs_sum = max_norm(first);
  for (int j = 1; j < n; ++j) {
    const T v = f(kTwoPi * j / n);
    sum += v;
    abs_sum += max_norm(v);
  }
  T value = sum * (kTwoPi / n);

  while (true) {
    if (2 * n > cfg.n_max) {
      out.value = value;
      out.nodes = n;
      out.converged = false;
      if (!out.history.empty()) out.error_estimate = out.history.back().second;
      else out.error_estimate = std::numeric_limits<double>::infinity();
      return out;
    }
    const int m = 2 * n;
    for (int j = 1; j < m; j += 2) {
      const T v = f(kTwoPi * j / m);
      sum += v;
      abs_sum += max_norm(v);
    }
    const T next = sum * (kTwoPi / m);
    const double diff = max_norm(T(next - value));
    const double scale = std::max(max_norm(next), abs_sum * (kTwoPi / m));
    out.history.emplace_back(m, diff);
    value = next;
    n = m;
    if (diff <= cfg.tol * scale) {
      out.value = value;
      out.nodes = n;
      out.converged = true;
      out.error_estimate = diff;
      return out;
    }
  }
}

/// (1/2pi) int f(t) e^{-ikt} dt. The starting node count is raised so that
/// |k| < N/2; throws std::invalid_argument when that needs N > N_max.
template <typename F>
QuadratureResult<Complex> fourier_coefficient(F&& f, int k,
                                              const QuadratureConfig& cfg = {}) {
  QuadratureConfig c = cfg;
  const int need = detail::next_pow2_at_least(2 * std::abs(k) + 2);
  if (need > c.n_max) {
    throw std::invalid_argument("fourier_coefficient: |k| too large for N_max (aliasing guard)");
  }
  c.n = std::max(c.n, need);
  auto integrand = [&](double t) -> Complex {
    return Complex(f(t)) * std::exp(Complex(0.0, -k * t));
  };
  auto r = periodic_trapezoid(integrand, c);
  r.value /= kTwoPi;
  r.error_estimate /= kTwoPi;
  return r;
}

struct FourierSeries {
  VectorXc coeffs;   ///< c_k at index k + K
  int K = 0;
  int nodes = 0;
  bool converged = false;
  double change = 0.0;   ///< max coefficient change at the last doubling

  Complex operator[](int k) const { return coeffs(k + K); }
};

/// All coefficients c_k, |k| <= K, of a periodic function sampled on
/// equispaced nodes (FFT), doubling N until the coefficient vector is stable.
FourierSeries fourier_series(const std::function<Complex(double)>& f, int K,
                             const QuadratureConfig& cfg = {});

}  // namespace otprh
