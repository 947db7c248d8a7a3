#include "otprh/quadrature.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace otprh {

void QuadratureConfig::validate() const {
  const bool pow2 = n > 0 && (n & (n - 1)) == 0;
  if (n < 8 || !pow2) throw std::invalid_argument("QuadratureConfig: N must be a power of two >= 8");
  if (!(tol > 0.0)) throw std::invalid_argument("QuadratureConfig: tol must be positive");
  if (n > n_max) throw std::invalid_argument("QuadratureConfig: N exceeds N_max");
}

double default_quadrature_tolerance() {
  if (const char* env = std::getenv("OTP_RH_QUAD_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
    throw std::invalid_argument(std::string("OTP_RH_QUAD_TOL: invalid value '") + env + "'");
  }
  return QuadratureConfig{}.tol;
}

namespace {

VectorXc sampled_coefficients(const std::function<Complex(double)>& f, int K, int n,
                              Eigen::FFT<double>& fft) {
  std::vector<Complex> samples(n), spectrum;
  for (int j = 0; j < n; ++j) samples[j] = f(kTwoPi * j / n);
  fft.fwd(spectrum, samples);
  VectorXc c(2 * K + 1);
  for (int k = -K; k <= K; ++k) c(k + K) = spectrum[(k + n) % n] / static_cast<double>(n);
  return c;
}

}  // namespace

FourierSeries fourier_series(const std::function<Complex(double)>& f, int K,
                             const QuadratureConfig& cfg) {
  cfg.validate();
  if (K < 0) throw std::invalid_argument("fourier_series: K must be >= 0");
  const int need = detail::next_pow2_at_least(2 * K + 2);
  if (need > cfg.n_max) {
    throw std::invalid_argument("fourier_series: K too large for N_max (aliasing guard)");
  }
  Eigen::FFT<double> fft;
  FourierSeries out;
  out.K = K;
  int n = std::max(cfg.n, need);
  VectorXc prev = sampled_coefficients(f, K, n, fft);
  while (true) {
    if (2 * n > cfg.n_max) {
      out.coeffs = prev;
      out.nodes = n;
      out.converged = false;
      return out;
    }
    n *= 2;
    VectorXc next = sampled_coefficients(f, K, n, fft);
    const double diff = (next - prev).cwiseAbs().maxCoeff();
    const double scale = next.cwiseAbs().maxCoeff();
    prev = std::move(next);
    if (diff <= cfg.tol * scale) {
      out.coeffs = prev;
      out.nodes = n;
      out.converged = true;
      out.change = diff;
      return out;
    }
  }
}

}  // namespace otprh
