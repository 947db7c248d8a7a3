#include "otprh/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace otprh {

CauchyTransform::CauchyTransform(VectorXc coeffs, double tail, bool converged)
    : g_(std::move(coeffs)), K_(static_cast<int>(g_.size() / 2)), tail_(tail),
      converged_(converged) {}

Complex CauchyTransform::upper(const Complex& z, int min_mode, int shift) const {
  const int k0 = std::max(min_mode, 0);
  if (k0 > K_) return {};
  const Complex q = std::exp(kI * z);
  Complex p = std::exp(kI * (static_cast<double>(k0 - shift) * z));
  Complex s{};
  for (int k = k0; k <= K_; ++k) {
    s += (k == 0 ? 0.5 : 1.0) * g_(k + K_) * p;
    p *= q;
  }
  return s;
}

Complex CauchyTransform::lower(const Complex& z, int min_mode, int shift) const {
  const int k0 = std::max(min_mode, 0);
  if (k0 > K_) return {};
  const Complex q = std::exp(-kI * z);
  Complex p = std::exp(-kI * (static_cast<double>(k0 + shift) * z));
  Complex s{};
  for (int k = k0; k <= K_; ++k) {
    s += (k == 0 ? 0.5 : 1.0) * g_(K_ - k) * p;
    p *= q;
  }
  return -s;
}

double CauchyTransform::dropped_modes(int min_mode) const {
  double m = 0.0;
  for (int k = 0; k < min_mode && k <= K_; ++k) {
    m = std::max({m, std::abs(coeff(k)), std::abs(coeff(-k))});
  }
  return m;
}

CauchyTransform build_cauchy(const std::function<Complex(double)>& density,
                             const QuadratureConfig& cfg) {
  int K = 16;
  while (true) {
    const FourierSeries fs = fourier_series(density, K, cfg);
    const VectorXc& g = fs.coeffs;
    const double gmax = g.cwiseAbs().maxCoeff();
    const double cut = CauchyTransform::kTailTolerance * gmax;
    // Tail criterion on the outermost quarter of the computed modes.
    double edge = 0.0;
    for (int k = K - K / 4; k <= K; ++k) edge = std::max({edge, std::abs(g(K + k)), std::abs(g(K - k))});
    const bool tail_ok = edge <= cut;
    if (tail_ok || 2 * K > CauchyTransform::kMaxModes) {
      int m = K;
      while (m > 0 && std::abs(g(K + m)) <= cut && std::abs(g(K - m)) <= cut) --m;
      double dropped = 0.0;
      for (int k = m + 1; k <= K; ++k) dropped = std::max({dropped, std::abs(g(K + k)), std::abs(g(K - k))});
      const double rel = gmax > 0.0 ? dropped / gmax : 0.0;
      return CauchyTransform(VectorXc(g.segment(K - m, 2 * m + 1)), rel, tail_ok && fs.converged);
    }
    K *= 2;
  }
}

CauchyTransform build_cauchy(const TrigPoly& f, const PeriodicWeight& w,
                             const QuadratureConfig& cfg) {
  return build_cauchy([&](double t) { return f(t) * w(t); }, cfg);
}

Complex eval_cauchy(const CauchyTransform& ct, const Complex& z) {
  if (z.imag() > 0.0) return ct.upper(z);
  if (z.imag() < 0.0) return ct.lower(z);
  throw std::domain_error("eval_cauchy: z on the real axis, use boundary_values");
}

std::pair<Complex, Complex> boundary_values(const CauchyTransform& ct, double x) {
  return {ct.upper(Complex(x, 0.0)), ct.lower(Complex(x, 0.0))};
}

Complex cauchy_at_infinity(const CauchyTransform& ct, int sign) {
  return (sign > 0 ? 0.5 : -0.5) * ct.coeff(0);
}

}  // namespace otprh
