#include "otprh/szego.hpp"

#include <cmath>
#include <stdexcept>

namespace otprh {

SzegoData::SzegoData(PeriodicWeight w, const QuadratureConfig& cfg)
    : w_(std::move(w)),
      gamma_(build_cauchy([this](double t) { return Complex(std::log(w_(t)), 0.0); }, cfg)),
      C_(0.5 * gamma_.coeff(0).real()) {}

Complex SzegoData::gamma(const Complex& z) const { return eval_cauchy(gamma_, z); }

Complex SzegoData::d_plus(const Complex& z) const {
  if (!(z.imag() > 0.0)) throw std::domain_error("d_plus: needs Im z > 0");
  return std::exp(gamma_.upper(z) - C_);
}

Complex SzegoData::d_minus(const Complex& z) const {
  if (!(z.imag() < 0.0)) throw std::domain_error("d_minus: needs Im z < 0");
  return std::exp(-gamma_.lower(z) - C_);
}

Complex SzegoData::d_plus_boundary(double x) const {
  return std::exp(gamma_.upper(Complex(x, 0.0)) - C_);
}

Complex SzegoData::d_minus_boundary(double x) const {
  return std::exp(-gamma_.lower(Complex(x, 0.0)) - C_);
}

Complex SzegoData::frak_d(int sign, const Complex& z) const {
  const double y = z.imag();
  const double rho = w_.strip_radius();
  if (sign > 0) {
    if (y > 0.0) return d_plus(z);
    if (!(y > -rho)) throw std::domain_error("frak_d(+): needs Im z > -rho");
    const Complex dm = y < 0.0 ? d_minus(z) : d_minus_boundary(z.real());
    if (!(std::abs(dm) > 0.0)) throw std::domain_error("frak_d(+): D- vanishes");
    return std::exp(-2.0 * C_) * w_(z) / dm;
  }
  if (y < 0.0) return d_minus(z);
  if (!(y < rho)) throw std::domain_error("frak_d(-): needs Im z < rho");
  const Complex dp = y > 0.0 ? d_plus(z) : d_plus_boundary(z.real());
  if (!(std::abs(dp) > 0.0)) throw std::domain_error("frak_d(-): D+ vanishes");
  return std::exp(-2.0 * C_) * w_(z) / dp;
}

double szego_constant(const PeriodicWeight& w, const QuadratureConfig& cfg) {
  const auto r = periodic_trapezoid([&w](double t) { return std::log(w(t)); }, cfg);
  return r.value / (4.0 * kPi);
}

}  // namespace otprh
