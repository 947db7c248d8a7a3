#include "otprh/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace otprh {

namespace {

double parse_number(std::string_view text, std::string_view spec) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw std::invalid_argument("weight spec '" + std::string(spec) +
                                "': cannot parse number '" + std::string(text) + "'");
  }
  return v;
}

std::vector<double> parse_list(std::string_view text, std::string_view spec) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_number(text.substr(start, comma - start), spec));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double compute_strip_radius(WeightKind kind, const std::vector<double>& p) {
  switch (kind) {
    case WeightKind::constant:
    case WeightKind::exp_trig:
      return PeriodicWeight::kStripCap;
    case WeightKind::cosine_perturbed: {
      const double a = std::abs(p[0]);
      if (a == 0.0) return PeriodicWeight::kStripCap;
      return std::min(std::acosh(1.0 / a), PeriodicWeight::kStripCap);
    }
    case WeightKind::poisson:
      return std::min(std::log(1.0 / p[0]), PeriodicWeight::kStripCap);
  }
  return PeriodicWeight::kStripCap;
}

}  // namespace

PeriodicWeight::PeriodicWeight(WeightKind kind, std::vector<double> params, std::string spec)
    : kind_(kind), params_(std::move(params)), strip_radius_(0.0), spec_(std::move(spec)) {
  strip_radius_ = compute_strip_radius(kind_, params_);
}

Complex PeriodicWeight::eval_unchecked(const Complex& z) const {
  return scale_ * eval_shape(z);
}

Complex PeriodicWeight::eval_shape(const Complex& z) const {
  switch (kind_) {
    case WeightKind::constant:
      return {1.0, 0.0};
    case WeightKind::cosine_perturbed:
      return 1.0 + params_[0] * std::cos(z);
    case WeightKind::poisson: {
      const double p = params_[0];
      return (1.0 - p * p) / (1.0 - 2.0 * p * std::cos(z) + p * p);
    }
    case WeightKind::exp_trig: {
      Complex s{0.0, 0.0};
      for (std::size_t k = 0; k < params_.size(); ++k) {
        s += params_[k] * std::cos(static_cast<double>(k + 1) * z);
      }
      return std::exp(s);
    }
  }
  return {0.0, 0.0};
}

Complex PeriodicWeight::operator()(const Complex& z) const {
  if (!(std::abs(z.imag()) < strip_radius_)) {
    throw std::domain_error("eval_weight: |Im z| = " + std::to_string(std::abs(z.imag())) +
                            " outside strip of radius " + std::to_string(strip_radius_));
  }
  return eval_unchecked(z);
}

PeriodicWeight PeriodicWeight::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("PeriodicWeight::scaled: factor must be positive");
  }
  PeriodicWeight out = *this;
  out.scale_ *= factor;
  out.spec_ += "*" + std::to_string(factor);
  return out;
}

double PeriodicWeight::operator()(double x) const { return eval_unchecked(Complex(x, 0.0)).real(); }

Complex eval_weight(const PeriodicWeight& w, const Complex& z) { return w(z); }

PeriodicWeight make_weight(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view tail =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const std::string s(spec);

  WeightKind kind;
  std::vector<double> params;
  if (head == "const") {
    if (colon != std::string_view::npos) {
      throw std::invalid_argument("weight spec '" + s + "': const takes no parameters");
    }
    kind = WeightKind::constant;
  } else if (head == "cos" && colon != std::string_view::npos) {
    kind = WeightKind::cosine_perturbed;
    params.push_back(parse_number(tail, spec));
    const double a = std::abs(params[0]);
    if (a == 1.0) {
      throw std::invalid_argument("weight spec '" + s +
                                  "': positivity violation (degenerate a = +-1, w has a zero)");
    }
    if (a > 1.0) {
      throw std::invalid_argument("weight spec '" + s + "': positivity violation (|a| > 1)");
    }
  } else if (head == "poisson" && colon != std::string_view::npos) {
    kind = WeightKind::poisson;
    params.push_back(parse_number(tail, spec));
    const double p = params[0];
    if (p == 0.0 || p == 1.0) {
      throw std::invalid_argument("weight spec '" + s + "': degenerate parameter (rho in {0, 1})");
    }
    if (!(p > 0.0 && p < 1.0)) {
      throw std::invalid_argument("weight spec '" + s + "': poisson parameter must lie in (0, 1)");
    }
  } else if (head == "exptrig" && colon != std::string_view::npos) {
    kind = WeightKind::exp_trig;
    params = parse_list(tail, spec);
  } else {
    throw std::invalid_argument("weight spec '" + s +
                                "': expected const | cos:<a> | poisson:<rho> | exptrig:<c1>[,...]");
  }

  PeriodicWeight w(kind, std::move(params), s);

  constexpr int kGrid = 4096;
  for (int j = 0; j < kGrid; ++j) {
    const double v = w(kTwoPi * j / kGrid);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("weight spec '" + s + "': positivity violation at x = " +
                                  std::to_string(kTwoPi * j / kGrid));
    }
  }
  const double rho = w.strip_radius();
  for (double h : {0.5 * rho, 0.75 * rho}) {
    for (int j = 0; j < 256; ++j) {
      const double x = kTwoPi * j / 256;
      for (double y : {h, -h}) {
        bool ok;
        if (kind == WeightKind::exp_trig) {
          // exp of a finite exponent never vanishes; the value itself may overflow.
          Complex e{};
          for (std::size_t k = 0; k < w.params().size(); ++k) {
            e += w.params()[k] * std::cos(static_cast<double>(k + 1) * Complex(x, y));
          }
          ok = std::isfinite(e.real()) && std::isfinite(e.imag());
        } else {
          const Complex v = w.eval_unchecked({x, y});
          ok = std::isfinite(v.real()) && std::isfinite(v.imag()) && std::abs(v) > 0.0;
        }
        if (!ok) {
          throw std::invalid_argument("weight spec '" + s + "': vanishes inside its strip");
        }
      }
    }
  }
  return w;
}

VectorXc log_weight_fourier(const PeriodicWeight& w, int K, const QuadratureConfig& cfg) {
  if (K < 0) throw std::invalid_argument("log_weight_fourier: K must be >= 0");
  return fourier_series([&w](double t) { return Complex(std::log(w(t)), 0.0); }, K, cfg).coeffs;
}

VectorXc weight_moments(const PeriodicWeight& w, int K, const QuadratureConfig& cfg) {
  if (K < 0) throw std::invalid_argument("weight_moments: K must be >= 0");
  return fourier_series([&w](double t) { return Complex(w(t), 0.0); }, K, cfg).coeffs;
}

}  // namespace otprh
