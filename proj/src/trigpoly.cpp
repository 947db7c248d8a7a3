#include "otprh/trigpoly.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace otprh {

TrigPoly::TrigPoly(VectorXc coeffs) : c_(std::move(coeffs)) {
  if (c_.size() % 2 == 0) throw std::invalid_argument("TrigPoly: coefficient count must be odd");
}

TrigPoly TrigPoly::constant(Complex c) {
  VectorXc v(1);
  v(0) = c;
  return TrigPoly(v);
}

TrigPoly TrigPoly::cos_mode(int k) {
  k = std::abs(k);
  if (k == 0) return constant(1.0);
  VectorXc v = VectorXc::Zero(2 * k + 1);
  v(0) = 0.5;
  v(2 * k) = 0.5;
  return TrigPoly(v);
}

TrigPoly TrigPoly::sin_mode(int k) {
  if (k == 0) return constant(0.0);
  const double sign = k > 0 ? 1.0 : -1.0;
  k = std::abs(k);
  VectorXc v = VectorXc::Zero(2 * k + 1);
  v(2 * k) = Complex(0.0, -0.5 * sign);
  v(0) = Complex(0.0, 0.5 * sign);
  return TrigPoly(v);
}

TrigPoly TrigPoly::from_cos_sin(const VectorXc& a, const VectorXc& b) {
  const int m = static_cast<int>(std::max<Eigen::Index>(a.size(), b.size())) - 1;
  VectorXc v = VectorXc::Zero(2 * std::max(m, 0) + 1);
  if (a.size() > 0) v(m) = a(0);
  for (int k = 1; k <= m; ++k) {
    const Complex ak = k < a.size() ? a(k) : Complex{};
    const Complex bk = k < b.size() ? b(k) : Complex{};
    v(m + k) = 0.5 * (ak - kI * bk);
    v(m - k) = 0.5 * (ak + kI * bk);
  }
  return TrigPoly(v);
}

Complex TrigPoly::cos_coeff(int k) const {
  if (k == 0) return coeff(0);
  return coeff(k) + coeff(-k);
}

Complex TrigPoly::sin_coeff(int k) const {
  if (k == 0) return {};
  return kI * (coeff(k) - coeff(-k));
}

bool TrigPoly::is_real(double tol) const {
  const int m = degree();
  for (int k = 0; k <= m; ++k) {
    if (std::abs(c_(m - k) - std::conj(c_(m + k))) > tol) return false;
  }
  return true;
}

ParityClass TrigPoly::parity_class(double tol) const {
  const TrigPoly t = trimmed(tol);
  const int m = t.degree();
  if (m == 0) return std::abs(t.coeff(0)) > tol ? ParityClass::even_top : ParityClass::none;
  return std::abs(t.coeff(m) - t.coeff(-m)) <= tol ? ParityClass::even_top : ParityClass::full;
}

TrigPoly TrigPoly::trimmed(double tol) const {
  int m = degree();
  while (m > 0 && std::abs(coeff(m)) <= tol && std::abs(coeff(-m)) <= tol) --m;
  return TrigPoly(VectorXc(c_.segment(degree() - m, 2 * m + 1)));
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
  const int m = std::max(degree(), o.degree());
  VectorXc v = VectorXc::Zero(2 * m + 1);
  v.segment(m - degree(), c_.size()) += c_;
  v.segment(m - o.degree(), o.c_.size()) += o.c_;
  return TrigPoly(v);
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const { return *this + o * Complex(-1.0); }

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
  const int m = degree() + o.degree();
  VectorXc v = VectorXc::Zero(2 * m + 1);
  for (int i = -degree(); i <= degree(); ++i) {
    for (int j = -o.degree(); j <= o.degree(); ++j) v(m + i + j) += coeff(i) * o.coeff(j);
  }
  return TrigPoly(v);
}

TrigPoly TrigPoly::operator*(Complex s) const { return TrigPoly(VectorXc(c_ * s)); }

Complex eval_trigpoly(const TrigPoly& p, const Complex& z) { return p(z); }

bool check_membership(const TrigPoly& p, TrigSpace space, int n, double tol) {
  if (n < 0) return false;
  for (int k = n + 1; k <= p.degree(); ++k) {
    if (std::abs(p.coeff(k)) > tol || std::abs(p.coeff(-k)) > tol) return false;
  }
  if (space == TrigSpace::even && n > 0) return std::abs(p.coeff(n) - p.coeff(-n)) <= tol;
  return true;
}

double inner_product(const TrigPoly& f, const TrigPoly& g, const PeriodicWeight& w,
                     const QuadratureConfig& cfg) {
  if (!f.is_real() || !g.is_real()) {
    throw std::invalid_argument("inner_product: inputs must be real on the axis");
  }
  QuadratureConfig c = cfg;
  c.n = std::max(c.n, detail::next_pow2_at_least(2 * (f.degree() + g.degree()) + 2));
  const auto r = periodic_trapezoid([&](double x) { return f(x) * g(x) * w(x); }, c);
  if (std::abs(r.value.imag()) > c.tol * std::max(1.0, std::abs(r.value.real()))) {
    throw std::runtime_error("inner_product: imaginary residue " +
                             std::to_string(std::abs(r.value.imag())) + " exceeds tolerance");
  }
  return r.value.real();
}

TrigPoly basis_monomial(int j) {
  if (j < 0) throw std::invalid_argument("basis_monomial: negative index");
  if (j == 0) return TrigPoly::constant(1.0);
  const int m = (j + 1) / 2;
  return j % 2 == 1 ? TrigPoly::cos_mode(m) : TrigPoly::sin_mode(m);
}

Eigen::MatrixXd gram_matrix(const PeriodicWeight& w, int n, const QuadratureConfig& cfg) {
  if (n < 0) throw std::invalid_argument("gram_matrix: n must be >= 0");
  const int size = 2 * n + 2;
  const int kmax = 2 * (n + 1);
  const VectorXc mu = weight_moments(w, kmax, cfg);
  auto moment = [&](int k) { return mu(k + kmax); };

  std::vector<TrigPoly> basis;
  basis.reserve(size);
  for (int j = 0; j < size; ++j) basis.push_back(basis_monomial(j));

  Eigen::MatrixXd g(size, size);
  for (int i = 0; i < size; ++i) {
    const TrigPoly& bi = basis[i];
    for (int j = 0; j <= i; ++j) {
      const TrigPoly& bj = basis[j];
      Complex s{};
      for (int k1 = -bi.degree(); k1 <= bi.degree(); ++k1) {
        if (bi.coeff(k1) == Complex{}) continue;
        for (int k2 = -bj.degree(); k2 <= bj.degree(); ++k2) {
          if (bj.coeff(k2) == Complex{}) continue;
          s += bi.coeff(k1) * bj.coeff(k2) * moment(-(k1 + k2));
        }
      }
      g(i, j) = g(j, i) = kTwoPi * s.real();
    }
  }

  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    throw std::runtime_error("gram_matrix: not positive definite at n = " + std::to_string(n) +
                             ", smallest eigenvalue " + std::to_string(es.eigenvalues()(0)));
  }
  return g;
}

int OtpSystem::basis_slot(int index) {
  if (index == 0) return 0;
  if (index == 1 || index < 0) {
    throw std::out_of_range("OtpSystem: no polynomial with index " + std::to_string(index));
  }
  return index - 1;
}

OtpSystem::OtpSystem(PeriodicWeight w, int n_max, const QuadratureConfig& cfg)
    : w_(std::move(w)), n_max_(n_max), cfg_(cfg) {
  if (n_max < 0) throw std::invalid_argument("build_otp_system: n_max must be >= 0");
  gram_ = gram_matrix(w_, n_max, cfg);
  const int size = static_cast<int>(gram_.rows());

  Eigen::LLT<Eigen::MatrixXd> llt(gram_);
  if (llt.info() != Eigen::Success) throw std::runtime_error("build_otp_system: Cholesky breakdown");
  const Eigen::MatrixXd l = llt.matrixL();
  linv_ = l.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(size, size));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_, Eigen::EigenvaluesOnly);
  gram_condition_ = es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff();

  std::vector<TrigPoly> basis;
  for (int j = 0; j < size; ++j) basis.push_back(basis_monomial(j));
  for (int i = 0; i < size; ++i) {
    TrigPoly p, q = basis[i];
    for (int j = 0; j <= i; ++j) p = p + basis[j] * Complex(linv_(i, j));
    for (int j = 0; j < i; ++j) q = q + basis[j] * Complex(linv_(i, j) / linv_(i, i));
    ortho_.push_back(p);
    monic_.push_back(q);
  }

  alphas_.assign(n_max + 2, 0.0);
  betas_.assign(n_max + 1, std::numeric_limits<double>::quiet_NaN());
  alphas_[0] = linv_(0, 0);
  for (int m = 1; m <= n_max + 1; ++m) alphas_[m] = linv_(2 * m - 1, 2 * m - 1);
  for (int m = 1; m <= n_max; ++m) betas_[m] = linv_(2 * m, 2 * m);

  a_.assign(n_max + 1, std::nullopt);
  for (int n = 2; n <= n_max; ++n) {
    const double ip = inner_product(monic_second(n), TrigPoly::sin_mode(n - 1), w_, cfg);
    a_[n] = Complex(0.0, kTwoPi / ip);
  }
}

const TrigPoly& OtpSystem::orthonormal(int index) const {
  if (index > max_index()) throw std::out_of_range("OtpSystem: index beyond system size");
  return ortho_[basis_slot(index)];
}

const TrigPoly& OtpSystem::monic(int index) const {
  if (index > max_index()) throw std::out_of_range("OtpSystem: index beyond system size");
  return monic_[basis_slot(index)];
}

double OtpSystem::alpha(int m) const { return alphas_.at(m); }

double OtpSystem::beta(int m) const {
  if (m < 1) throw std::out_of_range("OtpSystem: beta_m needs m >= 1");
  return betas_.at(m);
}

std::optional<Complex> OtpSystem::a_const(int n) const {
  if (n < 0 || n > n_max_) throw std::out_of_range("OtpSystem: a_n index out of range");
  return a_[n];
}

double OtpSystem::orthonormality_residual() const {
  const Eigen::MatrixXd e = linv_ * gram_ * linv_.transpose();
  const Eigen::MatrixXd off = e - Eigen::MatrixXd::Identity(e.rows(), e.cols());
  return off.cwiseAbs().maxCoeff();
}

OtpSystem build_otp_system(const PeriodicWeight& w, int n_max, const QuadratureConfig& cfg) {
  return OtpSystem(w, n_max, cfg);
}

}  // namespace otprh
