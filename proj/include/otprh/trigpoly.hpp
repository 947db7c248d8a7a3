#pragma once

#include <optional>
#include <vector>

#include "otprh/quadrature.hpp"
#include "otprh/types.hpp"
#include "otprh/weights.hpp"

namespace otprh {

enum class ParityClass { none, even_top, full };
enum class TrigSpace { even, odd };  ///< T_{2n} and T_{2n+1}

/// Trigonometric polynomial sum_{|k|<=m} c_k e^{ikz}.
///
/// Cosine/sine coefficients: a_0 = c_0, a_k = c_k + c_{-k}, b_k = i (c_k - c_{-k}).
class TrigPoly {
 public:
  TrigPoly() : c_(VectorXc::Zero(1)) {}
  /// Coefficients c_{-m}..c_m; the length must be odd.
  explicit TrigPoly(VectorXc coeffs);

  static TrigPoly constant(Complex c);
  static TrigPoly cos_mode(int k);
  static TrigPoly sin_mode(int k);
  /// a_0 + sum a_k cos kx + sum b_k sin kx; b[0] is ignored.
  static TrigPoly from_cos_sin(const VectorXc& a, const VectorXc& b);

  int degree() const { return static_cast<int>(c_.size() / 2); }
  const VectorXc& coeffs() const { return c_; }
  Complex coeff(int k) const {
    return std::abs(k) <= degree() ? c_(k + degree()) : Complex{};
  }
  Complex cos_coeff(int k) const;
  Complex sin_coeff(int k) const;

  template <typename Arg>
  Complex operator()(const Arg& z) const {
    const Complex zz(z);
    const int m = degree();
    Complex s = c_(m);
    for (int k = 1; k <= m; ++k) {
      s += c_(m + k) * std::exp(kI * (static_cast<double>(k) * zz)) +
           c_(m - k) * std::exp(-kI * (static_cast<double>(k) * zz));
    }
    return s;
  }

  /// c_{-k} = conj(c_k) for all k within tol.
  bool is_real(double tol = 1e-12) const;
  ParityClass parity_class(double tol = 1e-12) const;

  /// Drops top coefficients with |c_k|, |c_{-k}| <= tol.
  TrigPoly trimmed(double tol = 0.0) const;

  TrigPoly operator+(const TrigPoly& o) const;
  TrigPoly operator-(const TrigPoly& o) const;
  TrigPoly operator*(const TrigPoly& o) const;
  TrigPoly operator*(Complex s) const;

 private:
  VectorXc c_;
};

Complex eval_trigpoly(const TrigPoly& p, const Complex& z);

bool check_membership(const TrigPoly& p, TrigSpace space, int n, double tol = 1e-12);

/// <f, g>_w = int_0^{2pi} f g w. Throws std::invalid_argument when either
/// input is not real on the axis, std::runtime_error when the imaginary
/// residue of the computed integral exceeds tol.
double inner_product(const TrigPoly& f, const TrigPoly& g, const PeriodicWeight& w,
                     const QuadratureConfig& cfg = {});

/// Element j of the ordered basis 1, cos x, sin x, cos 2x, sin 2x, ...
TrigPoly basis_monomial(int j);

/// Gram matrix of the first 2n+2 basis monomials, built from the Fourier
/// moments of w. Throws std::runtime_error (with the smallest eigenvalue)
/// if it is not numerically positive definite.
Eigen::MatrixXd gram_matrix(const PeriodicWeight& w, int n, const QuadratureConfig& cfg = {});

/// Orthonormal trigonometric polynomials of a weight up to a degree bound.
///
/// Indices: omega(2m) has leading term alpha_m cos mx,
/// omega(2m+1) (m >= 1) has leading term beta_m sin mx. omega(1) does not
/// exist. Indices up to 2 n_max + 2 are available.
class OtpSystem {
 public:
  OtpSystem(PeriodicWeight w, int n_max, const QuadratureConfig& cfg = {});

  const PeriodicWeight& weight() const { return w_; }
  int max_degree() const { return n_max_; }
  const QuadratureConfig& quadrature() const { return cfg_; }

  const TrigPoly& orthonormal(int index) const;
  /// Monic form: leading cos/sin coefficient exactly 1.
  const TrigPoly& monic(int index) const;
  /// varpi_{2n}, leading cos nx.
  const TrigPoly& monic_first(int n) const { return monic(2 * n); }
  /// varpi_{2n-1}, leading sin (n-1)x; n >= 2.
  const TrigPoly& monic_second(int n) const { return monic(2 * n - 1); }

  double alpha(int m) const;
  double beta(int m) const;
  const std::vector<double>& alphas() const { return alphas_; }
  /// betas()[0] is NaN (there is no sin 0x polynomial).
  const std::vector<double>& betas() const { return betas_; }

  /// a_n = 2 pi i / <varpi_{2n-1}, sin (n-1)x>_w; undefined (nullopt) for n < 2.
  std::optional<Complex> a_const(int n) const;

  const Eigen::MatrixXd& gram() const { return gram_; }
  double gram_condition() const { return gram_condition_; }
  /// max_{j,k} |<omega_j, omega_k> - delta_jk|, from the Gram matrix.
  double orthonormality_residual() const;

  /// Highest index stored.
  int max_index() const { return 2 * n_max_ + 2; }

 private:
  static int basis_slot(int index);

  PeriodicWeight w_;
  int n_max_;
  QuadratureConfig cfg_;
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd linv_;
  double gram_condition_ = 0.0;
  std::vector<TrigPoly> ortho_;  // by basis slot
  std::vector<TrigPoly> monic_;  // by basis slot
  std::vector<double> alphas_;
  std::vector<double> betas_;
  std::vector<std::optional<Complex>> a_;
};

OtpSystem build_otp_system(const PeriodicWeight& w, int n_max, const QuadratureConfig& cfg = {});

}  // namespace otprh
