#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "otprh/rhchain.hpp"

namespace otprh {

struct ResidualSample {
  Complex point;
  double residual = 0.0;
};

/// Sampled residuals of one stage of the chain. Jump residuals are the
/// entrywise max-modulus of (boundary value) - (other boundary value) * jump;
/// growth residuals compare against the measured limits at the strip ends.
struct ResidualReport {
  std::string stage;
  std::string grid;
  double max_jump_residual = 0.0;
  double max_growth_residual = 0.0;
  Complex worst_point{};
  std::vector<ResidualSample> jump_samples;
  std::vector<ResidualSample> growth_samples;
  std::vector<std::pair<std::string, Matrix2>> limits;
  std::vector<std::pair<std::string, double>> scalars;

  void add_jump(const Complex& z, double r);
  void add_growth(const Complex& z, double r);
};

/// Derived limits of the chain at the strip ends.
Matrix2 f_limit();                                  ///< F at both ends: diag(1/4, 1)
Matrix2 r_limit_lower();                            ///< R at -i inf: diag(1/4, 1)
Matrix2 r_limit_upper_scaled(const SzegoData& sd, Convention conv);  ///< e^{2C+iz} R at +i inf
/// The model term e^{-2C-iz} [[0, -2], [1/2, 0]].
Matrix2 model_term(const SzegoData& sd, const Complex& z);

/// Axis jump of Y on cc.axis_points points and growth of Y Xi_j at
/// Im z = +-8, +-12. For n = 1 only the first row is checked.
ResidualReport verify_Y(const OtpSystem& sys, int n, const ContourConfig& cc);
ResidualReport verify_Y(const ExactSolution& y, const PeriodicWeight& w, const ContourConfig& cc);

/// Stages F_jump, F_factorization, S_jump_upper, S_jump_axis, S_jump_lower
/// and R_axis_continuity.
std::vector<ResidualReport> verify_chain(const RhChain& chain);

/// Jumps of R on L_r and L_{-r} against G, plus growth at -+8i.
ResidualReport verify_R(const RhChain& chain);
ResidualReport verify_R(const OtpSystem& sys, const SzegoData& sd, int n, const ContourConfig& cc,
                        Convention conv = Convention::consistent);

struct GNorms {
  double upper = 0.0;
  double lower = 0.0;
  double max() const { return std::max(upper, lower); }
};

/// max ||G - I|| sampled on L_{+-height}.
GNorms contour_g_norm(const RhChain& chain, double height);
/// max ||G - I|| sampled over the collar Omega_eps.
double collar_g_norm(const RhChain& chain);

struct KIntegral {
  Matrix2 k;
  Matrix2 upper_leg;  ///< (1/4pi) int_{L_h} R_-(G - I)
  Matrix2 lower_leg;  ///< (1/4pi) int_{L_{-h}^-} R_-(G - I)
  double height = 0.0;
  double distance_to_minus_half = 0.0;  ///< ||k + I/2||
  double g_norm = 0.0;                  ///< ||G - I|| on the two legs
  bool converged = true;
};

/// (1/4pi) int_{Gamma_sharp} R_-(t) (G(t) - I) dt with Gamma_sharp =
/// L_h + L_{-h}^-, R_- the band-side value. height defaults to r.
KIntegral k_integral(const RhChain& chain, double height = 0.0);
KIntegral k_integral(const OtpSystem& sys, const SzegoData& sd, int n, const ContourConfig& cc,
                    Convention conv = Convention::consistent);

/// (1/4 pi i) int_{Gamma_sharp} R_-(t) (G(t) - I) cot((t - z)/2) dt.
Matrix2 h_diagnostic(const RhChain& chain, const Complex& z);

struct BandResidualReport {
  int n = 0;
  int n_ref = 0;
  double literal_residual = 0.0;   ///< ||W_n - I/2|| on the band
  double self_convergence = 0.0;   ///< ||W_n - W_ref|| on the band
  double collar_norm = 0.0;        ///< ||G - I|| on Omega_eps
  double eta_hat = 0.0;            ///< self_convergence / collar_norm
  double d_eps = 0.0;
  double K_eps = 0.0;
  double delta = 0.0;              ///< 1 / (2 K_eps + 1)
  bool below_delta = false;        ///< collar_norm < delta
  double r_minus_norm = 0.0;       ///< ||R_-|| on Gamma_sharp
  Matrix2 w_upper_scaled;          ///< e^{iz} W at z = 8i
};

BandResidualReport band_residual_check(const RhChain& chain, const RhChain& reference);
BandResidualReport band_residual_check(const OtpSystem& sys, const SzegoData& sd, int n, int n_ref,
                                const ContourConfig& cc,
                                Convention conv = Convention::consistent);

struct Prediction {
  Complex predicted;
  Complex actual;
  double error = 0.0;
};

/// varpi_{2n}(x) predicted as [R_ref M V^{-1} U^{-1}]_{11} with the
/// transforms of degree n and R taken from the reference degree.
Prediction asymptotic_prediction(const RhChain& chain, const RhChain& reference, double x);
Prediction asymptotic_prediction(const OtpSystem& sys, const SzegoData& sd, int n, double x,
                                 const ContourConfig& cc, int n_ref = 0);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace otprh
