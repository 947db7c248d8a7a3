#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "otprh/otprh.hpp"

namespace otprh::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntRange {
  int lo = 0;
  int hi = -1;
  bool single = true;
  bool empty() const { return hi < lo; }
};

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw PreconditionError(what + ": expected an integer, got '" + text + "'");
  }
  return v;
}

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, "--n");
  } else {
    r.lo = parse_int(text.substr(0, dots), "--n");
    r.hi = parse_int(text.substr(dots + 2), "--n");
    r.single = false;
  }
  return r;
}

// Raw option values; unset means "fall back to the config file, then the default".
struct Flags {
  std::optional<std::string> weight, n, out, config, convention;
  std::optional<double> r, epsilon, tol;
  std::optional<int> n_ref;
};

struct RunConfig {
  std::string command;
  std::string weight_spec;
  std::string n_text;
  IntRange n;
  std::optional<double> r, epsilon;
  double tol = 0.0;
  fs::path out;
  Convention convention = Convention::consistent;
  std::optional<int> n_ref;
};

template <class T>
std::optional<T> config_value(const json& cfg, const char* key) {
  if (!cfg.contains(key)) return std::nullopt;
  try {
    return cfg.at(key).get<T>();
  } catch (const json::exception&) {
    throw PreconditionError(std::string("config key '") + key + "' has the wrong type");
  }
}

std::optional<std::string> config_n(const json& cfg) {
  if (!cfg.contains("n")) return std::nullopt;
  const json& v = cfg.at("n");
  if (v.is_number_integer()) return std::to_string(v.get<int>());
  if (v.is_string()) return v.get<std::string>();
  throw PreconditionError("config key 'n' must be an integer or a 'lo..hi' string");
}

RunConfig resolve(const std::string& command, const Flags& f) {
  json cfg = json::object();
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw PreconditionError("cannot read config file '" + *f.config + "'");
    try {
      cfg = json::parse(in);
    } catch (const json::exception& e) {
      throw PreconditionError("config file '" + *f.config + "' is not valid JSON");
    }
    if (!cfg.is_object()) throw PreconditionError("config file must hold a JSON object");
  }

  RunConfig rc;
  rc.command = command;
  auto weight = f.weight ? f.weight : config_value<std::string>(cfg, "weight");
  if (!weight) throw PreconditionError("--weight is required");
  rc.weight_spec = *weight;

  auto n = f.n ? f.n : config_n(cfg);
  if (!n) {
    if (command != "szego") throw PreconditionError("--n is required");
    n = "0";
  }
  rc.n_text = *n;
  rc.n = parse_range(*n);

  rc.r = f.r ? f.r : config_value<double>(cfg, "r");
  rc.epsilon = f.epsilon ? f.epsilon : config_value<double>(cfg, "epsilon");
  const auto tol = f.tol ? f.tol : config_value<double>(cfg, "tol");
  rc.tol = tol ? *tol : default_quadrature_tolerance();
  rc.out = f.out ? *f.out : config_value<std::string>(cfg, "out").value_or(".");
  rc.n_ref = f.n_ref ? f.n_ref : config_value<int>(cfg, "n_ref");

  const auto conv = f.convention ? f.convention : config_value<std::string>(cfg, "convention");
  if (conv) {
    if (*conv == "consistent") {
      rc.convention = Convention::consistent;
    } else if (*conv == "literal") {
      rc.convention = Convention::literal;
    } else {
      throw PreconditionError("--convention must be 'consistent' or 'literal'");
    }
  }
  return rc;
}

// Everything a subcommand needs, validated before any heavy numerics run.
struct Setup {
  PeriodicWeight weight;
  QuadratureConfig quad;
  ContourConfig contours;
};

Setup prepare(const RunConfig& rc) {
  Setup s{[&] {
            try {
              return make_weight(rc.weight_spec);
            } catch (const std::invalid_argument& e) {
              throw PreconditionError(e.what());
            }
          }(),
          {}, {}};
  s.quad.tol = rc.tol;
  s.contours = ContourConfig::for_weight(s.weight);
  if (rc.r) {
    s.contours.r = *rc.r;
    s.contours.epsilon = *rc.r / 5.0;
  }
  if (rc.epsilon) s.contours.epsilon = *rc.epsilon;
  s.contours.quad = s.quad;
  try {
    s.quad.validate();
    s.contours.validate(s.weight.strip_radius());
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(e.what());
  }
  if (rc.n.lo < 0) throw PreconditionError("--n must be non-negative");
  return s;
}

struct Outcome {
  std::vector<std::pair<std::string, CsvTable>> tables;
  double max_residual = 0.0;
  std::vector<std::string> failures;
  json details = json::object();
};

std::string num(double v) { return format_number(v); }

void push_matrix(std::vector<std::string>& row, const Matrix2& m) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      row.push_back(num(m(i, j).real()));
      row.push_back(num(m(i, j).imag()));
    }
  }
}

Outcome run_moments(const RunConfig& rc, const Setup& s) {
  const int K = rc.n.hi;
  const VectorXc mu = weight_moments(s.weight, K, s.quad);
  const VectorXc lg = log_weight_fourier(s.weight, K, s.quad);
  CsvTable t({"k", "re_mu", "im_mu", "re_logw", "im_logw"});
  for (int k = -K; k <= K; ++k) {
    t.add_row({std::to_string(k), num(mu(k + K).real()), num(mu(k + K).imag()),
               num(lg(k + K).real()), num(lg(k + K).imag())});
  }
  Outcome o;
  o.tables.emplace_back("moments.csv", std::move(t));
  return o;
}

Outcome run_otp(const RunConfig& rc, const Setup& s) {
  const int n = rc.n.hi;
  const OtpSystem sys(s.weight, n, s.quad);
  std::vector<int> indices{0};
  for (int i = 2; i <= 2 * n + 1; ++i) indices.push_back(i);

  std::vector<std::pair<int, TrigPoly>> monic, ortho;
  for (int i : indices) {
    monic.emplace_back(i, sys.monic(i));
    ortho.emplace_back(i, sys.orthonormal(i));
  }
  CsvTable lead({"m", "alpha", "beta", "re_a", "im_a"});
  const double nan = std::nan("");
  for (int m = 0; m <= n; ++m) {
    const auto a = sys.a_const(m);
    lead.add_row({std::to_string(m), num(sys.alpha(m)), num(m >= 1 ? sys.beta(m) : nan),
                  num(a ? a->real() : nan), num(a ? a->imag() : nan)});
  }

  Outcome o;
  o.max_residual = sys.orthonormality_residual();
  if (!(o.max_residual < 1e-9)) o.failures.push_back("orthonormality residual >= 1e-9");
  o.details["gram_condition"] = sys.gram_condition();
  o.tables.emplace_back("otp_coeffs.csv", coefficient_table(monic));
  o.tables.emplace_back("otp_orthonormal.csv", coefficient_table(ortho));
  o.tables.emplace_back("otp_leading.csv", std::move(lead));
  return o;
}

Outcome run_szego(const RunConfig&, const Setup& s) {
  const SzegoData sd(s.weight, s.quad);
  const double scale = std::exp(-2.0 * sd.constant());
  CsvTable t({"x", "re_frakdp", "im_frakdp", "re_frakdm", "im_frakdm", "product_residual"});
  Outcome o;
  constexpr int kPoints = 256;
  for (int j = 0; j < kPoints; ++j) {
    const double x = kTwoPi * j / kPoints;
    const Complex dp = sd.frak_d(+1, x);
    const Complex dm = sd.frak_d(-1, x);
    const double res = std::abs(dp * dm - scale * s.weight(x));
    o.max_residual = std::max(o.max_residual, res);
    t.add_row({num(x), num(dp.real()), num(dp.imag()), num(dm.real()), num(dm.imag()), num(res)});
  }
  if (!(o.max_residual < 1e-10)) o.failures.push_back("product residual >= 1e-10");
  o.details["C"] = sd.constant();
  o.details["cauchy_truncation"] = sd.gamma_transform().truncation();
  o.tables.emplace_back("szego.csv", std::move(t));
  return o;
}

double max_jump(const std::vector<ResidualReport>& reps) {
  double m = 0.0;
  for (const auto& r : reps) m = std::max(m, r.max_jump_residual);
  return m;
}

Outcome run_rh_verify(const RunConfig& rc, const Setup& s) {
  const int n = rc.n.hi;
  if (!rc.n.single) throw PreconditionError("rh-verify takes a single --n");
  if (n < 1) throw PreconditionError("rh-verify needs n >= 1");
  const OtpSystem sys(s.weight, n, s.quad);
  const SzegoData sd(s.weight, s.quad);

  std::vector<ResidualReport> main{verify_Y(sys, n, s.contours)};
  std::vector<ResidualReport> literal;
  if (n >= 2) {
    const RhChain chain(sys, sd, n, s.contours, rc.convention);
    for (auto& r : verify_chain(chain)) main.push_back(std::move(r));
    main.push_back(verify_R(chain));
    if (rc.convention == Convention::consistent) {
      const RhChain alt(sys, sd, n, s.contours, Convention::literal);
      literal = verify_chain(alt);
      literal.push_back(verify_R(alt));
    }
  }

  CsvTable t = residual_table(main);
  for (const auto& r : literal) append_residuals(t, r, "literal:");
  CsvTable limits({"stage", "label", "re_11", "im_11", "re_12", "im_12", "re_21", "im_21",
                   "re_22", "im_22"});
  CsvTable scalars({"stage", "label", "value"});
  json stages = json::array();
  for (const auto& r : main) {
    for (const auto& [label, m] : r.limits) {
      std::vector<std::string> row{r.stage, label};
      push_matrix(row, m);
      limits.add_row(std::move(row));
    }
    for (const auto& [label, v] : r.scalars) scalars.add_row({r.stage, label, num(v)});
    stages.push_back({{"stage", r.stage},
                      {"max_jump_residual", r.max_jump_residual},
                      {"max_growth_residual", r.max_growth_residual}});
  }

  Outcome o;
  o.max_residual = max_jump(main);
  if (!(o.max_residual < 1e-8)) o.failures.push_back("jump residual >= 1e-8");
  o.details["stages"] = std::move(stages);
  o.details["convention"] = convention_name(rc.convention);
  if (!literal.empty()) o.details["literal_max_jump_residual"] = max_jump(literal);
  o.tables.emplace_back("rh_verify.csv", std::move(t));
  o.tables.emplace_back("rh_verify_limits.csv", std::move(limits));
  o.tables.emplace_back("rh_verify_scalars.csv", std::move(scalars));
  return o;
}

Outcome run_decay_sweep(const RunConfig& rc, const Setup& s) {
  CsvTable t({"n",           "g_upper",     "g_lower",         "g_norm",
              "collar_norm", "re_k11",      "im_k11",          "re_k12",
              "im_k12",      "re_k21",      "im_k21",          "re_k22",
              "im_k22",      "k_norm",      "k_distance_to_minus_half",
              "k_step",      "self_convergence", "eta_hat",   "literal_w_residual",
              "fitted_slope"});
  Outcome o;
  if (rc.n.empty()) {
    o.tables.emplace_back("decay_sweep.csv", std::move(t));
    return o;
  }
  if (rc.n.lo < 2) throw PreconditionError("decay-sweep needs n >= 2");
  const int n_ref = rc.n_ref.value_or(rc.n.hi);
  if (n_ref < rc.n.hi) throw PreconditionError("--n-ref must be >= the top of the --n range");

  const OtpSystem sys(s.weight, n_ref, s.quad);
  const SzegoData sd(s.weight, s.quad);
  const RhChain ref(sys, sd, n_ref, s.contours, rc.convention);

  std::vector<std::vector<std::string>> rows;
  std::vector<double> xs, ys;
  std::optional<Matrix2> prev_k;
  for (int n = rc.n.lo; n <= rc.n.hi; ++n) {
    const RhChain chain(sys, sd, n, s.contours, rc.convention);
    const GNorms g = contour_g_norm(chain, s.contours.r);
    const KIntegral k = k_integral(chain);
    const BandResidualReport th = band_residual_check(chain, ref);
    const double step = prev_k ? max_norm(Matrix2(k.k - *prev_k)) : std::nan("");
    prev_k = k.k;
    xs.push_back(2.0 * n - 1.0);
    ys.push_back(std::log(g.max()));

    std::vector<std::string> row{std::to_string(n), num(g.upper), num(g.lower), num(g.max()),
                                 num(th.collar_norm)};
    push_matrix(row, k.k);
    for (double v : {max_norm(k.k), k.distance_to_minus_half, step, th.self_convergence,
                     th.eta_hat, th.literal_residual}) {
      row.push_back(num(v));
    }
    rows.push_back(std::move(row));
    o.max_residual = std::max(o.max_residual, g.max());
  }
  const double slope = xs.size() >= 2 ? fit_slope(xs, ys) : std::nan("");
  for (auto& row : rows) {
    row.push_back(num(slope));
    t.add_row(std::move(row));
  }
  if (xs.size() >= 2 && !(std::abs(slope + s.contours.r) <= 0.05 * s.contours.r)) {
    o.failures.push_back("fitted slope " + num(slope) + " not within 5% of -r");
  }
  o.details["fitted_slope"] = xs.size() >= 2 ? json(slope) : json(nullptr);
  o.details["n_ref"] = n_ref;
  o.tables.emplace_back("decay_sweep.csv", std::move(t));
  return o;
}

Outcome run_asymptotics(const RunConfig& rc, const Setup& s) {
  CsvTable t({"n", "x", "re_predicted", "im_predicted", "re_actual", "im_actual", "error"});
  Outcome o;
  if (rc.n.empty()) {
    o.tables.emplace_back("asymptotics.csv", std::move(t));
    return o;
  }
  if (rc.n.lo < 2) throw PreconditionError("asymptotics needs n >= 2");
  const int n_ref = rc.n_ref.value_or(std::max(16, rc.n.hi + 8));
  if (n_ref < rc.n.hi) throw PreconditionError("--n-ref must be >= the top of the --n range");

  const OtpSystem sys(s.weight, n_ref, s.quad);
  const SzegoData sd(s.weight, s.quad);
  const RhChain ref(sys, sd, n_ref, s.contours, rc.convention);
  constexpr int kPoints = 8;
  for (int n = rc.n.lo; n <= rc.n.hi; ++n) {
    const RhChain chain(sys, sd, n, s.contours, rc.convention);
    for (int j = 0; j < kPoints; ++j) {
      const double x = kTwoPi * j / kPoints + 0.1;
      const Prediction p = asymptotic_prediction(chain, ref, x);
      if (!std::isfinite(p.error)) o.failures.push_back("non-finite prediction at n = " + std::to_string(n));
      o.max_residual = std::max(o.max_residual, p.error);
      t.add_row({std::to_string(n), num(x), num(p.predicted.real()), num(p.predicted.imag()),
                 num(p.actual.real()), num(p.actual.imag()), num(p.error)});
    }
  }
  o.details["n_ref"] = n_ref;
  o.tables.emplace_back("asymptotics.csv", std::move(t));
  return o;
}

Outcome dispatch(const RunConfig& rc, const Setup& s) {
  if (rc.command == "moments") return run_moments(rc, s);
  if (rc.command == "otp") return run_otp(rc, s);
  if (rc.command == "szego") return run_szego(rc, s);
  if (rc.command == "rh-verify") return run_rh_verify(rc, s);
  if (rc.command == "decay-sweep") return run_decay_sweep(rc, s);
  return run_asymptotics(rc, s);
}

json n_json(const RunConfig& rc) {
  if (rc.n.single) return rc.n.hi;
  return rc.n_text;
}

void add_common_options(CLI::App& sub, Flags& f) {
  sub.add_option("--weight", f.weight, "const | cos:<a> | poisson:<rho> | exptrig:<c1>[,...]");
  sub.add_option("--n", f.n, "degree, or lo..hi for sweeps");
  sub.add_option("--r", f.r, "contour height");
  sub.add_option("--epsilon", f.epsilon, "collar half-width");
  sub.add_option("--tol", f.tol, "quadrature tolerance");
  sub.add_option("--out", f.out, "output directory");
  sub.add_option("--config", f.config, "JSON config file");
  sub.add_option("--convention", f.convention, "consistent | literal");
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal trigonometric polynomials via a periodic Riemann-Hilbert problem",
               "otp-rh"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<const char*, const char*>> commands{
      {"moments", "Fourier moments of w and of ln w up to frequency --n"},
      {"otp", "monic and orthonormal OTP tables and leading coefficients up to degree --n"},
      {"szego", "Szego constant and axis profiles of the Szego functions"},
      {"rh-verify", "jump and growth residuals of Y and of the transformation chain"},
      {"decay-sweep", "||G - I||, k_n and band self-convergence over an n range"},
      {"asymptotics", "predicted versus actual first-kind monic OTP on the axis"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common_options(*sub, flags);
    if (std::string(name) == "decay-sweep" || std::string(name) == "asymptotics") {
      sub->add_option("--n-ref", flags.n_ref, "reference degree");
    }
  }

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand --help surfaces as CallForHelp too; anything else is a usage error.
    err << "otp-rh: error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  const auto t0 = std::chrono::steady_clock::now();
  RunConfig rc;
  Outcome outcome;
  ContourConfig contours;
  try {
    rc = resolve(command, flags);
    const Setup setup = prepare(rc);
    contours = setup.contours;
    outcome = dispatch(rc, setup);
  } catch (const PreconditionError& e) {
    err << "otp-rh: error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "otp-rh: error: " << command << ": " << e.what() << '\n';
    return kExitPrecondition;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  const fs::path summary_path = rc.out / (command + "_summary.json");
  try {
    fs::create_directories(rc.out);
    for (const auto& [file, table] : outcome.tables) table.save(rc.out / file);
    json summary{{"command", command},
                 {"weight_spec", rc.weight_spec},
                 {"n", n_json(rc)},
                 {"r", contours.r},
                 {"epsilon", contours.epsilon},
                 {"max_residual", outcome.max_residual},
                 {"assertions_passed", outcome.failures.empty()},
                 {"elapsed_ms", elapsed_ms},
                 {"failures", outcome.failures},
                 {"details", outcome.details}};
    std::ofstream js(summary_path);
    if (!js) throw std::runtime_error("cannot open " + summary_path.string() + " for writing");
    js << summary.dump(2) << '\n';
    if (!js) throw std::runtime_error("write failed for " + summary_path.string());
  } catch (const std::exception& e) {
    err << "otp-rh: error: " << e.what() << '\n';
    return kExitPrecondition;
  }

  if (!outcome.failures.empty()) {
    err << "otp-rh: assertion failed: " << outcome.failures.front() << "; see "
        << summary_path.string() << '\n';
    return kExitAssertion;
  }
  out << summary_path.string() << '\n';
  return kExitOk;
}

}  // namespace otprh::cli
