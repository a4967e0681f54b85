// Command-line front end: every certification and report as a
// reproducible batch run with JSON/CSV outputs.
//
// Exit codes: 0 = ran and certified, 1 = ran and certified false (or did
// not converge; the partial report is still written), 2 = input error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "carleson/certify.hpp"
#include "carleson/continuous.hpp"
#include "carleson/io.hpp"

using namespace carleson;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string spectrum_path;
  std::string out_path;
  Real tol = kDefaultTol;
  std::uint64_t seed = 0;
};

Real env_default_tol() {
  if (const char* s = std::getenv("CARLESON_DEFAULT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && v > 0) return v;
    throw std::invalid_argument("CARLESON_DEFAULT_TOL is not a positive number");
  }
  return kDefaultTol;
}

CarlesonSpectrum resolve_spectrum(const CommonOpts& c, Index min_count) {
  if (!c.spectrum_path.empty()) return load_spectrum(c.spectrum_path);
  // reference spectrum z_j = 1 - 0.5 * 0.5^j
  return make_geometric_real(0.5, 0.5, std::max<Index>(min_count, 12));
}

std::vector<Real> parse_reals(const std::string& csv, const char* what) {
  std::vector<Real> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad number '" + item + "'");
    }
  }
  if (vals.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return vals;
}

// Lambda grammar: arith:N=3[,jitter=random|none|<value>] | explicit:v0,v1,... |
// dyadic | a path to an exponents JSON file.
ExponentSet parse_lambda(const std::string& s, Index count, std::uint64_t seed) {
  if (s.rfind("arith:", 0) == 0) {
    Index N = 0;
    std::string jitter = "none";
    std::stringstream ss(s.substr(6));
    std::string field;
    while (std::getline(ss, field, ',')) {
      if (field.rfind("N=", 0) == 0) {
        N = std::stoll(field.substr(2));
      } else if (field.rfind("jitter=", 0) == 0) {
        jitter = field.substr(7);
      } else {
        throw std::invalid_argument("lambda: unknown field '" + field + "'");
      }
    }
    if (N < 1) throw std::invalid_argument("lambda: arith requires N >= 1");
    if (jitter == "none") return ExponentSet::arithmetic(N, count);
    if (jitter == "random") return ExponentSet::jittered_random(N, count, seed);
    Real j = 0;
    try {
      j = std::stod(jitter);
    } catch (const std::exception&) {
      throw std::invalid_argument("lambda: bad jitter '" + jitter + "'");
    }
    return ExponentSet::jittered(N, Vec::Constant(count, j));
  }
  if (s.rfind("explicit:", 0) == 0) {
    const auto vals = parse_reals(s.substr(9), "lambda");
    return ExponentSet::explicit_set(
        Eigen::Map<const Vec>(vals.data(), static_cast<Index>(vals.size())));
  }
  if (s == "dyadic") return ExponentSet::dyadic(std::min<Index>(count, 1023));
  std::ifstream in(s);
  if (!in) throw std::invalid_argument("lambda: cannot parse '" + s + "' (not a recognized expression or file)");
  try {
    return exponents_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("lambda: " + s + ": " + e.what());
  }
}

// Jitter rule: random | none | a constant in [0, N) | a path to a JSON
// array of per-k jitters.
ExponentSet jittered_from_rule(Index N, Index count, const std::string& rule,
                               std::uint64_t seed) {
  if (rule == "random") return ExponentSet::jittered_random(N, count, seed);
  if (rule == "none") return ExponentSet::arithmetic(N, count);
  char* end = nullptr;
  const double v = std::strtod(rule.c_str(), &end);
  if (end != rule.c_str() && *end == '\0') {
    return ExponentSet::jittered(N, Vec::Constant(count, v));
  }
  std::ifstream in(rule);
  if (!in) throw std::invalid_argument("jitter: cannot parse '" + rule + "' (not a rule or file)");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("jitter: " + rule + ": " + e.what());
  }
  const auto vals = j.get<std::vector<Real>>();
  if (static_cast<Index>(vals.size()) < count) {
    throw std::invalid_argument("jitter: file holds fewer jitters than columns requested");
  }
  return ExponentSet::jittered(
      N, Eigen::Map<const Vec>(vals.data(), count));
}

void emit(const json& report, const CommonOpts& c) {
  const std::string text = report.dump(2) + "\n";
  if (c.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path " + c.out_path);
    out << text;
  }
}

json report_shell(const std::string& command, json config, const CommonOpts& c) {
  config["seed"] = c.seed;
  config["spectrum"] = c.spectrum_path.empty() ? "reference-geometric" : c.spectrum_path;
  config["tol"] = c.tol;
  return json{{"command", command},
              {"config", std::move(config)},
              {"library_version", kVersion}};
}

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--spectrum", c.spectrum_path,
                  "Spectrum JSON path (default: reference geometric)");
  cmd->add_option("--out", c.out_path, "Report output path (default: stdout)");
  cmd->add_option("--tol", c.tol, "Numeric tolerance");
  cmd->add_option("--seed", c.seed, "Seed for randomized trials");
}

int run_cli(int argc, char** argv) {
  CLI::App app{"carleson: frame certificates for Carleson systems {D^lambda g}"};
  app.require_subcommand(1);
  const Real tol0 = env_default_tol();

  // ---- gen-spectrum
  auto* gen = app.add_subcommand("gen-spectrum", "Generate a spectrum JSON file");
  CommonOpts gen_c;
  gen_c.tol = tol0;
  std::string gen_kind = "geometric", gen_rule = "alternating";
  Real gen_base = 0.5, gen_ratio = 0.5, gen_half_angle = 0.0;
  Index gen_count = 12;
  gen->add_option("--kind", gen_kind, "geometric | sector")
      ->check(CLI::IsMember({"geometric", "sector"}));
  gen->add_option("--base", gen_base, "1 - z_j = base * ratio^j");
  gen->add_option("--ratio", gen_ratio, "modulus defect ratio");
  gen->add_option("--count", gen_count, "materialized points");
  gen->add_option("--half-angle", gen_half_angle, "sector half angle c");
  gen->add_option("--angle-rule", gen_rule, "zero | constant | alternating")
      ->check(CLI::IsMember({"zero", "constant", "alternating"}));
  gen->add_option("--out", gen_c.out_path, "Spectrum output path (default: stdout)");
  gen->callback([&] {
    CarlesonSpectrum spec = [&] {
      if (gen_kind == "geometric") return make_geometric_real(gen_base, gen_ratio, gen_count);
      std::vector<Real> moduli;
      for (Index j = 0; j < gen_count; ++j) {
        moduli.push_back(1 - gen_base * std::pow(gen_ratio, static_cast<Real>(j)));
      }
      const AngleRule rule = gen_rule == "zero"       ? AngleRule::Zero
                             : gen_rule == "constant" ? AngleRule::Constant
                                                      : AngleRule::Alternating;
      return make_sector(moduli, gen_half_angle, rule);
    }();
    emit(spectrum_to_json(spec), gen_c);
  });

  // ---- check-carleson
  auto* chk = app.add_subcommand("check-carleson", "Carleson delta estimate");
  CommonOpts chk_c;
  chk_c.tol = tol0;
  Index chk_n = 0;
  add_common(chk, chk_c);
  chk->add_option("--n", chk_n, "truncation (default: all points)");
  chk->callback([&] {
    const CarlesonSpectrum spec = resolve_spectrum(chk_c, 1);
    const Index n = chk_n > 0 ? chk_n : spec.size();
    json rep = report_shell("check-carleson", json{{"n", n}}, chk_c);
    rep["result"] = to_json(carleson_delta(spec, n));
    emit(rep, chk_c);
  });

  // ---- frame-bounds
  auto* fbc = app.add_subcommand("frame-bounds", "Truncated frame bounds and Delta window");
  CommonOpts fb_c;
  fb_c.tol = tol0;
  Index fb_rows = 12, fb_cols = 400;
  std::string fb_lambda = "arith:N=1";
  add_common(fbc, fb_c);
  fbc->add_option("--rows", fb_rows, "spectrum rows");
  fbc->add_option("--cols", fb_cols, "exponent columns");
  fbc->add_option("--lambda", fb_lambda, "exponent set expression");
  fbc->callback([&] {
    const CarlesonSpectrum spec = resolve_spectrum(fb_c, fb_rows);
    json rep = report_shell(
        "frame-bounds", json{{"rows", fb_rows}, {"cols", fb_cols}, {"lambda", fb_lambda}},
        fb_c);
    if (fb_lambda == "arith:N=1") {
      const SandwichReport sw = discrete_sandwich_check(spec, fb_rows, fb_cols, fb_c.tol);
      rep["result"] = to_json(sw);
      rep["result"]["window_applies"] = true;
      emit(rep, fb_c);
      if (!sw.contained) throw NumericError("frame-bounds: window containment failed");
    } else {
      const ExponentSet lam = parse_lambda(fb_lambda, fb_cols, fb_c.seed);
      const FrameBoundEstimate fb =
          frame_bounds(synthesis_matrix(spec, lam, 0, fb_rows, fb_cols));
      rep["result"] = to_json(fb);
      rep["result"]["window_applies"] = false;
      emit(rep, fb_c);
    }
  });

  // ---- subsample-check
  auto* sub = app.add_subcommand("subsample-check", "Converged bounds for jittered subsampling");
  CommonOpts sub_c;
  sub_c.tol = tol0;
  Index sub_N = 2, sub_rows = 12, sub_kstart = 1024, sub_maxcols = 1 << 15;
  Real sub_growth = 2.0, sub_reltol = 0.05;
  std::string sub_jitter = "random";
  add_common(sub, sub_c);
  sub->add_option("--N", sub_N, "arithmetic step");
  sub->add_option("--rows", sub_rows, "spectrum rows");
  sub->add_option("--kstart", sub_kstart, "starting column count");
  sub->add_option("--growth", sub_growth, "column growth factor");
  sub->add_option("--rel-tol", sub_reltol, "convergence drift tolerance");
  sub->add_option("--max-cols", sub_maxcols, "column cap");
  sub->add_option("--jitter", sub_jitter, "random | none | constant | jitter file");
  sub->callback([&] {
    const CarlesonSpectrum spec = resolve_spectrum(sub_c, sub_rows);
    const ExponentSet lam = jittered_from_rule(sub_N, sub_maxcols, sub_jitter, sub_c.seed);
    const FrameBoundEstimate fb = frame_bounds_converged(
        spec, lam, sub_rows, sub_kstart, sub_growth, sub_reltol, sub_maxcols);
    json rep = report_shell("subsample-check",
                            json{{"N", sub_N},
                                 {"rows", sub_rows},
                                 {"kstart", sub_kstart},
                                 {"growth", sub_growth},
                                 {"rel_tol", sub_reltol},
                                 {"max_cols", sub_maxcols}},
                            sub_c);
    rep["config"]["jitter"] = sub_jitter;
    rep["result"] = to_json(fb);
    const bool frame_like = fb.converged && fb.A_hat > 1e-12;
    rep["result"]["frame_certified"] = frame_like;
    emit(rep, sub_c);
    if (!frame_like) throw NumericError("subsample-check: not certified");
  });

  // ---- perturbation
  auto* per = app.add_subcommand("perturbation", "Perturbation cutoff J and estimate chain");
  CommonOpts per_c;
  per_c.tol = tol0;
  Index per_N = 1, per_rows = 17, per_kstart = 1 << 14, per_maxcols = 1 << 20;
  Index per_trials = 20, per_chain_rows = 48, per_chain_terms = 512;
  Real per_reltol = 0.05;
  add_common(per, per_c);
  per->add_option("--N", per_N, "arithmetic step");
  per->add_option("--rows", per_rows, "spectrum rows for the A estimate");
  per->add_option("--kstart", per_kstart, "starting column count");
  per->add_option("--max-cols", per_maxcols, "column cap");
  per->add_option("--rel-tol", per_reltol, "convergence drift tolerance");
  per->add_option("--trials", per_trials, "seeded jitter draws for the chain");
  per->add_option("--chain-rows", per_chain_rows, "rows in the chain sums");
  per->add_option("--chain-terms", per_chain_terms, "k-terms in the chain sums");
  per->callback([&] {
    const CarlesonSpectrum spec =
        resolve_spectrum(per_c, std::max(per_rows, per_chain_rows));
    PerturbationOptions opt;
    opt.K_start = per_kstart;
    opt.max_cols = per_maxcols;
    opt.rel_tol = per_reltol;
    const PerturbationCertificate cert = perturbation_J(spec, per_N, per_rows, opt);
    json rep = report_shell("perturbation",
                            json{{"N", per_N},
                                 {"rows", per_rows},
                                 {"kstart", per_kstart},
                                 {"max_cols", per_maxcols},
                                 {"rel_tol", per_reltol},
                                 {"trials", per_trials},
                                 {"chain_rows", per_chain_rows},
                                 {"chain_terms", per_chain_terms}},
                            per_c);
    rep["result"] = json{{"certificate", to_json(cert)}};
    std::mt19937_64 rng(per_c.seed);
    json chains = json::array();
    bool all_hold = true;
    for (Index t = 0; t < per_trials; ++t) {
      Vec jit(per_chain_terms);
      for (Index k = 0; k < per_chain_terms; ++k) {
        jit(k) = static_cast<Real>(per_N) * uniform01(rng);
      }
      const PerturbationChainReport chain = verify_perturbation_chain(spec, per_N, jit, cert.J, per_chain_rows);
      all_hold = all_hold && chain.holds;
      chains.push_back(to_json(chain));
    }
    rep["result"]["chains"] = std::move(chains);
    rep["result"]["all_chains_hold"] = all_hold;
    emit(rep, per_c);
    if (!cert.satisfied || !all_hold) throw NumericError("perturbation: not certified");
  });

  // ---- extension
  auto* ext = app.add_subcommand("extension", "Constructive surjectivity extension steps");
  CommonOpts ext_c;
  ext_c.tol = tol0;
  Index ext_J = 5, ext_rows = 10, ext_cols = 4096, ext_N = 2, ext_support = 512;
  std::string ext_jitter = "random";
  add_common(ext, ext_c);
  ext->add_option("--J", ext_J, "starting row cutoff");
  ext->add_option("--rows", ext_rows, "spectrum rows");
  ext->add_option("--cols", ext_cols, "exponent columns");
  ext->add_option("--N", ext_N, "arithmetic step of the jittered exponents");
  ext->add_option("--support", ext_support, "b support prefix size");
  ext->add_option("--jitter", ext_jitter, "random | none | constant | jitter file");
  ext->callback([&] {
    const CarlesonSpectrum spec = resolve_spectrum(ext_c, ext_rows);
    const ExponentSet lam = jittered_from_rule(ext_N, ext_cols, ext_jitter, ext_c.seed);
    ExtensionStepOptions opt;
    opt.support = ext_support;
    const auto steps = extension_descent(spec, lam, ext_J, ext_rows, ext_cols, opt);
    json rep = report_shell("extension",
                            json{{"J", ext_J},
                                 {"rows", ext_rows},
                                 {"cols", ext_cols},
                                 {"N", ext_N},
                                 {"support", ext_support},
                                 {"jitter", ext_jitter}},
                            ext_c);
    json jsteps = json::array();
    bool all = !steps.empty();
    for (const auto& s : steps) {
      all = all && s.success;
      jsteps.push_back(to_json(s));
    }
    const FrameBoundEstimate full =
        frame_bounds(synthesis_matrix(spec, lam, 0, ext_rows, ext_cols));
    rep["result"] = json{{"steps", std::move(jsteps)},
                         {"all_steps_succeeded", all},
                         {"full_rows_bounds", to_json(full)}};
    emit(rep, ext_c);
    if (!all || !(full.A_hat > 1e-12)) throw NumericError("extension: not certified");
  });

  // ---- degenerate
  auto* deg = app.add_subcommand("degenerate", "Detect z_k^N = z_l^N column collisions");
  CommonOpts deg_c;
  deg_c.tol = tol0;
  Index deg_N = 2, deg_cols = 256;
  add_common(deg, deg_c);
  deg->add_option("--N", deg_N, "power step");
  deg->add_option("--cols", deg_cols, "samples for the null-vector energy");
  deg->callback([&] {
    const CarlesonSpectrum spec = resolve_spectrum(deg_c, 2);
    const auto pairs = degenerate_check(spec, deg_N, deg_c.tol);
    json rep = report_shell("degenerate", json{{"N", deg_N}, {"cols", deg_cols}}, deg_c);
    const ExponentSet lam = ExponentSet::arithmetic(deg_N, deg_cols);
    json jpairs = json::array();
    for (const auto& pr : pairs) {
      const CVec f = degenerate_null_vector(spec, pr);
      const CVec samples = analysis_apply(spec, lam, f, deg_cols);
      jpairs.push_back(json{{"k", pr.first},
                            {"l", pr.second},
                            {"null_sample_energy", samples.squaredNorm()},
                            {"null_norm_sq", f.squaredNorm()}});
    }
    const FrameBoundEstimate fb =
        frame_bounds(synthesis_matrix(spec, lam, 0, spec.size(), deg_cols));
    rep["result"] = json{{"pairs", std::move(jpairs)},
                         {"pair_count", pairs.size()},
                         {"system_bounds", to_json(fb)}};
    emit(rep, deg_c);
    if (!pairs.empty()) throw NumericError("degenerate: collisions detected");
  });

  // ---- density
  auto* den = app.add_subcommand("density", "Logarithmic block density report");
  CommonOpts den_c;
  den_c.tol = tol0;
  std::string den_lambda = "arith:N=1", den_mu = "1.5,2,3,4,5";
  Index den_count = 4096, den_tpoints = 48;
  Real den_tmin = 0, den_tmax = 0;
  add_common(den, den_c);
  den->add_option("--lambda", den_lambda, "exponent set expression");
  den->add_option("--count", den_count, "materialized exponents");
  den->add_option("--mu", den_mu, "comma list of mu > 1");
  den->add_option("--t-min", den_tmin, "t grid start (default lambda_max / 64)");
  den->add_option("--t-max", den_tmax, "t grid end (default lambda_max / mu_max)");
  den->add_option("--t-points", den_tpoints, "t grid size");
  den->callback([&] {
    const ExponentSet lam = parse_lambda(den_lambda, den_count, den_c.seed);
    const auto mus = parse_reals(den_mu, "mu grid");
    const Real lam_max = lam.values()(lam.size() - 1);
    const Real mu_max = *std::max_element(mus.begin(), mus.end());
    const Real tmin = den_tmin > 0 ? den_tmin : lam_max / 64;
    const Real tmax = den_tmax > 0 ? den_tmax : lam_max / mu_max;
    if (!(tmax > tmin)) throw std::invalid_argument("density: empty t range");
    Vec t_grid(den_tpoints);
    for (Index i = 0; i < den_tpoints; ++i) {
      t_grid(i) = tmin * std::pow(tmax / tmin,
                                  static_cast<Real>(i) / static_cast<Real>(den_tpoints - 1));
    }
    const DensityReport r = log_block_density(
        lam, Eigen::Map<const Vec>(mus.data(), static_cast<Index>(mus.size())), t_grid);
    json rep = report_shell("density",
                            json{{"lambda", den_lambda},
                                 {"count", den_count},
                                 {"mu", den_mu},
                                 {"t_min", tmin},
                                 {"t_max", tmax},
                                 {"t_points", den_tpoints}},
                            den_c);
    rep["result"] = to_json(r);
    if (!den_c.spectrum_path.empty()) {
      const CarlesonSpectrum spec = load_spectrum(den_c.spectrum_path);
      rep["result"]["completeness"] = to_json(completeness_certificate(spec, r));
    }
    emit(rep, den_c);
  });

  // ---- continuous
  auto* con = app.add_subcommand("continuous", "Continuous-frame sandwich via Riemann sums");
  CommonOpts con_c;
  con_c.tol = tol0;
  Index con_rows = 12, con_support = 5, con_trials = 50;
  Real con_dt = 1e-3, con_base_tol = 1e-6, con_T = 0;
  std::string con_csv;
  add_common(con, con_c);
  con->add_option("--rows", con_rows, "spectrum rows for delta_n");
  con->add_option("--support", con_support, "support of the random vectors");
  con->add_option("--trials", con_trials, "number of random vectors");
  con->add_option("--dt", con_dt, "Riemann cell width");
  con->add_option("--T", con_T, "integration cut (default 200 / -log r_max)");
  con->add_option("--base-tol", con_base_tol, "sandwich slack before the tail bound");
  con->add_option("--csv", con_csv, "write (t, energy) samples for the first vector");
  con->callback([&] {
    const CarlesonSpectrum spec = resolve_spectrum(con_c, con_rows);
    const ContinuousBoundReport r = continuous_report(spec, con_rows, con_support,
                                                      con_trials, con_c.seed, con_dt,
                                                      con_base_tol, con_T);
    json rep = report_shell("continuous",
                            json{{"rows", con_rows},
                                 {"support", con_support},
                                 {"trials", con_trials},
                                 {"dt", con_dt},
                                 {"T", con_T},
                                 {"base_tol", con_base_tol}},
                            con_c);
    rep["result"] = to_json(r);
    emit(rep, con_c);
    if (!con_csv.empty()) {
      std::mt19937_64 rng(con_c.seed);
      CVec f(con_support);
      for (Index j = 0; j < con_support; ++j) {
        f(j) = Complex(2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1);
      }
      const Real T = con_T > 0 ? con_T : default_integration_cut(spec, con_support);
      const Index samples = 2000;
      Vec ts(samples), es(samples);
      for (Index i = 0; i < samples; ++i) {
        const Real t = T * static_cast<Real>(i) / static_cast<Real>(samples);
        Complex inner = 0;
        for (Index j = 0; j < con_support; ++j) {
          inner += f(j) * std::pow(spec.point(j).r, t) * std::sqrt(spec.point(j).defect());
        }
        ts(i) = t;
        es(i) = std::norm(inner);
      }
      std::ofstream csv(con_csv, std::ios::binary);
      if (!csv) throw std::invalid_argument("continuous: cannot open " + con_csv);
      write_energy_csv(ts, es, csv);
    }
    if (!r.all_within) throw NumericError("continuous: sandwich violated");
  });

  // ---- reconstruct
  auto* rec = app.add_subcommand("reconstruct", "Round-trip recovery from dynamical samples");
  CommonOpts rec_c;
  rec_c.tol = 1e-8;
  Index rec_rows = 12, rec_cols = 1 << 14, rec_N = 2, rec_support = 8;
  std::string rec_lambda, rec_jitter = "random";
  add_common(rec, rec_c);
  rec->add_option("--rows", rec_rows, "spectrum rows");
  rec->add_option("--cols", rec_cols, "sample count");
  rec->add_option("--N", rec_N, "arithmetic step of the jittered exponents");
  rec->add_option("--support", rec_support, "support of the test vector");
  rec->add_option("--lambda", rec_lambda, "exponent set expression (overrides --N)");
  rec->add_option("--jitter", rec_jitter, "random | none | constant | jitter file");
  rec->callback([&] {
    const CarlesonSpectrum spec = resolve_spectrum(rec_c, rec_rows);
    const ExponentSet lam =
        rec_lambda.empty() ? jittered_from_rule(rec_N, rec_cols, rec_jitter, rec_c.seed)
                           : parse_lambda(rec_lambda, rec_cols, rec_c.seed);
    std::mt19937_64 rng(rec_c.seed + 1);
    CVec f = CVec::Zero(rec_rows);
    for (Index j = 0; j < std::min(rec_support, rec_rows); ++j) {
      f(j) = Complex(2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1);
    }
    const CVec samples = analysis_apply(spec, lam, f, rec_cols);
    const SynthesisMatrix m = synthesis_matrix(spec, lam, 0, rec_rows, rec_cols);
    const CVec f_hat = reconstruct(samples, m);
    const Real rel_err = (f_hat - f).norm() / f.norm();
    json rep = report_shell("reconstruct",
                            json{{"rows", rec_rows},
                                 {"cols", rec_cols},
                                 {"N", rec_N},
                                 {"support", rec_support},
                                 {"lambda", rec_lambda},
                                 {"jitter", rec_jitter}},
                            rec_c);
    rep["result"] = json{{"relative_error", rel_err},
                         {"f_norm", f.norm()},
                         {"certified", rel_err < rec_c.tol}};
    emit(rep, rec_c);
    if (!(rel_err < rec_c.tol)) throw NumericError("reconstruct: round trip failed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const NumericError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
