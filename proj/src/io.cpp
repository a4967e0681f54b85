#include "carleson/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

namespace carleson {

namespace {

json complex_to_json(Complex z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

const json& expect(const json& j, const char* field, const char* what) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw std::invalid_argument(std::string(what) + ": missing field '" + field + "'");
  }
  return *it;
}

}  // namespace

json spectrum_to_json(const CarlesonSpectrum& spec) {
  json pts = json::array();
  for (const DiskPoint& p : spec.points()) {
    pts.push_back(json{{"r", p.r}, {"theta", p.theta}});
  }
  json flags{{"real_positive", spec.flags().real_positive},
             {"strictly_increasing_modulus", spec.flags().strictly_increasing_modulus}};
  if (spec.flags().sector_half_angle_c) {
    flags["sector_half_angle_c"] = *spec.flags().sector_half_angle_c;
  }
  return json{{"points", std::move(pts)},
              {"flags", std::move(flags)},
              {"generator_tag", spec.generator_tag()}};
}

CarlesonSpectrum spectrum_from_json(const json& j) {
  const json& jpts = expect(j, "points", "spectrum");
  if (!jpts.is_array() || jpts.empty()) {
    throw std::invalid_argument("spectrum: 'points' must be a non-empty array");
  }
  std::vector<DiskPoint> pts;
  pts.reserve(jpts.size());
  for (size_t i = 0; i < jpts.size(); ++i) {
    const json& jp = jpts[i];
    if (!jp.contains("r") || !jp.contains("theta")) {
      throw std::invalid_argument("spectrum: point " + std::to_string(i) +
                                  " needs fields 'r' and 'theta'");
    }
    pts.push_back(DiskPoint::from_polar(jp["r"].get<Real>(), jp["theta"].get<Real>()));
  }
  SpectrumFlags flags;
  const json& jf = expect(j, "flags", "spectrum");
  flags.real_positive = jf.value("real_positive", false);
  flags.strictly_increasing_modulus = jf.value("strictly_increasing_modulus", false);
  if (jf.contains("sector_half_angle_c")) {
    flags.sector_half_angle_c = jf["sector_half_angle_c"].get<Real>();
  }
  return CarlesonSpectrum(std::move(pts), flags,
                          expect(j, "generator_tag", "spectrum").get<std::string>());
}

CarlesonSpectrum load_spectrum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_spectrum: cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    // e.byte gives the offset of the failure; surface it for diagnostics
    throw std::invalid_argument("load_spectrum: " + path + ": " + e.what());
  }
  return spectrum_from_json(j);
}

void save_spectrum(const CarlesonSpectrum& spec, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("save_spectrum: cannot open " + path);
  out << spectrum_to_json(spec).dump(2) << '\n';
}

json exponents_to_json(const ExponentSet& lam) {
  json j{{"descriptor", lam.descriptor()},
         {"materialized_count", lam.size()}};
  if (auto N = lam.arithmetic_step()) {
    j["kind"] = "jittered_arithmetic";
    j["N"] = *N;
    j["jitters"] = std::vector<Real>(lam.jitters().data(),
                                     lam.jitters().data() + lam.jitters().size());
  } else {
    j["kind"] = "explicit";
    j["values"] = std::vector<Real>(lam.values().data(),
                                    lam.values().data() + lam.values().size());
  }
  return j;
}

ExponentSet exponents_from_json(const json& j) {
  const std::string kind = expect(j, "kind", "exponents").get<std::string>();
  if (kind == "jittered_arithmetic") {
    const auto jit = expect(j, "jitters", "exponents").get<std::vector<Real>>();
    Vec v = Eigen::Map<const Vec>(jit.data(), static_cast<Index>(jit.size()));
    return ExponentSet::jittered(expect(j, "N", "exponents").get<Index>(), std::move(v));
  }
  if (kind == "explicit") {
    const auto vals = expect(j, "values", "exponents").get<std::vector<Real>>();
    Vec v = Eigen::Map<const Vec>(vals.data(), static_cast<Index>(vals.size()));
    return ExponentSet::explicit_set(std::move(v), j.value("descriptor", "explicit"));
  }
  throw std::invalid_argument("exponents: unknown kind '" + kind + "'");
}

json to_json(const CarlesonDeltaEstimate& est) {
  return json{{"delta_n", est.delta_n},
              {"truncation_n", est.truncation_n},
              {"per_k_products",
               std::vector<Real>(est.per_k_products.data(),
                                 est.per_k_products.data() + est.per_k_products.size())}};
}

json to_json(const FrameBoundEstimate& est) {
  json hist = json::array();
  for (const auto& [K, A] : est.history) hist.push_back(json{{"K", K}, {"A_hat", A}});
  return json{{"A_hat", est.A_hat},     {"B_hat", est.B_hat},
              {"J_rows", est.J_rows},   {"K_cols", est.K_cols},
              {"converged", est.converged}, {"history", std::move(hist)}};
}

json to_json(const DensityReport& rep) {
  json table = json::array();
  for (Index i = 0; i < rep.mu_grid.size(); ++i) {
    for (Index t = 0; t < rep.t_grid.size(); ++t) {
      table.push_back(json{{"mu", rep.mu_grid(i)},
                           {"t", rep.t_grid(t)},
                           {"block_sum", rep.block_sums(i, t)}});
    }
  }
  return json{
      {"ms_partial_sums", rep.ms_partial_sums},
      {"ms_verdict", ms_verdict_name(rep.ms_verdict)},
      {"L_estimate", rep.L_estimate},
      {"mu_grid", std::vector<Real>(rep.mu_grid.data(), rep.mu_grid.data() + rep.mu_grid.size())},
      {"t_grid", std::vector<Real>(rep.t_grid.data(), rep.t_grid.data() + rep.t_grid.size())},
      {"t_max", rep.t_max},
      {"per_mu_sup",
       std::vector<Real>(rep.per_mu_sup.data(), rep.per_mu_sup.data() + rep.per_mu_sup.size())},
      {"table", std::move(table)},
      {"short_materialization_warning", rep.short_materialization_warning}};
}

json to_json(const PerturbationCertificate& cert) {
  return json{{"J", cert.J},
              {"tail_value", cert.tail_value},
              {"A_reference", cert.A_reference},
              {"N", cert.N},
              {"satisfied", cert.satisfied},
              {"truncation_n", cert.truncation_n},
              {"analytic_tail_bound", cert.analytic_tail_bound},
              {"reference_bounds", to_json(cert.reference_bounds)},
              {"spectrum_tag", cert.spectrum_tag},
              {"exponent_tag", cert.exponent_tag}};
}

json to_json(const PerturbationChainReport& rep) {
  return json{{"coordinate_sum", rep.coordinate_sum},
              {"perturbation_energy", rep.perturbation_energy},
              {"geometric_bound", rep.geometric_bound},
              {"tail", rep.tail},
              {"termwise_ok", rep.termwise_ok},
              {"holds", rep.holds}};
}

json to_json(const ExtensionStepReport& rep) {
  return json{{"J", rep.J},
              {"epsilon", rep.epsilon},
              {"b", std::vector<Real>(rep.b.data(), rep.b.data() + rep.b.size())},
              {"b_support",
               std::vector<Real>(rep.b_support.data(), rep.b_support.data() + rep.b_support.size())},
              {"c_norm", rep.c_norm},
              {"rho", complex_to_json(rep.rho)},
              {"off_target_residual", rep.off_target_residual},
              {"lower_bound_check", rep.lower_bound_check},
              {"success", rep.success},
              {"fit_max", rep.fit_max},
              {"gamma", rep.gamma},
              {"M", rep.M},
              {"A_hat", rep.A_hat},
              {"B_hat", rep.B_hat},
              {"c_bound", rep.c_bound},
              {"rows_n", rep.rows_n},
              {"K_cols", rep.K_cols},
              {"spectrum_tag", rep.spectrum_tag},
              {"exponent_tag", rep.exponent_tag}};
}

json to_json(const ZeroSetGuard& guard) {
  return json{{"theta_c_value", complex_to_json(guard.theta_c_value)},
              {"safe", guard.safe},
              {"kernel_residual", guard.kernel_residual},
              {"J", guard.J},
              {"rows_n", guard.rows_n},
              {"K_cols", guard.K_cols},
              {"spectrum_tag", guard.spectrum_tag},
              {"exponent_tag", guard.exponent_tag}};
}

json to_json(const CompletenessCertificate& cert) {
  return json{{"sector_half_angle_c", cert.sector_half_angle_c},
              {"L_estimate", cert.L_estimate},
              {"margin", cert.margin},
              {"complete", cert.complete}};
}

json to_json(const SandwichReport& rep) {
  return json{{"delta_n", rep.delta_n}, {"Delta", rep.Delta},
              {"Delta_inv", 1 / rep.Delta},
              {"A_hat", rep.A_hat},     {"B_hat", rep.B_hat},
              {"contained", rep.contained}, {"n", rep.n}, {"K", rep.K}};
}

json to_json(const RiemannEnergy& e) {
  return json{{"value", e.value},
              {"tail_bound", e.tail_bound},
              {"tail_warning", e.tail_warning},
              {"dt", e.dt},
              {"T", e.T}};
}

json to_json(const ContinuousBoundReport& rep) {
  json vecs = json::array();
  for (const PerVectorEnergy& pv : rep.per_vector_energies) {
    vecs.push_back(json{{"f_tag", pv.f_tag},
                        {"riemann_value", pv.riemann_value},
                        {"T_cut", pv.T_cut},
                        {"dt", pv.dt},
                        {"tail_bound", pv.tail_bound},
                        {"f_norm_sq", pv.f_norm_sq},
                        {"within", pv.within}});
  }
  return json{{"delta_used", rep.delta_used},
              {"Delta", rep.Delta},
              {"lower_const", rep.lower_const},
              {"z0", rep.z0},
              {"per_vector_energies", std::move(vecs)},
              {"all_within", rep.all_within}};
}

void write_matrix_csv(const SynthesisMatrix& m, std::ostream& os) {
  os << "j";
  for (Index k = 0; k < m.cols(); ++k) os << ",re_" << k << ",im_" << k;
  os << '\n';
  char buf[32];
  for (Index i = 0; i < m.rows(); ++i) {
    os << (m.row_offset + i);
    for (Index k = 0; k < m.cols(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", m.entries(i, k).real());
      os << ',' << buf;
      std::snprintf(buf, sizeof buf, "%.17g", m.entries(i, k).imag());
      os << ',' << buf;
    }
    os << '\n';
  }
}

json matrix_header_json(const SynthesisMatrix& m) {
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"row_offset", m.row_offset},
              {"spectrum_tag", m.spectrum_tag},
              {"exponent_tag", m.exponent_tag}};
}

void write_energy_csv(const Vec& ts, const Vec& energies, std::ostream& os) {
  if (ts.size() != energies.size()) {
    throw std::invalid_argument("write_energy_csv: length mismatch");
  }
  os << "t,energy\n";
  char buf[32];
  for (Index i = 0; i < ts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", ts(i));
    os << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", energies(i));
    os << buf << '\n';
  }
}

}  // namespace carleson
