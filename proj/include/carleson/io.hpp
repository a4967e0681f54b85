#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "carleson/certify.hpp"
#include "carleson/continuous.hpp"

namespace carleson {

using nlohmann::json;

// Spectrum wire format:
//   {"points":[{"r":..., "theta":...}, ...],
//    "flags":{"real_positive":..., "strictly_increasing_modulus":...,
//             "sector_half_angle_c":...},       // c omitted when absent
//    "generator_tag":"..."}
// All invariants are re-validated on ingest.
json spectrum_to_json(const CarlesonSpectrum& spec);
CarlesonSpectrum spectrum_from_json(const json& j);
CarlesonSpectrum load_spectrum(const std::string& path);
void save_spectrum(const CarlesonSpectrum& spec, const std::string& path);

json exponents_to_json(const ExponentSet& lam);
ExponentSet exponents_from_json(const json& j);

json to_json(const CarlesonDeltaEstimate& est);
json to_json(const FrameBoundEstimate& est);
json to_json(const DensityReport& rep);
json to_json(const PerturbationCertificate& cert);
json to_json(const PerturbationChainReport& rep);
json to_json(const ExtensionStepReport& rep);
json to_json(const ZeroSetGuard& guard);
json to_json(const CompletenessCertificate& cert);
json to_json(const SandwichReport& rep);
json to_json(const RiemannEnergy& e);
json to_json(const ContinuousBoundReport& rep);

// CSV with one row per spectrum coordinate; each complex entry occupies a
// re/im column pair. The companion JSON header carries the provenance.
void write_matrix_csv(const SynthesisMatrix& m, std::ostream& os);
json matrix_header_json(const SynthesisMatrix& m);

// (t, |<f, D^t g>|^2) samples for external plotting.
void write_energy_csv(const Vec& ts, const Vec& energies, std::ostream& os);

}  // namespace carleson
