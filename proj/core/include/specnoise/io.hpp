#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "specnoise/common.hpp"
#include "specnoise/floquet.hpp"
#include "specnoise/model.hpp"
#include "specnoise/phase_space.hpp"
#include "specnoise/rmt.hpp"
#include "specnoise/spectral.hpp"

namespace specnoise {

using json = nlohmann::json;

/// All floats in text outputs carry 17 significant digits.
std::string format_g17(double x);

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

/// One level per line, 17 significant digits.
void write_levels_csv(const std::filesystem::path& path,
                      const std::vector<double>& levels);

void write_power_spectrum_csv(const std::filesystem::path& path,
                              const PowerSpectrum& ps);
void write_form_factor_csv(const std::filesystem::path& path,
                           const FormFactor& f);
void write_delta_csv(const std::filesystem::path& path, const DeltaSeries& d);

/// (q, p, value) triplets.
void write_field_csv(const std::filesystem::path& path,
                     const PhaseSpaceField& f);

// Binary containers (little-endian 64-bit floats, row-major).
// Propagator: magic "SNPROP01", i64 n, f64 period, i64 slices,
//             f64 q_min, q_max, hbar, then n*n re/im pairs row-major.
// Field:      magic "SNFLD001", i64 kind, f64 time, i64 nq, i64 np,
//             q_axis, p_axis, then nq*np values row-major.
void save_propagator(const std::filesystem::path& path,
                     const UnitaryPropagator& u);
UnitaryPropagator load_propagator(const std::filesystem::path& path);

void save_field(const std::filesystem::path& path, const PhaseSpaceField& f);
PhaseSpaceField load_field(const std::filesystem::path& path);

// Config-file (JSON) forms.
json to_json(const ModelParams& p);
ModelParams model_from_json(const json& j);
json to_json(const EnsembleSpec& s);
EnsembleSpec ensemble_from_json(const json& j);

}  // namespace specnoise
