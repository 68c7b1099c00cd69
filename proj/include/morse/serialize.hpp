#ifndef MORSE_SERIALIZE_HPP
#define MORSE_SERIALIZE_HPP

#include <cstdio>
#include <map>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "morse/coherent.hpp"
#include "morse/duru_map.hpp"
#include "morse/oracle.hpp"
#include "morse/potential.hpp"
#include "morse/spectrum.hpp"
#include "morse/types.hpp"
#include "morse/validate.hpp"

namespace morse {

using Json = nlohmann::json;

// --- numbers ----------------------------------------------------------------

/// 17 significant digits: enough to round-trip any double exactly.
inline std::string format_sig17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

/// Complex values serialize as [re, im] everywhere, even when im = 0, so the
/// schema is uniform across Hermitian and complex cases.
inline Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

// --- parameter ingestion ----------------------------------------------------

namespace detail {
inline Complex complex_from_json(const Json& j, const std::string& key) {
  if (!j.contains(key))
    throw std::invalid_argument("params json: missing field '" + key + "'");
  const Json& v = j.at(key);
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw std::invalid_argument("params json: field '" + key +
                              "' must be a number or [re, im]");
}
} // namespace detail

/**
 * Parameter document, either explicit
 *   {"v1":[re,im], "v2":[re,im], "alpha":[re,im], "mass":m, "hbar":h}
 * (plain numbers accepted for real values) or a preset
 *   {"preset":{"kind":"non_pt_complex", "A":2, "B":1, "C":2, "alpha":1},
 *    "mass":0.5, "hbar":1}.
 * mass and hbar default to 1.
 */
inline MorseParams params_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("params json: expected an object");
  const double mass = j.value("mass", 1.0);
  const double hbar = j.value("hbar", 1.0);
  if (j.contains("preset")) {
    const Json& pj = j.at("preset");
    if (!pj.is_object() || !pj.contains("kind"))
      throw std::invalid_argument("params json: preset needs a 'kind'");
    std::map<std::string, double> raw;
    for (const auto& [key, value] : pj.items()) {
      if (key == "kind") continue;
      if (!value.is_number())
        throw std::invalid_argument("params json: preset field '" + key +
                                    "' must be a number");
      raw[key] = value.get<double>();
    }
    return make_preset(pj.at("kind").get<std::string>(), raw, mass, hbar);
  }
  return MorseParams(detail::complex_from_json(j, "v1"),
                     detail::complex_from_json(j, "v2"),
                     detail::complex_from_json(j, "alpha"), mass, hbar);
}

// --- spectrum export --------------------------------------------------------

/// JSON array of {n, E:[re,im], s:[re,im], real:bool}.
inline Json spectrum_to_json(std::span<const EnergyLevel> levels) {
  Json out = Json::array();
  for (const EnergyLevel& level : levels)
    out.push_back({{"n", level.n},
                   {"E", complex_to_json(level.energy)},
                   {"s", complex_to_json(level.s_exponent)},
                   {"real", level.is_real}});
  return out;
}

// --- oracle / validation reports --------------------------------------------

inline Json grid_to_json(const GridSpec& grid) {
  return {{"x_min", grid.x_min},
          {"x_max", grid.x_max},
          {"n_points", grid.n_points},
          {"stencil_order", grid.stencil_order}};
}

/// {case, grid:{...}, matches:[{n, analytic, numeric, delta}], pass}
inline Json match_report_to_json(const MatchReport& report) {
  Json matches = Json::array();
  for (const SpectrumMatch& m : report.matches)
    matches.push_back({{"n", m.n},
                       {"analytic", complex_to_json(m.analytic)},
                       {"numeric", complex_to_json(m.numeric)},
                       {"delta", m.delta},
                       {"pass", m.pass}});
  return {{"case", report.case_label},
          {"grid", grid_to_json(report.grid)},
          {"tol_abs", report.tol_abs},
          {"matches", matches},
          {"pass", report.pass}};
}

inline Json validation_report_to_json(const ValidationReport& report) {
  Json j = match_report_to_json(report.match);
  j["case"] = report.case_label;
  j["symmetry"] = to_string(report.symmetry);
  j["oracle_trusted"] = report.oracle_trusted;
  Json residuals = Json::array();
  for (const ResidualEntry& e : report.residuals)
    residuals.push_back({{"n", e.n},
                         {"residual", e.residual},
                         {"threshold", e.threshold},
                         {"pass", e.pass}});
  j["residuals"] = residuals;
  j["pass"] = report.pass;
  return j;
}

// --- CSV exports ------------------------------------------------------------

inline void write_trajectory_csv(std::ostream& os,
                                 std::span<const TrajectorySample> samples) {
  os << "s,t,x,px,u,v,pu,pv\n";
  for (const TrajectorySample& r : samples)
    os << format_sig17(r.s) << ',' << format_sig17(r.t) << ','
       << format_sig17(r.x) << ',' << format_sig17(r.px) << ','
       << format_sig17(r.u) << ',' << format_sig17(r.v) << ','
       << format_sig17(r.pu) << ',' << format_sig17(r.pv) << '\n';
}

inline void write_wave_table_csv(std::ostream& os, std::span<const double> x,
                                 std::span<const Complex> psi) {
  os << "x,re_psi,im_psi\n";
  for (std::size_t i = 0; i < x.size(); ++i)
    os << format_sig17(x[i]) << ',' << format_sig17(psi[i].real()) << ','
       << format_sig17(psi[i].imag()) << '\n';
}

inline void write_coherent_csv(std::ostream& os,
                               std::span<const MeanPathSample> samples) {
  os << "s,t,x_mean,re_au,im_au,re_av,im_av\n";
  for (const MeanPathSample& r : samples)
    os << format_sig17(r.s) << ',' << format_sig17(r.t) << ','
       << format_sig17(r.x_mean) << ',' << format_sig17(r.a_u.real()) << ','
       << format_sig17(r.a_u.imag()) << ',' << format_sig17(r.a_v.real())
       << ',' << format_sig17(r.a_v.imag()) << '\n';
}

} // namespace morse

#endif // MORSE_SERIALIZE_HPP
