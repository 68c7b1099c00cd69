// Command-line front end: reproducible, scriptable access to the Morse
// toolkit. Subcommands: classify, spectrum, wavefunction, coherent, validate.
//
// Exit codes: 0 success, 2 invalid input, 3 validation failure, 4 numerical
// diagnostic error.

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morse/coherent.hpp"
#include "morse/duru_map.hpp"
#include "morse/potential.hpp"
#include "morse/serialize.hpp"
#include "morse/spectrum.hpp"
#include "morse/validate.hpp"
#include "morse/wavefn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitValidationFailed = 3;
constexpr int kExitNumericalError = 4;

struct CommonOpts {
  std::string params_file;
  std::string preset;
  std::optional<double> v1, v2, alpha, A, B, C;
  double mass = 1.0;
  double hbar = 1.0;
  std::string out;
  std::string format; // json | csv; default depends on the subcommand
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--params", opts.params_file,
                  "JSON parameter file (see README for the schema)");
  cmd->add_option("--preset", opts.preset,
                  "preset family: hermitian | pt_imaginary_alpha | non_pt_complex");
  cmd->add_option("--v1", opts.v1, "preset strength v1");
  cmd->add_option("--v2", opts.v2, "preset strength v2");
  cmd->add_option("--alpha", opts.alpha, "preset width (or PT imaginary coefficient)");
  cmd->add_option("--A", opts.A, "non_pt_complex A");
  cmd->add_option("--B", opts.B, "non_pt_complex B");
  cmd->add_option("--C", opts.C, "non_pt_complex C");
  cmd->add_option("--mass", opts.mass, "particle mass")->capture_default_str();
  cmd->add_option("--hbar", opts.hbar, "reduced Planck constant")->capture_default_str();
  cmd->add_option("--out", opts.out, "output path (default: stdout)");
  cmd->add_option("--format", opts.format, "output format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

morse::MorseParams build_params(const CommonOpts& opts) {
  const bool from_file = !opts.params_file.empty();
  const bool from_preset = !opts.preset.empty();
  if (from_file == from_preset)
    throw std::invalid_argument("exactly one of --params or --preset is required");
  if (from_file) {
    std::ifstream in(opts.params_file);
    if (!in)
      throw std::invalid_argument("cannot open parameter file '" +
                                  opts.params_file + "'");
    morse::Json j;
    try {
      in >> j;
    } catch (const morse::Json::parse_error& e) {
      throw std::invalid_argument("parameter file is not valid JSON: " +
                                  std::string(e.what()));
    }
    return morse::params_from_json(j);
  }
  std::map<std::string, double> raw;
  if (opts.v1) raw["v1"] = *opts.v1;
  if (opts.v2) raw["v2"] = *opts.v2;
  if (opts.alpha) raw["alpha"] = *opts.alpha;
  if (opts.A) raw["A"] = *opts.A;
  if (opts.B) raw["B"] = *opts.B;
  if (opts.C) raw["C"] = *opts.C;
  return morse::make_preset(opts.preset, raw, opts.mass, opts.hbar);
}

// "a:b:k" -> k uniform points from a to b inclusive
morse::XGrid parse_grid(const std::string& text) {
  double a = 0.0, b = 0.0;
  int k = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(text);
  if (!(is >> a >> c1 >> b >> c2 >> k) || c1 != ':' || c2 != ':' || !is.eof())
    throw std::invalid_argument("grid must be 'a:b:k', got '" + text + "'");
  if (k < 2 || !(b > a))
    throw std::invalid_argument("grid needs b > a and k >= 2");
  return morse::XGrid{a, b, k};
}

// "re,im" or "re"
morse::Complex parse_complex(const std::string& text) {
  double re = 0.0, im = 0.0;
  char comma = 0;
  std::istringstream is(text);
  if (!(is >> re)) throw std::invalid_argument("expected a number in '" + text + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im) )
      throw std::invalid_argument("complex value must be 're,im', got '" + text + "'");
  }
  if (!is.eof() && is.peek() != EOF)
    throw std::invalid_argument("trailing characters in '" + text + "'");
  return morse::Complex(re, im);
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out);
  if (!out)
    throw std::invalid_argument("cannot open output file '" + opts.out + "'");
  out << text;
}

std::string dump_json(const morse::Json& j) { return j.dump(2) + "\n"; }

int run_classify(const CommonOpts& opts) {
  const morse::MorseParams params = build_params(opts);
  emit(opts, morse::to_string(morse::classify_symmetry(params)) + "\n");
  return kExitOk;
}

int run_spectrum(const CommonOpts& opts) {
  const morse::MorseParams params = build_params(opts);
  const auto levels = morse::bound_levels(params);
  if (opts.format == "csv") {
    std::ostringstream os;
    os << "n,re_E,im_E,re_s,im_s,real\n";
    for (const auto& level : levels)
      os << level.n << ',' << morse::format_sig17(level.energy.real()) << ','
         << morse::format_sig17(level.energy.imag()) << ','
         << morse::format_sig17(level.s_exponent.real()) << ','
         << morse::format_sig17(level.s_exponent.imag()) << ','
         << (level.is_real ? 1 : 0) << '\n';
    emit(opts, os.str());
  } else {
    emit(opts, dump_json(morse::spectrum_to_json(levels)));
  }
  return kExitOk;
}

int run_wavefunction(const CommonOpts& opts, int n, const std::string& grid_text) {
  const morse::MorseParams params = build_params(opts);
  const morse::XGrid grid = parse_grid(grid_text);
  const morse::EnergyLevel level = morse::energy_level(params, n);
  morse::WaveSpec spec = morse::normalize_numeric(params, level);

  std::vector<double> xs(grid.n_points);
  std::vector<morse::Complex> psi(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    xs[i] = grid.node(i);
    psi[i] = morse::eval_psi(params, spec, xs[i]);
  }
  if (opts.format == "json") {
    morse::Json rows = morse::Json::array();
    for (int i = 0; i < grid.n_points; ++i)
      rows.push_back({{"x", xs[i]}, {"psi", morse::complex_to_json(psi[i])}});
    emit(opts, dump_json(morse::Json{{"n", n},
                                     {"normalizable", spec.normalizable},
                                     {"samples", rows}}));
  } else {
    std::ostringstream os;
    morse::write_wave_table_csv(os, xs, psi);
    emit(opts, os.str());
  }
  return kExitOk;
}

int run_coherent(const CommonOpts& opts, const std::string& au_text,
                 const std::string& av_text, double s_max, int steps) {
  const morse::MorseParams params = build_params(opts);
  if (steps < 1) throw std::invalid_argument("--steps must be >= 1");
  const morse::OscillatorChart chart =
      morse::build_chart(params, morse::energy_level(params, 0).energy);
  morse::CoherentState state{parse_complex(au_text), parse_complex(av_text),
                             chart, 0.0};
  if (s_max <= 0.0) {
    if (!chart.real_frequency())
      throw std::invalid_argument("--smax is required for complex-frequency charts");
    s_max = 4.0 * std::numbers::pi / chart.omega.real(); // two periods
  }
  std::vector<double> s_grid(steps + 1);
  for (int i = 0; i <= steps; ++i) s_grid[i] = s_max * i / steps;
  const auto path = morse::mean_morse_trajectory(state, s_grid, params);
  if (opts.format == "json") {
    morse::Json rows = morse::Json::array();
    for (const auto& r : path)
      rows.push_back({{"s", r.s},
                      {"t", r.t},
                      {"x_mean", r.x_mean},
                      {"a_u", morse::complex_to_json(r.a_u)},
                      {"a_v", morse::complex_to_json(r.a_v)}});
    emit(opts, dump_json(rows));
  } else {
    std::ostringstream os;
    morse::write_coherent_csv(os, path);
    emit(opts, os.str());
  }
  return kExitOk;
}

int run_validate(const CommonOpts& opts, const std::string& grid_text,
                 int stencil, double tol_abs, const std::string& rgrid_text,
                 double residual_tol) {
  const morse::MorseParams params = build_params(opts);
  morse::ValidationOptions vopt;
  if (!grid_text.empty()) {
    const morse::XGrid g = parse_grid(grid_text);
    vopt.grid = morse::GridSpec{g.x_min, g.x_max, g.n_points, stencil};
  }
  if (tol_abs > 0.0) vopt.tol_abs = tol_abs;
  if (!rgrid_text.empty()) vopt.residual_grid = parse_grid(rgrid_text);
  if (residual_tol > 0.0) vopt.residual_tol = residual_tol;
  const morse::ValidationReport report = morse::run_validation(params, vopt);
  emit(opts, dump_json(morse::validation_report_to_json(report)));
  return report.pass ? kExitOk : kExitValidationFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Morse potential: spectra, wave functions, canonical "
               "map and parametric-time coherent states"};
  app.require_subcommand(1);

  CommonOpts opts;

  CLI::App* classify = app.add_subcommand("classify", "print the symmetry class");
  add_common_options(classify, opts);

  CLI::App* spectrum = app.add_subcommand("spectrum", "emit the bound spectrum");
  add_common_options(spectrum, opts);

  CLI::App* wavefn =
      app.add_subcommand("wavefunction", "tabulate a bound-state wave function");
  add_common_options(wavefn, opts);
  int wf_n = 0;
  std::string wf_grid = "-5:25:1001";
  wavefn->add_option("--n", wf_n, "level index")->capture_default_str();
  wavefn->add_option("--grid", wf_grid, "x grid 'a:b:k'")->capture_default_str();

  CLI::App* coherent =
      app.add_subcommand("coherent", "evolve a coherent state in parametric time");
  add_common_options(coherent, opts);
  std::string au = "1,0", av = "0,1";
  double smax = 0.0;
  int steps = 1000;
  coherent->add_option("--au", au, "holomorphic coordinate a_u as 're,im'")
      ->capture_default_str();
  coherent->add_option("--av", av, "holomorphic coordinate a_v as 're,im'")
      ->capture_default_str();
  coherent->add_option("--smax", smax, "parametric-time span (default: two periods)");
  coherent->add_option("--steps", steps, "number of steps")->capture_default_str();

  CLI::App* validate =
      app.add_subcommand("validate", "run the oracle/residual suite");
  add_common_options(validate, opts);
  std::string val_grid, val_rgrid;
  int val_stencil = 4;
  double val_tol = 0.0, val_rtol = 0.0;
  validate->add_option("--grid", val_grid, "oracle grid 'a:b:k' (default per case)");
  validate->add_option("--stencil", val_stencil, "oracle stencil order: 2 or 4")
      ->capture_default_str();
  validate->add_option("--tol", val_tol, "spectrum match tolerance (default per case)");
  validate->add_option("--residual-grid", val_rgrid, "residual grid 'a:b:k'");
  validate->add_option("--residual-tol", val_rtol, "residual threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (*classify) return run_classify(opts);
    if (*spectrum) return run_spectrum(opts);
    if (*wavefn) return run_wavefunction(opts, wf_n, wf_grid);
    if (*coherent) return run_coherent(opts, au, av, smax, steps);
    if (*validate)
      return run_validate(opts, val_grid, val_stencil, val_tol, val_rgrid,
                          val_rtol);
  } catch (const morse::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
