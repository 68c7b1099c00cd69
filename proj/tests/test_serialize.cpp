#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "morse/serialize.hpp"

using morse::Complex;
using morse::Json;

TEST_CASE("explicit parameter documents") {
  const Json j = Json::parse(R"({
    "v1": [1.0, 0.0], "v2": 2.0, "alpha": [0.0, 1.0],
    "mass": 0.5, "hbar": 1.0
  })");
  const morse::MorseParams p = morse::params_from_json(j);
  REQUIRE(p.v1 == Complex(1.0, 0.0));
  REQUIRE(p.v2 == Complex(2.0, 0.0)); // plain numbers are accepted as real
  REQUIRE(p.alpha == Complex(0.0, 1.0));
  REQUIRE(p.mass == 0.5);

  REQUIRE_THROWS_AS(morse::params_from_json(Json::parse(R"({"v1": 1.0})")),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(
      morse::params_from_json(Json::parse(R"({"v1": "x", "v2": 1, "alpha": 1})")),
      std::invalid_argument);
  // invariants propagate from MorseParams
  REQUIRE_THROWS_AS(
      morse::params_from_json(Json::parse(R"({"v1": 0, "v2": 1, "alpha": 1})")),
      std::invalid_argument);
}

TEST_CASE("preset parameter documents") {
  const Json j = Json::parse(R"({
    "preset": {"kind": "non_pt_complex", "A": 2, "B": 1, "C": 2, "alpha": 1},
    "mass": 0.5
  })");
  const morse::MorseParams p = morse::params_from_json(j);
  REQUIRE(p.v1 == Complex(3.0, 4.0));
  REQUIRE(p.v2 == Complex(10.0, 5.0));
  REQUIRE(p.mass == 0.5);
  REQUIRE(p.hbar == 1.0);

  REQUIRE_THROWS_AS(
      morse::params_from_json(Json::parse(R"({"preset": {"A": 2}})")),
      std::invalid_argument);
  REQUIRE_THROWS_AS(morse::params_from_json(Json::parse(
                        R"({"preset": {"kind": "unknown_family"}})")),
                    std::invalid_argument);
}

TEST_CASE("spectrum export schema") {
  const auto levels =
      morse::bound_levels(morse::preset_hermitian(1, 2, 1, 0.5, 1.0));
  const Json j = morse::spectrum_to_json(levels);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  REQUIRE(j[0]["n"] == 0);
  REQUIRE(j[0]["E"].is_array());
  REQUIRE(j[0]["E"][0].get<double>() == Catch::Approx(-0.25));
  REQUIRE(j[0]["E"][1].get<double>() == 0.0);
  REQUIRE(j[0]["s"][0].get<double>() == Catch::Approx(0.5));
  REQUIRE(j[0]["real"] == true);
}

TEST_CASE("match report schema") {
  morse::MatchReport report;
  report.case_label = "hermitian";
  report.grid = morse::GridSpec{-5.0, 25.0, 4000, 4};
  report.tol_abs = 1e-6;
  report.matches.push_back(
      {0, Complex(-0.25, 0.0), Complex(-0.2500001, 0.0), 1e-7, true});
  const Json j = morse::match_report_to_json(report);
  REQUIRE(j["case"] == "hermitian");
  REQUIRE(j["grid"]["n_points"] == 4000);
  REQUIRE(j["grid"]["stencil_order"] == 4);
  REQUIRE(j["matches"][0]["analytic"][0].get<double>() == -0.25);
  REQUIRE(j["matches"][0]["delta"].get<double>() == 1e-7);
  REQUIRE(j["pass"] == true);
}

TEST_CASE("17-significant-digit formatting round-trips doubles") {
  for (double v : {0.1, -0.25, 1.0 / 3.0, 6.62607015e-34, 12345.678901234567}) {
    const std::string text = morse::format_sig17(v);
    REQUIRE(std::stod(text) == v);
  }
}

TEST_CASE("CSV exports carry the documented headers") {
  std::ostringstream traj;
  morse::write_trajectory_csv(traj, {});
  REQUIRE(traj.str() == "s,t,x,px,u,v,pu,pv\n");

  std::ostringstream wave;
  const std::vector<double> xs = {0.5};
  const std::vector<Complex> psi = {Complex(0.125, -2.0)};
  morse::write_wave_table_csv(wave, xs, psi);
  REQUIRE(wave.str() == "x,re_psi,im_psi\n0.5,0.125,-2\n");

  std::ostringstream coh;
  morse::write_coherent_csv(coh, {});
  REQUIRE(coh.str() == "s,t,x_mean,re_au,im_au,re_av,im_av\n");
}

TEST_CASE("serialization is deterministic") {
  const auto levels =
      morse::bound_levels(morse::preset_non_pt_complex(2, 1, 2, 1, 0.5));
  const std::string once = morse::spectrum_to_json(levels).dump(2);
  const std::string twice = morse::spectrum_to_json(levels).dump(2);
  REQUIRE(once == twice);
  // keys are emitted sorted
  REQUIRE(once.find("\"E\"") < once.find("\"n\""));
  REQUIRE(once.find("\"n\"") < once.find("\"real\""));
}
