#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qosc/cli.hpp"
#include "qosc/hermite_family.hpp"
#include "qosc/polynomial.hpp"
#include "qosc/series.hpp"
#include "qosc/spectra.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qosc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = qosc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    if (!line.empty() && line.back() == ',') row.emplace_back();
    rows.push_back(row);
  }
  return rows;
}

bool close_to_print(double printed, double exact) {
  return std::abs(printed - exact) <= 1e-13 * std::max(1.0, std::abs(exact));
}

}  // namespace

TEST_CASE("poly json") {
  auto r = run({"poly", "--n", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["coefficients"] == json({{"0", "1"}, {"2", "-4"}, {"4", "-4"}}));
  CHECK(j["hermite"] == json({{"0", "-4"}, {"2", "-4"}, {"4", "-1/4"}}));
  CHECK(j["script_p"]["hermite"] == json({{"0", "16"}, {"2", "16"}, {"4", "1"}}));
  CHECK(j["energy"] == "5/2");
  CHECK(j["norm"]["sqrt_pi_coefficient"] == "64");

  r = run({"poly", "--n", "0"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["coefficients"] == json({{"0", "1"}}));
  CHECK(json::parse(r.out)["norm"]["sqrt_pi_coefficient"] == "1/2");

  r = run({"poly", "--n", "7"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["coefficients"] ==
        json({{"1", "1"}, {"3", "-2/3"}, {"5", "-4/3"}, {"7", "8/21"}}));
}

TEST_CASE("poly rejects the missing levels") {
  for (const char* n : {"1", "2"}) {
    const auto r = run({"poly", "--n", n});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("no polynomial solution exists for n=1,2") != std::string::npos);
  }
  CHECK(run({"poly", "--n", "-3"}).code == 2);
  CHECK(run({"poly"}).code == 2);
  CHECK(run({"poly", "--n", "4", "--format", "xml"}).code == 2);
}

TEST_CASE("poly csv and latex") {
  auto r = run({"poly", "--n", "6", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == std::vector<std::string>{"degree", "P", "script_P", "hermite"});
  const auto p = qosc::polynomial_solution(6);
  const auto sp = qosc::script_p_dense(6);
  for (std::size_t k = 0; k <= 6; ++k) {
    CHECK(close_to_print(std::stod(rows[k + 1][1]), p[k].to_double()));
    CHECK(close_to_print(std::stod(rows[k + 1][2]), sp[k].to_double()));
  }

  r = run({"poly", "--n", "4", "--format", "latex-table"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\\begin{tabular}") == 0);
  CHECK(r.out.find("4 & -4 & 16 & -1/4 \\\\") != std::string::npos);
}

TEST_CASE("series") {
  auto r = run({"series", "--e", "4", "--parity", "even", "--count", "12"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["terminated_at"] == 4);
  CHECK(j["coefficients"][2] == "-4");
  CHECK(j["coefficients"].size() == 13);

  for (const char* e : {"1", "2"}) {
    for (const char* parity : {"even", "odd"}) {
      r = run({"series", "--e", e, "--parity", parity, "--count", "60"});
      REQUIRE(r.code == 0);
      CHECK(json::parse(r.out)["terminated_at"].is_null());
    }
  }
  CHECK(run({"series", "--e", "1/0"}).code == 2);
  CHECK(run({"series", "--e", "abc"}).code == 2);
  CHECK(run({"series", "--parity", "both"}).code == 2);
  CHECK(run({"series", "--count", "2"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--max-n", "12"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["total"] == 40);
  CHECK(j["passed"] == 40);
  CHECK(j["failed"] == 0);
  std::map<std::string, int> families;
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    ++families[c["family"].get<std::string>()];
  }
  CHECK(families == std::map<std::string, int>{{"definition", 10}, {"proposition", 10}, {"rodrigues", 10},
                                               {"schrodinger", 10}});

  r = run({"verify", "--max-n", "3"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["total"] == 4);
  CHECK(run({"verify", "--max-n", "2"}).code == 2);
}

TEST_CASE("spectrum") {
  auto r = run({"spectrum", "--potential", "nonlinear", "--a2", "0.5", "--omega", "1", "--levels", "4"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 4);
  const double expected[] = {-1.5, 1.5, 2.5, 3.5};
  for (int k = 0; k < 4; ++k) {
    CHECK(j[k]["energy"].get<double>() == doctest::Approx(expected[k]).epsilon(1e-6));
    CHECK(j[k]["abs_error"].get<double>() < 1e-6);
    CHECK(j[k]["nodes"] == k);
  }

  r = run({"spectrum", "--potential", "harmonic", "--levels", "3"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(j[k]["energy"].get<double>() - (k + 0.5)) < 1e-6);

  r = run({"spectrum", "--potential", "isotonic", "--m", "1", "--levels", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(std::stod(rows[k + 1][1]) - (2.5 + 2 * k)) < 1e-6);

  // No closed form for excited levels away from omega a^2 = 1/2.
  r = run({"spectrum", "--a2", "0.3", "--levels", "2"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j[0].contains("analytic_target"));
  CHECK_FALSE(j[1].contains("analytic_target"));

  CHECK(run({"spectrum", "--N", "100"}).code == 2);
  CHECK(run({"spectrum", "--potential", "quartic"}).code == 2);
  CHECK(run({"spectrum", "--omega", "-1"}).code == 2);
  CHECK(run({"spectrum", "--a2", "0"}).code == 2);
  CHECK(run({"spectrum", "--L", "-3"}).code == 2);
}

TEST_CASE("figure rows") {
  auto r = run({"figure", "--id", "1"});
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 802);
  CHECK(rows[0] == std::vector<std::string>{"x", "U0a", "harmonic"});
  CHECK(rows[1][0] == "-4");
  CHECK(rows[801][0] == "4");
  CHECK(rows[401] == std::vector<std::string>{"0", "-4", "0"});

  r = run({"figure", "--id", "3"});
  REQUIRE(r.code == 0);
  rows = parse_csv(r.out);
  CHECK(rows[401][0] == "0");
  CHECK(std::stod(rows[401][1]) == doctest::Approx(std::sqrt(2.0) * std::pow(std::numbers::pi, -0.25)));
  CHECK(std::stod(rows[401][2]) == doctest::Approx(std::pow(std::numbers::pi, -0.25)));

  r = run({"figure", "--id", "4"});
  REQUIRE(r.code == 0);
  CHECK(parse_csv(r.out)[401] == std::vector<std::string>{"0", "0", "0"});

  CHECK(run({"figure", "--id", "6"}).code == 2);
  CHECK(run({"figure", "--id", "2c"}).code == 2);
  CHECK(run({"figure", "--id", "1", "--samples", "1"}).code == 2);
  CHECK(run({"figure", "--id", "1", "--xmin", "2", "--xmax", "1"}).code == 2);
}

TEST_CASE("figure csv round-trips") {
  const qosc::PotentialSpec u0a = qosc::PotentialSpec::nonlinear(std::sqrt(0.5), 1.0);
  struct Fig {
    const char* id;
    std::function<double(double)> primary, comparison;
  };
  const std::vector<Fig> figs = {
      {"1", [&](double x) { return qosc::potential_value(u0a, x); }, [](double x) { return 0.5 * x * x; }},
      {"2a", [](double x) { return qosc::evaluate_exact(qosc::script_p_dense(3), x); },
       [](double x) { return qosc::evaluate_exact(qosc::script_p_dense(4), x); }},
      {"2b", [](double x) { return qosc::evaluate_exact(qosc::script_p_dense(5), x); },
       [](double x) { return qosc::evaluate_exact(qosc::script_p_dense(6), x); }},
      {"3", [](double x) { return qosc::wavefunction(0, x); }, [](double x) { return qosc::harmonic_wavefunction(0, x); }},
      {"4", [](double x) { return qosc::wavefunction(3, x); }, [](double x) { return qosc::harmonic_wavefunction(1, x); }},
      {"5", [](double x) { return qosc::wavefunction(4, x); }, [](double x) { return qosc::harmonic_wavefunction(2, x); }},
  };
  for (const auto& f : figs) {
    CAPTURE(f.id);
    const auto r = run({"figure", "--id", f.id, "--samples", "161", "--xmin", "-3.7", "--xmax", "4.1"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 162);
    int bad = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double x = std::stod(rows[i][0]);
      // Scale by the curve's size: near roots the x rounding dominates.
      const double p = f.primary(x);
      const double c = f.comparison(x);
      if (std::abs(std::stod(rows[i][1]) - p) > 1e-13 * std::max({1.0, std::abs(p), std::abs(f.primary(x + 1e-3))}))
        ++bad;
      if (std::abs(std::stod(rows[i][2]) - c) > 1e-13 * std::max({1.0, std::abs(c), std::abs(f.comparison(x + 1e-3))}))
        ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("orthogonality") {
  auto r = run({"orthogonality", "--max-n", "8", "--tol", "1e-9"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == std::vector<std::string>{"n", "0", "3", "4", "5", "6", "7", "8"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t j = 1; j < rows[i].size(); ++j) {
      const double v = std::stod(rows[i][j]);
      if (i == j) {
        CHECK(v == doctest::Approx(1.0));
      } else {
        CHECK(std::abs(v) < 1e-9);
      }
    }
  }
  CHECK(run({"orthogonality", "--max-n", "5", "--tol", "1e-30"}).code == 1);
  CHECK(run({"orthogonality", "--max-n", "2"}).code == 2);
  CHECK(run({"orthogonality", "--tol", "0"}).code == 2);
}

TEST_CASE("ground") {
  auto r = run({"ground", "--omega", "2", "--a", "0.5"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["target"].get<double>() == doctest::Approx(1.0 - 4 * 4 * 0.25));
  CHECK(j["abs_error"].get<double>() < 1e-5);
  CHECK(j["nodes"] == 0);
  CHECK(run({"ground", "--a", "-1"}).code == 2);
}

TEST_CASE("classical") {
  auto r = run({"classical", "--omega", "1", "--amplitude", "2", "--g", "1", "--tmax", "6.5"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  CHECK(rows[0] == std::vector<std::string>{"t", "x", "v", "E"});
  CHECK(rows.size() > 4000);
  CHECK(std::stod(rows[1][1]) == doctest::Approx(0.5));
  CHECK(r.err.find("period measured 3.14159265") != std::string::npos);
  CHECK(run({"classical", "--amplitude", "0.5"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"poly", "--n", "4", "--unknown"}).code == 2);
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("spectrum") != std::string::npos);
  CHECK(run({"figure", "--help"}).code == 0);
}

TEST_CASE("determinism") {
  const std::vector<std::vector<std::string>> commands = {
      {"poly", "--n", "9", "--format", "json"},
      {"series", "--e", "7/3", "--count", "30"},
      {"verify", "--max-n", "6"},
      {"spectrum", "--levels", "3", "--N", "1000"},
      {"figure", "--id", "5"},
      {"orthogonality", "--max-n", "6"},
      {"ground", "--a", "0.3"},
      {"classical", "--tmax", "2"},
  };
  for (const auto& c : commands) {
    CAPTURE(c[0]);
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
    CHECK_FALSE(a.out.empty());
  }
}
