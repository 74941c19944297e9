#include "qosc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "qosc/classical.hpp"
#include "qosc/hermite_family.hpp"
#include "qosc/polynomial.hpp"
#include "qosc/quadrature.hpp"
#include "qosc/series.hpp"
#include "qosc/spectra.hpp"

namespace qosc::cli {

namespace {

using json = nlohmann::ordered_json;

json sparse_map(const RationalPolynomial& p) {
  json j = json::object();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_zero()) j[std::to_string(k)] = p[k].to_string();
  }
  return j;
}

json sparse_map(const HermiteCombo& c) {
  json j = json::object();
  for (const auto& [k, v] : c.terms()) j[std::to_string(k)] = v.to_string();
  return j;
}

// Runs a command body, mapping argument errors to exit 2 and other failures to 1.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const GridTooCoarse& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return verification_failure;
  }
}

void write_latex_rows(std::ostream& out, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  out << "\\begin{tabular}{" << std::string(header.size(), 'r') << "}\n";
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? " & " : "") << header[i];
  out << " \\\\\n\\hline\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " & " : "") << row[i];
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "latex-table") return OutputFormat::latex_table;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

int cmd_poly(const PolyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n == 1 || args.n == 2) {
    err << "no polynomial solution exists for n=1,2\n";
    return usage_error;
  }
  return guarded(err, [&] {
    const long n = args.n;
    const RationalPolynomial p = polynomial_solution(n);
    const HermiteCombo hp = hermite_decompose(p);
    const HermiteCombo sp = script_p(n);
    const RationalPolynomial spd = sp.dense();
    const Rational c = n == 0 ? Rational(1) : proportionality_constant(n);
    const NormValue norm = norm_squared(n);

    switch (args.format) {
      case OutputFormat::json: {
        json j;
        j["n"] = n;
        j["energy"] = energy_level(n).to_string();
        j["coefficients"] = sparse_map(p);
        j["hermite"] = sparse_map(hp);
        j["script_p"] = {{"coefficients", sparse_map(spd)}, {"hermite", sparse_map(sp)}};
        j["proportionality_constant"] = c.to_string();
        j["norm"] = {{"sqrt_pi_coefficient", norm.sqrt_pi_coefficient.to_string()}, {"value", norm.value()}};
        out << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::csv: {
        out << "degree,P,script_P,hermite\n";
        for (long k = 0; k <= n; ++k) {
          const auto u = static_cast<std::size_t>(k);
          out << k << ',' << format_double(p[u].to_double()) << ',' << format_double(spd[u].to_double()) << ','
              << format_double(hp.coefficient(static_cast<unsigned>(k)).to_double()) << '\n';
        }
        break;
      }
      case OutputFormat::latex_table: {
        std::vector<std::vector<std::string>> rows;
        for (long k = 0; k <= n; ++k) {
          const auto u = static_cast<std::size_t>(k);
          rows.push_back({std::to_string(k), p[u].to_string(), spd[u].to_string(),
                          hp.coefficient(static_cast<unsigned>(k)).to_string()});
        }
        write_latex_rows(out, {"$k$", "$x^k$ in $P_{" + std::to_string(n) + "}$",
                               "$x^k$ in $\\mathcal{P}_{" + std::to_string(n) + "}$", "$H_k$ in $P_{" + std::to_string(n) + "}$"},
                         rows);
        break;
      }
    }
    return static_cast<int>(ok);
  });
}

int cmd_series(const SeriesArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Parity parity;
    if (args.parity == "even") {
      parity = Parity::even;
    } else if (args.parity == "odd") {
      parity = Parity::odd;
    } else {
      throw std::invalid_argument("parity must be even or odd");
    }
    const SeriesSolution s = series_coefficients(Rational::parse(args.e), parity, args.count);
    switch (args.format) {
      case OutputFormat::json: {
        json j;
        j["e"] = s.e.to_string();
        j["parity"] = to_string(s.parity);
        j["count"] = args.count;
        json coeffs = json::array();
        for (const auto& c : s.coefficients) coeffs.push_back(c.to_string());
        j["coefficients"] = coeffs;
        j["terminated_at"] = s.terminated_at ? json(*s.terminated_at) : json(nullptr);
        j["radius_of_convergence"] = SeriesSolution::radius_of_convergence();
        out << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::csv:
        out << "index,coefficient\n";
        for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
          out << k << ',' << format_double(s.coefficients[k].to_double()) << '\n';
        }
        break;
      case OutputFormat::latex_table: {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
          rows.push_back({std::to_string(k), s.coefficients[k].to_string()});
        }
        write_latex_rows(out, {"$m$", "$p_m$"}, rows);
        break;
      }
    }
    if (s.terminated_at) {
      err << "series terminates at degree " << *s.terminated_at << '\n';
    } else {
      err << "no termination certified within " << args.count << " coefficients\n";
    }
    return static_cast<int>(ok);
  });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_n < 3) {
    err << "error: --max-n must be >= 3\n";
    return usage_error;
  }
  return guarded(err, [&] {
    json checks = json::array();
    int passed = 0;
    int failed = 0;
    auto record = [&](const char* family, long n, bool pass, const RationalPolynomial& witness) {
      json c = {{"family", family}, {"n", n}, {"pass", pass}};
      if (pass) {
        ++passed;
      } else {
        ++failed;
        c["witness"] = sparse_map(witness);
        err << "FAILED " << family << " n=" << n << " witness " << c["witness"].dump() << '\n';
      }
      checks.push_back(std::move(c));
    };

    for (long n = 3; n <= args.max_n; ++n) {
      // Definition: the series solution is proportional to the three-term
      // combination, and the derivative identity holds.
      {
        const RationalPolynomial sp = script_p_dense(n);
        const RationalPolynomial p = polynomial_solution(n);
        const RationalPolynomial prop_residual = sp - p * (sp.leading() / p.leading());
        const DerivativeIdentityCheck d = verify_derivative_identity(n);
        const bool pass = prop_residual.is_zero() && d.pass;
        const RationalPolynomial& witness = !prop_residual.is_zero() ? prop_residual
                                            : !d.factored_residual.is_zero() ? d.factored_residual
                                                                               : d.expanded_residual;
        record("definition", n, pass, witness);
      }
      {
        const PropositionCheck pc = verify_proposition(n);
        record("proposition", n, pc.pass, pc.residual);
      }
      {
        const RationalPolynomial residual = rodrigues_script_p(n) - script_p_dense(n);
        record("rodrigues", n, residual.is_zero(), residual);
      }
      {
        const RationalPolynomial residual = schrodinger_residual(n);
        record("schrodinger", n, residual.is_zero(), residual);
      }
    }
    json report;
    report["max_n"] = args.max_n;
    report["total"] = passed + failed;
    report["passed"] = passed;
    report["failed"] = failed;
    report["checks"] = checks;
    out << report.dump(2) << '\n';
    err << passed << " checks passed, " << failed << " failed\n";
    return static_cast<int>(failed == 0 ? ok : verification_failure);
  });
}

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    PotentialSpec spec;
    switch (parse_potential_kind(args.potential)) {
      case PotentialKind::harmonic: spec = PotentialSpec::harmonic(args.omega); break;
      case PotentialKind::isotonic: spec = PotentialSpec::isotonic(args.m, args.omega); break;
      case PotentialKind::nonlinear:
        if (!(args.a2 > 0)) throw std::invalid_argument("--a2 must be > 0");
        spec = PotentialSpec::nonlinear(std::sqrt(args.a2), args.omega);
        break;
    }
    spec.validate();
    if (args.half_width && !(*args.half_width > 0)) throw std::invalid_argument("--L must be > 0");
    const double L = args.half_width.value_or(default_half_width(spec));
    const auto levels = richardson_pair(spec, L, args.points, args.levels);

    json list = json::array();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const auto target = analytic_energy(spec, static_cast<int>(k));
      json item = {{"k", k}, {"energy", levels[k].improved}, {"nodes", levels[k].nodes}};
      std::vector<std::string> row = {std::to_string(k), format_double(levels[k].improved),
                                      std::to_string(levels[k].nodes), "", ""};
      if (target) {
        const double e = std::abs(levels[k].improved - *target);
        item["analytic_target"] = *target;
        item["abs_error"] = e;
        row[3] = format_double(*target);
        row[4] = format_double(e);
      }
      list.push_back(std::move(item));
      rows.push_back(std::move(row));
    }
    switch (args.format) {
      case OutputFormat::json: out << list.dump(2) << '\n'; break;
      case OutputFormat::csv:
        out << "k,energy,nodes,analytic_target,abs_error\n";
        for (const auto& r : rows) out << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ',' << r[4] << '\n';
        break;
      case OutputFormat::latex_table:
        write_latex_rows(out, {"$k$", "$E_k$", "nodes", "target", "error"}, rows);
        break;
    }
    err << to_string(spec.kind) << ": L=" << format_double(L) << " N=" << args.points << "/" << 2 * args.points
        << '\n';
    return static_cast<int>(ok);
  });
}

int cmd_figure(const FigureArgs& args, std::ostream& out, std::ostream& err) {
  std::function<double(double)> primary;
  std::function<double(double)> comparison;
  std::string header;
  const PotentialSpec u0a = PotentialSpec::nonlinear(std::sqrt(0.5), 1.0);
  auto script_p_curve = [](long n) {
    return [ev = std::make_shared<ExactEvaluator>(script_p_dense(n))](double x) { return (*ev)(x); };
  };
  if (args.id == "1") {
    header = "x,U0a,harmonic";
    primary = [u0a](double x) { return potential_value(u0a, x); };
    comparison = [](double x) { return 0.5 * x * x; };
  } else if (args.id == "2a") {
    header = "x,script_P3,script_P4";
    primary = script_p_curve(3);
    comparison = script_p_curve(4);
  } else if (args.id == "2b") {
    header = "x,script_P5,script_P6";
    primary = script_p_curve(5);
    comparison = script_p_curve(6);
  } else if (args.id == "3" || args.id == "4" || args.id == "5") {
    const long n = args.id == "3" ? 0 : (args.id == "4" ? 3 : 4);
    const unsigned k = args.id == "3" ? 0 : (args.id == "4" ? 1 : 2);
    header = "x,Psi" + std::to_string(n) + ",Phi" + std::to_string(k);
    primary = [n](double x) { return wavefunction(n, x); };
    comparison = [k](double x) { return harmonic_wavefunction(k, x); };
  } else {
    err << "error: unknown figure id '" << args.id << "' (expected 1, 2a, 2b, 3, 4, 5)\n";
    return usage_error;
  }
  if (args.samples < 2 || !(args.xmin < args.xmax)) {
    err << "error: need --samples >= 2 and --xmin < --xmax\n";
    return usage_error;
  }
  return guarded(err, [&] {
    out << header << '\n';
    for (int i = 0; i < args.samples; ++i) {
      const double x = args.xmin + (args.xmax - args.xmin) * i / (args.samples - 1);
      out << format_double(x) << ',' << format_double(primary(x)) << ',' << format_double(comparison(x)) << '\n';
    }
    return static_cast<int>(ok);
  });
}

int cmd_orthogonality(const OrthogonalityArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_n < 3 || !(args.tol > 0)) {
    err << "error: need --max-n >= 3 and --tol > 0\n";
    return usage_error;
  }
  return guarded(err, [&] {
    std::vector<long> indices{0};
    for (long n = 3; n <= args.max_n; ++n) indices.push_back(n);
    const OrthogonalityReport r = orthogonality_matrix(indices, args.tol);
    out << "n";
    for (long k : indices) out << ',' << k;
    out << '\n';
    for (Eigen::Index i = 0; i < r.gram.rows(); ++i) {
      out << indices[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < r.gram.cols(); ++j) {
        out << ',' << format_double(r.gram(i, j) / std::sqrt(r.gram(i, i) * r.gram(j, j)));
      }
      out << '\n';
    }
    err << "max normalized off-diagonal " << format_double(r.max_offdiag) << ", max relative norm error "
        << format_double(r.max_diagonal_error) << ", tol " << format_double(args.tol) << ": "
        << (r.pass ? "pass" : "FAIL") << '\n';
    return static_cast<int>(r.pass ? ok : verification_failure);
  });
}

int cmd_ground(const GroundArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PotentialSpec spec = PotentialSpec::nonlinear(args.a, args.omega);
    spec.validate();
    const double L = args.half_width.value_or(default_half_width(spec));
    const GroundState g = general_a_ground(args.omega, args.a, L, args.points);
    json j;
    j["omega"] = args.omega;
    j["a"] = args.a;
    j["energy"] = g.energy;
    j["target"] = g.target;
    j["abs_error"] = std::abs(g.energy - g.target);
    j["nodes"] = g.nodes;
    out << j.dump(2) << '\n';
    return static_cast<int>(ok);
  });
}

int cmd_classical(const ClassicalArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TrajectoryParams p{args.omega, args.amplitude, args.g, 0.0};
    p.validate();
    const double period = std::numbers::pi / args.omega;
    const double t_max = args.t_max.value_or(10 * period);
    const Trajectory tr = ode_oracle(p, t_max, args.dt.value_or(0.0));
    out << "t,x,v,E\n";
    for (const auto& q : tr) {
      out << format_double(q.t) << ',' << format_double(q.x) << ',' << format_double(q.v) << ','
          << format_double(q.energy) << '\n';
    }
    try {
      const double measured = measure_period(tr);
      err << "period measured " << format_double(measured) << " expected " << format_double(period)
          << " abs_error " << format_double(std::abs(measured - period)) << '\n';
    } catch (const std::runtime_error& e) {
      err << "period not measured: " << e.what() << '\n';
    }
    return static_cast<int>(ok);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exactly solvable nonlinear oscillator: exact polynomials, identities, spectra and figures"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "latex-table"}))
        ->capture_default_str();
  };

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "Polynomial solution P_n, script P_n and Hermite decompositions");
  poly_cmd->add_option("--n", poly.n, "Degree (0 or >= 3)")->required();
  add_format(poly_cmd);

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "Exact series coefficients at energy parameter e");
  series_cmd->add_option("--e", series.e, "Energy parameter, n or n/d")->capture_default_str();
  series_cmd->add_option("--parity", series.parity, "even or odd")
      ->check(CLI::IsMember({"even", "odd"}))
      ->capture_default_str();
  series_cmd->add_option("--count", series.count, "Highest coefficient index")->capture_default_str();
  add_format(series_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exact identity suite for 3 <= n <= max-n");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest n")->capture_default_str();

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Finite-difference bound states with Richardson extrapolation");
  spectrum_cmd->add_option("--potential", spectrum.potential, "harmonic, isotonic or nonlinear")
      ->check(CLI::IsMember({"harmonic", "isotonic", "nonlinear"}))
      ->capture_default_str();
  spectrum_cmd->add_option("--omega", spectrum.omega, "Frequency")->capture_default_str();
  spectrum_cmd->add_option("--a2", spectrum.a2, "a^2 (nonlinear)")->capture_default_str();
  spectrum_cmd->add_option("--m", spectrum.m, "Barrier parameter m, g = m(m+1) (isotonic)")->capture_default_str();
  spectrum_cmd->add_option("--levels", spectrum.levels, "Number of levels")->capture_default_str();
  spectrum_cmd->add_option("--L", spectrum.half_width, "Box half-width (default depends on potential)");
  spectrum_cmd->add_option("--N", spectrum.points, "Coarse grid intervals")->capture_default_str();
  add_format(spectrum_cmd);

  FigureArgs figure;
  auto* figure_cmd = app.add_subcommand("figure", "CSV data for a figure: x, primary curve, comparison curve");
  figure_cmd->add_option("--id", figure.id, "1, 2a, 2b, 3, 4 or 5")->required();
  figure_cmd->add_option("--xmin", figure.xmin, "Left end")->capture_default_str();
  figure_cmd->add_option("--xmax", figure.xmax, "Right end")->capture_default_str();
  figure_cmd->add_option("--samples", figure.samples, "Number of points")->capture_default_str();

  OrthogonalityArgs orth;
  auto* orth_cmd = app.add_subcommand("orthogonality", "Normalized Gram matrix under the modified weight");
  orth_cmd->add_option("--max-n", orth.max_n, "Largest n")->capture_default_str();
  orth_cmd->add_option("--tol", orth.tol, "Tolerance")->capture_default_str();

  GroundArgs ground;
  auto* ground_cmd = app.add_subcommand("ground", "Ground state for general a against the closed form");
  ground_cmd->add_option("--omega", ground.omega, "Frequency")->capture_default_str();
  ground_cmd->add_option("--a", ground.a, "Width parameter a")->capture_default_str();
  ground_cmd->add_option("--L", ground.half_width, "Box half-width");
  ground_cmd->add_option("--N", ground.points, "Coarse grid intervals")->capture_default_str();

  ClassicalArgs classical;
  auto* classical_cmd = app.add_subcommand("classical", "Classical isotonic trajectory (CSV) and measured period");
  classical_cmd->add_option("--omega", classical.omega, "Frequency")->capture_default_str();
  classical_cmd->add_option("--amplitude", classical.amplitude, "Outer turning point A")->capture_default_str();
  classical_cmd->add_option("--g", classical.g, "Barrier strength")->capture_default_str();
  classical_cmd->add_option("--tmax", classical.t_max, "End time (default ten periods)");
  classical_cmd->add_option("--dt", classical.dt, "RK4 step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(ok) : static_cast<int>(usage_error);
  }

  if (*poly_cmd) {
    poly.format = parse_format(format);
    return cmd_poly(poly, out, err);
  }
  if (*series_cmd) {
    series.format = parse_format(format);
    return cmd_series(series, out, err);
  }
  if (*verify_cmd) return cmd_verify(verify, out, err);
  if (*spectrum_cmd) {
    spectrum.format = parse_format(format);
    return cmd_spectrum(spectrum, out, err);
  }
  if (*figure_cmd) return cmd_figure(figure, out, err);
  if (*orth_cmd) return cmd_orthogonality(orth, out, err);
  if (*ground_cmd) return cmd_ground(ground, out, err);
  if (*classical_cmd) return cmd_classical(classical, out, err);
  return usage_error;
}

}  // namespace qosc::cli
