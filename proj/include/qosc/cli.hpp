#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace qosc::cli {

/// Process exit codes.
enum ExitCode : int { ok = 0, verification_failure = 1, usage_error = 2 };

enum class OutputFormat { csv, json, latex_table };

/// Accepts "csv", "json", "latex-table".
OutputFormat parse_format(const std::string& name);

/// "%.15g", with negative zero printed as 0.
std::string format_double(double x);

struct PolyArgs {
  long n = 0;
  OutputFormat format = OutputFormat::json;
};

struct SeriesArgs {
  std::string e = "0";  ///< rational, "n" or "n/d"
  std::string parity = "even";
  int count = 20;
  OutputFormat format = OutputFormat::json;
};

struct VerifyArgs {
  long max_n = 12;
};

struct SpectrumArgs {
  std::string potential = "nonlinear";
  double omega = 1.0;
  double a2 = 0.5;
  double m = 1.0;
  int levels = 4;
  std::optional<double> half_width;  ///< defaults per potential
  int points = 4000;                 ///< coarse grid; Richardson also runs at 2N
  OutputFormat format = OutputFormat::json;
};

struct FigureArgs {
  std::string id = "1";
  double xmin = -4.0;
  double xmax = 4.0;
  int samples = 801;
};

struct OrthogonalityArgs {
  long max_n = 20;
  double tol = 1e-9;
};

struct GroundArgs {
  double omega = 1.0;
  double a = 0.7071067811865476;
  std::optional<double> half_width;
  int points = 4000;
};

struct ClassicalArgs {
  double omega = 1.0;
  double amplitude = 2.0;
  double g = 1.0;
  std::optional<double> t_max;  ///< defaults to ten periods
  std::optional<double> dt;
};

// Each command writes data to `out`, diagnostics to `err`, and returns an ExitCode.
int cmd_poly(const PolyArgs& args, std::ostream& out, std::ostream& err);
int cmd_series(const SeriesArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_spectrum(const SpectrumArgs& args, std::ostream& out, std::ostream& err);
int cmd_figure(const FigureArgs& args, std::ostream& out, std::ostream& err);
int cmd_orthogonality(const OrthogonalityArgs& args, std::ostream& out, std::ostream& err);
int cmd_ground(const GroundArgs& args, std::ostream& out, std::ostream& err);
int cmd_classical(const ClassicalArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qosc::cli
