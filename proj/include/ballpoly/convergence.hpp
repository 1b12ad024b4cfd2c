#pragma once

// Convergence experiments: projection errors of a sampled function against N.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ballpoly/projectors.hpp"

namespace ballpoly {

class UnknownFunction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TestFunction {
  std::string id;
  FuncSample sample;
  /// Largest m with u in H^m_a; nullopt for smooth functions.
  std::optional<int> smoothness;
};

/// exp_x1 / exp_x1(c): exp(c x1), c defaults to 2.
/// abs_x1: |x1|, in H^1_a but no better (m = 1).
/// weight_power(s): (1-|x|^2)^s for s >= 1; m is the largest integer below
///   s + (a+1)/2, unbounded when s is an integer (then u is a polynomial).
/// Anything else is parsed as a polynomial in x1..xd.
TestFunction make_test_function(std::string_view id, int dim, const Rational& alpha);

enum class ProjectorChoice { kLebesgue, kSobolev };

ProjectorChoice parse_projector(std::string_view name);

struct ExperimentConfig {
  int dim = 2;
  Rational alpha = 0;
  int n_max = 32;
  std::string function_id = "exp_x1";
  ProjectorChoice projector = ProjectorChoice::kSobolev;
  /// Quadrature exactness; 0 picks 4 N_max + 8 (d <= 2) or 2 N_max + 4 (d = 3).
  int quad_degree = 0;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
  int effective_quad_degree() const;
};

struct ConvergenceRecord {
  int n = 0;
  double err_l2 = 0.0;
  double err_grad = 0.0;
  double err_sob = 0.0;
};

/// One record per N = 2..N_max, in order. Deterministic.
std::vector<ConvergenceRecord> run_convergence(const ExperimentConfig& cfg);

enum class ErrorColumn { kL2, kGrad, kSob };

double column_value(const ConvergenceRecord& r, ErrorColumn column);

/// Least-squares slope of log(err) against log(N) over records with
/// n_lo <= N <= n_hi and positive error. Needs at least 4 such points.
double fit_slope(std::span<const ConvergenceRecord> records, ErrorColumn column, int n_lo = 0,
                 int n_hi = 1 << 30);

/// CSV `N,err_L2,err_grad,err_sob`, shortest round-trip doubles.
void write_report(std::span<const ConvergenceRecord> records, std::ostream& os);
/// Throws std::runtime_error when the file cannot be written.
void emit_report(std::span<const ConvergenceRecord> records, const std::filesystem::path& path);
std::vector<ConvergenceRecord> read_report(std::istream& is);

}  // namespace ballpoly
