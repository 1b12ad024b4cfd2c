#include "ballpoly/convergence.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ballpoly/polynomial_io.hpp"
#include "ballpoly/spectral.hpp"

namespace ballpoly {

namespace {

// Splits "name(arg)" into name and arg; arg is empty without parentheses.
std::pair<std::string_view, std::string_view> split_call(std::string_view id) {
  const auto open = id.find('(');
  if (open == std::string_view::npos) return {id, {}};
  if (id.back() != ')') throw UnknownFunction("malformed function id: " + std::string(id));
  return {id.substr(0, open), id.substr(open + 1, id.size() - open - 2)};
}

}  // namespace

TestFunction make_test_function(std::string_view id, int dim, const Rational& alpha) {
  const auto [name, arg] = split_call(id);
  TestFunction f;
  f.id = std::string(id);
  f.sample.dim = dim;
  if (name == "exp_x1") {
    const double c = arg.empty() ? 2.0 : parse_rational(arg).get_d();
    f.sample.value = [c](const auto& x) { return std::exp(c * x(0)); };
    f.sample.gradient = [c, dim](const auto& x) {
      Eigen::VectorXd g = Eigen::VectorXd::Zero(dim);
      g(0) = c * std::exp(c * x(0));
      return g;
    };
    return f;
  }
  if (name == "abs_x1") {
    if (!arg.empty()) throw UnknownFunction("abs_x1 takes no argument");
    f.sample.value = [](const auto& x) { return std::abs(x(0)); };
    f.sample.gradient = [dim](const auto& x) {
      Eigen::VectorXd g = Eigen::VectorXd::Zero(dim);
      g(0) = x(0) > 0 ? 1.0 : (x(0) < 0 ? -1.0 : 0.0);
      return g;
    };
    f.smoothness = 1;
    return f;
  }
  if (name == "weight_power") {
    if (arg.empty()) throw UnknownFunction("weight_power needs an exponent");
    const Rational s = parse_rational(arg);
    if (s < 1) throw UnknownFunction("weight_power needs s >= 1 for a bounded gradient");
    const double sd = s.get_d();
    f.sample.value = [sd](const auto& x) { return std::pow(std::max(0.0, 1.0 - x.squaredNorm()), sd); };
    f.sample.gradient = [sd](const auto& x) {
      const double w = std::max(0.0, 1.0 - x.squaredNorm());
      return Eigen::VectorXd(-2.0 * sd * std::pow(w, sd - 1.0) * x);
    };
    if (!is_integer(s)) {
      // (1-r^2)^{s-m} squared against (1-r^2)^a is integrable iff m < s + (a+1)/2.
      const Rational bound = s + (alpha + 1) / 2;
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
      f.smoothness = static_cast<int>(is_integer(bound) ? fl.get_si() - 1 : fl.get_si());
    }
    return f;
  }
  MPoly p(dim);
  try {
    p = parse_polynomial(id, dim);
  } catch (const std::invalid_argument& e) {
    throw UnknownFunction("unknown function id '" + std::string(id) + "': " + e.what());
  }
  const MPolyD pd = p.cast<double>();
  std::vector<MPolyD> grads;
  for (int i = 0; i < dim; ++i) grads.push_back(diff(pd, i));
  f.sample.value = [pd, dim](const auto& x) {
    const Eigen::VectorXd v = x;
    return evaluate(pd, std::span<const double>(v.data(), dim));
  };
  f.sample.gradient = [grads, dim](const auto& x) {
    const Eigen::VectorXd v = x;
    Eigen::VectorXd g(dim);
    for (int i = 0; i < dim; ++i) g(i) = evaluate(grads[i], std::span<const double>(v.data(), dim));
    return g;
  };
  return f;
}

ProjectorChoice parse_projector(std::string_view name) {
  if (name == "lebesgue") return ProjectorChoice::kLebesgue;
  if (name == "sobolev") return ProjectorChoice::kSobolev;
  throw std::invalid_argument("projector must be 'lebesgue' or 'sobolev'");
}

void ExperimentConfig::validate() const {
  if (dim < 1 || dim > 3) throw std::invalid_argument("experiments support d = 1, 2, 3");
  if (alpha <= -1) throw std::invalid_argument("alpha must exceed -1");
  if (n_max < 2) throw std::invalid_argument("N_max must be at least 2");
  if (quad_degree != 0 && quad_degree < 2 * n_max + 4)
    throw std::invalid_argument("quadrature degree must be at least 2 N_max + 4");
  make_test_function(function_id, dim, alpha);
}

int ExperimentConfig::effective_quad_degree() const {
  if (quad_degree > 0) return quad_degree;
  return dim == 3 ? 2 * n_max + 4 : 4 * n_max + 8;
}

std::vector<ConvergenceRecord> run_convergence(const ExperimentConfig& cfg) {
  cfg.validate();
  const TestFunction f = make_test_function(cfg.function_id, cfg.dim, cfg.alpha);
  check_gradient(f.sample);
  QuadRule rule = make_ball_rule(cfg.dim, cfg.alpha.get_d(), cfg.effective_quad_degree());

  constexpr double kMaxSamples = 1.5e8;
  const double functions = static_cast<double>(homogeneous_dimension(cfg.dim + 1, cfg.n_max));
  if (static_cast<double>(rule.size()) * functions * (cfg.dim + 1) > kMaxSamples)
    throw std::runtime_error("quadrature sizing: basis tables would exceed the memory budget; lower N_max");

  const SpectralBasis basis(std::move(rule), cfg.n_max);
  const SpectralProjector projector(basis);
  const SampledFunction u = sample_function(f.sample, basis.rule());
  std::vector<ConvergenceRecord> out;
  for (int n = 2; n <= cfg.n_max; ++n) {
    const Eigen::VectorXd coeffs =
        cfg.projector == ProjectorChoice::kSobolev ? projector.sobolev(u, n) : projector.lebesgue(u, n);
    const ProjectionErrors e = projector.errors(u, coeffs);
    out.push_back({n, e.l2, e.grad, e.sob});
  }
  return out;
}

double column_value(const ConvergenceRecord& r, ErrorColumn column) {
  switch (column) {
    case ErrorColumn::kL2: return r.err_l2;
    case ErrorColumn::kGrad: return r.err_grad;
    case ErrorColumn::kSob: return r.err_sob;
  }
  return 0.0;
}

double fit_slope(std::span<const ConvergenceRecord> records, ErrorColumn column, int n_lo, int n_hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& r : records) {
    const double e = column_value(r, column);
    if (r.n < n_lo || r.n > n_hi || !(e > 0) || r.n <= 0) continue;
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(e);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 4) throw std::invalid_argument("slope fit needs at least 4 positive errors");
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

namespace {

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_report(std::span<const ConvergenceRecord> records, std::ostream& os) {
  os << "N,err_L2,err_grad,err_sob\n";
  for (const auto& r : records)
    os << r.n << ',' << shortest(r.err_l2) << ',' << shortest(r.err_grad) << ',' << shortest(r.err_sob) << '\n';
}

void emit_report(std::span<const ConvergenceRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_report(records, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

std::vector<ConvergenceRecord> read_report(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "N,err_L2,err_grad,err_sob") throw std::runtime_error("missing CSV header");
  std::vector<ConvergenceRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell[4];
    for (auto& c : cell) {
      if (!std::getline(row, c, ',')) throw std::runtime_error("short CSV row: " + line);
    }
    out.push_back({std::stoi(cell[0]), std::stod(cell[1]), std::stod(cell[2]), std::stod(cell[3])});
  }
  return out;
}

}  // namespace ballpoly
