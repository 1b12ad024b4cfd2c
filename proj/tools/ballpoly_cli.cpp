// Convergence experiments and basis dumps.
//
//   ballpoly --dim 2 --alpha 0 --nmax 32 --function abs_x1 --projector sobolev --out abs.csv
//   ballpoly --dump-basis 2 3 1/2 sobolev

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ballpoly/bases.hpp"
#include "ballpoly/convergence.hpp"
#include "ballpoly/polynomial_io.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

ballpoly::SpaceKind parse_space(const std::string& s) {
  if (s == "lebesgue" || s == "V(alpha)") return ballpoly::SpaceKind::kLebesgue;
  if (s == "sobolev" || s == "V(alpha,1)") return ballpoly::SpaceKind::kSobolev;
  if (s == "harmonic" || s == "H") return ballpoly::SpaceKind::kHarmonic;
  throw std::invalid_argument("space must be lebesgue, sobolev or harmonic");
}

void dump_basis(const std::vector<std::string>& args, std::ostream& os) {
  ballpoly::SpaceTag tag;
  tag.dim = std::stoi(args[0]);
  tag.degree = std::stoi(args[1]);
  tag.alpha = ballpoly::parse_rational(args[2]);
  tag.kind = parse_space(args[3]);
  if (tag.dim < 1 || tag.dim > ballpoly::MultiIndex::kMaxDim) throw std::invalid_argument("dimension out of range");
  if (tag.degree < 0) throw std::invalid_argument("degree must be non-negative");
  if (tag.kind != ballpoly::SpaceKind::kHarmonic && tag.alpha <= -1)
    throw std::invalid_argument("alpha must exceed -1");
  const ballpoly::BasisSet& basis = ballpoly::cached_basis(tag);
  os << ballpoly::describe(tag) << '\n';
  for (const auto& p : basis.elements) os << ballpoly::format(p) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal polynomials on the unit ball: convergence runs and basis dumps"};
  ballpoly::ExperimentConfig cfg;
  std::string alpha_text = "0";
  std::string projector_text = "sobolev";
  std::string out_path;
  std::vector<std::string> dump;
  app.add_option("--dim", cfg.dim, "ambient dimension d (1..3)");
  app.add_option("--alpha", alpha_text, "weight exponent as p/q, > -1");
  app.add_option("--nmax", cfg.n_max, "largest projection degree (>= 2)");
  app.add_option("--function", cfg.function_id,
                 "exp_x1[(c)], abs_x1, weight_power(s) or a polynomial such as '1/2*x1^2 - x2'");
  app.add_option("--projector", projector_text, "lebesgue or sobolev");
  app.add_option("--quad-degree", cfg.quad_degree, "quadrature exactness (default depends on d and N_max)");
  app.add_option("--out", out_path, "CSV or dump destination (stdout when omitted)");
  app.add_option("--dump-basis", dump, "print a basis: d n alpha space")->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << '\n';
      return kRuntimeError;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  if (!dump.empty()) {
    try {
      dump_basis(dump, out);
    } catch (const std::invalid_argument& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return kUsageError;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kRuntimeError;
    }
    return out ? 0 : kRuntimeError;
  }

  try {
    cfg.alpha = ballpoly::parse_rational(alpha_text);
    cfg.projector = ballpoly::parse_projector(projector_text);
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const auto records = ballpoly::run_convergence(cfg);
    ballpoly::write_report(records, out);
    out.flush();
    if (!out) {
      std::cerr << "error: write failed\n";
      return kRuntimeError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
