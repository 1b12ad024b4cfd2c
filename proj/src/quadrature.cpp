#include "ballpoly/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace ballpoly {

namespace {

// P_n^{(a,b)}(t) and P_{n-1}^{(a,b)}(t), n >= 1.
std::pair<double, double> jacobi_pair(int n, double a, double b, double t) {
  double prev = 1.0;
  double cur = 0.5 * ((a - b) + (a + b + 2.0) * t);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double lead = 2.0 * k * (k + a + b) * (s - 2.0);
    const double next =
        ((s - 1.0) * ((a * a - b * b) + s * (s - 2.0) * t) * cur - 2.0 * (k + a - 1.0) * (k + b - 1.0) * s * prev) /
        lead;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

double jacobi_derivative(int n, double a, double b, double t, double pn, double pn1) {
  const double s = 2.0 * n + a + b;
  return (n * ((a - b) - s * t) * pn + 2.0 * (n + a) * (n + b) * pn1) / (s * (1.0 - t * t));
}

// m equally spaced unit vectors at angles (k + 1/2) 2pi/m, m a multiple of 4.
// The coordinate axes then fall on cell boundaries, so the rule acts as a
// composite midpoint rule on each side of a jump across x_i = 0. The first
// quadrant is computed once and rotated to keep the rule exactly symmetric.
Eigen::Matrix2Xd circle_points(int m) {
  Eigen::Matrix2Xd pts(2, m);
  const int q = m / 4;
  for (int k = 0; k < q; ++k) {
    const double th = 2.0 * std::numbers::pi * (k + 0.5) / m;
    const double c = std::cos(th), s = std::sin(th);
    pts.col(k) << c, s;
    pts.col(k + q) << -s, c;
    pts.col(k + 2 * q) << -c, -s;
    pts.col(k + 3 * q) << s, -c;
  }
  return pts;
}

}  // namespace

Rule1D gauss_jacobi(int n_nodes, double a, double b) {
  if (n_nodes < 1) throw std::invalid_argument("gauss_jacobi needs at least one node");
  if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("Jacobi parameters must exceed -1");
  const int n = n_nodes;
  Rule1D rule{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  std::vector<double> roots;
  roots.reserve(n);
  for (int k = 0; k < n; ++k) {
    double x = -std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * n));
    for (int it = 0; it < 100; ++it) {
      const auto [p, p1] = jacobi_pair(n, a, b, x);
      const double dp = jacobi_derivative(n, a, b, x, p, p1);
      double deflate = 0.0;
      for (double r : roots) deflate += 1.0 / (x - r);
      const double step = p / (dp - p * deflate);
      x -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  const double log_const = std::lgamma(n + a + 1.0) + std::lgamma(n + b + 1.0) - std::lgamma(n + a + b + 1.0) -
                           std::lgamma(n + 1.0) + (a + b + 1.0) * std::log(2.0);
  for (int k = 0; k < n; ++k) {
    const double x = roots[k];
    const auto [p, p1] = jacobi_pair(n, a, b, x);
    const double dp = jacobi_derivative(n, a, b, x, p, p1);
    rule.nodes(k) = x;
    rule.weights(k) = std::exp(log_const) / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

Rule1D radial_rule(int n_nodes, double alpha, int dim) {
  const double b = 0.5 * (dim - 2);
  Rule1D gj = gauss_jacobi(n_nodes, alpha, b);
  const double scale = std::pow(2.0, -alpha - b - 2.0);
  Rule1D out;
  out.nodes = ((gj.nodes.array() + 1.0) * 0.5).sqrt();
  out.weights = gj.weights * scale;
  return out;
}

SphereRule sphere_rule(int dim, int degree) {
  SphereRule rule;
  switch (dim) {
    case 1:
      rule.points = Eigen::MatrixXd(1, 2);
      rule.points << -1.0, 1.0;
      rule.weights = Eigen::VectorXd::Ones(2);
      return rule;
    case 2: {
      const int m = (std::max(degree, 0) + 4) / 4 * 4;
      rule.points = circle_points(m);
      rule.weights = Eigen::VectorXd::Constant(m, 2.0 * std::numbers::pi / m);
      return rule;
    }
    case 3: {
      const int nz = std::max(degree, 0) / 2 + 1;
      const int m = (std::max(degree, 0) + 4) / 4 * 4;
      const Rule1D gl = gauss_jacobi(nz, 0.0, 0.0);
      const Eigen::Matrix2Xd circle = circle_points(m);
      rule.points = Eigen::MatrixXd(3, nz * m);
      rule.weights = Eigen::VectorXd(nz * m);
      for (int i = 0; i < nz; ++i) {
        const double z = gl.nodes(i);
        const double rho = std::sqrt(1.0 - z * z);
        for (int k = 0; k < m; ++k) {
          rule.points.col(i * m + k) << rho * circle(0, k), rho * circle(1, k), z;
          rule.weights(i * m + k) = gl.weights(i) * 2.0 * std::numbers::pi / m;
        }
      }
      return rule;
    }
    default:
      throw UnsupportedDimension("sphere rules exist only for d <= 3");
  }
}

QuadRule make_ball_rule(int dim, double alpha, int exact_degree) {
  if (exact_degree < 0) throw std::invalid_argument("negative quadrature degree");
  const Rule1D radial = radial_rule((exact_degree + 3) / 2, alpha, dim);
  const SphereRule sphere = sphere_rule(dim, exact_degree);
  const Eigen::Index nr = radial.nodes.size();
  const Eigen::Index ns = sphere.weights.size();
  QuadRule rule;
  rule.dim = dim;
  rule.alpha = alpha;
  rule.exact_degree = exact_degree;
  rule.points.resize(dim, nr * ns);
  rule.weights.resize(nr * ns);
  for (Eigen::Index i = 0; i < nr; ++i) {
    rule.points.middleCols(i * ns, ns) = radial.nodes(i) * sphere.points;
    rule.weights.segment(i * ns, ns) = radial.weights(i) * sphere.weights;
  }
  return rule;
}

double ball_integrate(const PointFunction& f, const QuadRule& rule) {
  double acc = 0.0;
  for (Eigen::Index k = 0; k < rule.size(); ++k) acc += rule.weights(k) * f(rule.points.col(k));
  return acc;
}

}  // namespace ballpoly
