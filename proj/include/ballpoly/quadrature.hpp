#pragma once

// Product quadrature on the unit ball for the weight (1-|x|^2)^a:
// Gauss-Jacobi in t = 2r^2 - 1 times a rule on the sphere S^{d-1}.

#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

namespace ballpoly {

struct Rule1D {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Jacobi rule on [-1,1] for (1-t)^a (1+t)^b, exact to degree 2n-1.
/// Newton iteration with deflation from Chebyshev starting points.
Rule1D gauss_jacobi(int n_nodes, double a, double b);

/// Nodes r in (0,1) and weights with
///   sum_k w_k f(r_k) = int_0^1 f(r) (1-r^2)^a r^{d-1} dr
/// exactly for polynomials f in r^2 of degree <= 2 n_nodes - 1.
Rule1D radial_rule(int n_nodes, double alpha, int dim);

class UnsupportedDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SphereRule {
  Eigen::MatrixXd points;  // dim x n, unit vectors
  Eigen::VectorXd weights;
};

/// Rule on S^{d-1} exact for polynomials of total degree <= `degree`, d in {1,2,3}.
/// Weights sum to the surface measure (2 for d=1).
SphereRule sphere_rule(int dim, int degree);

struct QuadRule {
  int dim = 0;
  double alpha = 0.0;
  Eigen::MatrixXd points;  // dim x n
  Eigen::VectorXd weights;  // sum to c_a
  int exact_degree = 0;

  Eigen::Index size() const { return weights.size(); }
};

/// Radial rule with ceil((D+2)/2) nodes times a sphere rule of degree D.
QuadRule make_ball_rule(int dim, double alpha, int exact_degree);

using PointFunction = std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)>;

/// sum_k w_k f(x_k)
double ball_integrate(const PointFunction& f, const QuadRule& rule);

}  // namespace ballpoly
