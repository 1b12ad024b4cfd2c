#pragma once

// Floating-point orthogonal basis of Pi_N on the ball for d <= 3, evaluated by
// recurrences at the nodes of a quadrature rule:
//   phi_{j,m,nu}(x) = P_j^{(a, m+(d-2)/2)}(2|x|^2 - 1) Y_{m,nu}(x),
// with Y the real solid harmonics (Re/Im of (x+iy)^m for d = 2, the Legendre
// recurrence in z for d = 3). Monomial-form exact bases lose all digits past
// degree ~20; this form stays well conditioned to N ~ 48.

#include <vector>

#include <Eigen/Dense>

#include "ballpoly/projectors.hpp"
#include "ballpoly/quadrature.hpp"

namespace ballpoly {

class SpectralBasis {
 public:
  /// Columns are ordered by total degree and normalized so that
  /// sum_k w_k phi(x_k)^2 = c_a.
  SpectralBasis(QuadRule rule, int max_degree);

  const QuadRule& rule() const { return rule_; }
  int max_degree() const { return max_degree_; }
  /// Number of basis functions of degree <= n.
  Eigen::Index count(int n) const { return offsets_.at(static_cast<std::size_t>(n) + 1); }
  const std::vector<int>& degrees() const { return degrees_; }
  /// Columns sharing a block id share their solid harmonic and differ only in
  /// the radial factor. Sobolev Gram matrices are block diagonal in this id.
  const std::vector<int>& blocks() const { return blocks_; }

  const Eigen::MatrixXd& values() const { return values_; }      // points x functions
  const Eigen::MatrixXd& gradient(int axis) const { return grads_.at(axis); }

 private:
  template <int D>
  void build();

  QuadRule rule_;
  int max_degree_;
  std::vector<int> degrees_;
  std::vector<int> blocks_;
  std::vector<Eigen::Index> offsets_;
  Eigen::MatrixXd values_;
  std::vector<Eigen::MatrixXd> grads_;
};

struct SampledFunction {
  Eigen::VectorXd values;    // one per node
  Eigen::MatrixXd gradient;  // nodes x dim
};

SampledFunction sample_function(const FuncSample& u, const QuadRule& rule);

struct ProjectionErrors {
  double l2 = 0.0;    // ||u - Pu||_a
  double grad = 0.0;  // ||grad u - grad Pu||_a
  double sob = 0.0;   // ||u - Pu||_{a,1}
};

/// Float projections onto Pi_N expressed in a SpectralBasis. All norms are
/// c_a-normalized and evaluated with the basis' quadrature rule.
class SpectralProjector {
 public:
  explicit SpectralProjector(const SpectralBasis& basis);

  Eigen::VectorXd lebesgue(const SampledFunction& u, int n) const;
  /// Solves the Sobolev normal equations blockwise.
  Eigen::VectorXd sobolev(const SampledFunction& u, int n) const;
  /// Same, with one dense solve over all of Pi_N (reference path for tests).
  Eigen::VectorXd sobolev_dense(const SampledFunction& u, int n) const;

  ProjectionErrors errors(const SampledFunction& u, const Eigen::VectorXd& coeffs) const;

 private:
  Eigen::VectorXd sobolev_rhs(const SampledFunction& u) const;

  const SpectralBasis& basis_;
  double mass_;
  Eigen::VectorXd means_;  // <phi_k, 1>_a / c_a
  Eigen::MatrixXd gram_;   // full Sobolev Gram matrix
  std::vector<std::vector<Eigen::Index>> block_members_;
};

}  // namespace ballpoly
