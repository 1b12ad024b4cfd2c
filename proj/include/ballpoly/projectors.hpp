#pragma once

// Orthogonal projections onto V_n (single degree) and Pi_N (cumulative) in the
// Lebesgue, Sobolev and rho-scaled Sobolev inner products.

#include <cstdint>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

#include "ballpoly/bases.hpp"
#include "ballpoly/quadrature.hpp"

namespace ballpoly {

struct ProjectorKind {
  enum class Mode { kSingleDegree, kCumulative };

  InnerProduct family;
  Mode mode = Mode::kCumulative;

  static ProjectorKind single(InnerProduct ip) { return {std::move(ip), Mode::kSingleDegree}; }
  static ProjectorKind cumulative(InnerProduct ip) { return {std::move(ip), Mode::kCumulative}; }
};

/// Orthogonal basis of the degree-n block for `ip`. Lebesgue and Sobolev use
/// the structured constructions; the rho-scaled family is built independently
/// by Gram-Schmidt on monomials against all lower degrees.
const BasisSet& projection_basis(const InnerProduct& ip, int dim, int degree);

/// Degree-n block of Gram-Schmidt over graded monomials in `ip`, cached.
const BasisSet& monomial_gram_schmidt_basis(const InnerProduct& ip, int dim, int degree);

/// proj_n(u) for Mode::kSingleDegree, S_N(u) for Mode::kCumulative.
MPoly project_poly(const MPoly& u, const ProjectorKind& kind, int degree);

class NotInSpace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// T^a_i f for f in V^a_n: the element t of V^{a,1}_{n+1} with
/// <b, t>_{a,1} = <d_i b, f>_a for every b in V^{a,1}_{n+1}. Throws NotInSpace.
MPoly adjoint_T(const MPoly& f, int axis, const Alpha& a);

using GradientFunction = std::function<Eigen::VectorXd(const Eigen::Ref<const Eigen::VectorXd>&)>;

struct FuncSample {
  int dim = 0;
  PointFunction value;
  GradientFunction gradient;  // optional

  bool has_gradient() const { return static_cast<bool>(gradient); }
};

class GradientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Compares the gradient callback with central differences at 10 random
/// interior points; throws GradientMismatch beyond 1e-5.
void check_gradient(const FuncSample& u, std::uint64_t seed = 0x5eed);

class InsufficientQuadrature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Float realization of project_poly for sampled u; inner products come from
/// `rule`, which must share the family's alpha and be exact to degree >= 2N.
MPolyD project_function(const FuncSample& u, const ProjectorKind& kind, int degree, const QuadRule& rule);

}  // namespace ballpoly
