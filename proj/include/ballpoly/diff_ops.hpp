#pragma once

// Differential operators of the ball acting exactly on polynomials.
// Axis arguments are 0-based.

#include "ballpoly/ball_measure.hpp"
#include "ballpoly/polynomial.hpp"

namespace ballpoly {

/// Angular derivative D_ij p = x_i d_j p - x_j d_i p.
MPoly angular_D(const MPoly& p, int i, int j);

/// Lowering operator d^a_j p = -(1-|x|^2) d_j p + 2(a+1) x_j p. Any rational a.
MPoly lowering_d(const MPoly& p, int j, const Rational& alpha);

/// L^(a) p = sum_j d^a_j d_j p - sum_{i<j} D_ij^2 p.
MPoly sl_operator_L(const MPoly& p, const Rational& alpha);

/// M^a p = sum_j d^{a-1}_j d^a_j p.
MPoly operator_M(const MPoly& p, const Rational& alpha);

/// L~^(a) p = L^(a-1) p + 2 proj^a_0(x . grad p); the projection uses the measure `a`.
MPoly sl_operator_Ltilde(const MPoly& p, const Alpha& a);

/// x . grad p
MPoly euler_operator(const MPoly& p);

/// Laplacian of p.
MPoly laplacian(const MPoly& p);

/// -sum_{i<j} D_ij^2 p (Laplace-Beltrami part of L).
MPoly angular_laplacian(const MPoly& p);

/// Eigenvalue n(n+d+2a) of L^(a) on degree-n orthogonal polynomials.
Rational lambda_lebesgue(int n, int dim, const Rational& alpha);

/// Eigenvalue of B^{a,1}: zero for n <= 1, lambda_lebesgue(n-1) otherwise.
Rational lambda_sobolev(int n, int dim, const Rational& alpha);

/// Eigenvalue n(n+d+2a-2) of L~^(a).
Rational lambda_tilde(int n, int dim, const Rational& alpha);

}  // namespace ballpoly
