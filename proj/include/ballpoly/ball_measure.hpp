#pragma once

// Weighted inner products on the unit ball B^d with weight W_a(x) = (1-|x|^2)^a.
//
// Every value returned here is divided by the total mass c_a = <1,1>_a, which
// keeps all quantities rational. Where the (a+1)-measure appears (gradient term
// of B^a, adjointness of the lowering operator) it is rescaled by the rational
// ratio c_{a+1}/c_a = (a+1)/(d/2+a+1) so that both sides share the c_a
// normalization.

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "ballpoly/polynomial.hpp"

namespace ballpoly {

/// Weight exponent together with the ambient dimension. Enforces a > -1.
class Alpha {
 public:
  Alpha(int dim, Rational value);
  Alpha(int dim, long value) : Alpha(dim, Rational(value)) {}

  int dim() const { return dim_; }
  const Rational& value() const { return value_; }
  double to_double() const { return value_.get_d(); }

  /// Same dimension, parameter a + k (k >= 0 keeps the constraint).
  Alpha shifted(long k) const { return Alpha(dim_, value_ + k); }

  friend bool operator==(const Alpha& a, const Alpha& b) { return a.dim_ == b.dim_ && a.value_ == b.value_; }

 private:
  int dim_;
  Rational value_;
};

/// (1/c_a) * integral over B^d of x^gamma W_a(x) dx, by the closed form
///   prod_i (2 b_i - 1)!! / prod_{k=0}^{|b|-1} (d + 2a + 2k + 2)   for gamma = 2b,
/// and zero when any exponent is odd.
Rational normalized_moment(const MultiIndex& gamma, const Alpha& a);

/// c_{a+1} / c_a = (a+1) / (d/2 + a + 1).
Rational mass_ratio_next(const Alpha& a);

/// c_a = pi^{d/2} Gamma(a+1) / Gamma(d/2+a+1), in floating point.
double total_mass(int dim, double alpha);

/// Memo table of normalized moments for one (d, a). Lookups are safe from
/// concurrent readers; misses take an exclusive lock.
class MomentCache {
 public:
  explicit MomentCache(Alpha a) : alpha_(std::move(a)) {}

  const Alpha& alpha() const { return alpha_; }
  Rational get(const MultiIndex& gamma) const;
  std::size_t size() const;

  /// Process-wide cache for the given parameters.
  static const MomentCache& shared(const Alpha& a);

 private:
  Alpha alpha_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<MultiIndex, Rational, MultiIndexHash> memo_;
};

/// <p,q>_a / c_a
Rational inner_alpha(const MPoly& p, const MPoly& q, const Alpha& a);

/// <grad p, grad q>_a / c_a
Rational grad_inner(const MPoly& p, const MPoly& q, const Alpha& a);

/// ||grad^k p||_a^2 / c_a, summed over all ordered k-tuples of partial derivatives.
Rational seminorm_sq(const MPoly& p, int order, const Alpha& a);

/// <p,q>_{a,1} / c_a = <grad p, grad q>_a/c_a + (<p,1>_a/c_a)(<1,q>_a/c_a)
Rational inner_sobolev(const MPoly& p, const MPoly& q, const Alpha& a);

/// Sobolev product with a balancing constant on the gradient term:
/// rho <grad p, grad q>_a/c_a + (<p,1>_a/c_a)(<1,q>_a/c_a).
Rational inner_sobolev_scaled(const MPoly& p, const MPoly& q, const Alpha& a, const Rational& rho);

/// B^a(p,q)/c_a = <grad p, grad q>_{a+1}/c_a + sum_{i<j} <D_ij p, D_ij q>_a/c_a
Rational bform_alpha(const MPoly& p, const MPoly& q, const Alpha& a);

/// B^{a,1}(p,q)/c_a = sum_k B^a(d_k p, d_k q)/c_a
Rational bform_sobolev(const MPoly& p, const MPoly& q, const Alpha& a);

}  // namespace ballpoly
