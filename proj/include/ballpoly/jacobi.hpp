#pragma once

#include <vector>

#include "ballpoly/polynomial.hpp"

namespace ballpoly {

/// Univariate polynomial in t with exact coefficients, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;

  friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);
  friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Jacobi polynomial P_n^{(a,b)} by the three-term recurrence. Requires a, b > -1.
UniPoly jacobi_poly(int n, const Rational& a, const Rational& b);

/// p(s) for a multivariate argument s, by Horner's scheme.
MPoly compose(const UniPoly& p, const MPoly& s);

}  // namespace ballpoly
