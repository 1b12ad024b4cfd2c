#include "ballpoly/diff_ops.hpp"

namespace ballpoly {

MPoly angular_D(const MPoly& p, int i, int j) {
  if (i < 0 || i >= p.dim() || j < 0 || j >= p.dim()) throw std::out_of_range("angular derivative axis out of range");
  if (i == j) return MPoly(p.dim());
  return mul_diff(p, i, j) - mul_diff(p, j, i);
}

MPoly lowering_d(const MPoly& p, int j, const Rational& alpha) {
  if (j < 0 || j >= p.dim()) throw std::out_of_range("lowering operator axis out of range");
  const MPoly dj = diff(p, j);
  MPoly r = mul_norm_sq(dj);
  r -= dj;
  r.add_scaled(mul_var(p, j), 2 * (alpha + 1));
  return r;
}

MPoly angular_laplacian(const MPoly& p) {
  MPoly r(p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    for (int j = i + 1; j < p.dim(); ++j) r -= angular_D(angular_D(p, i, j), i, j);
  }
  return r;
}

MPoly sl_operator_L(const MPoly& p, const Rational& alpha) {
  MPoly r = angular_laplacian(p);
  for (int j = 0; j < p.dim(); ++j) r += lowering_d(diff(p, j), j, alpha);
  return r;
}

MPoly operator_M(const MPoly& p, const Rational& alpha) {
  MPoly r(p.dim());
  for (int j = 0; j < p.dim(); ++j) r += lowering_d(lowering_d(p, j, alpha), j, alpha - 1);
  return r;
}

MPoly euler_operator(const MPoly& p) {
  MPoly r(p.dim());
  for (const auto& [m, c] : p.terms()) r.add_term(m, c * m.total());
  return r;
}

MPoly laplacian(const MPoly& p) {
  MPoly r(p.dim());
  for (int i = 0; i < p.dim(); ++i) r += diff(diff(p, i), i);
  return r;
}

MPoly sl_operator_Ltilde(const MPoly& p, const Alpha& a) {
  MPoly r = sl_operator_L(p, a.value() - 1);
  const MPoly one = MPoly::constant(p.dim(), Rational(1));
  r.add_scaled(one, 2 * inner_alpha(euler_operator(p), one, a));
  return r;
}

Rational lambda_lebesgue(int n, int dim, const Rational& alpha) {
  if (n < 0) throw std::invalid_argument("negative degree");
  return Rational(n) * (Rational(n + dim) + 2 * alpha);
}

Rational lambda_sobolev(int n, int dim, const Rational& alpha) {
  return n <= 1 ? Rational(0) : lambda_lebesgue(n - 1, dim, alpha);
}

Rational lambda_tilde(int n, int dim, const Rational& alpha) {
  if (n < 0) throw std::invalid_argument("negative degree");
  return Rational(n) * (Rational(n + dim - 2) + 2 * alpha);
}

}  // namespace ballpoly
