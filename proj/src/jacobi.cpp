#include "ballpoly/jacobi.hpp"

#include <algorithm>
#include <stdexcept>

namespace ballpoly {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  return (k < 0 || k > degree()) ? Rational(0) : coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) { return p + Rational(-1) * q; }

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return UniPoly();
  std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  std::vector<Rational> c(p.coeffs_);
  for (auto& v : c) v *= s;
  return UniPoly(std::move(c));
}

UniPoly jacobi_poly(int n, const Rational& a, const Rational& b) {
  if (a <= -1 || b <= -1) throw std::invalid_argument("Jacobi parameters must exceed -1");
  if (n < 0) throw std::invalid_argument("negative Jacobi degree");
  UniPoly prev({Rational(1)});
  if (n == 0) return prev;
  const Rational ab = a + b;
  UniPoly cur({(a - b) / 2, (ab + 2) / 2});
  const UniPoly t({Rational(0), Rational(1)});
  for (int k = 2; k <= n; ++k) {
    const Rational s = 2 * k + ab;  // 2k + a + b
    const Rational lead = 2 * Rational(k) * (k + ab) * (s - 2);
    const UniPoly linear({a * a - b * b, s * (s - 2)});
    UniPoly next = Rational((s - 1) / lead) * (linear * cur) -
                   Rational(2 * (k + a - 1) * (k + b - 1) * s / lead) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MPoly compose(const UniPoly& p, const MPoly& s) {
  MPoly acc(s.dim());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * s;
    acc.add_term(MultiIndex(s.dim()), *it);
  }
  return acc;
}

}  // namespace ballpoly
