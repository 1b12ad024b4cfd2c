#pragma once

// Sparse multivariate polynomials keyed by exponent multi-indices.
//
// Polynomial<Rational> (MPoly) is the exact carrier for every operator and
// basis element; Polynomial<double> (MPolyD) holds float projections.

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ballpoly/multi_index.hpp"
#include "ballpoly/rational.hpp"

namespace ballpoly {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Scalar>
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Scalar, GradedLexOrder>;

  explicit Polynomial(int dim = 1) : dim_(dim) {
    if (dim < 1 || dim > MultiIndex::kMaxDim) throw std::invalid_argument("polynomial dimension out of range");
  }

  static Polynomial constant(int dim, const Scalar& c) {
    Polynomial p(dim);
    p.add_term(MultiIndex(dim), c);
    return p;
  }

  static Polynomial monomial(const MultiIndex& m, const Scalar& c = Scalar(1)) {
    Polynomial p(m.dim());
    p.add_term(m, c);
    return p;
  }

  /// The coordinate function x_axis (0-based axis).
  static Polynomial variable(int dim, int axis) { return monomial(MultiIndex::unit(dim, axis)); }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }

  Scalar coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Adds c * x^m, pruning the entry if it cancels.
  void add_term(const MultiIndex& m, const Scalar& c) {
    if (m.dim() != dim_) throw DimensionMismatch("monomial dimension does not match polynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += s * q
  Polynomial& add_scaled(const Polynomial& q, const Scalar& s) {
    check_same_dim(q);
    if (s == 0) return *this;
    for (const auto& [m, c] : q.terms_) add_term(m, s * c);
    return *this;
  }

  Polynomial& operator+=(const Polynomial& q) {
    check_same_dim(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& q) {
    check_same_dim(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& entry : terms_) entry.second *= s;
    return *this;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& entry : r.terms_) entry.second = -entry.second;
    return r;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Scalar& s) { return p *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial p) { return p *= s; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_same_dim(q);
    Polynomial r(p.dim_);
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) r.add_term(mp + mq, cp * cq);
    }
    return r;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.dim_ == q.dim_ && p.terms_ == q.terms_;
  }

  template <class To>
  Polynomial<To> cast() const {
    Polynomial<To> r(dim_);
    for (const auto& [m, c] : terms_) r.add_term(m, convert_scalar<To>(c));
    return r;
  }

  void check_same_dim(const Polynomial& q) const {
    if (q.dim_ != dim_) throw DimensionMismatch("polynomial dimensions differ");
  }

 private:
  int dim_;
  Terms terms_;
};

using MPoly = Polynomial<Rational>;
using MPolyD = Polynomial<double>;

/// Partial derivative along a 0-based axis.
template <class Scalar>
Polynomial<Scalar> diff(const Polynomial<Scalar>& p, int axis) {
  if (axis < 0 || axis >= p.dim()) throw std::out_of_range("differentiation axis out of range");
  Polynomial<Scalar> r(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (m[axis] == 0) continue;
    r.add_term(m.decremented(axis), c * Scalar(m[axis]));
  }
  return r;
}

/// x_mul * d/dx_diff p, the building block of angular and Euler operators.
template <class Scalar>
Polynomial<Scalar> mul_diff(const Polynomial<Scalar>& p, int mul_axis, int diff_axis) {
  if (diff_axis < 0 || diff_axis >= p.dim() || mul_axis < 0 || mul_axis >= p.dim())
    throw std::out_of_range("axis out of range");
  Polynomial<Scalar> r(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (m[diff_axis] == 0) continue;
    r.add_term(m.decremented(diff_axis).incremented(mul_axis), c * Scalar(m[diff_axis]));
  }
  return r;
}

/// x_axis * p
template <class Scalar>
Polynomial<Scalar> mul_var(const Polynomial<Scalar>& p, int axis) {
  if (axis < 0 || axis >= p.dim()) throw std::out_of_range("axis out of range");
  Polynomial<Scalar> r(p.dim());
  for (const auto& [m, c] : p.terms()) r.add_term(m.incremented(axis), c);
  return r;
}

/// ||x||^2 * p
template <class Scalar>
Polynomial<Scalar> mul_norm_sq(const Polynomial<Scalar>& p) {
  Polynomial<Scalar> r(p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    for (const auto& [m, c] : p.terms()) r.add_term(m.incremented(i).incremented(i), c);
  }
  return r;
}

/// Direct monomial evaluation with per-axis power tables. Coefficients are
/// converted to the point's scalar type, so Rational points evaluate exactly.
template <class Scalar, class T>
T evaluate(const Polynomial<Scalar>& p, std::span<const T> x) {
  if (static_cast<int>(x.size()) != p.dim()) throw DimensionMismatch("evaluation point dimension mismatch");
  if (p.is_zero()) return T(0);
  const int deg = p.degree();
  std::vector<std::vector<T>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(deg) + 1);
    powers[i][0] = T(1);
    for (int k = 1; k <= deg; ++k) powers[i][k] = powers[i][k - 1] * x[i];
  }
  T acc(0);
  for (const auto& [m, c] : p.terms()) {
    T term = convert_scalar<T>(c);
    for (int i = 0; i < p.dim(); ++i) {
      if (m[i] != 0) term *= powers[i][m[i]];
    }
    acc += term;
  }
  return acc;
}

template <class Scalar, class T>
T evaluate(const Polynomial<Scalar>& p, const std::vector<T>& x) {
  return evaluate(p, std::span<const T>(x));
}

enum class Parity { kEven, kOdd, kMixed };

template <class Scalar>
struct Grading {
  int degree = -1;
  std::vector<Polynomial<Scalar>> homogeneous_parts;  // nonzero parts, ascending degree
  Parity parity = Parity::kEven;
};

/// Splits p into its nonzero homogeneous parts and classifies its parity under x -> -x.
/// The zero polynomial is reported as even.
template <class Scalar>
Grading<Scalar> grade(const Polynomial<Scalar>& p) {
  Grading<Scalar> g;
  g.degree = p.degree();
  bool has_even = false;
  bool has_odd = false;
  int current = -1;
  for (const auto& [m, c] : p.terms()) {
    if (m.total() != current) {
      current = m.total();
      g.homogeneous_parts.emplace_back(p.dim());
      (current % 2 == 0 ? has_even : has_odd) = true;
    }
    g.homogeneous_parts.back().add_term(m, c);
  }
  if (has_even && has_odd) {
    g.parity = Parity::kMixed;
  } else if (has_odd) {
    g.parity = Parity::kOdd;
  }
  return g;
}

template <class Scalar>
bool is_homogeneous(const Polynomial<Scalar>& p) {
  return p.is_zero() || p.terms().begin()->first.total() == p.degree();
}

/// The grlex-largest monomial: first term of the top-degree block.
template <class Scalar>
const std::pair<const MultiIndex, Scalar>& leading_term(const Polynomial<Scalar>& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no leading term");
  const int deg = p.degree();
  auto it = p.terms().lower_bound([&] {
    MultiIndex top(p.dim());
    top.set(0, deg);
    return top;
  }());
  return *it;
}

/// Rescales an exact polynomial to integer coefficients with unit content and a
/// positive leading coefficient. Returns the factor s with result = s * p.
Rational make_primitive(MPoly& p);

/// 1 - ||x||^2
MPoly one_minus_norm_sq(int dim);

}  // namespace ballpoly
