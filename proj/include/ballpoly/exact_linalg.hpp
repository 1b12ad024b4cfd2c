#pragma once

// Dense row reduction over an exact field. Eigen handles the float path; its
// pivoting heuristics assume a magnitude order that rationals do not need.

#include <stdexcept>
#include <utility>
#include <vector>

namespace ballpoly {

template <class Scalar>
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduces `m` in place to reduced row-echelon form, scanning columns left to
/// right and taking the first nonzero entry as pivot. Returns pivot columns.
template <class Scalar>
std::vector<std::size_t> rref(ExactMatrix<Scalar>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    }
    const Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Null-space basis from the RREF: one vector per free column, in column order,
/// with a unit entry at its free column.
template <class Scalar>
std::vector<std::vector<Scalar>> kernel_basis(ExactMatrix<Scalar> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves the square system a x = b exactly. Throws SingularSystem.
template <class Scalar>
std::vector<Scalar> solve(const ExactMatrix<Scalar>& a, const std::vector<Scalar>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve expects a square system");
  ExactMatrix<Scalar> aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) throw SingularSystem("singular linear system");
  std::vector<Scalar> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

}  // namespace ballpoly
