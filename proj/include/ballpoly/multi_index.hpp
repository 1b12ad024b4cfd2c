#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace ballpoly {

/// Exponent tuple gamma in N_0^d with inline storage.
class MultiIndex {
 public:
  static constexpr int kMaxDim = 8;
  static constexpr int kMaxExponent = 255;

  MultiIndex() = default;
  explicit MultiIndex(int dim) : dim_(static_cast<std::uint8_t>(check_dim(dim))) {}
  MultiIndex(std::initializer_list<int> exponents);
  explicit MultiIndex(std::span<const int> exponents);

  /// Unit multi-index e_axis.
  static MultiIndex unit(int dim, int axis);

  int dim() const { return dim_; }
  int total() const { return total_; }
  int operator[](int axis) const { return exp_[static_cast<std::size_t>(axis)]; }
  void set(int axis, int exponent);

  /// Bitmask of axes with odd exponent.
  std::uint32_t odd_mask() const;
  bool all_even() const { return odd_mask() == 0; }

  MultiIndex& operator+=(const MultiIndex& other);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }

  /// gamma +/- e_axis. Decrementing a zero exponent throws.
  MultiIndex incremented(int axis) const;
  MultiIndex decremented(int axis) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.dim_ == b.dim_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const;

 private:
  static int check_dim(int dim);

  std::array<std::uint8_t, kMaxDim> exp_{};
  std::uint8_t dim_ = 0;
  std::uint16_t total_ = 0;
};

/// Graded order used for iteration and printing: total degree ascending, then
/// lexicographic with larger powers of x1 (then x2, ...) first. The largest
/// element of a polynomial in the usual grlex sense is therefore the first term
/// of its top-degree block.
struct GradedLexOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    for (int i = 0; i < a.dim(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const { return m.hash(); }
};

/// All multi-indices of dimension `dim` with total degree exactly `degree`, in graded-lex order.
std::vector<MultiIndex> monomials_of_degree(int dim, int degree);

/// All multi-indices with total degree <= `degree`, in graded-lex order.
std::vector<MultiIndex> monomials_up_to(int dim, int degree);

}  // namespace ballpoly
