#pragma once

// Exact orthogonal bases of H^d_n (spherical harmonics), V^a_n (Lebesgue
// orthogonal polynomials) and V^{a,1}_n (Sobolev orthogonal polynomials).
//
// Elements are orthogonal but never normalized; each is scaled to a primitive
// integer polynomial with positive leading coefficient and carries its squared
// norm in the space's own inner product (c_a-normalized).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballpoly/ball_measure.hpp"
#include "ballpoly/polynomial.hpp"

namespace ballpoly {

enum class SpaceKind { kHarmonic, kLebesgue, kSobolev };

struct SpaceTag {
  SpaceKind kind = SpaceKind::kLebesgue;
  int dim = 1;
  int degree = 0;
  Rational alpha = 0;  // unused for kHarmonic
};

/// Header line used by basis dumps: `# space=V(alpha) d=2 n=3 alpha=1/2`.
std::string describe(const SpaceTag& tag);

struct BasisSet {
  SpaceTag tag;
  std::vector<MPoly> elements;
  /// Squared norms in the tagged inner product. Empty for harmonic bases,
  /// which are not orthogonalized.
  std::vector<Rational> sq_norms;

  std::size_t size() const { return elements.size(); }
};

/// Inner-product selector for Gram-Schmidt and projections.
class InnerProduct {
 public:
  enum class Family { kLebesgue, kSobolev, kSobolevScaled };

  static InnerProduct lebesgue(const Alpha& a) { return {Family::kLebesgue, a, Rational(1)}; }
  static InnerProduct sobolev(const Alpha& a) { return {Family::kSobolev, a, Rational(1)}; }
  static InnerProduct sobolev_scaled(const Alpha& a, const Rational& rho);

  Family family() const { return family_; }
  const Alpha& alpha() const { return alpha_; }
  const Rational& rho() const { return rho_; }

  Rational operator()(const MPoly& p, const MPoly& q) const;

 private:
  InnerProduct(Family f, Alpha a, Rational rho) : family_(f), alpha_(std::move(a)), rho_(std::move(rho)) {}

  Family family_;
  Alpha alpha_;
  Rational rho_;
};

class LinearDependence : public std::runtime_error {
 public:
  explicit LinearDependence(std::size_t index)
      : std::runtime_error("candidate " + std::to_string(index) + " is linearly dependent on its predecessors"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

struct OrthogonalSystem {
  std::vector<MPoly> elements;
  std::vector<Rational> sq_norms;
};

enum class Scaling { kNone, kPrimitive };

/// Gram-Schmidt in input order. With Scaling::kPrimitive each output is
/// rescaled to a primitive integer polynomial (span is unchanged).
/// Throws LinearDependence naming the first candidate with zero residual.
OrthogonalSystem gram_schmidt(const std::vector<MPoly>& candidates, const InnerProduct& ip,
                              Scaling scaling = Scaling::kNone);

/// binom(n+d-1, d-1) - binom(n+d-3, d-1)
long harmonic_dimension(int dim, int degree);
/// binom(n+d-1, n)
long homogeneous_dimension(int dim, int degree);

/// Kernel of the Laplacian on degree-n homogeneous polynomials, read off the
/// reduced row-echelon form with graded-lex column order.
BasisSet harmonic_basis(int dim, int degree);

/// Jacobi-times-harmonic candidates followed by Gram-Schmidt in <.,.>_a.
BasisSet lebesgue_basis(int dim, int degree, const Rational& alpha);

/// n <= 2: Lebesgue elements re-orthogonalized in <.,.>_{a,1}; n >= 3: harmonic
/// elements followed by M^a of the degree-(n-2) Lebesgue basis for a+1, then
/// Gram-Schmidt in <.,.>_{a,1}.
BasisSet sobolev_basis(int dim, int degree, const Rational& alpha);

/// Memoized construction, safe to call from several threads.
const BasisSet& cached_basis(const SpaceTag& tag);

/// p minus its orthogonal projection onto span(basis) in `ip`. Zero iff p lies in the span.
MPoly projection_residual(const MPoly& p, const BasisSet& basis, const InnerProduct& ip);

/// The inner product a Lebesgue or Sobolev basis is orthogonal in.
InnerProduct native_inner_product(const SpaceTag& tag);

}  // namespace ballpoly
