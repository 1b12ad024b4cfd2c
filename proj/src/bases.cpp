#include "ballpoly/bases.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "ballpoly/diff_ops.hpp"
#include "ballpoly/exact_linalg.hpp"
#include "ballpoly/jacobi.hpp"

namespace ballpoly {

std::string describe(const SpaceTag& tag) {
  std::ostringstream os;
  os << "# space=";
  switch (tag.kind) {
    case SpaceKind::kHarmonic: os << "H"; break;
    case SpaceKind::kLebesgue: os << "V(alpha)"; break;
    case SpaceKind::kSobolev: os << "V(alpha,1)"; break;
  }
  os << " d=" << tag.dim << " n=" << tag.degree;
  Rational a = tag.alpha;
  os << " alpha=" << a.get_num() << '/' << a.get_den();
  return os.str();
}

InnerProduct InnerProduct::sobolev_scaled(const Alpha& a, const Rational& rho) {
  if (rho <= 0) throw std::invalid_argument("balancing constant must be positive");
  return {Family::kSobolevScaled, a, rho};
}

Rational InnerProduct::operator()(const MPoly& p, const MPoly& q) const {
  switch (family_) {
    case Family::kLebesgue: return inner_alpha(p, q, alpha_);
    case Family::kSobolev: return inner_sobolev(p, q, alpha_);
    case Family::kSobolevScaled: return inner_sobolev_scaled(p, q, alpha_, rho_);
  }
  throw std::logic_error("unknown inner product family");
}

OrthogonalSystem gram_schmidt(const std::vector<MPoly>& candidates, const InnerProduct& ip, Scaling scaling) {
  OrthogonalSystem out;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const MPoly& c = candidates[k];
    MPoly r = c;
    for (std::size_t j = 0; j < out.elements.size(); ++j) {
      const Rational coef = ip(c, out.elements[j]) / out.sq_norms[j];
      r.add_scaled(out.elements[j], -coef);
    }
    if (r.is_zero()) throw LinearDependence(k);
    if (scaling == Scaling::kPrimitive) make_primitive(r);
    Rational nrm = ip(r, r);
    if (nrm <= 0) throw LinearDependence(k);
    out.elements.push_back(std::move(r));
    out.sq_norms.push_back(std::move(nrm));
  }
  return out;
}

namespace {

long binom(long top, long k) {
  if (top < 0 || k < 0 || k > top) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

}  // namespace

long harmonic_dimension(int dim, int degree) {
  if (degree < 0) return 0;
  return binom(degree + dim - 1, dim - 1) - binom(degree + dim - 3, dim - 1);
}

long homogeneous_dimension(int dim, int degree) {
  if (degree < 0) return 0;
  return binom(degree + dim - 1, degree);
}

BasisSet harmonic_basis(int dim, int degree) {
  BasisSet out;
  out.tag = {SpaceKind::kHarmonic, dim, degree, Rational(0)};
  if (degree < 0) return out;
  const auto cols = monomials_of_degree(dim, degree);
  const auto rows = monomials_of_degree(dim, degree - 2);
  std::vector<std::vector<Rational>> kernel;
  if (rows.empty()) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::vector<Rational> v(cols.size(), Rational(0));
      v[c] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    std::map<MultiIndex, std::size_t, GradedLexOrder> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    ExactMatrix<Rational> lap(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const MPoly image = laplacian(MPoly::monomial(cols[c]));
      for (const auto& [m, v] : image.terms()) lap(row_of.at(m), c) = v;
    }
    kernel = kernel_basis(lap);
  }
  for (const auto& v : kernel) {
    MPoly h(dim);
    for (std::size_t c = 0; c < cols.size(); ++c) h.add_term(cols[c], v[c]);
    make_primitive(h);
    out.elements.push_back(std::move(h));
  }
  return out;
}

BasisSet lebesgue_basis(int dim, int degree, const Rational& alpha) {
  const Alpha a(dim, alpha);
  std::vector<MPoly> candidates;
  MPoly t = one_minus_norm_sq(dim) * Rational(-2);
  t.add_term(MultiIndex(dim), Rational(1));  // 2|x|^2 - 1
  for (int j = 0; 2 * j <= degree; ++j) {
    const int m = degree - 2 * j;
    const MPoly radial = compose(jacobi_poly(j, alpha, Rational(m) + ratio(dim - 2, 2)), t);
    for (const MPoly& y : cached_basis({SpaceKind::kHarmonic, dim, m, Rational(0)}).elements) {
      candidates.push_back(radial * y);
    }
  }
  auto sys = gram_schmidt(candidates, InnerProduct::lebesgue(a), Scaling::kPrimitive);
  BasisSet out;
  out.tag = {SpaceKind::kLebesgue, dim, degree, alpha};
  out.elements = std::move(sys.elements);
  out.sq_norms = std::move(sys.sq_norms);
  return out;
}

BasisSet sobolev_basis(int dim, int degree, const Rational& alpha) {
  const Alpha a(dim, alpha);
  std::vector<MPoly> candidates;
  if (degree <= 2) {
    candidates = cached_basis({SpaceKind::kLebesgue, dim, degree, alpha}).elements;
  } else {
    candidates = cached_basis({SpaceKind::kHarmonic, dim, degree, Rational(0)}).elements;
    for (const MPoly& v : cached_basis({SpaceKind::kLebesgue, dim, degree - 2, alpha + 1}).elements) {
      candidates.push_back(operator_M(v, alpha));
    }
  }
  auto sys = gram_schmidt(candidates, InnerProduct::sobolev(a), Scaling::kPrimitive);
  BasisSet out;
  out.tag = {SpaceKind::kSobolev, dim, degree, alpha};
  out.elements = std::move(sys.elements);
  out.sq_norms = std::move(sys.sq_norms);
  return out;
}

const BasisSet& cached_basis(const SpaceTag& tag) {
  using Key = std::tuple<int, int, int, Rational>;
  static std::recursive_mutex mutex;
  static std::map<Key, std::unique_ptr<BasisSet>> cache;
  const Key key{static_cast<int>(tag.kind), tag.dim, tag.degree,
                tag.kind == SpaceKind::kHarmonic ? Rational(0) : tag.alpha};
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return *it->second;
  BasisSet built;
  switch (tag.kind) {
    case SpaceKind::kHarmonic: built = harmonic_basis(tag.dim, tag.degree); break;
    case SpaceKind::kLebesgue: built = lebesgue_basis(tag.dim, tag.degree, tag.alpha); break;
    case SpaceKind::kSobolev: built = sobolev_basis(tag.dim, tag.degree, tag.alpha); break;
  }
  auto [it, inserted] = cache.emplace(key, std::make_unique<BasisSet>(std::move(built)));
  return *it->second;
}

InnerProduct native_inner_product(const SpaceTag& tag) {
  const Alpha a(tag.dim, tag.alpha);
  switch (tag.kind) {
    case SpaceKind::kLebesgue: return InnerProduct::lebesgue(a);
    case SpaceKind::kSobolev: return InnerProduct::sobolev(a);
    case SpaceKind::kHarmonic: break;
  }
  throw std::invalid_argument("harmonic bases carry no native inner product");
}

MPoly projection_residual(const MPoly& p, const BasisSet& basis, const InnerProduct& ip) {
  if (basis.sq_norms.size() != basis.elements.size())
    throw std::invalid_argument("projection requires an orthogonal basis with stored norms");
  MPoly r = p;
  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    r.add_scaled(basis.elements[k], -(ip(p, basis.elements[k]) / basis.sq_norms[k]));
  }
  return r;
}

}  // namespace ballpoly
