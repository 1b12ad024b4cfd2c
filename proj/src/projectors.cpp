#include "ballpoly/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <tuple>

#include "ballpoly/exact_linalg.hpp"

namespace ballpoly {

const BasisSet& monomial_gram_schmidt_basis(const InnerProduct& ip, int dim, int degree) {
  using Key = std::tuple<int, int, Rational, Rational, int>;
  static std::recursive_mutex mutex;
  static std::map<Key, std::unique_ptr<BasisSet>> cache;
  if (dim != ip.alpha().dim()) throw DimensionMismatch("inner product and basis dimensions differ");
  const Key key{static_cast<int>(ip.family()), dim, ip.alpha().value(), ip.rho(), degree};
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return *it->second;

  OrthogonalSystem lower;
  for (int k = 0; k < degree; ++k) {
    const BasisSet& block = monomial_gram_schmidt_basis(ip, dim, k);
    lower.elements.insert(lower.elements.end(), block.elements.begin(), block.elements.end());
    lower.sq_norms.insert(lower.sq_norms.end(), block.sq_norms.begin(), block.sq_norms.end());
  }
  BasisSet out;
  out.tag = {ip.family() == InnerProduct::Family::kLebesgue ? SpaceKind::kLebesgue : SpaceKind::kSobolev, dim, degree,
             ip.alpha().value()};
  for (const MultiIndex& m : monomials_of_degree(dim, degree)) {
    const MPoly c = MPoly::monomial(m);
    MPoly r = c;
    for (std::size_t j = 0; j < lower.elements.size(); ++j)
      r.add_scaled(lower.elements[j], -(ip(c, lower.elements[j]) / lower.sq_norms[j]));
    for (std::size_t j = 0; j < out.elements.size(); ++j)
      r.add_scaled(out.elements[j], -(ip(c, out.elements[j]) / out.sq_norms[j]));
    make_primitive(r);
    out.sq_norms.push_back(ip(r, r));
    out.elements.push_back(std::move(r));
  }
  auto [it, inserted] = cache.emplace(key, std::make_unique<BasisSet>(std::move(out)));
  return *it->second;
}

const BasisSet& projection_basis(const InnerProduct& ip, int dim, int degree) {
  const Rational& alpha = ip.alpha().value();
  switch (ip.family()) {
    case InnerProduct::Family::kLebesgue: return cached_basis({SpaceKind::kLebesgue, dim, degree, alpha});
    case InnerProduct::Family::kSobolev: return cached_basis({SpaceKind::kSobolev, dim, degree, alpha});
    case InnerProduct::Family::kSobolevScaled: return monomial_gram_schmidt_basis(ip, dim, degree);
  }
  throw std::logic_error("unknown inner product family");
}

namespace {

MPoly project_degree(const MPoly& u, const InnerProduct& ip, int n) {
  const BasisSet& basis = projection_basis(ip, u.dim(), n);
  MPoly out(u.dim());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Rational c = ip(u, basis.elements[k]);
    if (c != 0) out.add_scaled(basis.elements[k], c / basis.sq_norms[k]);
  }
  return out;
}

}  // namespace

MPoly project_poly(const MPoly& u, const ProjectorKind& kind, int degree) {
  if (u.dim() != kind.family.alpha().dim()) throw DimensionMismatch("polynomial and projector dimensions differ");
  // Both families make V_n orthogonal to Pi_{n-1}, so blocks above deg u vanish.
  const int top = std::min(degree, u.degree());
  if (kind.mode == ProjectorKind::Mode::kSingleDegree) {
    return degree > top ? MPoly(u.dim()) : project_degree(u, kind.family, degree);
  }
  MPoly out(u.dim());
  for (int n = 0; n <= top; ++n) out += project_degree(u, kind.family, n);
  return out;
}

MPoly adjoint_T(const MPoly& f, int axis, const Alpha& a) {
  if (f.dim() != a.dim()) throw DimensionMismatch("polynomial and weight dimensions differ");
  if (axis < 0 || axis >= a.dim()) throw std::out_of_range("axis out of range");
  const int dim = a.dim();
  if (f.is_zero()) return MPoly(dim);
  const int n = f.degree();
  const InnerProduct leb = InnerProduct::lebesgue(a);
  if (!projection_residual(f, cached_basis({SpaceKind::kLebesgue, dim, n, a.value()}), leb).is_zero())
    throw NotInSpace("argument does not lie in the Lebesgue orthogonal space of its degree");

  const BasisSet& sob = cached_basis({SpaceKind::kSobolev, dim, n + 1, a.value()});
  const InnerProduct sip = InnerProduct::sobolev(a);
  const std::size_t m = sob.size();
  ExactMatrix<Rational> gram(m, m);
  std::vector<Rational> rhs(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = k; l < m; ++l) {
      gram(k, l) = sip(sob.elements[k], sob.elements[l]);
      gram(l, k) = gram(k, l);
    }
    rhs[k] = inner_alpha(diff(sob.elements[k], axis), f, a);
  }
  std::vector<Rational> coef;
  try {
    coef = solve(gram, rhs);
  } catch (const SingularSystem&) {
    throw std::logic_error("singular Sobolev Gram matrix");
  }
  MPoly t(dim);
  for (std::size_t k = 0; k < m; ++k) t.add_scaled(sob.elements[k], coef[k]);
  return t;
}

void check_gradient(const FuncSample& u, std::uint64_t seed) {
  if (!u.has_gradient()) throw GradientMismatch("no gradient callback supplied");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-0.9, 0.9);
  constexpr double kStep = 1e-6;
  constexpr double kTol = 1e-5;
  for (int found = 0; found < 10;) {
    Eigen::VectorXd x(u.dim);
    for (int i = 0; i < u.dim; ++i) x(i) = coord(rng);
    if (x.norm() >= 0.9) continue;
    ++found;
    const Eigen::VectorXd g = u.gradient(x);
    if (g.size() != u.dim) throw GradientMismatch("gradient callback returned the wrong dimension");
    for (int i = 0; i < u.dim; ++i) {
      Eigen::VectorXd xp = x, xm = x;
      xp(i) += kStep;
      xm(i) -= kStep;
      const double fd = (u.value(xp) - u.value(xm)) / (2 * kStep);
      if (std::abs(fd - g(i)) > kTol * std::max(1.0, std::abs(g(i))))
        throw GradientMismatch("gradient callback disagrees with central differences");
    }
  }
}

MPolyD project_function(const FuncSample& u, const ProjectorKind& kind, int degree, const QuadRule& rule) {
  const InnerProduct& ip = kind.family;
  const int dim = ip.alpha().dim();
  if (u.dim != dim || rule.dim != dim) throw DimensionMismatch("function, rule and projector dimensions differ");
  if (std::abs(rule.alpha - ip.alpha().to_double()) > 1e-14) throw std::invalid_argument("rule built for another alpha");
  if (rule.exact_degree < 2 * degree) throw InsufficientQuadrature("quadrature not exact to twice the projection degree");
  const bool sobolev = ip.family() != InnerProduct::Family::kLebesgue;
  if (sobolev && !u.has_gradient()) throw std::invalid_argument("Sobolev projection needs a gradient callback");

  const Eigen::Index np = rule.size();
  const double mass = rule.weights.sum();
  Eigen::VectorXd uval(np);
  Eigen::MatrixXd ugrad(sobolev ? dim : 0, np);
  for (Eigen::Index k = 0; k < np; ++k) {
    uval(k) = u.value(rule.points.col(k));
    if (sobolev) ugrad.col(k) = u.gradient(rule.points.col(k));
  }
  const double umean = rule.weights.dot(uval) / mass;
  const double rho = ip.rho().get_d();

  auto sample = [&](const MPolyD& p) {
    Eigen::VectorXd v(np);
    for (Eigen::Index k = 0; k < np; ++k) {
      const Eigen::VectorXd x = rule.points.col(k);
      v(k) = evaluate(p, std::span<const double>(x.data(), dim));
    }
    return v;
  };

  const int lo = kind.mode == ProjectorKind::Mode::kSingleDegree ? degree : 0;
  MPolyD out(dim);
  for (int n = lo; n <= degree; ++n) {
    const BasisSet& basis = projection_basis(ip, dim, n);
    for (std::size_t e = 0; e < basis.size(); ++e) {
      const MPolyD b = basis.elements[e].cast<double>();
      double c;
      if (!sobolev) {
        c = rule.weights.dot(uval.cwiseProduct(sample(b))) / mass;
      } else {
        double g = 0.0;
        for (int i = 0; i < dim; ++i)
          g += rule.weights.dot(ugrad.row(i).transpose().cwiseProduct(sample(diff(b, i))));
        c = rho * g / mass + umean * (rule.weights.dot(sample(b)) / mass);
      }
      out.add_scaled(b, c / basis.sq_norms[e].get_d());
    }
  }
  return out;
}

}  // namespace ballpoly
