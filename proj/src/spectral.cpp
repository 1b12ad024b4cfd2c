#include "ballpoly/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/AutoDiff>

namespace ballpoly {

namespace {

// Values P_0..P_jmax of P_j^{(a,b)}(t).
template <class T>
void jacobi_values(int jmax, double a, double b, const T& t, std::vector<T>& out) {
  out.resize(static_cast<std::size_t>(jmax) + 1);
  out[0] = T(1.0);
  if (jmax == 0) return;
  out[1] = 0.5 * ((a - b) + (a + b + 2.0) * t);
  for (int k = 2; k <= jmax; ++k) {
    const double s = 2.0 * k + a + b;
    const double lead = 2.0 * k * (k + a + b) * (s - 2.0);
    out[k] = ((s - 1.0) / lead) * ((a * a - b * b) + s * (s - 2.0) * t) * out[k - 1] -
             (2.0 * (k + a - 1.0) * (k + b - 1.0) * s / lead) * out[k - 2];
  }
}

// Real solid harmonics of degree <= lmax; harmonics[l] lists the ones of degree l.
template <class T>
void solid_harmonics(int dim, int lmax, const std::vector<T>& x, std::vector<std::vector<T>>& harmonics) {
  harmonics.assign(static_cast<std::size_t>(lmax) + 1, {});
  harmonics[0].push_back(T(1.0));
  if (dim == 1) {
    if (lmax >= 1) harmonics[1].push_back(x[0]);
    return;
  }
  // (x + iy)^m
  T re = T(1.0), im = T(0.0);
  if (dim == 2) {
    for (int m = 1; m <= lmax; ++m) {
      const T nre = re * x[0] - im * x[1];
      const T nim = re * x[1] + im * x[0];
      re = nre;
      im = nim;
      harmonics[m].push_back(re);
      harmonics[m].push_back(im);
    }
    return;
  }
  const T& z = x[2];
  const T r2 = x[0] * x[0] + x[1] * x[1] + z * z;
  for (auto& h : harmonics) h.clear();
  for (int m = 0; m <= lmax; ++m) {
    if (m > 0) {
      const T nre = re * x[0] - im * x[1];
      const T nim = re * x[1] + im * x[0];
      re = nre;
      im = nim;
    }
    T prev_re = T(0.0), prev_im = T(0.0);
    T cur_re = re, cur_im = im;
    for (int l = m; l <= lmax; ++l) {
      harmonics[l].push_back(cur_re);
      if (m > 0) harmonics[l].push_back(cur_im);
      const double c1 = (2.0 * l + 1.0) / (l - m + 1.0);
      const double c2 = (l + m) / (l - m + 1.0);
      const T next_re = c1 * z * cur_re - c2 * r2 * prev_re;
      const T next_im = c1 * z * cur_im - c2 * r2 * prev_im;
      prev_re = cur_re;
      prev_im = cur_im;
      cur_re = next_re;
      cur_im = next_im;
    }
  }
}

int harmonic_count(int dim, int l) {
  if (dim == 1) return l <= 1 ? 1 : 0;
  if (dim == 2) return l == 0 ? 1 : 2;
  return 2 * l + 1;
}

}  // namespace

SpectralBasis::SpectralBasis(QuadRule rule, int max_degree) : rule_(std::move(rule)), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative basis degree");
  const int dim = rule_.dim;
  // Block ids: one per solid harmonic, numbered by (degree, index).
  std::vector<int> first_block(static_cast<std::size_t>(max_degree) + 1);
  int nblocks = 0;
  for (int l = 0; l <= max_degree; ++l) {
    first_block[l] = nblocks;
    nblocks += harmonic_count(dim, l);
  }
  offsets_.push_back(0);
  for (int n = 0; n <= max_degree; ++n) {
    for (int j = 0; 2 * j <= n; ++j) {
      const int m = n - 2 * j;
      for (int h = 0; h < harmonic_count(dim, m); ++h) {
        degrees_.push_back(n);
        blocks_.push_back(first_block[m] + h);
      }
    }
    offsets_.push_back(static_cast<Eigen::Index>(degrees_.size()));
  }
  switch (dim) {
    case 1: build<1>(); break;
    case 2: build<2>(); break;
    case 3: build<3>(); break;
    default: throw UnsupportedDimension("spectral basis exists only for d <= 3");
  }
}

template <int D>
void SpectralBasis::build() {
  using Deriv = Eigen::Matrix<double, D, 1>;
  using AD = Eigen::AutoDiffScalar<Deriv>;
  const Eigen::Index np = rule_.size();
  const auto nf = static_cast<Eigen::Index>(degrees_.size());
  values_.resize(np, nf);
  grads_.assign(D, Eigen::MatrixXd(np, nf));
  const double alpha = rule_.alpha;
  const int nmax = max_degree_;

  std::vector<AD> x(D);
  std::vector<std::vector<AD>> harmonics;
  std::vector<std::vector<AD>> radial(static_cast<std::size_t>(nmax) + 1);
  for (Eigen::Index p = 0; p < np; ++p) {
    AD r2(0.0);
    for (int i = 0; i < D; ++i) {
      x[i] = AD(rule_.points(i, p), Deriv::Unit(i));
      r2 += x[i] * x[i];
    }
    const AD t = 2.0 * r2 - 1.0;
    solid_harmonics(D, nmax, x, harmonics);
    for (int m = 0; m <= nmax; ++m) jacobi_values((nmax - m) / 2, alpha, m + 0.5 * (D - 2), t, radial[m]);

    Eigen::Index col = 0;
    for (int n = 0; n <= nmax; ++n) {
      for (int j = 0; 2 * j <= n; ++j) {
        const int m = n - 2 * j;
        for (const AD& y : harmonics[m]) {
          const AD phi = radial[m][j] * y;
          values_(p, col) = phi.value();
          for (int i = 0; i < D; ++i) grads_[i](p, col) = phi.derivatives()(i);
          ++col;
        }
      }
    }
  }
  const double mass = rule_.weights.sum();
  const Eigen::RowVectorXd norms =
      ((rule_.weights.asDiagonal() * values_.cwiseAbs2()).colwise().sum() / mass).cwiseSqrt();
  const Eigen::VectorXd inv = norms.cwiseInverse().transpose();
  values_ = values_ * inv.asDiagonal();
  for (auto& g : grads_) g = g * inv.asDiagonal();
}

SampledFunction sample_function(const FuncSample& u, const QuadRule& rule) {
  if (u.dim != rule.dim) throw DimensionMismatch("function and rule dimensions differ");
  SampledFunction s;
  s.values.resize(rule.size());
  s.gradient.resize(rule.size(), u.has_gradient() ? rule.dim : 0);
  for (Eigen::Index k = 0; k < rule.size(); ++k) {
    s.values(k) = u.value(rule.points.col(k));
    if (u.has_gradient()) s.gradient.row(k) = u.gradient(rule.points.col(k)).transpose();
  }
  return s;
}

SpectralProjector::SpectralProjector(const SpectralBasis& basis)
    : basis_(basis), mass_(basis.rule().weights.sum()) {
  const auto& w = basis_.rule().weights;
  means_ = basis_.values().transpose() * w / mass_;
  int nblocks = 0;
  for (int b : basis_.blocks()) nblocks = std::max(nblocks, b + 1);
  block_members_.assign(static_cast<std::size_t>(nblocks), {});
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(basis_.blocks().size()); ++k)
    block_members_[basis_.blocks()[k]].push_back(k);
  // Entries outside the harmonic blocks vanish analytically; only blocks are kept.
  const auto nf = static_cast<Eigen::Index>(basis_.degrees().size());
  gram_ = Eigen::MatrixXd::Zero(nf, nf);
  for (const auto& members : block_members_) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a; b < members.size(); ++b) {
        double g = 0.0;
        for (int i = 0; i < basis_.rule().dim; ++i) {
          g += (basis_.gradient(i).col(members[a]).cwiseProduct(w)).dot(basis_.gradient(i).col(members[b]));
        }
        const double v = g / mass_ + means_(members[a]) * means_(members[b]);
        gram_(members[a], members[b]) = v;
        gram_(members[b], members[a]) = v;
      }
    }
  }
}

Eigen::VectorXd SpectralProjector::lebesgue(const SampledFunction& u, int n) const {
  const Eigen::Index k = basis_.count(n);
  return basis_.values().leftCols(k).transpose() * basis_.rule().weights.cwiseProduct(u.values) / mass_;
}

Eigen::VectorXd SpectralProjector::sobolev_rhs(const SampledFunction& u) const {
  if (u.gradient.cols() != basis_.rule().dim) throw std::invalid_argument("Sobolev projection needs gradient samples");
  const auto& w = basis_.rule().weights;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis_.degrees().size()));
  for (int i = 0; i < basis_.rule().dim; ++i) rhs += basis_.gradient(i).transpose() * w.cwiseProduct(u.gradient.col(i));
  rhs /= mass_;
  rhs += means_ * (w.dot(u.values) / mass_);
  return rhs;
}

Eigen::VectorXd SpectralProjector::sobolev(const SampledFunction& u, int n) const {
  const Eigen::VectorXd rhs = sobolev_rhs(u);
  const Eigen::Index k = basis_.count(n);
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(k);
  for (const auto& members : block_members_) {
    // Members are in degree order, so the degree <= n ones form a prefix.
    std::size_t used = 0;
    while (used < members.size() && members[used] < k) ++used;
    if (used == 0) continue;
    Eigen::MatrixXd g(used, used);
    Eigen::VectorXd b(used);
    for (std::size_t a = 0; a < used; ++a) {
      b(a) = rhs(members[a]);
      for (std::size_t c = 0; c < used; ++c) g(a, c) = gram_(members[a], members[c]);
    }
    const Eigen::VectorXd sol = g.ldlt().solve(b);
    for (std::size_t a = 0; a < used; ++a) coeffs(members[a]) = sol(a);
  }
  return coeffs;
}

Eigen::VectorXd SpectralProjector::sobolev_dense(const SampledFunction& u, int n) const {
  const Eigen::Index k = basis_.count(n);
  const auto& w = basis_.rule().weights;
  Eigen::MatrixXd g = means_.head(k) * means_.head(k).transpose();
  for (int i = 0; i < basis_.rule().dim; ++i) {
    const auto cols = basis_.gradient(i).leftCols(k);
    g += cols.transpose() * w.asDiagonal() * cols / mass_;
  }
  return g.ldlt().solve(sobolev_rhs(u).head(k));
}

ProjectionErrors SpectralProjector::errors(const SampledFunction& u, const Eigen::VectorXd& coeffs) const {
  const auto& w = basis_.rule().weights;
  const Eigen::Index k = coeffs.size();
  const Eigen::VectorXd res = u.values - basis_.values().leftCols(k) * coeffs;
  ProjectionErrors e;
  e.l2 = std::sqrt(w.dot(res.cwiseAbs2()) / mass_);
  double g2 = 0.0;
  if (u.gradient.cols() == basis_.rule().dim) {
    for (int i = 0; i < basis_.rule().dim; ++i) {
      const Eigen::VectorXd gres = u.gradient.col(i) - basis_.gradient(i).leftCols(k) * coeffs;
      g2 += w.dot(gres.cwiseAbs2());
    }
  }
  e.grad = std::sqrt(g2 / mass_);
  const double mean = w.dot(res) / mass_;
  e.sob = std::sqrt(g2 / mass_ + mean * mean);
  return e;
}

}  // namespace ballpoly
