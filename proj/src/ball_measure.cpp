#include "ballpoly/ball_measure.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ballpoly/diff_ops.hpp"

namespace ballpoly {

Alpha::Alpha(int dim, Rational value) : dim_(dim), value_(std::move(value)) {
  if (dim < 1 || dim > MultiIndex::kMaxDim) throw std::invalid_argument("dimension out of range");
  if (value_ <= -1) throw std::invalid_argument("weight exponent must satisfy alpha > -1, got " + to_string(value_));
}

Rational normalized_moment(const MultiIndex& gamma, const Alpha& a) {
  if (gamma.dim() != a.dim()) throw DimensionMismatch("moment dimension mismatch");
  if (!gamma.all_even()) return Rational(0);
  Integer num = 1;
  int half_total = 0;
  for (int i = 0; i < gamma.dim(); ++i) {
    const int b = gamma[i] / 2;
    half_total += b;
    for (int k = 2 * b - 1; k > 1; k -= 2) num *= k;
  }
  Rational den(1);
  const Rational base = Rational(a.dim()) + 2 * a.value() + 2;
  for (int k = 0; k < half_total; ++k) den *= base + 2 * k;
  return Rational(num) / den;
}

Rational mass_ratio_next(const Alpha& a) {
  const Rational& al = a.value();
  return (al + 1) / (ratio(a.dim(), 2) + al + 1);
}

double total_mass(int dim, double alpha) {
  const double h = 0.5 * dim;
  return std::exp(h * std::log(std::numbers::pi) + std::lgamma(alpha + 1.0) - std::lgamma(h + alpha + 1.0));
}

Rational MomentCache::get(const MultiIndex& gamma) const {
  if (!gamma.all_even()) return Rational(0);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(gamma);
    if (it != memo_.end()) return it->second;
  }
  Rational value = normalized_moment(gamma, alpha_);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(gamma, std::move(value)).first->second;
}

std::size_t MomentCache::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

const MomentCache& MomentCache::shared(const Alpha& a) {
  static std::mutex registry_mutex;
  static std::map<std::pair<int, Rational>, std::unique_ptr<MomentCache>> registry;
  std::lock_guard lock(registry_mutex);
  auto key = std::make_pair(a.dim(), a.value());
  auto it = registry.find(key);
  if (it == registry.end()) it = registry.emplace(key, std::make_unique<MomentCache>(a)).first;
  return *it->second;
}

namespace {

// Integer coefficients over a common denominator; terms grouped by odd-exponent
// mask so that only pairs whose sum has all-even exponents are visited.
struct IntegerForm {
  std::map<std::uint32_t, std::vector<std::pair<MultiIndex, Integer>>> groups;
  Integer denominator = 1;
};

IntegerForm integer_form(const MPoly& p) {
  IntegerForm f;
  for (const auto& [m, c] : p.terms()) mpz_lcm(f.denominator.get_mpz_t(), f.denominator.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : p.terms()) {
    f.groups[m.odd_mask()].emplace_back(m, c.get_num() * (f.denominator / c.get_den()));
  }
  return f;
}

Rational inner_impl(const MPoly& p, const MPoly& q, const MomentCache& cache) {
  p.check_same_dim(q);
  if (p.is_zero() || q.is_zero()) return Rational(0);
  const IntegerForm fp = integer_form(p);
  const IntegerForm fq = integer_form(q);
  std::unordered_map<MultiIndex, Integer, MultiIndexHash> sums;
  Integer prod;
  for (const auto& [mask, terms_p] : fp.groups) {
    auto it = fq.groups.find(mask);
    if (it == fq.groups.end()) continue;
    for (const auto& [mp, cp] : terms_p) {
      for (const auto& [mq, cq] : it->second) {
        mpz_mul(prod.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
        Integer& acc = sums[mp + mq];
        mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), prod.get_mpz_t());
      }
    }
  }
  // Moments share a denominator per half-degree; accumulate numerators per level.
  std::map<int, Rational> by_level;
  for (const auto& [m, z] : sums) {
    if (z == 0) continue;
    by_level[m.total()] += Rational(z) * cache.get(m);
  }
  Rational total(0);
  for (const auto& [level, v] : by_level) total += v;
  Rational scale(1);
  scale /= Rational(fp.denominator * fq.denominator);
  return total * scale;
}

}  // namespace

Rational inner_alpha(const MPoly& p, const MPoly& q, const Alpha& a) {
  if (p.dim() != a.dim()) throw DimensionMismatch("polynomial dimension does not match measure");
  return inner_impl(p, q, MomentCache::shared(a));
}

Rational grad_inner(const MPoly& p, const MPoly& q, const Alpha& a) {
  p.check_same_dim(q);
  Rational s(0);
  for (int i = 0; i < p.dim(); ++i) s += inner_alpha(diff(p, i), diff(q, i), a);
  return s;
}

namespace {

void accumulate_seminorm(const MPoly& p, int remaining, const Alpha& a, Rational& acc) {
  if (p.is_zero()) return;
  if (remaining == 0) {
    acc += inner_alpha(p, p, a);
    return;
  }
  for (int i = 0; i < p.dim(); ++i) accumulate_seminorm(diff(p, i), remaining - 1, a, acc);
}

}  // namespace

Rational seminorm_sq(const MPoly& p, int order, const Alpha& a) {
  if (order < 0) throw std::invalid_argument("seminorm order must be non-negative");
  Rational acc(0);
  accumulate_seminorm(p, order, a, acc);
  return acc;
}

Rational inner_sobolev(const MPoly& p, const MPoly& q, const Alpha& a) {
  return inner_sobolev_scaled(p, q, a, Rational(1));
}

Rational inner_sobolev_scaled(const MPoly& p, const MPoly& q, const Alpha& a, const Rational& rho) {
  const MPoly one = MPoly::constant(p.dim(), Rational(1));
  return rho * grad_inner(p, q, a) + inner_alpha(p, one, a) * inner_alpha(one, q, a);
}

Rational bform_alpha(const MPoly& p, const MPoly& q, const Alpha& a) {
  p.check_same_dim(q);
  Rational angular(0);
  for (int i = 0; i < p.dim(); ++i) {
    for (int j = i + 1; j < p.dim(); ++j) angular += inner_alpha(angular_D(p, i, j), angular_D(q, i, j), a);
  }
  return mass_ratio_next(a) * grad_inner(p, q, a.shifted(1)) + angular;
}

Rational bform_sobolev(const MPoly& p, const MPoly& q, const Alpha& a) {
  p.check_same_dim(q);
  Rational s(0);
  for (int k = 0; k < p.dim(); ++k) s += bform_alpha(diff(p, k), diff(q, k), a);
  return s;
}

}  // namespace ballpoly
