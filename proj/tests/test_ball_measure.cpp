#include <gtest/gtest.h>

#include <array>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "ballpoly/ball_measure.hpp"
#include "ballpoly/bases.hpp"
#include "ballpoly/diff_ops.hpp"
#include "ballpoly/polynomial_io.hpp"
#include "test_support.hpp"

namespace ballpoly {
namespace {

using testing::alpha_grid;

MPoly x(int dim, int axis) { return MPoly::variable(dim, axis); }

// Dirichlet-type closed form in floating point:
//   int_B x^{2b} W_a = prod Gamma(b_i + 1/2) Gamma(a+1) / Gamma(|b| + d/2 + a + 1),
// divided by c_a. Independent of the double-factorial product used by the library.
double moment_oracle(const MultiIndex& g, double a) {
  const int d = g.dim();
  for (int i = 0; i < d; ++i)
    if (g[i] % 2) return 0.0;
  double log_num = std::lgamma(a + 1.0);
  for (int i = 0; i < d; ++i) log_num += std::lgamma(g[i] / 2 + 0.5);
  const double log_int = log_num - std::lgamma(g.total() / 2 + d / 2.0 + a + 1.0);
  const double log_mass = d / 2.0 * std::log(std::numbers::pi) + std::lgamma(a + 1.0) - std::lgamma(d / 2.0 + a + 1.0);
  return std::exp(log_int - log_mass);
}

// Brute-force disk integral of f(x,y) in polar form: 20-point Gauss-Legendre
// in r (Newton on the Legendre recurrence), trapezoid in theta.
template <class F>
double disk_integral(F f) {
  constexpr int n = 20;
  std::array<double, n> nodes{}, weights{};
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    nodes[i] = z;
    weights[i] = 2 / ((1 - z * z) * dp * dp);
  }
  constexpr int m = 64;
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    const double r = 0.5 * (nodes[i] + 1);
    for (int k = 0; k < m; ++k) {
      const double th = 2 * std::numbers::pi * k / m;
      acc += 0.5 * weights[i] * r * f(r * std::cos(th), r * std::sin(th)) * 2 * std::numbers::pi / m;
    }
  }
  return acc;
}

TEST(Moments, Examples) {
  const Alpha a0(2, 0);
  EXPECT_EQ(normalized_moment(MultiIndex{0, 0}, a0), Rational(1));
  EXPECT_EQ(normalized_moment(MultiIndex{1, 0}, a0), Rational(0));
  // Disk oracle: int x1^2 over the unit disk / pi.
  const double by_disk = disk_integral([](double u, double) { return u * u; }) / std::numbers::pi;
  // Factorized oracle: int_0^1 r^3 dr * int_0^{2pi} cos^2 / pi = (1/4)(pi)/pi.
  const double by_factors = 0.25 * std::numbers::pi / std::numbers::pi;
  EXPECT_NEAR(by_disk, 0.25, 1e-13);
  EXPECT_NEAR(by_factors, 0.25, 1e-15);
  EXPECT_EQ(normalized_moment(MultiIndex{2, 0}, a0), ratio(1, 4));
  EXPECT_EQ(inner_alpha(x(2, 0), x(2, 0), a0), ratio(1, 4));
}

TEST(Moments, ClosedFormMatchesGammaOracle) {
  for (int d = 1; d <= 3; ++d) {
    for (const Rational& al : alpha_grid()) {
      const Alpha a(d, al);
      for (const MultiIndex& g : monomials_up_to(d, 12)) {
        const double exact = normalized_moment(g, a).get_d();
        const double oracle = moment_oracle(g, al.get_d());
        EXPECT_NEAR(exact, oracle, 1e-12 * std::max(1.0, std::abs(oracle)));
      }
    }
  }
}

TEST(Moments, MassRatioMatchesGammaFunctions) {
  for (int d = 1; d <= 3; ++d) {
    for (const Rational& al : alpha_grid()) {
      const Alpha a(d, al);
      const double numeric = total_mass(d, al.get_d() + 1) / total_mass(d, al.get_d());
      EXPECT_NEAR(mass_ratio_next(a).get_d(), numeric, 1e-13);
    }
  }
  EXPECT_NEAR(total_mass(2, 0.0), std::numbers::pi, 1e-14);
  EXPECT_NEAR(total_mass(3, 0.0), 4 * std::numbers::pi / 3, 1e-14);
}

TEST(Moments, CacheMatchesRecomputationUnderConcurrentReads) {
  const Alpha a(3, ratio(5, 2));
  const MomentCache& cache = MomentCache::shared(a);
  const auto keys = monomials_up_to(3, 10);
  std::vector<std::thread> pool;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < keys.size(); k += 2)
        if (cache.get(keys[k]) != normalized_moment(keys[k], a)) ++mismatches;
    });
  }
  for (auto& th : pool) th.join();
  EXPECT_EQ(mismatches.load(), 0);
  EXPECT_GT(cache.size(), 0u);
}

TEST(Alpha, RejectsMinusOneAndBelow) {
  EXPECT_THROW(Alpha(2, -1), std::invalid_argument);
  EXPECT_THROW(Alpha(2, ratio(-3, 2)), std::invalid_argument);
  EXPECT_NO_THROW(Alpha(2, ratio(-99, 100)));
}

// Naive double loop over term pairs: the oracle for the grouped fast path.
Rational inner_naive(const MPoly& p, const MPoly& q, const Alpha& a) {
  Rational acc = 0;
  for (const auto& [m, c] : p.terms())
    for (const auto& [n, e] : q.terms()) acc += c * e * normalized_moment(m + n, a);
  return acc;
}

TEST(InnerAlpha, Examples) {
  for (int d = 2; d <= 3; ++d) {
    for (const Rational& al : alpha_grid()) {
      const Alpha a(d, al);
      EXPECT_EQ(inner_alpha(MPoly::constant(d, 1), MPoly::constant(d, 1), a), Rational(1));
      EXPECT_EQ(inner_alpha(x(d, 0), x(d, 1), a), Rational(0));
    }
  }
}

TEST(InnerAlpha, MatchesNaiveExpansion) {
  std::mt19937_64 rng(7);
  for (int d = 1; d <= 3; ++d) {
    for (const Rational& al : alpha_grid()) {
      const Alpha a(d, al);
      for (int t = 0; t < 5; ++t) {
        const MPoly p = testing::random_poly(rng, d, 6);
        const MPoly q = testing::random_poly(rng, d, 5);
        EXPECT_EQ(inner_alpha(p, q, a), inner_naive(p, q, a));
        EXPECT_EQ(inner_alpha(p, q, a), inner_alpha(q, p, a));
      }
    }
  }
}

TEST(Seminorm, Examples) {
  const Alpha a(2, 0);
  EXPECT_EQ(seminorm_sq(MPoly::constant(2, 1), 1, a), Rational(0));
  for (const Rational& al : alpha_grid()) EXPECT_EQ(seminorm_sq(x(3, 0), 1, Alpha(3, al)), Rational(1));
  // grad grad x1^2 has the single entry 2 at (1,1): 2^2 <1,1> = 4.
  const MPoly sq = x(2, 0) * x(2, 0);
  Rational brute = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const MPoly dd = diff(diff(sq, i), j);
      brute += inner_naive(dd, dd, a);
    }
  EXPECT_EQ(brute, Rational(4));
  EXPECT_EQ(seminorm_sq(sq, 2, a), Rational(4));
  EXPECT_EQ(seminorm_sq(sq, 0, a), inner_alpha(sq, sq, a));
}

TEST(InnerSobolev, Examples) {
  for (int d = 1; d <= 3; ++d) {
    for (const Rational& al : alpha_grid()) {
      const Alpha a(d, al);
      EXPECT_EQ(inner_sobolev(MPoly::constant(d, 1), MPoly::constant(d, 1), a), Rational(1));
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          // Direct expansion: gradient term delta_jk <1,1>, zero mode vanishes by parity.
          const Rational direct = grad_inner(x(d, j), x(d, k), a) +
                                  inner_alpha(x(d, j), MPoly::constant(d, 1), a) *
                                      inner_alpha(MPoly::constant(d, 1), x(d, k), a);
          EXPECT_EQ(direct, Rational(j == k ? 1 : 0));
          EXPECT_EQ(inner_sobolev(x(d, j), x(d, k), a), Rational(j == k ? 1 : 0));
        }
      }
      EXPECT_EQ(inner_sobolev(x(d, 0), MPoly::constant(d, 1), a), Rational(0));
    }
  }
}

TEST(InnerSobolev, ScaledVariant) {
  std::mt19937_64 rng(17);
  const Alpha a(2, ratio(1, 2));
  const MPoly p = testing::random_poly(rng, 2, 4), q = testing::random_poly(rng, 2, 4);
  const Rational rho = ratio(10, 3);
  const MPoly one = MPoly::constant(2, 1);
  EXPECT_EQ(inner_sobolev_scaled(p, q, a, rho),
            rho * grad_inner(p, q, a) + inner_alpha(p, one, a) * inner_alpha(one, q, a));
  EXPECT_EQ(inner_sobolev_scaled(p, q, a, Rational(1)), inner_sobolev(p, q, a));
}

TEST(BForm, Examples) {
  std::mt19937_64 rng(3);
  const Alpha a(2, 0);
  EXPECT_EQ(bform_alpha(MPoly::constant(2, 1), testing::random_poly(rng, 2, 5), a), Rational(0));
  // Gradient term: <1,1>_1 / c_0 = c_1/c_0 = 1/2. Angular term: <-x2,-x2>_0 / c_0 = 1/4.
  const Rational grad_part = mass_ratio_next(a) * inner_alpha(MPoly::constant(2, 1), MPoly::constant(2, 1), a.shifted(1));
  const Rational angular_part = inner_alpha(angular_D(x(2, 0), 0, 1), angular_D(x(2, 0), 0, 1), a);
  EXPECT_EQ(grad_part, ratio(1, 2));
  EXPECT_EQ(angular_part, ratio(1, 4));
  EXPECT_EQ(bform_alpha(x(2, 0), x(2, 0), a), grad_part + angular_part);
  EXPECT_EQ(bform_alpha(x(2, 0), x(2, 0), a), lambda_lebesgue(1, 2, 0) * inner_alpha(x(2, 0), x(2, 0), a));
  EXPECT_EQ(lambda_lebesgue(1, 2, 0), Rational(3));
  EXPECT_EQ(bform_alpha(x(2, 0), x(2, 1), a), Rational(0));
}

TEST(BFormSobolev, Examples) {
  std::mt19937_64 rng(5);
  const Alpha a(2, 0);
  for (int t = 0; t < 5; ++t) {
    const MPoly lin = testing::random_poly(rng, 2, 1);
    const MPoly q = testing::random_poly(rng, 2, 6);
    EXPECT_EQ(bform_sobolev(lin, q, a), Rational(0));
    const MPoly p = testing::random_poly(rng, 2, 5);
    EXPECT_EQ(bform_sobolev(p, q, a), bform_sobolev(q, p, a));
  }
  const MPoly xy = x(2, 0) * x(2, 1);
  // x1 x2 is Sobolev-orthogonal to 1, x1, x2, so it lies in V^{0,1}_2 with eigenvalue lambda^(0)_1 = 3.
  for (const MPoly& low : {MPoly::constant(2, 1), x(2, 0), x(2, 1)}) EXPECT_EQ(inner_sobolev(xy, low, a), Rational(0));
  EXPECT_EQ(lambda_sobolev(2, 2, 0), Rational(3));
  EXPECT_EQ(bform_sobolev(xy, xy, a), Rational(3) * inner_sobolev(xy, xy, a));
}

class MeasureProperties : public ::testing::TestWithParam<std::tuple<int, Rational>> {
 protected:
  int dim() const { return std::get<0>(GetParam()); }
  Alpha alpha() const { return Alpha(dim(), std::get<1>(GetParam())); }
};

TEST_P(MeasureProperties, AngularDerivativeIsSkewAdjoint) {
  std::mt19937_64 rng(1000 + dim());
  const Alpha a = alpha();
  for (int t = 0; t < 6; ++t) {
    const MPoly f = testing::random_poly(rng, dim(), 8, 0.15);
    const MPoly g = testing::random_poly(rng, dim(), 8, 0.15);
    for (int i = 0; i < dim(); ++i)
      for (int j = i + 1; j < dim(); ++j)
        EXPECT_EQ(inner_alpha(angular_D(f, i, j), g, a), -inner_alpha(f, angular_D(g, i, j), a));
  }
}

TEST_P(MeasureProperties, LoweringOperatorIsAdjointToDerivative) {
  std::mt19937_64 rng(2000 + dim());
  const Alpha a = alpha();
  for (int t = 0; t < 6; ++t) {
    const MPoly f = testing::random_poly(rng, dim(), 7, 0.2);
    const MPoly g = testing::random_poly(rng, dim(), 7, 0.2);
    for (int j = 0; j < dim(); ++j)
      EXPECT_EQ(mass_ratio_next(a) * inner_alpha(diff(f, j), g, a.shifted(1)),
                inner_alpha(f, lowering_d(g, j, a.value()), a));
  }
}

TEST_P(MeasureProperties, BFormBounds) {
  std::mt19937_64 rng(3000 + dim());
  const Alpha a = alpha();
  for (int t = 0; t < 6; ++t) {
    const MPoly p = testing::random_poly(rng, dim(), 6);
    const Rational b = bform_alpha(p, p, a);
    EXPECT_GE(b, 0);
    EXPECT_LE(b, seminorm_sq(p, 1, a));
    const Rational b1 = bform_sobolev(p, p, a);
    EXPECT_GE(b1, 0);
    EXPECT_LE(b1, seminorm_sq(p, 2, a));
  }
}

TEST_P(MeasureProperties, WeakSturmLiouville) {
  std::mt19937_64 rng(4000 + dim());
  const Alpha a = alpha();
  for (int n = 0; n <= 5; ++n) {
    const BasisSet& basis = cached_basis({SpaceKind::kLebesgue, dim(), n, a.value()});
    const Rational lam = lambda_lebesgue(n, dim(), a.value());
    for (const MPoly& p : basis.elements) {
      const MPoly q = testing::random_poly(rng, dim(), 6, 0.2);
      EXPECT_EQ(bform_alpha(p, q, a), lam * inner_alpha(p, q, a));
    }
  }
}

TEST_P(MeasureProperties, SobolevProductIsPositiveDefinite) {
  std::mt19937_64 rng(5000 + dim());
  const Alpha a = alpha();
  for (int t = 0; t < 20; ++t) {
    const MPoly p = testing::random_poly(rng, dim(), 1 + t % 6);
    EXPECT_GT(inner_sobolev(p, p, a), 0);
  }
  EXPECT_GT(inner_sobolev(MPoly::constant(dim(), ratio(-3, 7)), MPoly::constant(dim(), ratio(-3, 7)), a), 0);
}

INSTANTIATE_TEST_SUITE_P(Grid, MeasureProperties,
                         ::testing::Combine(::testing::Values(2, 3), ::testing::ValuesIn(alpha_grid())),
                         [](const auto& info) {
                           std::string name = "d" + std::to_string(std::get<0>(info.param)) + "_a" +
                                              std::to_string(static_cast<int>(std::get<1>(info.param).get_d() * 2));
                           for (char& c : name)
                             if (c == '-') c = 'm';
                           return name;
                         });

}  // namespace
}  // namespace ballpoly
