#include "oracles.hpp"
#include "teichdisk/errors.hpp"
#include "teichdisk/qc.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace teichdisk;
using qc::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

// z -> A (x, y) as a complex map
qc::MapFn linear_map(double a, double b, double c, double d) {
  return [=](Complex z) { return Complex(a * z.real() + b * z.imag(), c * z.real() + d * z.imag()); };
}

qc::GridMap without_evaluator(qc::GridMap m) {
  m.evaluator = nullptr;
  return m;
}

}  // namespace

TEST_CASE("half-plane distance and annulus modulus") {
  for (double s : {1.0, 2.0, 10.0, 1e4}) {
    CHECK(qc::hyperbolic_distance({0, 1}, {0, s}) == doctest::Approx(std::log(s)).epsilon(1e-13));
  }
  CHECK(qc::hyperbolic_distance({0, 1}, {0, 1}) == 0.0);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.05, 3);
  for (int k = 0; k < 40; ++k) {
    Complex a(u(rng) - 1.5, u(rng));
    Complex b(u(rng) - 1.5, u(rng));
    CHECK(qc::hyperbolic_distance(a, b) == doctest::Approx(qc::hyperbolic_distance(b, a)));
    CHECK(qc::hyperbolic_distance(a, b) == doctest::Approx(oracle::arccosh_distance(a, b)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(qc::hyperbolic_distance({0, 1}, {0, 0}), InvalidInput);
  CHECK(qc::annulus_modulus(std::exp(-2 * kPi), 1.0) == doctest::Approx(1.0));
  CHECK(qc::annulus_modulus(0.25, 1.0) == doctest::Approx(std::log(4.0) / (2 * kPi)));
  CHECK_THROWS_AS(qc::annulus_modulus(1.0, 0.5), InvalidInput);
}

TEST_CASE("Beltrami coefficient of simple maps") {
  auto id = qc::sample_grid([](Complex z) { return z; }, -1, 1, 21);
  CHECK(qc::sup_abs_mu(qc::beltrami_of_grid(id)) < 1e-14);
  CHECK(qc::sup_abs_mu(qc::beltrami_of_grid(without_evaluator(id))) < 1e-14);

  auto conj_mix = qc::sample_grid([](Complex z) { return z + 0.1 * std::conj(z); }, -1, 1, 21);
  for (const auto& field : {qc::beltrami_of_grid(conj_mix), qc::beltrami_of_grid(without_evaluator(conj_mix))}) {
    for (const auto& mu : field.mu) {
      CHECK(mu.real() == doctest::Approx(0.1).epsilon(1e-12));
      CHECK(std::abs(mu.imag()) < 1e-12);
    }
  }

  auto shear = qc::sample_grid(linear_map(1, 1, 0, 1), -1, 1, 21);
  CHECK(std::abs(qc::dilatation_of_field(qc::beltrami_of_grid(shear)) - (3 + std::sqrt(5.0)) / 2) < 1e-9);

  CHECK(qc::dilatation_from_mu(0.0) == 1.0);
  CHECK(qc::dilatation_from_mu(1.0 / 3.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(qc::dilatation_from_mu(1.0), InvalidInput);
  CHECK_THROWS_AS(qc::sup_abs_mu(qc::BeltramiField{}), InvalidInput);
}

TEST_CASE("affine grid dilatation agrees with the SVD") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3, 3);
  int done = 0;
  while (done < 20) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    if (a * d - b * c < 0.1) continue;
    auto m = qc::sample_grid(linear_map(a, b, c, d), -1, 1, 11);
    const double oracle_K = oracle::svd_dilatation(a, b, c, d);
    CHECK(std::abs(qc::dilatation_of_field(qc::beltrami_of_grid(m)) - oracle_K) < 1e-6);
    CHECK(std::abs(qc::dilatation_of_field(qc::beltrami_of_grid(without_evaluator(m))) - oracle_K) < 1e-6);
    ++done;
  }
}

TEST_CASE("orientation failures name the node") {
  auto flip = qc::sample_grid([](Complex z) { return std::conj(z); }, -1, 1, 5);
  CHECK_THROWS_AS(qc::beltrami_of_grid(flip), OrientationFailure);
  auto mostly_conj = qc::sample_grid([](Complex z) { return 0.1 * z + std::conj(z); }, -1, 1, 5);
  try {
    qc::beltrami_of_grid(mostly_conj);
    FAIL("expected an orientation failure");
  } catch (const OrientationFailure& ex) {
    CHECK(ex.abs_mu() == doctest::Approx(10.0));
    CHECK(std::abs(ex.x()) <= 1.0);
  }
}

TEST_CASE("grid masks and the keep filter") {
  auto disk = qc::sample_grid([](Complex z) { return z; }, -1, 1, 41, [](Complex z) { return std::abs(z) < 1; });
  auto full = qc::beltrami_of_grid(disk);
  for (const auto& z : full.nodes) CHECK(std::abs(z) < 1.0);
  auto ring = qc::beltrami_of_grid(disk, [](Complex z) { return std::abs(z) > 0.5; });
  CHECK(ring.nodes.size() < full.nodes.size());
  for (const auto& z : ring.nodes) CHECK(std::abs(z) > 0.5);
  CHECK_THROWS_AS(qc::sample_grid([](Complex z) { return z; }, 1, 1, 5), InvalidInput);
  CHECK_THROWS_AS(qc::sample_grid([](Complex z) { return z; }, 0, 1, 2), InvalidInput);
}

TEST_CASE("Dehn twist annulus") {
  CHECK(qc::dehn_twist_annulus(1).K == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  const double a = 0.1;
  const double closed = 1 + (a * a + a * std::sqrt(a * a + 4)) / 2;
  CHECK(qc::dehn_twist_annulus(10).K == doctest::Approx(closed).epsilon(1e-12));
  CHECK(std::abs(qc::dehn_twist_annulus(10).K - 1.1051) < 1e-3);
  CHECK(qc::dehn_twist_annulus(10).K == doctest::Approx(oracle::svd_dilatation(1, 0.1, 0, 1)));
  double prev = std::numeric_limits<double>::infinity();
  for (double h : {1.0, 2.0, 5.0, 10.0, 100.0, 1e6}) {
    const double k = qc::dehn_twist_annulus(h).K;
    CHECK(k < prev);
    prev = k;
  }
  CHECK(prev - 1.0 < 1e-5);
  CHECK_THROWS_AS(qc::dehn_twist_annulus(0), InvalidInput);

  CHECK(qc::min_modulus_for_eps((3 + std::sqrt(5.0)) / 2 - 1) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(qc::min_modulus_for_eps(closed - 1) == doctest::Approx(10.0).epsilon(1e-8));
  CHECK(qc::min_modulus_for_eps(1e8) < qc::min_modulus_for_eps(1e6));
  CHECK(qc::min_modulus_for_eps(1e8) < 2e-4);
  for (double eps : {0.5, 0.1, 0.01}) {
    CHECK(std::abs(qc::dehn_twist_annulus(qc::min_modulus_for_eps(eps)).K - (1 + eps)) < 1e-6);
  }
  CHECK_THROWS_AS(qc::min_modulus_for_eps(0), InvalidInput);
}

TEST_CASE("end maps are rotation-normalized") {
  qc::UnivalentEndMap rotated([](Complex z) { return Complex(0, 2) * z; }, Complex(0, 2));
  CHECK(rotated.derivative_at_0() == doctest::Approx(2.0));
  const Complex w = rotated(Complex(0.3, 0.1));
  CHECK(w.real() == doctest::Approx(0.6));
  CHECK(w.imag() == doctest::Approx(0.2));
  CHECK(qc::UnivalentEndMap::mobius(0.5).derivative_at_0() == 1.0);
  CHECK(qc::UnivalentEndMap::dilation(3).is_dilation());
  CHECK_FALSE(qc::UnivalentEndMap::mobius(0.5).is_dilation());
  CHECK_THROWS_AS(qc::UnivalentEndMap::mobius(1.0), InvalidInput);
  CHECK_THROWS_AS(qc::UnivalentEndMap::dilation(0), InvalidInput);
  CHECK_THROWS_AS(qc::UnivalentEndMap::from_family("cayley", 0), InvalidInput);
  CHECK(qc::UnivalentEndMap::from_family("mobius", 0.25).param() == 0.25);
}

TEST_CASE("twist-free depth") {
  for (double theta : {0.0, 1.0, -2.5}) {
    auto id = qc::twist_free_depth(qc::UnivalentEndMap::identity(), theta);
    CHECK(id.r0 == 1.0);
    CHECK(id.L0 == 0.0);
    CHECK(id.winding < 1e-12);
    CHECK(qc::twist_free_depth(qc::UnivalentEndMap::dilation(3), theta).r0 == 1.0);
    auto mob = qc::twist_free_depth(qc::UnivalentEndMap::mobius(0.5), theta);
    CHECK(mob.r0 == 1.0);
    // arg g(r e^{i theta}) - theta = -arg(1 - 0.5 r e^{i theta}), bounded by pi / 2
    CHECK(mob.winding < kPi / 2);
    double oracle_variation = 0;
    double prev = 0;
    for (double r = 1.0; r >= 1e-8; r *= 0.99) {
      const double a = -std::arg(1.0 - 0.5 * std::polar(r, theta));
      if (r < 1.0) oracle_variation += std::abs(a - prev);
      prev = a;
    }
    CHECK(mob.winding == doctest::Approx(oracle_variation).epsilon(1e-9));
  }
  auto twisted = qc::twist_free_depth(qc::UnivalentEndMap::twisted(1.0), 0.0);
  CHECK(twisted.r0 > 0.25);
  CHECK(twisted.r0 < 0.5);
  CHECK(twisted.winding < 2 * kPi);
  CHECK(qc::twist_free_depth(qc::UnivalentEndMap::twisted(0.5), 0.0).r0 == 1.0);

  CHECK(qc::net_winding(qc::UnivalentEndMap::twisted(1.0), 0.0) == doctest::Approx(2 * kPi));
  CHECK(qc::net_winding(qc::UnivalentEndMap::twisted(-2.0), 0.7) == doctest::Approx(-4 * kPi));
  CHECK(std::abs(qc::net_winding(qc::UnivalentEndMap::mobius(0.5), 0.0)) < 1e-12);
  CHECK_THROWS_AS(qc::twist_free_depth(qc::UnivalentEndMap::identity(), 0.0, 1.0), InvalidInput);
  // a map that spins a full turn between adjacent samples
  qc::UnivalentEndMap spin([](Complex z) { return std::polar(1.0, 1e3 * std::log(std::abs(z) + 1e-300)) * z; }, 1.0);
  CHECK_THROWS_AS(qc::twist_free_depth(spin, 0.0), ResolutionLimited);
}

TEST_CASE("bump profiles") {
  for (auto profile : {qc::BumpProfile::kReciprocal, qc::BumpProfile::kLogRadial}) {
    CHECK(qc::bump(0.1, 0.1, profile) == 0.0);
    CHECK(qc::bump(0.1, Complex(0, 0.05), profile) == 0.0);
    CHECK(qc::bump(0.1, 0.2, profile) == 1.0);
    CHECK(qc::bump(0.1, Complex(-0.3, 0.1), profile) == 1.0);
    double prev = 0;
    for (double rho = 0.1; rho <= 0.2; rho += 0.001) {
      const double v = qc::bump(0.1, rho, profile);
      CHECK(v >= prev);
      prev = v;
    }
  }
  CHECK(qc::bump(0.1, 0.1 * std::sqrt(2.0), qc::BumpProfile::kLogRadial) == doctest::Approx(0.5));
  CHECK(qc::bump(0.1, 0.4 / 3.0, qc::BumpProfile::kReciprocal) == doctest::Approx(0.5));
  CHECK_THROWS_AS(qc::bump(0, 0.1), InvalidInput);
}

TEST_CASE("end-map interpolation") {
  auto dil = qc::interpolate_end_map(qc::UnivalentEndMap::dilation(2), 0.1, 61);
  CHECK(dil.sup_mu == 0.0);
  CHECK(dil.K == 1.0);
  CHECK(dil.exact_inside);
  CHECK(dil.exact_outside);

  const auto g = qc::UnivalentEndMap::mobius(0.5);
  double prev = 1.0;
  for (double r : {0.2, 0.1, 0.05, 0.025}) {
    auto it = qc::interpolate_end_map(g, r);
    CHECK(it.exact_inside);
    CHECK(it.exact_outside);
    CHECK(it.sup_mu <= prev);
    CHECK(it.field.max_disagreement < 0.01 * it.sup_mu);
    CHECK(it.K == doctest::Approx((1 + it.sup_mu) / (1 - it.sup_mu)));
    for (const auto& z : it.field.nodes) {
      CHECK(std::abs(z) >= r - 2 * it.map.spacing);
      CHECK(std::abs(z) <= 2 * r + 2 * it.map.spacing);
    }
    prev = it.sup_mu;
  }
  CHECK(prev < 0.02);
  CHECK(qc::interpolate_end_map(g, 0.05).sup_mu < qc::interpolate_end_map(g, 0.2).sup_mu);
  // the log-radial profile has a steeper ramp in the cylinder coordinate
  CHECK(qc::interpolate_end_map(g, 0.05, 201, qc::BumpProfile::kLogRadial).sup_mu >
        qc::interpolate_end_map(g, 0.05).sup_mu);

  CHECK_THROWS_AS(qc::interpolate_end_map(g, 0.5), InvalidInput);
  CHECK_THROWS_AS(qc::interpolate_end_map(g, 0.0), InvalidInput);
  // a full turn squeezed into the collar folds the map over
  qc::UnivalentEndMap wild([](Complex z) { return std::polar(1.0, 40.0 * std::abs(z)) * z; }, 1.0);
  CHECK_THROWS_AS(qc::interpolate_end_map(wild, 0.2, 101), OrientationFailure);
}
