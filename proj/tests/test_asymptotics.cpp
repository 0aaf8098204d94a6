#include "teichdisk/asymptotics.hpp"
#include "teichdisk/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace teichdisk;
using asymptotics::Complex;
using qc::UnivalentEndMap;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Dehn-twist power from end-map winding") {
  CHECK(asymptotics::dehn_twist_power(UnivalentEndMap::identity(), UnivalentEndMap::identity()) == 0);
  CHECK(asymptotics::dehn_twist_power(UnivalentEndMap::mobius(0.5), UnivalentEndMap::mobius(-0.7)) == 0);
  CHECK(asymptotics::dehn_twist_power(UnivalentEndMap::twisted(1), UnivalentEndMap::identity()) == 1);
  CHECK(asymptotics::dehn_twist_power(UnivalentEndMap::twisted(1), UnivalentEndMap::twisted(-3)) == -2);
  for (double ratio : {0.99, 0.995, 0.98}) {
    CHECK(asymptotics::dehn_twist_power(UnivalentEndMap::twisted(2), UnivalentEndMap::mobius(0.5), ratio) == 2);
  }
  CHECK_THROWS_AS(asymptotics::dehn_twist_power(UnivalentEndMap::twisted(0.5), UnivalentEndMap::identity()),
                  ResolutionLimited);
}

TEST_CASE("pipeline with identity end maps") {
  for (double l : {1.0, 2 * kPi}) {
    for (double im : {1.0, 10.0, 1000.0}) {
      auto c = asymptotics::theorem1_pipeline(UnivalentEndMap::identity(), UnivalentEndMap::identity(), l, 0.05,
                                              Complex(0.3, im));
      CHECK(c.e[0] == 0.0);
      CHECK(c.e[1] == 0.0);
      CHECK(c.N == 0);
      CHECK(c.K_total == 1.0);
      CHECK(c.bound == 0.0);
      CHECK(c.H == 0.0);
    }
  }
}

TEST_CASE("pipeline with dilation end maps") {
  const auto g = UnivalentEndMap::dilation(2);
  for (double im : {4.0, 20.0, 200.0}) {
    auto c = asymptotics::theorem1_pipeline(g, g, 2 * kPi, 0.05, Complex(0, im));
    const double s = im / 2;
    CHECK(c.e[0] == doctest::Approx(std::log(2.0)));
    CHECK(c.N == 0);
    CHECK(c.K_collar == 1.0);
    CHECK(c.K_dehn == 1.0);
    CHECK(c.bound == doctest::Approx(0.5 * std::log((2 * s + 2 * std::log(2.0)) / (2 * s))).epsilon(1e-12));
    CHECK(std::isfinite(c.H));
  }
}

TEST_CASE("pipeline with Moebius end maps") {
  const auto g = UnivalentEndMap::mobius(0.5);
  double prev = std::numeric_limits<double>::infinity();
  for (double im : {20.0, 40.0, 80.0, 160.0}) {
    auto c = asymptotics::theorem1_pipeline(g, g, 2 * kPi, 0.05, Complex(0, im));
    CHECK(std::isfinite(c.H));
    CHECK(c.K_collar <= 1.05);
    CHECK(c.K_dehn <= 1.05);
    CHECK(c.K_stretch <= 1.05);
    CHECK(c.N == 0);
    CHECK(c.bound <= prev);
    prev = c.bound;
  }
  // the Dehn-twist power does not depend on eps
  for (double eps : {0.2, 0.05, 0.02}) {
    auto c = asymptotics::theorem1_pipeline(UnivalentEndMap::twisted(1), g, 2 * kPi, eps, Complex(0, 60));
    CHECK(c.N == 1);
    CHECK(c.K_dehn > 1.0);
    CHECK(c.K_dehn == doctest::Approx(qc::dehn_twist_annulus(2 * (30 - std::log(1 / c.r)) / (2 * kPi)).K));
  }
  auto sharp = asymptotics::PipelineOptions{};
  sharp.ratio = 0.995;
  CHECK(asymptotics::theorem1_pipeline(UnivalentEndMap::twisted(1), g, 2 * kPi, 0.05, Complex(0, 60), sharp).N == 1);
}

TEST_CASE("pipeline preconditions") {
  const auto tw = UnivalentEndMap::twisted(1);
  // twist-free depth is ln(1 / r0) > ln 2 for this map
  CHECK_THROWS_AS(asymptotics::theorem1_pipeline(tw, tw, 2 * kPi, 0.05, Complex(0, 1)), InvalidInput);
  CHECK_THROWS_AS(asymptotics::theorem1_pipeline(tw, tw, 2 * kPi, 0.05, Complex(0, 3)), InvalidInput);
  CHECK_THROWS_AS(asymptotics::theorem1_pipeline(tw, tw, 0.0, 0.05, Complex(0, 30)), InvalidInput);
  CHECK_THROWS_AS(asymptotics::theorem1_pipeline(tw, tw, 1.0, 0.0, Complex(0, 30)), InvalidInput);
  CHECK_THROWS_AS(asymptotics::theorem1_pipeline(tw, tw, 1.0, 0.05, Complex(0, -30)), InvalidInput);
  const auto shrink = UnivalentEndMap::dilation(0.01);
  // e = 2 ln 0.01 swallows the whole cut height 2s = 8
  CHECK_THROWS_AS(asymptotics::theorem1_pipeline(shrink, shrink, 2 * kPi, 0.05, Complex(0, 8)), InvalidInput);
}

TEST_CASE("torus asymptotics") {
  auto rows = asymptotics::torus_asymptotics({1, 10, 100, 1e4});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].closed_form == doctest::Approx(0.5 * std::log(2.0)));
  CHECK(std::abs(rows[2].closed_form - 0.004975) < 1e-6);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(std::abs(rows[k].closed_form - rows[k].measured) < 1e-9);
    CHECK(rows[k].closed_form == doctest::Approx(0.5 * std::log((rows[k].s + 1) / rows[k].s)));
    if (k > 0) CHECK(rows[k].measured < rows[k - 1].measured);
  }
  auto shifted = asymptotics::torus_asymptotics({3.0}, 0.7);
  CHECK(std::abs(shifted[0].measured - 0.5 * std::log(4.0 / 3.0)) < 1e-9);
  CHECK(asymptotics::torus_asymptotics({1e12})[0].measured < 1e-11);
  CHECK_THROWS_AS(asymptotics::torus_asymptotics({0.0}), InvalidInput);
}
