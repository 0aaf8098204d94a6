#include "teichdisk/asymptotics.hpp"

#include "teichdisk/earthquake.hpp"
#include "teichdisk/errors.hpp"
#include "teichdisk/flat_surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace teichdisk::asymptotics {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Factors {
  double dehn = kInf;
  double stretch = kInf;
};

}  // namespace

int dehn_twist_power(const qc::UnivalentEndMap& g1, const qc::UnivalentEndMap& g2, double ratio) {
  const double turns = (qc::net_winding(g1, 0.0, ratio) + qc::net_winding(g2, 0.0, ratio)) /
                       (2.0 * std::numbers::pi);
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) >= 0.4) {
    throw ResolutionLimited("end maps wind " + std::to_string(turns) +
                            " turns, too close to a half turn to pick a Dehn-twist power");
  }
  return static_cast<int>(nearest);
}

Theorem1Certificate theorem1_pipeline(const qc::UnivalentEndMap& g1, const qc::UnivalentEndMap& g2, double l,
                                      double eps, Complex z, const PipelineOptions& opt) {
  if (!(l > 0.0)) throw InvalidInput("geodesic length must be positive");
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  if (!(z.imag() > 0.0)) throw InvalidInput("disk parameter needs Im z > 0");
  const double kappa = l / (2.0 * std::numbers::pi);

  const auto free1 = qc::twist_free_depth(g1, 0.0, opt.ratio);
  const auto free2 = qc::twist_free_depth(g2, 0.0, opt.ratio);
  Theorem1Certificate cert{};
  cert.L0 = kappa * std::max(free1.L0, free2.L0);

  const double r_cap = 0.5 * std::min(free1.r0, free2.r0);
  double r = 0.25;
  while (r > r_cap) r *= 0.5;
  auto collar = [&](double radius) {
    return std::max(qc::interpolate_end_map(g1, radius, opt.grid).K, qc::interpolate_end_map(g2, radius, opt.grid).K);
  };
  double K_collar = collar(r);
  while (K_collar > 1.0 + eps) {
    r *= 0.5;
    if (r < std::ldexp(1.0, -14)) {
      throw ResolutionLimited("collar dilatation stays above 1 + eps down to r = 2^-14");
    }
    K_collar = collar(r);
  }
  cert.r = r;
  cert.K_collar = K_collar;
  const bool collar_active = K_collar != 1.0;
  const double depth = collar_active ? kappa * std::log(1.0 / r) : 0.0;

  cert.N = dehn_twist_power(g1, g2, opt.ratio);
  cert.e = {kappa * std::log(g1.derivative_at_0()), kappa * std::log(g2.derivative_at_0())};
  const double e = cert.e[0] + cert.e[1];

  auto factors = [&](double s) {
    Factors f;
    const double central = 2.0 * (s - depth);
    if (cert.N == 0) {
      f.dehn = 1.0;
    } else if (central > 0.0) {
      f.dehn = std::pow(qc::dehn_twist_annulus(central / l).K, std::abs(cert.N));
    }
    const double beta = (2.0 * s + e) / (2.0 * s);
    if (beta > 0.0) f.stretch = std::max(beta, 1.0 / beta);
    return f;
  };

  const double s = z.imag() / 2.0;
  if (s < cert.L0) {
    throw InvalidInput("cut depth Im z / 2 = " + std::to_string(s) + " is shallower than the twist-free depth " +
                       std::to_string(cert.L0));
  }
  if (s < depth || (cert.N != 0 && s == depth)) {
    throw InvalidInput("cut depth Im z / 2 = " + std::to_string(s) + " does not clear the collar at depth " +
                       std::to_string(depth));
  }
  const Factors here = factors(s);
  if (!std::isfinite(here.stretch)) throw InvalidInput("offset e exceeds the cut height");
  cert.K_dehn = here.dehn;
  cert.K_stretch = here.stretch;
  cert.K_total = K_collar * here.dehn * here.stretch;
  cert.bound = 0.5 * std::log(cert.K_total);

  if (!collar_active && e == 0.0 && cert.N == 0) {
    cert.H = 0.0;  // the two models coincide
    return cert;
  }
  std::vector<double> heights;
  std::vector<double> bounds;
  double im = collar_active ? 2.0 * depth : 0.25;
  for (std::size_t k = 0; k < opt.samples; ++k, im *= 2.0) {
    const Factors f = factors(im / 2.0);
    heights.push_back(im);
    bounds.push_back(0.5 * std::log(K_collar * f.dehn * f.stretch));
  }
  std::size_t first = bounds.size();
  while (first > 0 && bounds[first - 1] < eps) --first;
  if (first == bounds.size()) throw ResolutionLimited("bound does not fall below eps on the sampled heights");
  cert.H = heights[first];
  return cert;
}

std::vector<TorusRow> torus_asymptotics(const std::vector<double>& s_values, double t) {
  std::vector<TorusRow> rows;
  rows.reserve(s_values.size());
  const flat::TorusPoint base(Complex(0.0, 1.0));
  for (double s : s_values) {
    if (!(s > 0.0)) throw InvalidInput("torus sweep needs s > 0");
    const Complex z(t, s);
    const auto quake_point = quake::torus_earthquake(base, z);
    const double measured = flat::torus_teich_distance(quake_point, flat::TorusPoint(z));
    rows.push_back({s, 0.5 * std::log1p(1.0 / s), measured});
  }
  return rows;
}

}  // namespace teichdisk::asymptotics
