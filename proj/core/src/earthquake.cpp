#include "teichdisk/earthquake.hpp"

#include "teichdisk/errors.hpp"

#include <cmath>
#include <limits>

namespace teichdisk::quake {
namespace {

void require_off_axis(Complex z) {
  if (!(z.imag() > 0.0)) throw InvalidInput("local model needs Im z > 0");
  if (z.real() == 0.0) throw InvalidInput("point lies on the cut locus Re z = 0");
}

}  // namespace

CyclicCover::CyclicCover(double length) : l(length) {
  if (!(length > 0.0)) throw InvalidInput("translation length must be positive");
}

Complex twist_map_local(Complex z, double t) {
  require_off_axis(z);
  return z.real() < 0.0 ? std::exp(t) * z : z;
}

Complex graft_map_local(Complex z, double s) {
  require_off_axis(z);
  return z.real() < 0.0 ? std::polar(1.0, s) * z : z;
}

CylinderDims sector_quotient_cylinder(double l, double s) {
  if (!(l > 0.0)) throw InvalidInput("translation length must be positive");
  if (!(s >= 0.0)) throw InvalidInput("graft angle must be non-negative");
  // w = log z: |dz|/|z| = |dw|, the sector is {Im w in [pi/2, pi/2 + s]}
  // and z -> e^l z is w -> w + l.
  return {l, s};
}

double thurston_log_density(Complex z) { return -std::log(std::abs(z)); }

std::vector<double> curvature_on_grid(const LogPolarGrid& g, const LogDensity& phi) {
  if (!(g.r_inner > 0.0)) throw InvalidInput("grid must stay away from the origin");
  if (!(g.r_outer > g.r_inner) || !(g.theta_max > g.theta_min)) throw InvalidInput("empty grid");
  if (g.n_rho < 2 || g.n_theta < 2) throw InvalidInput("grid needs at least 2 nodes per side");
  const double rho0 = std::log(g.r_inner);
  const double d_rho = (std::log(g.r_outer) - rho0) / static_cast<double>(g.n_rho - 1);
  const double d_theta = (g.theta_max - g.theta_min) / static_cast<double>(g.n_theta - 1);
  auto at = [&](double rho, double theta) { return phi(std::exp(Complex(rho, theta))); };

  std::vector<double> out;
  out.reserve(g.n_rho * g.n_theta);
  for (std::size_t j = 0; j < g.n_theta; ++j) {
    const double theta = g.theta_min + d_theta * static_cast<double>(j);
    for (std::size_t i = 0; i < g.n_rho; ++i) {
      const double rho = rho0 + d_rho * static_cast<double>(i);
      const double center = at(rho, theta);
      const double f_rr = (at(rho + d_rho, theta) - 2.0 * center + at(rho - d_rho, theta)) / (d_rho * d_rho);
      const double f_tt =
          (at(rho, theta + d_theta) - 2.0 * center + at(rho, theta - d_theta)) / (d_theta * d_theta);
      // Lap_z = e^{-2 rho} Lap_(rho, theta)
      out.push_back(-std::exp(-2.0 * center - 2.0 * rho) * (f_rr + f_tt));
    }
  }
  return out;
}

double thurston_flatness_check(const LogPolarGrid& grid) {
  double worst = 0.0;
  for (double k : curvature_on_grid(grid, thurston_log_density)) worst = std::max(worst, std::abs(k));
  return worst;
}

EarthquakeSurfaceModel earthquake_base(std::string label, double geodesic_length) {
  if (!(geodesic_length > 0.0)) throw InvalidInput("geodesic length must be positive");
  return {std::move(label), geodesic_length, 0.0, 0.0, false};
}

EarthquakeSurfaceModel earthquake_twist(const EarthquakeSurfaceModel& m, double t) {
  if (m.limit) throw InvalidInput("the limit model has no finite cylinder to twist");
  EarthquakeSurfaceModel out = m;
  out.twist += t;
  return out;
}

EarthquakeSurfaceModel earthquake_graft(const EarthquakeSurfaceModel& m, double s) {
  if (!(s >= 0.0)) throw InvalidInput("graft amount must be non-negative");
  if (std::isinf(s)) return x_infinity(m);
  if (m.limit) return m;
  EarthquakeSurfaceModel out = m;
  out.height += s;
  return out;
}

EarthquakeSurfaceModel earthquake_point(const EarthquakeSurfaceModel& base, Complex z) {
  if (base.limit || base.height != 0.0) throw InvalidInput("earthquake base must be ungrafted");
  if (!(z.imag() >= 0.0)) throw InvalidInput("earthquake parameter needs Im z >= 0");
  if (std::isinf(z.imag())) return x_infinity(base);
  return earthquake_graft(earthquake_twist(base, z.real()), z.imag());
}

EarthquakeSurfaceModel x_infinity(const EarthquakeSurfaceModel& base) {
  return {base.hyperbolic_part, base.circumference, std::numeric_limits<double>::infinity(), 0.0, true};
}

flat::TorusPoint torus_earthquake(const flat::TorusPoint& tau0, Complex z) {
  if (!(z.imag() >= 0.0)) throw InvalidInput("earthquake parameter needs Im z >= 0");
  return flat::TorusPoint(tau0.tau + z);
}

}  // namespace teichdisk::quake
