#pragma once

// Half-plane models of twisting and grafting along the imaginary axis, the
// flat metric |dz|/|z| on grafted sectors, and the cylinder bookkeeping of
// complex earthquakes.

#include "teichdisk/flat_surface.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace teichdisk::quake {

using Complex = std::complex<double>;

struct CyclicCover {
  double l;  // deck map z -> e^l z

  explicit CyclicCover(double length);
  Complex deck(Complex z) const { return std::exp(l) * z; }
};

/// e^t z on Re z < 0, z on Re z > 0.  The axis Re z = 0 is the cut locus.
Complex twist_map_local(Complex z, double t);

/// e^{is} z on Re z < 0, z on Re z > 0; the sector of angle s opens in
/// between.
Complex graft_map_local(Complex z, double s);

struct CylinderDims {
  double circumference;
  double height;
};

/// Quotient of the sector pi/2 <= arg z <= pi/2 + s with metric |dz|/|z| by
/// z -> e^l z.  In the chart w = log z the sector is a strip of height s and
/// the deck map a horizontal translation by l.
CylinderDims sector_quotient_cylinder(double l, double s);

/// Annular grid in log-polar coordinates rho = ln|z|, theta; both ends of
/// each range are nodes.
struct LogPolarGrid {
  double r_inner;
  double r_outer;
  double theta_min;
  double theta_max;
  std::size_t n_rho;
  std::size_t n_theta;
};

/// Log of the conformal density: the metric is e^{2 phi(z)} |dz|^2.
using LogDensity = std::function<double(Complex)>;

/// phi = -ln|z|, the flat metric on grafted sectors.
double thurston_log_density(Complex z);

/// Gaussian curvature -e^{-2 phi} Lap(phi) at every grid node, with the
/// Laplacian from the 5-point stencil in (rho, theta).  Row-major in theta.
std::vector<double> curvature_on_grid(const LogPolarGrid& grid, const LogDensity& phi);

/// max |curvature| of |dz|/|z| over the grid.
double thurston_flatness_check(const LogPolarGrid& grid);

/// Complex-earthquake surface reduced to what the estimates use: the grafted
/// cylinder along gamma.  The hyperbolic complement is an opaque label.
struct EarthquakeSurfaceModel {
  std::string hyperbolic_part;
  double circumference;
  double height;  // +inf for the limit model
  double twist;
  bool limit = false;

  friend bool operator==(const EarthquakeSurfaceModel&, const EarthquakeSurfaceModel&) = default;
};

EarthquakeSurfaceModel earthquake_base(std::string label, double geodesic_length);

EarthquakeSurfaceModel earthquake_twist(const EarthquakeSurfaceModel& m, double t);
EarthquakeSurfaceModel earthquake_graft(const EarthquakeSurfaceModel& m, double s);

/// Graft by Im z after twisting by Re z.  Im z = +inf gives the limit model.
EarthquakeSurfaceModel earthquake_point(const EarthquakeSurfaceModel& base, Complex z);

/// Two half-infinite ends of circumference l glued to the complement.
EarthquakeSurfaceModel x_infinity(const EarthquakeSurfaceModel& base);

/// tau0 + z: the twist slides the top of the fundamental domain, the graft
/// inserts a flat cylinder of height Im z along the unit horizontal curve.
flat::TorusPoint torus_earthquake(const flat::TorusPoint& tau0, Complex z);

}  // namespace teichdisk::quake
