#include "teichdisk/plumbing.hpp"

#include "teichdisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace teichdisk::plumbing {
namespace {

const Scalar kTwoPi(2.0 * std::numbers::pi);

bool identical(const js::IntervalExchange& a, const js::IntervalExchange& b) {
  if (a.permutation != b.permutation || a.flips != b.flips || a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a.lengths[k].identical(b.lengths[k])) return false;
  }
  return true;
}

bool identical(const js::JSNormalForm& a, const js::JSNormalForm& b) {
  return a.circumference().identical(b.circumference()) && a.height().identical(b.height()) &&
         a.offset().identical(b.offset()) && a.winding() == b.winding() && identical(a.iet(), b.iet());
}

double collar_dilatation(const PlumbingFixture& fx, double r, std::size_t grid) {
  double K = 1.0;
  for (const auto& chart : fx.charts) {
    if (chart.strebel) continue;
    K = std::max(K, qc::interpolate_end_map(chart.map, r, grid).K);
  }
  return K;
}

double twist_free_radius(const PlumbingFixture& fx) {
  double r0 = 1.0;
  for (const auto& chart : fx.charts) {
    if (chart.strebel) continue;
    r0 = std::min(r0, qc::twist_free_depth(chart.map, 0.0).r0);
  }
  return r0;
}

}  // namespace

PlumbingFixture swap_fixture() {
  const Scalar third = kTwoPi / Scalar(3);
  js::IntervalExchange iet{{third, third, third}, {2, 1, 0}, {false, false, false}};
  return {js::NodedFlatModel{kTwoPi, iet, 8.0}, {EndChart::strebel_chart(), EndChart::strebel_chart()}};
}

double excision_radius(const js::DiskParameter& tau) {
  if (tau.s.sign() <= 0) throw InvalidInput("plumbing parameter needs Im tau > 0");
  // |t| = |e^{i tau}| = e^{-s}; each chart keeps the square root
  return std::sqrt(std::exp(-tau.s.to_double()));
}

js::JSNormalForm plumb(const PlumbingFixture& fx, const js::DiskParameter& tau) {
  if (tau.s.sign() <= 0) throw InvalidInput("plumbing parameter needs Im tau > 0");
  const Scalar half = tau.s / Scalar(2);
  const Scalar height = half + half;  // depth s/2 from each end
  const Scalar arc = tau.t * (fx.model.c / kTwoPi);
  return js::js_build(fx.model.c, height, fx.model.iet, arc);
}

js::JSNormalForm strebel_base(const PlumbingFixture& fx) { return plumb(fx, {Scalar(0), Scalar(1)}); }

js::JSNormalForm plumbing_disk_point(const PlumbingFixture& fx, const js::DiskParameter& tau) {
  return plumb(fx, tau);
}

bool strebel_vs_disk_check(const PlumbingFixture& fx, const js::DiskParameter& z) {
  if (!fx.all_strebel()) {
    throw InvalidInput("exact comparison needs Strebel charts; use the offset comparison instead");
  }
  return identical(plumb(fx, z), js::teich_disk_point(strebel_base(fx), z));
}

double compare_plumbing_offset(const PlumbingFixture& fx) {
  double e = 0.0;
  for (const auto& chart : fx.charts) e += std::log(chart.map.derivative_at_0());
  return e;
}

ComparisonCertificate plumbing_comparison_certificate(const PlumbingFixture& fx, Complex z, double r0,
                                                      std::size_t grid) {
  if (!(r0 > 0.0 && r0 < 1.0)) throw InvalidInput("r0 must lie in (0, 1)");
  const double needed = 2.0 * std::log(2.0 / r0);
  if (!(z.imag() >= needed)) {
    throw InvalidInput("Im z = " + std::to_string(z.imag()) + " is below the collar depth " +
                       std::to_string(needed) + " for r0 = " + std::to_string(r0));
  }
  const double free_r = twist_free_radius(fx);
  if (r0 > free_r) {
    throw InvalidInput("r0 = " + std::to_string(r0) + " exceeds the twist-free radius " + std::to_string(free_r));
  }
  const double r = r0 / 2.0;
  return {collar_dilatation(fx, r, grid), compare_plumbing_offset(fx), r0, r};
}

StretchCorrection vertical_stretch_correction(Complex z, double e) {
  if (!(z.imag() > 0.0)) throw InvalidInput("stretch correction needs Im z > 0");
  if (!(z.imag() + e > 0.0)) throw InvalidInput("Im z + e must be positive");
  const double beta = (z.imag() + e) / z.imag();
  return {beta, std::max(beta, 1.0 / beta)};
}

Theorem2Certificate theorem2_certificate(const PlumbingFixture& fx, double eps, std::size_t grid,
                                         std::size_t samples) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  if (samples < 2) throw InvalidInput("need at least two height samples");
  const double free_r = twist_free_radius(fx);
  double r0 = 0.5;
  while (r0 > free_r) r0 *= 0.5;

  double collar_K = collar_dilatation(fx, r0 / 2.0, grid);
  while (0.5 * std::log(collar_K) > eps) {
    r0 *= 0.5;
    if (r0 < std::ldexp(1.0, -12)) {
      throw ResolutionLimited("collar dilatation stays above the eps budget down to r0 = 2^-12");
    }
    collar_K = collar_dilatation(fx, r0 / 2.0, grid);
  }

  Theorem2Certificate cert;
  cert.r0 = r0;
  cert.e = compare_plumbing_offset(fx);
  const bool collar_active = collar_K != 1.0;
  double im = collar_active ? 2.0 * std::log(2.0 / r0) : 0.25;
  for (std::size_t k = 0; k < samples; ++k, im *= 2.0) {
    double stretch_K = std::numeric_limits<double>::infinity();
    if (im + cert.e > 0.0) stretch_K = vertical_stretch_correction({0.0, im}, cert.e).K;
    cert.rows.push_back({im, collar_K, stretch_K, 0.5 * std::log(collar_K) + 0.5 * std::log(stretch_K)});
  }

  std::size_t first = cert.rows.size();
  while (first > 0 && cert.rows[first - 1].total_bound < 2.0 * eps) --first;
  if (first == cert.rows.size()) {
    throw ResolutionLimited("bound does not fall below 2 eps on the sampled heights");
  }
  if (!collar_active && cert.e == 0.0) {
    cert.H = 0.0;  // P coincides with the Strebel disk
  } else {
    cert.H = cert.rows[first].im_z;
  }
  return cert;
}

}  // namespace teichdisk::plumbing
