#pragma once

// Plumbing a node of a noded flat surface: excise a disk around each
// puncture, glue the boundary circles by w = t/z, and compare the result
// with the Teichmueller disk of the Strebel model.
//
// End maps are oriented from the Strebel coordinate of an end into the
// chart coordinate.  A chart with derivative c_i at the puncture then sits
// ln c_i deeper than the Strebel cylinder, so P(z) is close to P_0(z + ie)
// with e = ln c_1 + ln c_2.

#include "teichdisk/jenkins_strebel.hpp"
#include "teichdisk/qc.hpp"

#include <array>
#include <complex>
#include <vector>

namespace teichdisk::plumbing {

using Complex = std::complex<double>;

struct EndChart {
  bool strebel = true;
  qc::UnivalentEndMap map = qc::UnivalentEndMap::identity();

  static EndChart strebel_chart() { return {}; }
  static EndChart general(qc::UnivalentEndMap m) { return {false, std::move(m)}; }
};

struct PlumbingFixture {
  js::NodedFlatModel model;
  std::array<EndChart, 2> charts;

  bool all_strebel() const { return charts[0].strebel && charts[1].strebel; }
};

/// c = 2 pi, three intervals with reversed order on top, Strebel charts.
PlumbingFixture swap_fixture();

/// Excise depth s/2 from each end (chart radius e^{-s/2}) and glue with a
/// rotation by angle t: (c, s, iet, t c / (2 pi)), winding tracked.
js::JSNormalForm plumb(const PlumbingFixture& fx, const js::DiskParameter& tau);

/// Chart radius sqrt|e^{i tau}| = e^{-s/2} of each excised disk.
double excision_radius(const js::DiskParameter& tau);

/// The height-1 Strebel surface Y_0 = plumb(fx, i).
js::JSNormalForm strebel_base(const PlumbingFixture& fx);

js::JSNormalForm plumbing_disk_point(const PlumbingFixture& fx, const js::DiskParameter& tau);

/// plumb(fx, z) and teich_disk_point(Y_0, z) agree field by field with no
/// tolerance.
bool strebel_vs_disk_check(const PlumbingFixture& fx, const js::DiskParameter& z);

/// e = ln c_1 + ln c_2.
double compare_plumbing_offset(const PlumbingFixture& fx);

struct ComparisonCertificate {
  double K_bound;
  double e;
  double r0;
  double collar_r;  // interpolation radius, r0 / 2
};

/// Interpolates each chart on the collar r0/2 <= |z| <= r0 and returns the
/// larger measured dilatation.  Requires Im z >= 2 ln(2 / r0) so the collar
/// lies inside the excised disk, and r0 within both twist-free depths.
ComparisonCertificate plumbing_comparison_certificate(const PlumbingFixture& fx, Complex z, double r0,
                                                      std::size_t grid = 201);

struct StretchCorrection {
  double beta;
  double K;
};

/// beta = (Im z + e) / Im z, K = max(beta, 1/beta).
StretchCorrection vertical_stretch_correction(Complex z, double e);

struct CertificateRow {
  double im_z;
  double collar_K;
  double stretch_K;
  double total_bound;  // (ln collar_K + ln stretch_K) / 2
};

struct Theorem2Certificate {
  double H;
  double r0;
  double e;
  std::vector<CertificateRow> rows;
};

/// Picks the largest dyadic r0 whose collar term is at most eps, samples
/// Im z geometrically (ratio 2, `samples` rows) from the validity threshold
/// and returns the least sampled height beyond which every row is < 2 eps.
/// Throws ResolutionLimited when no r0 down to 2^-12 certifies.
Theorem2Certificate theorem2_certificate(const PlumbingFixture& fx, double eps, std::size_t grid = 201,
                                         std::size_t samples = 16);

}  // namespace teichdisk::plumbing
