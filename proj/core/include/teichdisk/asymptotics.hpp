#pragma once

// The cut-and-glue comparison between a grafted surface and the flat
// surface with matching ends, reduced to its cylinder-supported factors, and
// the exact torus analog.

#include "teichdisk/qc.hpp"

#include <array>
#include <complex>
#include <vector>

namespace teichdisk::asymptotics {

using Complex = std::complex<double>;

struct Theorem1Certificate {
  double L0;  // twist-free depth in cylinder units, deeper of the two ends
  double r;   // interpolation radius in chart units
  std::array<double, 2> e;
  int N;
  double H;
  double K_collar;
  double K_dehn;  // per-twist factor raised to |N|
  double K_stretch;
  double K_total;
  double bound;  // ln(K_total) / 2
};

struct PipelineOptions {
  std::size_t grid = 201;
  std::size_t samples = 24;  // height samples for H, ratio 2
  double ratio = 0.99;       // radial sample ratio for winding
};

/// Evaluates the construction at z (Im z = 2s: the cut sits at depth s in
/// each end of circumference l).  Collar radius r is the largest dyadic
/// radius below half the smaller twist-free radius whose interpolant has
/// K <= 1 + eps.  The Dehn correction uses the central cylinder between the
/// two collars, of height 2(s - l/(2 pi) ln(1/r)).
Theorem1Certificate theorem1_pipeline(const qc::UnivalentEndMap& g1, const qc::UnivalentEndMap& g2, double l,
                                      double eps, Complex z, const PipelineOptions& opt = {});

/// Nearest integer to the combined net winding of both end maps along the
/// ray theta = 0, in full turns.  Throws ResolutionLimited when the winding
/// sits within 0.1 of a half turn.
int dehn_twist_power(const qc::UnivalentEndMap& g1, const qc::UnivalentEndMap& g2, double ratio = 0.99);

struct TorusRow {
  double s;
  double closed_form;  // ln((s + 1) / s) / 2
  double measured;     // torus distance between earthquake and disk points
};

std::vector<TorusRow> torus_asymptotics(const std::vector<double>& s_values, double t = 0.0);

}  // namespace teichdisk::asymptotics
