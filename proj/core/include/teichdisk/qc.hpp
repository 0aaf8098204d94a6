#pragma once

// Numerical quasiconformal toolkit: Beltrami coefficients of sampled maps,
// the affine Dehn-twist annulus map, end-map interpolation and winding
// depth of conformal end maps.

#include "teichdisk/scalar.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace teichdisk::qc {

using Complex = std::complex<double>;
using MapFn = std::function<Complex(Complex)>;

/// Hyperbolic distance in the upper half-plane, evaluated as
/// 2 asinh(|z1 - z2| / (2 sqrt(y1 y2))) to stay accurate for close points.
double hyperbolic_distance(Complex z1, Complex z2);

/// ln(r_outer / r_inner) / (2 pi).
double annulus_modulus(double r_inner, double r_outer);

/// (1 + |mu|) / (1 - |mu|).
double dilatation_from_mu(double abs_mu);

/// Map sampled on a uniform square grid.  Node (i, j) sits at
/// origin + spacing * (i + j i); samples are row-major in j.  Nodes outside
/// the map's domain are masked out.  When `evaluator` is set it must agree
/// with the samples and may be queried off-grid.
struct GridMap {
  Complex origin;
  double spacing = 0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<Complex> samples;
  std::vector<bool> mask;
  MapFn evaluator;

  Complex node(std::size_t i, std::size_t j) const {
    return origin + spacing * Complex(static_cast<double>(i), static_cast<double>(j));
  }
  std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
};

/// Samples f on an n x n grid covering [lo, hi]^2 (in both coordinates),
/// masking nodes where `in_domain` is false.
GridMap sample_grid(const MapFn& f, double lo, double hi, std::size_t n,
                    const std::function<bool(Complex)>& in_domain = {});

struct BeltramiField {
  double spacing = 0;
  std::vector<Complex> nodes;
  std::vector<Complex> mu;
  /// Nodes whose two difference estimates still disagree by more than the
  /// trust threshold after refinement.
  std::size_t untrusted = 0;
  /// Largest disagreement between the two finest estimates.
  double max_disagreement = 0;
};

/// mu = f_zbar / f_z from central differences.  With an evaluator the
/// derivatives are taken at step h and refined by halving until two
/// successive estimates agree to 1e-6 (at most four halvings); grid-only maps
/// compare steps h and 2h.  Throws OrientationFailure at the first node with
/// |mu| >= 1.  `keep` restricts which nodes enter the field.
BeltramiField beltrami_of_grid(const GridMap& m, const std::function<bool(Complex)>& keep = {});

/// sup of (1 + |mu|) / (1 - |mu|) over the field.
double dilatation_of_field(const BeltramiField& b);
double sup_abs_mu(const BeltramiField& b);

struct AffineTwist {
  Mat2 matrix;
  double K;
};

/// Shear [[1, 1/H], [0, 1]] untwisting one Dehn twist across a
/// circumference-1 cylinder of height H.
AffineTwist dehn_twist_annulus(double height);

/// Least H (bisection to 1e-9, upper end returned) with
/// dehn_twist_annulus(H).K <= 1 + eps.
double min_modulus_for_eps(double eps);

/// Conformal map of the unit disk with g(0) = 0 and g'(0) = c > 0.
class UnivalentEndMap {
 public:
  /// `derivative_at_0` may be any non-zero complex number; the map is
  /// post-rotated so the stored derivative is real and positive.
  UnivalentEndMap(MapFn g, Complex derivative_at_0, double domain_radius = 1.0,
                  std::string family = "custom", double param = 0.0);

  static UnivalentEndMap identity();
  /// z -> c z.
  static UnivalentEndMap dilation(double c);
  /// z -> z / (1 - a z), |a| < 1.
  static UnivalentEndMap mobius(double a);
  /// z -> exp(2 pi i k S(|z|)) z with S the smoothstep ramp from |z| = 1/4 to
  /// |z| = 1/2.  Identity near 0, k full turns near the rim.  Not conformal
  /// on the ramp; it exists to exercise Dehn-twist bookkeeping.
  static UnivalentEndMap twisted(double turns);
  /// Built-in family by name: identity, dilation, mobius, twisted.
  static UnivalentEndMap from_family(const std::string& family, double param);

  Complex operator()(Complex z) const { return g_(z); }
  double derivative_at_0() const { return c_; }
  double domain_radius() const { return radius_; }
  const std::string& family() const { return family_; }
  double param() const { return param_; }
  /// g(z) - c z vanishes identically (the map is a dilation).
  bool is_dilation() const { return family_ == "identity" || family_ == "dilation"; }

 private:
  MapFn g_;
  double c_;
  double radius_;
  std::string family_;
  double param_;
};

struct TwistFreeDepth {
  double r0;
  double L0;  // ln(1 / r0)
  double winding;  // accumulated |d arg| over (0, r0], radians
};

/// Largest sampled radius r0 (geometric samples, ratio 0.99, from the domain
/// radius down to 1e-8) such that the total variation of
/// arg g(r e^{i theta0}) - theta0 over (0, r0] stays below 2 pi.  A step
/// between neighbouring samples larger than pi/2 counts as unresolved and
/// ends the walk.  Throws ResolutionLimited when even the innermost step
/// fails.
TwistFreeDepth twist_free_depth(const UnivalentEndMap& g, double theta0, double ratio = 0.99);

/// Net change of arg g(r e^{i theta0}) from r -> 0 out to the domain rim,
/// unwrapped along the same geometric samples.
double net_winding(const UnivalentEndMap& g, double theta0, double ratio = 0.99);

enum class BumpProfile {
  /// v = 2 - 2r/|z|, smoothstep in v.  Flat in the cylinder coordinate
  /// where the perturbation is largest; the default.
  kReciprocal,
  /// u = ln(|z|/r) / ln 2, smoothstep in u.
  kLogRadial,
};

/// 0 for |z| <= r, 1 for |z| >= 2r, C^1 smoothstep between.
double bump(double r, Complex z, BumpProfile profile = BumpProfile::kReciprocal);

struct Interpolation {
  double r = 0;
  GridMap map;
  BeltramiField field;  // collar nodes r - 2h <= |z| <= 2r + 2h
  double sup_mu = 0;
  double K = 1;
  /// Every node with |z| <= r equals c z and every node with |z| >= 2r
  /// equals g(z), bit for bit.
  bool exact_inside = true;
  bool exact_outside = true;
};

/// f = c z + bump(r, z) (g(z) - c z) sampled on an n x n grid over
/// [-2.5r, 2.5r]^2 clipped to the domain.  Requires 0 < r < 1/2.
Interpolation interpolate_end_map(const UnivalentEndMap& g, double r, std::size_t n = 201,
                                  BumpProfile profile = BumpProfile::kReciprocal);

}  // namespace teichdisk::qc
