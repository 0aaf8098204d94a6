#include "teichdisk/qc.hpp"

#include "teichdisk/errors.hpp"
#include "teichdisk/flat_surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace teichdisk::qc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTrust = 1e-6;
constexpr double kMaxStep = std::numbers::pi / 2;

double smoothstep(double u) {
  u = std::clamp(u, 0.0, 1.0);
  return u * u * (3.0 - 2.0 * u);
}

Complex mu_from_partials(Complex fx, Complex fy, Complex at) {
  const Complex i(0.0, 1.0);
  const Complex fz = 0.5 * (fx - i * fy);
  const Complex fzb = 0.5 * (fx + i * fy);
  if (std::abs(fz) == 0.0) {
    throw OrientationFailure(at.real(), at.imag(), std::numeric_limits<double>::infinity());
  }
  return fzb / fz;
}

Complex mu_by_evaluator(const MapFn& f, Complex z, double k) {
  const Complex ik(0.0, k);
  Complex fx = (f(z + k) - f(z - k)) / (2.0 * k);
  Complex fy = (f(z + ik) - f(z - ik)) / (2.0 * k);
  return mu_from_partials(fx, fy, z);
}

void check_orientation(Complex mu, Complex at) {
  if (!(std::abs(mu) < 1.0)) throw OrientationFailure(at.real(), at.imag(), std::abs(mu));
}

double wrap_angle(double a) {
  a = std::remainder(a, kTwoPi);
  return a;
}

// Arguments of g along the ray at angle theta0, outermost sample first.
std::vector<double> ray_arguments(const UnivalentEndMap& g, double theta0, double ratio,
                                  std::vector<double>* radii) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw InvalidInput("radial sample ratio must lie in (0, 1)");
  std::vector<double> args;
  const Complex dir = std::polar(1.0, theta0);
  for (double r = g.domain_radius(); r >= 1e-8; r *= ratio) {
    Complex w = g(r * dir);
    if (w == Complex(0.0, 0.0) || !std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw InvalidInput("end map vanishes or blows up on the marked ray at r = " + std::to_string(r));
    }
    args.push_back(std::arg(w) - theta0);
    if (radii) radii->push_back(r);
  }
  if (args.size() < 2) throw InvalidInput("domain radius too small to sample the marked ray");
  return args;
}

}  // namespace

double hyperbolic_distance(Complex z1, Complex z2) {
  if (!(z1.imag() > 0.0) || !(z2.imag() > 0.0)) {
    throw InvalidInput("hyperbolic distance needs points in the upper half-plane");
  }
  return 2.0 * std::asinh(std::abs(z1 - z2) / (2.0 * std::sqrt(z1.imag() * z2.imag())));
}

double annulus_modulus(double r_inner, double r_outer) {
  if (!(r_inner > 0.0) || !(r_outer > r_inner)) throw InvalidInput("annulus needs 0 < r_inner < r_outer");
  return std::log(r_outer / r_inner) / kTwoPi;
}

double dilatation_from_mu(double abs_mu) {
  if (!(abs_mu >= 0.0 && abs_mu < 1.0)) throw InvalidInput("|mu| must lie in [0, 1)");
  return (1.0 + abs_mu) / (1.0 - abs_mu);
}

GridMap sample_grid(const MapFn& f, double lo, double hi, std::size_t n,
                    const std::function<bool(Complex)>& in_domain) {
  if (n < 3) throw InvalidInput("grid needs at least 3 nodes per side");
  if (!(hi > lo)) throw InvalidInput("grid bounds must satisfy lo < hi");
  GridMap m;
  m.origin = Complex(lo, lo);
  m.spacing = (hi - lo) / static_cast<double>(n - 1);
  m.nx = n;
  m.ny = n;
  m.samples.assign(n * n, Complex(0.0, 0.0));
  m.mask.assign(n * n, false);
  m.evaluator = f;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex z = m.node(i, j);
      if (in_domain && !in_domain(z)) continue;
      m.samples[m.index(i, j)] = f(z);
      m.mask[m.index(i, j)] = true;
    }
  }
  return m;
}

BeltramiField beltrami_of_grid(const GridMap& m, const std::function<bool(Complex)>& keep) {
  if (m.nx < 3 || m.ny < 3 || !(m.spacing > 0.0)) throw InvalidInput("grid map is too small");
  if (m.samples.size() != m.nx * m.ny || m.mask.size() != m.nx * m.ny) {
    throw InvalidInput("grid map sample count does not match its dimensions");
  }
  BeltramiField out;
  out.spacing = m.spacing;
  const double h = m.spacing;
  const std::size_t reach = m.evaluator ? 1 : 2;
  auto live = [&](std::size_t i, std::size_t j) { return m.mask[m.index(i, j)]; };

  for (std::size_t j = reach; j + reach < m.ny; ++j) {
    for (std::size_t i = reach; i + reach < m.nx; ++i) {
      const Complex z = m.node(i, j);
      if (keep && !keep(z)) continue;
      bool usable = live(i, j);
      for (std::size_t d = 1; d <= reach && usable; ++d) {
        usable = live(i - d, j) && live(i + d, j) && live(i, j - d) && live(i, j + d);
      }
      if (!usable) continue;

      Complex mu;
      double disagreement = 0.0;
      if (m.evaluator) {
        Complex prev = mu_by_evaluator(m.evaluator, z, h);
        check_orientation(prev, z);
        mu = prev;
        disagreement = std::numeric_limits<double>::infinity();
        double k = h;
        for (int level = 0; level < 4 && disagreement >= kTrust; ++level) {
          k *= 0.5;
          mu = mu_by_evaluator(m.evaluator, z, k);
          check_orientation(mu, z);
          disagreement = std::abs(mu - prev);
          prev = mu;
        }
      } else {
        auto at = [&](std::size_t a, std::size_t b) { return m.samples[m.index(a, b)]; };
        Complex fx1 = (at(i + 1, j) - at(i - 1, j)) / (2.0 * h);
        Complex fy1 = (at(i, j + 1) - at(i, j - 1)) / (2.0 * h);
        Complex fx2 = (at(i + 2, j) - at(i - 2, j)) / (4.0 * h);
        Complex fy2 = (at(i, j + 2) - at(i, j - 2)) / (4.0 * h);
        mu = mu_from_partials(fx1, fy1, z);
        check_orientation(mu, z);
        Complex coarse = mu_from_partials(fx2, fy2, z);
        disagreement = std::abs(mu - coarse);
      }
      if (disagreement >= kTrust) ++out.untrusted;
      out.max_disagreement = std::max(out.max_disagreement, disagreement);
      out.nodes.push_back(z);
      out.mu.push_back(mu);
    }
  }
  return out;
}

double sup_abs_mu(const BeltramiField& b) {
  if (b.mu.empty()) throw InvalidInput("empty Beltrami field");
  double sup = 0.0;
  for (const auto& mu : b.mu) sup = std::max(sup, std::abs(mu));
  return sup;
}

double dilatation_of_field(const BeltramiField& b) { return dilatation_from_mu(sup_abs_mu(b)); }

AffineTwist dehn_twist_annulus(double height) {
  if (!(height > 0.0)) throw InvalidInput("annulus height must be positive");
  Mat2 m{1, Scalar(1.0 / height), 0, 1};
  return {m, flat::affine_dilatation(m)};
}

double min_modulus_for_eps(double eps) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  const double target = 1.0 + eps;
  auto k_of = [](double h) { return dehn_twist_annulus(h).K; };
  double lo = 1.0;
  while (k_of(lo) <= target) {
    lo *= 0.5;
    if (lo < 1e-300) return 0.0;
  }
  double hi = 1.0;
  while (k_of(hi) > target) hi *= 2.0;
  while (hi - lo > 1e-9) {
    double mid = 0.5 * (lo + hi);
    (k_of(mid) > target ? lo : hi) = mid;
  }
  return hi;
}

UnivalentEndMap::UnivalentEndMap(MapFn g, Complex derivative_at_0, double domain_radius,
                                 std::string family, double param)
    : c_(std::abs(derivative_at_0)), radius_(domain_radius), family_(std::move(family)), param_(param) {
  if (!(c_ > 0.0)) throw InvalidInput("end map needs a non-zero derivative at 0");
  if (!(domain_radius > 0.0)) throw InvalidInput("end map domain radius must be positive");
  const Complex rotation = std::conj(derivative_at_0) / c_;
  if (rotation == Complex(1.0, 0.0)) {
    g_ = std::move(g);
  } else {
    g_ = [g = std::move(g), rotation](Complex z) { return rotation * g(z); };
  }
}

UnivalentEndMap UnivalentEndMap::identity() {
  return UnivalentEndMap([](Complex z) { return z; }, 1.0, 1.0, "identity", 0.0);
}

UnivalentEndMap UnivalentEndMap::dilation(double c) {
  if (!(c > 0.0)) throw InvalidInput("dilation factor must be positive");
  return UnivalentEndMap([c](Complex z) { return c * z; }, c, 1.0, "dilation", c);
}

UnivalentEndMap UnivalentEndMap::mobius(double a) {
  if (!(std::abs(a) < 1.0)) throw InvalidInput("Moebius end map needs |a| < 1");
  return UnivalentEndMap([a](Complex z) { return z / (1.0 - a * z); }, 1.0, 1.0, "mobius", a);
}

UnivalentEndMap UnivalentEndMap::twisted(double turns) {
  return UnivalentEndMap(
      [turns](Complex z) {
        const double ramp = smoothstep((std::abs(z) - 0.25) / 0.25);
        return std::polar(1.0, kTwoPi * turns * ramp) * z;
      },
      1.0, 1.0, "twisted", turns);
}

UnivalentEndMap UnivalentEndMap::from_family(const std::string& family, double param) {
  if (family == "identity") return identity();
  if (family == "dilation") return dilation(param);
  if (family == "mobius") return mobius(param);
  if (family == "twisted") return twisted(param);
  throw InvalidInput("unknown end-map family '" + family + "'");
}

TwistFreeDepth twist_free_depth(const UnivalentEndMap& g, double theta0, double ratio) {
  std::vector<double> radii;
  const std::vector<double> args = ray_arguments(g, theta0, ratio, &radii);
  const double limit = kTwoPi * (1.0 - 1e-9);
  // accumulate from the innermost sample outwards
  double variation = 0.0;
  std::size_t best = args.size() - 1;
  double best_variation = 0.0;
  for (std::size_t k = args.size() - 1; k-- > 0;) {
    const double step = std::abs(wrap_angle(args[k] - args[k + 1]));
    // a jump this large between neighbouring samples may hide whole turns
    if (step > kMaxStep) break;
    variation += step;
    if (!(variation < limit)) break;
    best = k;
    best_variation = variation;
  }
  if (best == args.size() - 1) {
    throw ResolutionLimited("radial sampling cannot resolve the winding next to the puncture");
  }
  return {radii[best], std::log(1.0 / radii[best]), best_variation};
}

double net_winding(const UnivalentEndMap& g, double theta0, double ratio) {
  const std::vector<double> args = ray_arguments(g, theta0, ratio, nullptr);
  double total = 0.0;
  for (std::size_t k = args.size() - 1; k-- > 0;) total += wrap_angle(args[k] - args[k + 1]);
  return total;
}

double bump(double r, Complex z, BumpProfile profile) {
  if (!(r > 0.0)) throw InvalidInput("bump radius must be positive");
  const double rho = std::abs(z);
  if (rho <= r) return 0.0;
  if (rho >= 2.0 * r) return 1.0;
  const double u = profile == BumpProfile::kReciprocal ? 2.0 - 2.0 * r / rho
                                                       : std::log(rho / r) / std::numbers::ln2;
  return smoothstep(u);
}

Interpolation interpolate_end_map(const UnivalentEndMap& g, double r, std::size_t n,
                                  BumpProfile profile) {
  if (!(r > 0.0 && r < 0.5)) throw InvalidInput("interpolation radius must lie in (0, 1/2)");
  const double c = g.derivative_at_0();
  const double radius = g.domain_radius();
  MapFn f = [g, c, r, profile](Complex z) -> Complex {
    const double phi = bump(r, z, profile);
    if (phi == 0.0) return c * z;
    if (phi == 1.0) return g(z);
    return c * z + phi * (g(z) - c * z);
  };

  Interpolation out;
  out.r = r;
  out.map = sample_grid(f, -2.5 * r, 2.5 * r, n, [radius](Complex z) { return std::abs(z) < radius; });
  for (std::size_t j = 0; j < out.map.ny; ++j) {
    for (std::size_t i = 0; i < out.map.nx; ++i) {
      const std::size_t k = out.map.index(i, j);
      if (!out.map.mask[k]) continue;
      const Complex z = out.map.node(i, j);
      const double rho = std::abs(z);
      if (rho <= r && out.map.samples[k] != c * z) out.exact_inside = false;
      if (rho >= 2.0 * r && out.map.samples[k] != g(z)) out.exact_outside = false;
    }
  }

  const double h = out.map.spacing;
  auto in_collar = [r, h](Complex z) {
    const double rho = std::abs(z);
    return rho >= r - 2.0 * h && rho <= 2.0 * r + 2.0 * h;
  };
  if (g.is_dilation()) {
    // g - c z vanishes identically, so f = c z and mu = 0 exactly
    out.field.spacing = h;
    for (std::size_t j = 0; j < out.map.ny; ++j) {
      for (std::size_t i = 0; i < out.map.nx; ++i) {
        const Complex z = out.map.node(i, j);
        if (!out.map.mask[out.map.index(i, j)] || !in_collar(z)) continue;
        out.field.nodes.push_back(z);
        out.field.mu.push_back(0.0);
      }
    }
  } else {
    out.field = beltrami_of_grid(out.map, in_collar);
  }
  out.sup_mu = sup_abs_mu(out.field);
  out.K = dilatation_from_mu(out.sup_mu);
  return out;
}

}  // namespace teichdisk::qc
