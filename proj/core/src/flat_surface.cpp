#include "teichdisk/flat_surface.hpp"

#include "teichdisk/errors.hpp"
#include "teichdisk/qc.hpp"

#include <cmath>
#include <numeric>

namespace teichdisk::flat {
namespace {

Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

int orientation(const Vec2& p, const Vec2& q, const Vec2& r) {
  return cross(q - p, r - p).sign();
}

bool on_segment(const Vec2& p, const Vec2& q, const Vec2& r) {
  // r collinear with p, q; is it within the bounding box?
  auto within = [](const Scalar& a, const Scalar& b, const Scalar& v) {
    return (a <= v && v <= b) || (b <= v && v <= a);
  };
  return within(p.x, q.x, r.x) && within(p.y, q.y, r.y);
}

bool segments_meet(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  int o1 = orientation(p1, p2, q1);
  int o2 = orientation(p1, p2, q2);
  int o3 = orientation(q1, q2, p1);
  int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

PlanarPolygonSurface::PlanarPolygonSurface(std::vector<Vec2> edges,
                                           std::vector<std::size_t> pairing,
                                           std::vector<PairingKind> kinds)
    : edges_(std::move(edges)), pairing_(std::move(pairing)), kinds_(std::move(kinds)) {
  const std::size_t n = edges_.size();
  if (n < 2 || n % 2 != 0) throw InvalidInput("polygon needs an even number (>= 2) of edges");
  if (pairing_.size() != n || kinds_.size() != n) {
    throw InvalidInput("pairing and kind lists must match the edge count");
  }
  Vec2 sum{0, 0};
  for (const auto& e : edges_) {
    if (e.x.sign() == 0 && e.y.sign() == 0) throw InvalidInput("zero-length edge");
    sum = sum + e;
  }
  if (sum.x.sign() != 0 || sum.y.sign() != 0) {
    throw InvalidInput("edge vectors do not close up (sum = (" + sum.x.to_string() + ", " +
                       sum.y.to_string() + "))");
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = pairing_[i];
    if (j >= n) throw InvalidInput("pairing index out of range");
    if (j == i) throw InvalidInput("pairing has a fixed point at edge " + std::to_string(i));
    if (pairing_[j] != i) throw InvalidInput("pairing is not an involution");
    if (kinds_[i] != kinds_[j]) throw InvalidInput("paired edges disagree on pairing kind");
    bool ok = kinds_[i] == PairingKind::kTranslation ? edges_[j] == -edges_[i]
                                                     : edges_[j] == edges_[i];
    if (!ok) {
      throw InvalidInput("edges " + std::to_string(i) + " and " + std::to_string(j) +
                         " are not related by their pairing kind");
    }
  }
}

std::vector<Vec2> PlanarPolygonSurface::vertices() const {
  std::vector<Vec2> out;
  out.reserve(edges_.size());
  Vec2 p{0, 0};
  for (const auto& e : edges_) {
    out.push_back(p);
    p = p + e;
  }
  return out;
}

PlanarPolygonSurface unit_square_torus() { return parallelogram_torus({1, 0}, {0, 1}); }

PlanarPolygonSurface parallelogram_torus(const Vec2& u, const Vec2& v) {
  using enum PairingKind;
  return PlanarPolygonSurface({u, v, -u, -v}, {2, 3, 0, 1},
                              {kTranslation, kTranslation, kTranslation, kTranslation});
}

PlanarPolygonSurface apply_matrix(const PlanarPolygonSurface& f, const Mat2& a) {
  if (a.det().sign() <= 0) {
    throw InvalidInput("matrix must be orientation-preserving (det = " + a.det().to_string() + ")");
  }
  std::vector<Vec2> edges;
  edges.reserve(f.size());
  for (const auto& e : f.edges()) edges.push_back(a * e);
  return PlanarPolygonSurface(std::move(edges), f.pairing(), f.kinds());
}

PlanarPolygonSurface shear(const PlanarPolygonSurface& f, const Scalar& t) {
  return apply_matrix(f, Mat2::shear(t));
}

PlanarPolygonSurface stretch(const PlanarPolygonSurface& f, const Scalar& s) {
  if (s.sign() <= 0) throw InvalidInput("stretch factor must be positive");
  return apply_matrix(f, Mat2::stretch(s));
}

double affine_dilatation(const Mat2& m) {
  const double a = m.a.to_double();
  const double b = m.b.to_double();
  const double c = m.c.to_double();
  const double d = m.d.to_double();
  const double det = a * d - b * c;
  if (!(det > 0)) throw InvalidInput("affine dilatation needs det > 0");
  // p = |A|_F^2 / (2 det) and p - 1 = ((a-d)^2 + (b+c)^2) / (2 det)
  const double pm1 = ((a - d) * (a - d) + (b + c) * (b + c)) / (2.0 * det);
  const double p = 1.0 + pm1;
  return p + std::sqrt(pm1 * (p + 1.0));
}

bool is_simple(const PlanarPolygonSurface& f) {
  const auto vs = f.vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p1 = vs[i];
    const Vec2& p2 = vs[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec2& q1 = vs[j];
      const Vec2& q2 = vs[(j + 1) % n];
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // consecutive edges may only share their common vertex
        const Vec2& ei = f.edges()[i];
        const Vec2& ej = f.edges()[j];
        if (cross(ei, ej).sign() == 0 && dot(ei, ej).sign() < 0) return false;
        if (n == 2) return false;
        continue;
      }
      if (segments_meet(p1, p2, q1, q2)) return false;
    }
  }
  return true;
}

Scalar euclidean_area(const PlanarPolygonSurface& f) {
  if (!is_simple(f)) throw InvalidInput("polygon is self-intersecting");
  const auto vs = f.vertices();
  Scalar twice{0};
  for (std::size_t i = 0; i < vs.size(); ++i) twice += cross(vs[i], vs[(i + 1) % vs.size()]);
  Scalar area = abs(twice) / Scalar(2);
  if (area.sign() == 0) throw InvalidInput("polygon has zero area");
  return area;
}

int genus(const PlanarPolygonSurface& f) {
  const std::size_t n = f.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto unite = [&](std::size_t a, std::size_t b) { parent[find_root(parent, a)] = find_root(parent, b); };
  // Both kinds of gluing reverse the boundary direction: the start of edge i
  // lands on the end of edge j and vice versa.
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = f.pairing()[i];
    unite(i, (j + 1) % n);
    unite((i + 1) % n, j);
  }
  std::size_t vertex_classes = 0;
  for (std::size_t i = 0; i < n; ++i) vertex_classes += find_root(parent, i) == i ? 1 : 0;
  const long chi = static_cast<long>(vertex_classes) - static_cast<long>(n / 2) + 1;
  return static_cast<int>((2 - chi) / 2);
}

TorusPoint::TorusPoint(std::complex<double> t) : tau(t) {
  if (!(t.imag() > 0)) throw InvalidInput("torus parameter needs Im(tau) > 0");
}

TorusPoint torus_tau(const PlanarPolygonSurface& f) {
  const auto& e = f.edges();
  bool parallelogram = f.size() == 4 && f.pairing() == std::vector<std::size_t>{2, 3, 0, 1};
  for (auto k : f.kinds()) parallelogram = parallelogram && k == PairingKind::kTranslation;
  if (!parallelogram) {
    throw InvalidInput("torus_tau expects a translation-paired parallelogram");
  }
  const std::complex<double> u(e[0].x.to_double(), e[0].y.to_double());
  std::complex<double> v(e[1].x.to_double(), e[1].y.to_double());
  if (cross(e[0], e[1]).sign() == 0) throw InvalidInput("degenerate lattice: collinear generators");
  std::complex<double> tau = v / u;
  if (tau.imag() < 0) tau = -tau;
  return TorusPoint(tau);
}

double torus_teich_distance(const TorusPoint& a, const TorusPoint& b) {
  return 0.5 * qc::hyperbolic_distance(a.tau, b.tau);
}

}  // namespace teichdisk::flat
