#pragma once

// Flat surfaces as planar polygons with side pairings, and the linear
// SL(2,R) action on them.

#include "teichdisk/scalar.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace teichdisk::flat {

enum class PairingKind { kTranslation, kSemiTranslation };

/// Polygon given by its cyclically ordered edge vectors (counter-clockwise),
/// together with an involution pairing the edges.
///
/// Translation-paired edges satisfy v_j = -v_i; semi-translation pairs
/// satisfy v_j = v_i.  The constructor enforces every invariant.
class PlanarPolygonSurface {
 public:
  PlanarPolygonSurface(std::vector<Vec2> edges, std::vector<std::size_t> pairing,
                       std::vector<PairingKind> kinds);

  const std::vector<Vec2>& edges() const { return edges_; }
  const std::vector<std::size_t>& pairing() const { return pairing_; }
  const std::vector<PairingKind>& kinds() const { return kinds_; }
  std::size_t size() const { return edges_.size(); }

  /// Polygon vertices starting at the origin; vertex i is the start of edge i.
  std::vector<Vec2> vertices() const;

  friend bool operator==(const PlanarPolygonSurface&, const PlanarPolygonSurface&) = default;

 private:
  std::vector<Vec2> edges_;
  std::vector<std::size_t> pairing_;
  std::vector<PairingKind> kinds_;
};

/// Unit square with opposite sides translation-paired.
PlanarPolygonSurface unit_square_torus();

/// Parallelogram spanned by u (bottom) and v (left side going up), with
/// opposite sides translation-paired.
PlanarPolygonSurface parallelogram_torus(const Vec2& u, const Vec2& v);

PlanarPolygonSurface apply_matrix(const PlanarPolygonSurface& f, const Mat2& a);
PlanarPolygonSurface shear(const PlanarPolygonSurface& f, const Scalar& t);
PlanarPolygonSurface stretch(const PlanarPolygonSurface& f, const Scalar& s);

/// Ratio of singular values of a, K >= 1.
double affine_dilatation(const Mat2& a);

/// True when no two non-adjacent edges meet and adjacent edges only share
/// their common vertex.
bool is_simple(const PlanarPolygonSurface& f);

/// Shoelace area; rejects self-intersecting polygons.
Scalar euclidean_area(const PlanarPolygonSurface& f);

/// Genus from the Euler characteristic of the glued polygon.
int genus(const PlanarPolygonSurface& f);

struct TorusPoint {
  std::complex<double> tau;

  explicit TorusPoint(std::complex<double> t);
};

/// Lattice parameter tau = v / u of a translation-paired parallelogram whose
/// first edge u is the marked generator and v the following edge.  The sign
/// of v is flipped when needed so that Im(tau) > 0.
TorusPoint torus_tau(const PlanarPolygonSurface& f);

/// Half the hyperbolic distance between the two lattice parameters.
double torus_teich_distance(const TorusPoint& a, const TorusPoint& b);

}  // namespace teichdisk::flat
