#pragma once

// Jenkins-Strebel surfaces in normal form: one horizontal cylinder whose top
// boundary is glued to its bottom boundary by an interval exchange.
//
// Coordinates.  The cylinder is the rectangle [0, c] x [0, h] with its
// vertical sides glued.  The bottom circle is cut into the exchange's
// intervals in order, interval k starting at a_k.  On the top circle the
// intervals appear in the order given by `permutation` (permutation[k] is the
// top slot of interval k), interval k starting at b_k before any twist.  With
// total twist T = winding * c + offset, bottom point a_k + u is glued to top
// point (b_k + T + u) mod c (flipped intervals: b_k + T + len_k - u).  The
// marked transversal is the vertical segment over x = 0.

#include "teichdisk/flat_surface.hpp"
#include "teichdisk/scalar.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace teichdisk::js {

struct IntervalExchange {
  std::vector<Scalar> lengths;
  std::vector<std::size_t> permutation;  // 0-based top slot of each interval
  std::vector<bool> flips;

  std::size_t size() const { return lengths.size(); }
  Scalar total_length() const;
  /// Bottom start a_k of each interval.
  std::vector<Scalar> bottom_starts() const;
  /// Top start b_k of each interval at zero twist.
  std::vector<Scalar> top_starts() const;

  /// Throws InvalidInput when lengths are non-positive, the permutation is
  /// not a bijection, or the flip list has the wrong size.
  void validate() const;

  static IntervalExchange trivial(const Scalar& length);
  friend bool operator==(const IntervalExchange&, const IntervalExchange&) = default;
};

class JSNormalForm {
 public:
  Scalar circumference() const { return c_; }
  Scalar height() const { return h_; }
  const IntervalExchange& iet() const { return iet_; }
  Scalar offset() const { return offset_; }
  /// Count of full Dehn twists about the core curve carried by the marking.
  std::int64_t winding() const { return winding_; }
  /// winding * c + offset.
  Scalar total_twist() const { return Scalar(winding_) * c_ + offset_; }

  friend bool operator==(const JSNormalForm&, const JSNormalForm&) = default;

 private:
  friend JSNormalForm js_build(const Scalar&, const Scalar&, IntervalExchange, const Scalar&,
                               std::int64_t);
  Scalar c_;
  Scalar h_;
  IntervalExchange iet_;
  Scalar offset_;
  std::int64_t winding_ = 0;
};

/// Validated normal form.  The twist is reduced mod c; whole turns are
/// added to the winding tag.
JSNormalForm js_build(const Scalar& c, const Scalar& h, IntervalExchange iet,
                      const Scalar& offset, std::int64_t winding = 0);

/// Rectangle c x h with translation-paired vertical sides.  Horizontal sides
/// are cut at every interval endpoint and at the wrap point of the twisted
/// top, so every horizontal edge is glued by one translation.  Edge 0 starts
/// at the bottom-left corner.  Flipped intervals have no polygon form here and
/// are rejected.
flat::PlanarPolygonSurface js_to_polygon(const JSNormalForm& j);

/// Reads a cylinder-shaped polygon (bottom chain, one slanted side, top
/// chain, the paired slanted side) back into normal form relative to the
/// interval exchange `iet`.  The marked transversal becomes the vertical
/// segment through the start of the bottom chain, so a slanted side of
/// horizontal extent w contributes w to the twist.  Every edge gluing is
/// checked against the exchange; the result has winding derived from the
/// twist alone (the polygon carries no marking beyond its sides).
JSNormalForm js_from_polygon(const flat::PlanarPolygonSurface& f, const IntervalExchange& iet);

/// Cut along the core curve and reglue after a positive twist by t.
JSNormalForm t_twist(const JSNormalForm& j, const Scalar& t);

/// Normal form of shear(js_to_polygon(j), t), obtained by re-cutting the
/// sheared polygon.  Equals t_twist(j, t * h).
JSNormalForm normalize_sheared(const JSNormalForm& j, const Scalar& t);

/// Vertical stretch by s > 0: heights scale, gluing data unchanged.
JSNormalForm stretch(const JSNormalForm& j, const Scalar& s);

struct DiskParameter {
  Scalar t;  // twist / shear part
  Scalar s;  // stretch / graft part, > 0 inside the disk
};

/// Teichmueller disk through a height-1 base: t-twist followed by s-stretch.
JSNormalForm teich_disk_point(const JSNormalForm& base, const DiskParameter& z);

/// tau = (T + i h) / c; keeps the lift recorded by the winding tag.
flat::TorusPoint torus_tau(const JSNormalForm& j);

/// Two half-infinite cylinders of circumference c glued along one circle by
/// the exchange; only `truncation_depth` of each end is ever used.
struct NodedFlatModel {
  Scalar c;
  IntervalExchange iet;
  double truncation_depth;
};

NodedFlatModel y_infinity(const JSNormalForm& j, double truncation_depth);

double cylinder_modulus(double c, double h);
/// Modulus of the end collar of depth s that separates the body of the model
/// from the excised end beyond it.
double residual_modulus(const NodedFlatModel& model, double s);

/// Least index N such that for every n >= N the n-th surface minus its core
/// circle includes conformally into the model and the excised ends have
/// modulus > 1/eps.  std::nullopt when the heights do not diverge on the
/// sampled tail.
std::optional<std::size_t> conformal_limit_check(const std::vector<JSNormalForm>& sequence,
                                                 const NodedFlatModel& model, double eps);

}  // namespace teichdisk::js
