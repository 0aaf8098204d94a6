#include "teichdisk/jenkins_strebel.hpp"

#include "teichdisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace teichdisk::js {
namespace {

using flat::PairingKind;
using flat::PlanarPolygonSurface;

struct Piece {
  Scalar bottom_start;
  Scalar length;
  Scalar top_start;  // in [0, c)
};

// Cuts the bottom circle so that every piece lies in one interval and its
// image on the top circle does not cross the wrap point.
std::vector<Piece> glue_pieces(const JSNormalForm& j) {
  const auto& iet = j.iet();
  const Scalar c = j.circumference();
  const auto a = iet.bottom_starts();
  const auto b = iet.top_starts();
  std::vector<Piece> pieces;
  for (std::size_t k = 0; k < iet.size(); ++k) {
    Scalar top = divmod(b[k] + j.offset(), c).remainder;
    Scalar room = c - top;
    if (iet.lengths[k] <= room) {
      pieces.push_back({a[k], iet.lengths[k], top});
    } else {
      pieces.push_back({a[k], room, top});
      pieces.push_back({a[k] + room, iet.lengths[k] - room, Scalar(0)});
    }
  }
  return pieces;
}

}  // namespace

Scalar IntervalExchange::total_length() const {
  Scalar sum{0};
  for (const auto& l : lengths) sum += l;
  return sum;
}

std::vector<Scalar> IntervalExchange::bottom_starts() const {
  std::vector<Scalar> out;
  Scalar pos{0};
  for (const auto& l : lengths) {
    out.push_back(pos);
    pos += l;
  }
  return out;
}

std::vector<Scalar> IntervalExchange::top_starts() const {
  std::vector<std::size_t> by_slot(size());
  for (std::size_t k = 0; k < size(); ++k) by_slot[permutation[k]] = k;
  std::vector<Scalar> out(size());
  Scalar pos{0};
  for (std::size_t slot = 0; slot < size(); ++slot) {
    out[by_slot[slot]] = pos;
    pos += lengths[by_slot[slot]];
  }
  return out;
}

void IntervalExchange::validate() const {
  if (lengths.empty()) throw InvalidInput("interval exchange needs at least one interval");
  if (permutation.size() != lengths.size() || flips.size() != lengths.size()) {
    throw InvalidInput("interval exchange: lengths, permutation and flips differ in size");
  }
  for (const auto& l : lengths) {
    if (l.sign() <= 0) throw InvalidInput("interval exchange: lengths must be positive");
  }
  std::vector<bool> seen(size(), false);
  for (auto p : permutation) {
    if (p >= size() || seen[p]) throw InvalidInput("interval exchange: permutation is not a bijection");
    seen[p] = true;
  }
}

IntervalExchange IntervalExchange::trivial(const Scalar& length) {
  return {{length}, {0}, {false}};
}

JSNormalForm js_build(const Scalar& c, const Scalar& h, IntervalExchange iet,
                      const Scalar& offset, std::int64_t winding) {
  if (c.sign() <= 0) throw InvalidInput("circumference must be positive");
  if (h.sign() <= 0) throw InvalidInput("height must be positive");
  iet.validate();
  if (!(iet.total_length() == c)) {
    throw InvalidInput("interval lengths sum to " + iet.total_length().to_string() +
                       ", circumference is " + c.to_string());
  }
  DivMod dm = divmod(offset, c);
  JSNormalForm j;
  j.c_ = c;
  j.h_ = h;
  j.iet_ = std::move(iet);
  j.offset_ = dm.remainder;
  j.winding_ = winding + dm.quotient;
  return j;
}

PlanarPolygonSurface js_to_polygon(const JSNormalForm& j) {
  const auto& iet = j.iet();
  if (std::any_of(iet.flips.begin(), iet.flips.end(), [](bool f) { return f; })) {
    throw InvalidInput("flipped intervals have no translation-polygon form");
  }
  std::vector<Piece> pieces = glue_pieces(j);
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& p, const Piece& q) { return p.bottom_start < q.bottom_start; });

  // top edges run right to left
  std::vector<std::size_t> top_order(pieces.size());
  std::iota(top_order.begin(), top_order.end(), std::size_t{0});
  std::sort(top_order.begin(), top_order.end(), [&](std::size_t p, std::size_t q) {
    return pieces[q].top_start < pieces[p].top_start;
  });

  const std::size_t m = pieces.size();
  const std::size_t n = 2 * m + 2;
  std::vector<Vec2> edges(n);
  std::vector<std::size_t> pairing(n);
  std::vector<PairingKind> kinds(n, PairingKind::kTranslation);

  for (std::size_t i = 0; i < m; ++i) edges[i] = {pieces[i].length, 0};
  const std::size_t right = m;
  const std::size_t left = n - 1;
  edges[right] = {0, j.height()};
  edges[left] = {0, -j.height()};
  pairing[right] = left;
  pairing[left] = right;
  for (std::size_t slot = 0; slot < m; ++slot) {
    std::size_t piece = top_order[slot];
    std::size_t edge = m + 1 + slot;
    edges[edge] = {-pieces[piece].length, 0};
    pairing[edge] = piece;
    pairing[piece] = edge;
  }
  return PlanarPolygonSurface(std::move(edges), std::move(pairing), std::move(kinds));
}

JSNormalForm js_from_polygon(const PlanarPolygonSurface& f, const IntervalExchange& iet) {
  iet.validate();
  if (std::any_of(iet.flips.begin(), iet.flips.end(), [](bool b) { return b; })) {
    throw InvalidInput("flipped intervals have no translation-polygon form");
  }
  const std::size_t n = f.size();
  const auto& e = f.edges();

  std::vector<std::size_t> slanted;
  for (std::size_t i = 0; i < n; ++i) {
    if (e[i].y.sign() != 0) slanted.push_back(i);
  }
  if (slanted.size() != 2) throw InvalidInput("polygon is not cylinder-shaped: needs two non-horizontal sides");
  std::size_t right = e[slanted[0]].y.sign() > 0 ? slanted[0] : slanted[1];
  std::size_t left = right == slanted[0] ? slanted[1] : slanted[0];
  if (f.pairing()[right] != left || f.kinds()[right] != PairingKind::kTranslation) {
    throw InvalidInput("the two non-horizontal sides must be translation-paired");
  }

  // walk the bottom chain from the end of the left side
  std::vector<Scalar> edge_start_x(n);
  std::vector<bool> on_bottom(n, false);
  Scalar x{0};
  std::size_t i = (left + 1) % n;
  for (; i != right; i = (i + 1) % n) {
    if (e[i].x.sign() <= 0) throw InvalidInput("bottom chain must run left to right");
    on_bottom[i] = true;
    edge_start_x[i] = x;
    x += e[i].x;
  }
  const Scalar c = x;
  const Scalar w = e[right].x;
  const Scalar h = e[right].y;
  x = c + w;
  Scalar top_length{0};
  for (i = (right + 1) % n; i != left; i = (i + 1) % n) {
    if (e[i].x.sign() >= 0) throw InvalidInput("top chain must run right to left");
    edge_start_x[i] = x;
    x += e[i].x;
    top_length -= e[i].x;
  }
  if (!(top_length == c)) throw InvalidInput("top and bottom chains differ in length");
  if (!(iet.total_length() == c)) throw InvalidInput("polygon circumference does not match the interval exchange");

  const auto a = iet.bottom_starts();
  const auto b = iet.top_starts();

  // image of the bottom point 0 fixes the twist; the slant w fixes its lift
  const std::size_t first = (left + 1) % n;
  const std::size_t first_top = f.pairing()[first];
  if (on_bottom[first_top]) throw InvalidInput("bottom edges must be glued to top edges");
  const Scalar first_image = edge_start_x[first_top] + e[first_top].x;  // left end of the top edge
  const Scalar twist = w + divmod(first_image - b[0] - w, c).remainder;

  for (i = 0; i < n; ++i) {
    if (!on_bottom[i]) continue;
    const std::size_t top = f.pairing()[i];
    if (on_bottom[top] || f.kinds()[i] != PairingKind::kTranslation) {
      throw InvalidInput("bottom edges must be translation-glued to top edges");
    }
    const Scalar lo = edge_start_x[i];
    const Scalar hi = lo + e[i].x;
    const Scalar image_lo = edge_start_x[top] + e[top].x;
    for (std::size_t k = 0; k < iet.size(); ++k) {
      Scalar k_lo = a[k];
      Scalar k_hi = a[k] + iet.lengths[k];
      if (!(k_lo < hi && lo < k_hi)) continue;
      Scalar p = lo < k_lo ? k_lo : lo;
      Scalar polygon_image = image_lo + (p - lo);
      Scalar template_image = b[k] + twist + (p - k_lo);
      if (divmod(polygon_image - template_image, c).remainder.sign() != 0) {
        throw InvalidInput("polygon gluing disagrees with the interval exchange at bottom position " +
                           p.to_string());
      }
    }
  }
  return js_build(c, h, iet, twist);
}

JSNormalForm t_twist(const JSNormalForm& j, const Scalar& t) {
  return js_build(j.circumference(), j.height(), j.iet(), j.total_twist() + t);
}

JSNormalForm normalize_sheared(const JSNormalForm& j, const Scalar& t) {
  const auto sheared = flat::shear(js_to_polygon(j), t);
  const JSNormalForm recut = js_from_polygon(sheared, j.iet());
  // the polygon only records the offset; reattach the whole turns
  return js_build(j.circumference(), j.height(), j.iet(),
                  recut.total_twist() + Scalar(j.winding()) * j.circumference());
}

JSNormalForm stretch(const JSNormalForm& j, const Scalar& s) {
  if (s.sign() <= 0) throw InvalidInput("stretch factor must be positive");
  return js_build(j.circumference(), j.height() * s, j.iet(), j.offset(), j.winding());
}

JSNormalForm teich_disk_point(const JSNormalForm& base, const DiskParameter& z) {
  if (!(base.height() == Scalar(1))) throw InvalidInput("Teichmueller disk base must have height 1");
  if (z.s.sign() <= 0) throw InvalidInput("disk parameter needs Im z > 0");
  return stretch(t_twist(base, z.t), z.s);
}

flat::TorusPoint torus_tau(const JSNormalForm& j) {
  if (j.iet().size() != 1) throw InvalidInput("torus_tau expects a one-interval (genus 1) surface");
  const double c = j.circumference().to_double();
  return flat::TorusPoint({j.total_twist().to_double() / c, j.height().to_double() / c});
}

NodedFlatModel y_infinity(const JSNormalForm& j, double truncation_depth) {
  if (!(truncation_depth > 0)) throw InvalidInput("truncation depth must be positive");
  return {j.circumference(), j.iet(), truncation_depth};
}

double cylinder_modulus(double c, double h) {
  if (!(c > 0) || !(h > 0)) throw InvalidInput("cylinder modulus needs c, h > 0");
  return h / c;
}

double residual_modulus(const NodedFlatModel& model, double s) {
  if (!(s > 0)) throw InvalidInput("residual modulus needs depth s > 0");
  return cylinder_modulus(model.c.to_double(), s);
}

std::optional<std::size_t> conformal_limit_check(const std::vector<JSNormalForm>& sequence,
                                                 const NodedFlatModel& model, double eps) {
  if (!(eps > 0)) throw InvalidInput("eps must be positive");
  for (const auto& j : sequence) {
    if (!(j.circumference() == model.c) || !(j.iet() == model.iet)) {
      throw InvalidInput("sequence surface does not match the noded model");
    }
  }
  // Removing the core circle leaves two cylinders of depth h/2 that embed
  // isometrically in the two ends of the model, so K = 1 for every n; what
  // remains is how deep the excised neighbourhoods sit.
  const double dilatation = 1.0;
  std::optional<std::size_t> first_good;
  for (std::size_t n = 0; n < sequence.size(); ++n) {
    const double depth = sequence[n].height().to_double() / 2.0;
    const bool good = dilatation <= 1.0 + eps && residual_modulus(model, depth) > 1.0 / eps;
    if (good && !first_good) first_good = n;
    if (!good) first_good.reset();
  }
  if (!first_good) return std::nullopt;
  // The sampled tail has to keep deepening, otherwise nothing says the
  // excised ends shrink to the node.
  const std::size_t start = *first_good;
  if (sequence.size() - start < 2) return std::nullopt;
  for (std::size_t n = start + 1; n < sequence.size(); ++n) {
    if (sequence[n].height().to_double() < sequence[n - 1].height().to_double()) return std::nullopt;
  }
  if (!(sequence.back().height().to_double() > sequence[start].height().to_double())) {
    return std::nullopt;
  }
  return first_good;
}

}  // namespace teichdisk::js
