#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubiclab/idealops.hpp"

namespace cubiclab {

/// Coordinate ring of P^5 (x_0..x_5) and of P^2 (t_0..t_2).
RingPtr p5_ring(const Field& field = Field::rationals());
RingPtr p2_ring(const Field& field = Field::rationals());

enum class ScrollKind { s22, s13 };

/// 2x2 minors of [[x0,x1,x3,x4],[x1,x2,x4,x5]] (S22) or
/// [[x0,x2,x3,x4],[x1,x3,x4,x5]] (S13).
Ideal quartic_scroll(ScrollKind kind, const RingPtr& ring = p5_ring());

/// The map P^5 --> P^5 given by the six quadrics of a scroll, as a ring map
/// from k[y_0..y_5] to the scroll's ring.
RingMap scroll_quadric_map(ScrollKind kind, const RingPtr& ring = p5_ring());

struct ParamSurface {
  std::string label;
  Ideal ideal;
  RingMap parametrization;
};

/// Image of P^2 under the cubics through [1,0,0], [0,1,0], [0,0,1], [1,1,1]:
/// x0 = t0 b, x1 = t1 b, x2 = t2 b, x3 = t0 a, x4 = t1 a, x5 = t2 a with
/// a = t0 t1 - t1 t2, b = t0 t2 - t1 t2. The ideal is the five quadrics of
/// the bundled del-pezzo.quadrics resource.
ParamSurface del_pezzo_quintic(const Field& field = Field::rationals());

struct ConicPencil {
  /// "lines-p1".."lines-p4" or "conics".
  std::string label;
  ParamSurface surface;
  /// Plane curves spanning the pencil: member(l0, l1) = l0*first + l1*second.
  Polynomial first;
  Polynomial second;
  /// 1-based index of the base point the lines pass through.
  std::optional<int> base_point;

  Polynomial member(long l0, long l1) const;
  /// Saturated ideal in P^5 of the image of a member.
  Ideal conic(long l0, long l1) const;
};

/// The four pencils of lines through a base point and the pencil of conics
/// through all four. Throws PreconditionError unless S is the del Pezzo quintic.
std::vector<ConicPencil> conic_pencils(const ParamSurface& S);

/// Threefold swept by the planes spanned by the conics of a pencil.
/// Throws PreconditionError when the result is not a threefold of degree 3.
Ideal segre_threefold(const ConicPencil& pencil);

struct NamedIdeal {
  std::string name;
  Ideal ideal;
};

/// Planes "a".."e" (the dp fixtures), "p1", "p2" (the skew pair) and the
/// coordinate planes "x012" = V(x3,x4,x5), "x345" = V(x0,x1,x2).
std::vector<NamedIdeal> standard_planes(const Field& field = Field::rationals());
Ideal standard_plane(std::string_view name, const Field& field = Field::rationals());

/// Names accepted by catalog_entry: scroll:s22, scroll:s13, delpezzo,
/// plane:<name>, skew-planes, conic:<pencil>, segre:<pencil>.
std::vector<std::string> catalog_names();
/// Throws PreconditionError for an unknown name.
Ideal catalog_entry(std::string_view name, const Field& field = Field::rationals());

}  // namespace cubiclab
