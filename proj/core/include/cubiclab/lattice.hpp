#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cubiclab {

/// Integer lattice of 2-cycles given by a symmetric Gram matrix.
struct IntersectionLattice {
  std::vector<std::string> labels;
  std::vector<std::vector<long long>> gram;

  std::size_t rank() const noexcept { return labels.size(); }
  /// Throws PreconditionError unless the Gram matrix is square, symmetric
  /// and matches the labels.
  void validate() const;
  long long pairing(const std::vector<long long>& a, const std::vector<long long>& b) const;
};

/// ⟨h², P1, P2⟩ for two disjoint planes: h⁴ = 3, h²·Pi = 1, Pi² = 3, P1·P2 = 0.
IntersectionLattice skew_planes_lattice();
/// ⟨h², S, P⟩ for a del Pezzo quintic S and a plane P with S·P = beta:
/// h⁴ = 3, h²·S = 5, S² = 13, h²·P = 1, P² = 3.
IntersectionLattice surface_plane_lattice(long long beta);

/// Exact determinant of the Gram matrix (fraction-free elimination).
long long gram_discriminant(const IntersectionLattice& L);

/// 29 + 10β − 3β², the discriminant of surface_plane_lattice(β) in closed form.
long long surface_plane_discriminant_closed_form(long long beta);

struct ExcessMultiplicity {
  long long value = 0;
  /// The curve degree is not positive, so the formula has no geometric meaning.
  bool out_of_domain = false;
};

/// Contribution of a common curve C (degree d, genus g) to S1·S2 on a cubic
/// fourfold: 3d + K1·C + K2·C + 2 − 2g.
ExcessMultiplicity excess_multiplicity(long long d, long long g, long long K1C, long long K2C);

/// Numerical data of a smooth surface: degree h², h·K, K², topological
/// Euler characteristic and χ(O).
struct SurfaceNumerics {
  long long h2 = 0;
  long long hK = 0;
  long long K2 = 0;
  long long chi_top = 0;
  long long chi_O = 0;
};

SurfaceNumerics quartic_scroll_numerics();
SurfaceNumerics del_pezzo_quintic_numerics();
SurfaceNumerics plane_numerics();

/// Self-intersection in a cubic fourfold: 6h² + 3h·K + K² − χ_top.
long long self_int_cubic_fourfold(const SurfaceNumerics& n);
/// Self-intersection in a quadric fourfold: 7h² + 4h·K + 2K² − 12χ(O).
long long self_int_quadric_fourfold(const SurfaceNumerics& n);

struct SurfaceClass {
  std::vector<long long> coordinates;
  /// Class · h² (h² is the first basis vector).
  long long degree = 0;
  long long self_intersection = 0;
};

/// Invariants of a class from the Gram matrix. The first basis vector must be h².
SurfaceClass make_class(const IntersectionLattice& L, std::vector<long long> coordinates);

struct ResidualClass {
  SurfaceClass T;
  /// T · P.
  long long dot_plane = 0;
};

/// T = 3h² − S in surface_plane_lattice(beta), with T·h², T², T·P.
ResidualClass residual_class(long long beta);
/// 3h² − c for a class of ⟨h², S, P⟩.
SurfaceClass residual_of(const IntersectionLattice& L, const SurfaceClass& c);

struct SearchBox {
  long long a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0, c_lo = 0, c_hi = 0;
  std::string to_string() const;
};

struct ObstructionSearch {
  /// (a, b, c) with S = a h² + b P1 + c P2 meeting every constraint.
  std::vector<std::array<long long, 3>> solutions;
  /// Points of the box meeting the linear constraints only.
  std::vector<std::array<long long, 3>> linear_solutions;
  SearchBox box;
  long long visited = 0;
};

/// Box for a, b, c derived from 3a + b + c = degree and lo ≤ a + 3b ≤ hi,
/// lo ≤ a + 3c ≤ hi.
SearchBox derived_search_box(long long degree, long long lo, long long hi);

/// All integer (a, b, c) in the derived box with 3a + b + c = degree,
/// lo ≤ a + 3b ≤ hi, lo ≤ a + 3c ≤ hi and
/// 3a² + 3b² + 3c² + 2ab + 2ac = self_int.
ObstructionSearch obstruction_search(long long degree, long long self_int, long long lo = 0, long long hi = 3);
/// Same constraints over an explicit box.
ObstructionSearch obstruction_search(long long degree, long long self_int, long long lo, long long hi,
                                     const SearchBox& box);

}  // namespace cubiclab
