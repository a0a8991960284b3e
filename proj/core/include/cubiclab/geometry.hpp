#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cubiclab/idealops.hpp"
#include "cubiclab/linalg.hpp"

namespace cubiclab {

struct SmoothnessOptions {
  /// Upper bound on C(rows, c) · C(cols, c) minors of the Jacobian.
  double minor_cap = 1e5;
  /// When set, the check runs on the reduction modulo this prime.
  std::optional<std::uint32_t> prime;
};

struct SmoothnessResult {
  bool smooth = false;
  /// True when the check ran over the ideal's own field; false for a
  /// modular filter result.
  bool certified = false;
  int codim = 0;
  std::size_t minors = 0;
  /// codim(minors + I) in the ring.
  int singular_codim = 0;
};

/// Jacobian criterion: with c = codim(I), the scheme is smooth iff
/// codim(minors_c(Jacobian) + I) ≥ arity. Generators are trimmed to a
/// minimal set first. Equidimensionality is assumed, not checked.
/// Throws BudgetExceeded when the minor count exceeds the cap.
SmoothnessResult check_smoothness(const Ideal& I, const SmoothnessOptions& options = {});
bool is_smooth(const Ideal& I, const SmoothnessOptions& options = {});

/// Singular locus of a hypersurface V(f): (f, ∂f/∂x_i) saturated is the unit ideal.
bool is_smooth_hypersurface(const Polynomial& f);

/// The ideal with coefficients reduced modulo p (same variables and order).
Ideal reduce_mod(const Ideal& I, std::uint32_t p);

/// Equality of saturations.
bool scheme_equal(const Ideal& I, const Ideal& J);

/// Number of independent linear forms vanishing on the scheme.
int linear_span_codim(const Ideal& I);

/// Symmetric matrix of a quadratic form (characteristic ≠ 2).
DenseMatrix quadratic_form_matrix(const Polynomial& q);

/// Rank of the symmetric matrix of a quadratic form (characteristic ≠ 2).
/// Throws PreconditionError unless q is homogeneous of degree 2.
std::size_t quadratic_rank(const Polynomial& q);

/// Ideal of the linear span of the given points (coordinate vectors).
Ideal linear_subspace_ideal(const RingPtr& ring, const std::vector<std::vector<Scalar>>& points);

struct PlaneSectionClass {
  enum class Kind { empty, points, line, irreducible_conic, reducible_conic, other };
  Kind kind = Kind::empty;
  /// Number of points counted with multiplicity, or the degree for `other`.
  long long degree = 0;
  /// For points: the finite scheme is reduced.
  bool reduced = false;
  /// Projective dimension of the section.
  int dimension = -1;

  /// "empty", "points(3, reduced)", "line", "irreducible-conic",
  /// "reducible-conic", "other(dim, deg)".
  std::string label() const;
  friend bool operator==(const PlaneSectionClass&, const PlaneSectionClass&) = default;
};

/// Classifies saturate(surface + plane) for a plane given by three
/// independent linear forms. Throws PreconditionError on a malformed plane.
PlaneSectionClass classify_plane_section(const Ideal& surface, const Ideal& plane);

struct SchemeSummary {
  int dimension = -1;
  long long degree = 0;
  int codim = 0;
  bool smooth = false;
  int span_codim = 0;
};

/// Invariants of the saturated ideal.
SchemeSummary summarize(const Ideal& I, const SmoothnessOptions& options = {});

}  // namespace cubiclab
