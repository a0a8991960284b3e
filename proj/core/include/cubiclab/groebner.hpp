#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubiclab/polynomial.hpp"

namespace cubiclab {

/// Reduced Gröbner basis: monic, autoreduced, sorted by increasing leading
/// monomial. Two ideals of one ring are equal iff their bases compare equal.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const TermOrder& order() const noexcept { return ring_->order(); }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_zero() const noexcept { return elements_.empty(); }
  bool is_unit() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }
  std::vector<Monomial> leading_monomials() const;
  /// Ideal membership by normal form.
  bool contains(const Polynomial& f) const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  friend struct GroebnerAccess;
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// Remainder of full division of f by `divisors` (leading terms first, then
/// the tail). With a Gröbner basis the remainder is the unique normal form.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Reduced Gröbner basis in the common ring (and its term order) of `gens`.
/// Buchberger's algorithm with the coprime and chain criteria and sugar
/// selection; output is independent of scheduling details.
GroebnerBasis groebner_basis(std::span<const Polynomial> gens);
/// Same, after moving the generators into a copy of their ring with `order`.
GroebnerBasis groebner_basis(std::span<const Polynomial> gens, const TermOrder& order);

/// Basis together with cofactors: elements()[k] = Σ_l cofactors[k][l] · gens[l].
struct TrackedBasis {
  GroebnerBasis basis;
  std::vector<std::vector<Polynomial>> cofactors;
};
TrackedBasis tracked_groebner_basis(std::span<const Polynomial> gens);

/// True when every S-polynomial of every pair of elements reduces to zero
/// and the basis is reduced. Checks all pairs, no criteria.
bool verify_groebner_basis(const GroebnerBasis& gb);

struct SyzygyVector {
  std::vector<Polynomial> entries;
  /// Common degree of the entries.
  int degree = 0;
};

/// Generators of the first syzygy module of homogeneous generators of one
/// degree, via Schreyer's construction from a tracked Gröbner basis.
/// Throws PreconditionError on inhomogeneous or mixed-degree input.
std::vector<SyzygyVector> first_syzygies(std::span<const Polynomial> gens);

/// True when Σ entries[i] · gens[i] = 0.
bool is_syzygy(const SyzygyVector& s, std::span<const Polynomial> gens);

struct LinearSyzygyReport {
  std::size_t generators = 0;
  std::size_t linear_syzygies = 0;
  /// Koszul vectors gens[j]·e_i − gens[i]·e_j checked.
  std::size_t koszul_checked = 0;
  bool koszul_in_linear = false;
  /// Every Schreyer generator lies in the submodule spanned by linear syzygies.
  bool syzygies_generated_by_linear = false;

  bool passed() const noexcept { return koszul_in_linear && syzygies_generated_by_linear; }
};

/// 2-regularity style test for forms of one degree: are the syzygies
/// (Koszul ones in particular) generated by the linear syzygies?
LinearSyzygyReport linear_syzygy_test(std::span<const Polynomial> gens);

}  // namespace cubiclab
