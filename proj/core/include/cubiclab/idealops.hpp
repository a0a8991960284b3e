#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cubiclab/groebner.hpp"

namespace cubiclab {

/// Ideal of a polynomial ring given by generators. Values are immutable;
/// copies share a cache holding the reduced Gröbner basis (per term order)
/// and the saturation by the irrelevant ideal, each filled at most once.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring);
  /// The irrelevant ideal (all variables).
  static Ideal irrelevant(const RingPtr& ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  /// Every generator is (weighted) homogeneous.
  bool is_graded() const noexcept { return graded_; }

  /// Reduced Gröbner basis in the ring's own term order.
  const GroebnerBasis& groebner() const;
  /// Reduced Gröbner basis for another order (ring copy with that order).
  const GroebnerBasis& groebner(const TermOrder& order) const;

  bool is_zero() const { return groebner().is_zero(); }
  bool is_unit() const { return groebner().is_unit(); }
  bool contains(const Polynomial& f) const;
  /// other ⊆ this.
  bool contains(const Ideal& other) const;
  /// Equality of ideals (identical reduced bases).
  friend bool operator==(const Ideal& a, const Ideal& b);

  /// Cached saturation by the irrelevant ideal.
  const Ideal& saturated() const;

  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool graded_ = true;
  std::shared_ptr<Cache> cache_;
};

enum class CombineMode { sum, product, intersection };

Ideal combine(const Ideal& I, const Ideal& J, CombineMode mode);
Ideal operator+(const Ideal& I, const Ideal& J);
Ideal operator*(const Ideal& I, const Ideal& J);
/// I ∩ J by eliminating u from u·I + (1−u)·J.
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal intersect(std::span<const Ideal> ideals);

/// (I : g).
Ideal quotient(const Ideal& I, const Polynomial& g);
/// (I : J) = ∩_g (I : g) over the generators of J. Throws PreconditionError if J = 0.
Ideal quotient(const Ideal& I, const Ideal& J);
/// (I : g^∞).
Ideal saturate(const Ideal& I, const Polynomial& g);
/// (I : m^∞) for the irrelevant ideal m, computed as ∩_i (I : x_i^∞).
Ideal saturate(const Ideal& I);
/// (I : J^∞) = ∩_g (I : g^∞) over the generators g of J.
Ideal saturate(const Ideal& I, const Ideal& J);
/// (I : J^∞) by iterating I ↦ (I : J) until the ideal stops changing.
/// Throws BudgetExceeded after `max_iterations` quotients.
Ideal saturate_by_quotients(const Ideal& I, const Ideal& J, int max_iterations = 64);

/// I ∩ k[x_k, …, x_{n-1}] in the ring of the remaining variables (weights
/// kept, grevlex). Throws PreconditionError if k ≥ arity.
Ideal eliminate(const Ideal& I, std::size_t k);
/// Same, with the result written in `target` (whose variables are the
/// remaining ones, in order).
Ideal eliminate(const Ideal& I, std::size_t k, const RingPtr& target);

/// Graded homomorphism source → target sending source variable i to
/// forms[i]. With source = coordinates of P^n and target = coordinates of a
/// parameter space, the geometric map goes the other way.
class RingMap {
 public:
  /// Throws PreconditionError unless there is one homogeneous form of the
  /// common degree per source variable, all in `target`.
  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> forms);

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  const std::vector<Polynomial>& forms() const noexcept { return forms_; }
  int degree() const noexcept { return degree_; }

  Polynomial operator()(const Polynomial& f) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> forms_;
  int degree_;
};

/// Ideal of the closure of the image: eliminate the target variables from
/// the graph ideal ⟨x_i − forms_i⟩.
Ideal kernel(const RingMap& h);
/// { g in the source ring : h(g) ∈ J } for J an ideal of the target ring
/// (the subscheme of the parameter space pushed onto the image).
Ideal preimage(const RingMap& h, const Ideal& J);

/// Field basis of the degree-d part of I (monic, distinct leading monomials).
std::vector<Polynomial> graded_basis(const Ideal& I, int d);

/// Minimal homogeneous generators chosen among the given ones.
Ideal trim(const Ideal& I);

struct HilbertData {
  /// Numerator N(t) of the Hilbert series N(t)/(1−t)^n, low degree first.
  std::vector<long long> numerator;
  /// N(t) with all factors (1−t) removed.
  std::vector<long long> reduced_numerator;
  /// Hilbert polynomial coefficients, constant term first.
  std::vector<mpq_class> polynomial;
  int krull_dimension = 0;
  /// Projective dimension; −1 for the empty scheme.
  int dimension = -1;
  long long degree = 0;

  /// Hilbert function value in degree k (series coefficient).
  long long function(int k) const;
  /// Hilbert polynomial evaluated at k.
  mpq_class polynomial_at(long long k) const;
  /// "5/2*t^2+5/2*t+1".
  std::string polynomial_string() const;

  std::size_t arity = 0;
};

/// Hilbert data of R/I from the initial ideal (grevlex). Needs a standard
/// graded ring and a graded ideal.
HilbertData hilbert(const Ideal& I);
/// Hilbert series numerator of R/M for a monomial ideal M.
std::vector<long long> hilbert_numerator(std::span<const Monomial> generators, std::size_t arity);

/// arity − Krull dimension of R/I.
int codim(const Ideal& I);
int dim(const Ideal& I);
long long degree(const Ideal& I);

}  // namespace cubiclab
