#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubiclab/ring.hpp"
#include "cubiclab/scalar.hpp"

namespace cubiclab {

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial: terms strictly decreasing in the ring's term order,
/// no zero coefficients. Leading term first.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, const Scalar& c);
  static Polynomial constant(const RingPtr& ring, long c) {
    return constant(ring, Scalar(c, ring->field()));
  }
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial monomial(const RingPtr& ring, const Monomial& m, const Scalar& c);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coefficient() const { return terms_.front().coefficient; }

  /// Weighted degree of the top-degree part; -1 for zero.
  int degree() const;
  /// Weighted degree if every term has the same one; nullopt otherwise (and for zero).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  /// True when some term has a positive exponent of variable `index`.
  bool uses_variable(std::size_t index) const;
  /// Coefficient of `m` (zero if absent).
  Scalar coefficient(const Monomial& m) const;

  Polynomial monic() const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial derivative(std::size_t index) const;
  /// Replace variable i by images[i]; all images share a ring, which is the result ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Rewrite in `target`, sending variable i to target variable var_map[i].
  /// Throws PreconditionError if a used variable maps to -1.
  Polynomial in_ring(const RingPtr& target, std::span<const int> var_map) const;
  /// Same variables, different field: rationals are reduced mod p.
  Polynomial in_field(const RingPtr& target) const;

  /// this -= c * m * g  (the reduction step).
  void sub_mul_assign(const Scalar& c, const Monomial& m, const Polynomial& g);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Reduced row-echelon basis of the span of `polys` (over the field),
/// each element monic with a distinct leading monomial, sorted by
/// decreasing leading monomial.
std::vector<Polynomial> echelon_basis(std::span<const Polynomial> polys);

/// All monomials of weighted degree d in the ring, decreasing in its order.
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d);

}  // namespace cubiclab
