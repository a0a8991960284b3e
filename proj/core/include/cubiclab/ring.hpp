#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubiclab/scalar.hpp"

namespace cubiclab {

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr int kMaxExponent = (1 << 15) - 1;

/// Exponent vector of fixed arity with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<int> exponents);
  static Monomial from_exponents(std::span<const int> exponents);

  std::size_t arity() const noexcept { return arity_; }
  int operator[](std::size_t i) const noexcept { return exps_[i]; }
  int degree() const noexcept { return static_cast<int>(degree_); }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Copy with exponent `i` replaced.
  Monomial with_exponent(std::size_t i, int e) const;

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }
  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t arity_ = 0;
};

/// Monomial order: lex, grevlex, or block elimination of the first k variables
/// (grevlex on the first block, ties broken by grevlex on the rest).
/// Degrees inside grevlex comparisons are weighted by the ring's variable weights.
class TermOrder {
 public:
  enum class Kind { lex, grevlex, elimination };

  static TermOrder lex() noexcept { return TermOrder(Kind::lex, 0); }
  static TermOrder grevlex() noexcept { return TermOrder(Kind::grevlex, 0); }
  static TermOrder elimination(std::size_t k) noexcept { return TermOrder(Kind::elimination, k); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  std::string name() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, std::size_t block) noexcept : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

/// Three-way comparison (-1, 0, 1). `weights` may be empty (all ones).
/// Throws RingMismatch on arity mismatch.
int compare_monomials(const Monomial& a, const Monomial& b, const TermOrder& order,
                      std::span<const int> weights = {});

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Graded polynomial ring over a Field: variable names, positive integer
/// weights (the grading) and the term order its polynomials are sorted by.
class Ring {
 public:
  static RingPtr make(Field field, std::vector<std::string> names,
                      TermOrder order = TermOrder::grevlex(), std::vector<int> weights = {});
  /// `family`_0 … `family`_n: the coordinate ring of P^n.
  static RingPtr projective(std::size_t n, Field field = Field::rationals(),
                            const std::string& family = "x");

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  int weight(std::size_t i) const noexcept { return weights_[i]; }
  bool standard_graded() const noexcept { return standard_graded_; }
  const TermOrder& order() const noexcept { return order_; }

  int compare(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b, order_, standard_graded_ ? std::span<const int>{} : weights_);
  }
  int weighted_degree(const Monomial& m) const noexcept;
  std::optional<std::size_t> variable_index(std::string_view name) const;

  RingPtr with_order(TermOrder order) const;
  RingPtr with_field(Field field) const;

  /// Structural equality: same field, names, weights and order.
  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring() = default;
  Field field_ = Field::rationals();
  std::vector<std::string> names_;
  std::vector<int> weights_;
  TermOrder order_ = TermOrder::grevlex();
  bool standard_graded_ = true;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
/// Throws RingMismatch unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* context);

}  // namespace cubiclab
