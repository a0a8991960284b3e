#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace cubiclab {

/// Coefficient field of a ring: ℚ or a prime field 𝔽_p with p < 2^31.
class Field {
 public:
  static Field rationals() noexcept { return Field(0); }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  /// "QQ" or "ZZ/p".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) noexcept : p_(p) {}
  std::uint32_t p_;
};

/// An element of a Field. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(long value, const Field& field);
  explicit Scalar(mpq_class value);

  /// num/den reduced into `field`. Throws PreconditionError when the
  /// denominator vanishes in the field.
  static Scalar fraction(const mpz_class& num, const mpz_class& den, const Field& field);
  static Scalar zero(const Field& field) { return Scalar(0, field); }
  static Scalar one(const Field& field) { return Scalar(1, field); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  /// Sign of the symmetric representative; 𝔽_p residues above p/2 count as negative.
  int sign() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<Residue>(value_).value; }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Decimal rendering: "3", "-2/5"; residues use the symmetric representative.
  std::string to_string() const;
  /// Absolute value as text (no sign), used by the polynomial printer.
  std::string magnitude_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t prime;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit Scalar(Residue r) : value_(r) {}
  void check_same_field(const Scalar& rhs) const;

  std::variant<mpq_class, Residue> value_;
};

}  // namespace cubiclab
