#include "cubiclab/scalar.hpp"

#include "cubiclab/error.hpp"

namespace cubiclab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("field characteristic " + std::to_string(p) +
                            " is not a prime below 2^31");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "QQ" : "ZZ/" + std::to_string(p_);
}

Scalar::Scalar(long value, const Field& field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{reduce_mod(mpz_class(value), field.characteristic()),
                     field.characteristic()};
  }
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::fraction(const mpz_class& num, const mpz_class& den, const Field& field) {
  if (field.is_rational()) {
    if (den == 0) throw PreconditionError("division by zero in coefficient");
    return Scalar(mpq_class(num, den));
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t d = reduce_mod(den, p);
  if (d == 0) {
    throw PreconditionError("coefficient denominator vanishes modulo " + std::to_string(p));
  }
  const std::uint64_t n = reduce_mod(num, p);
  return Scalar(Residue{static_cast<std::uint32_t>(n * inverse_mod(d, p) % p), p});
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->prime);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

int Scalar::sign() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->value == 0) return 0;
    return r->value > r->prime / 2 ? -1 : 1;
  }
  return sgn(std::get<mpq_class>(value_));
}

void Scalar::check_same_field(const Scalar& rhs) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&rhs.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->prime != b->prime)) {
    throw RingMismatch("scalars from different fields");
  }
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->prime - r->value, r->prime});
  }
  Scalar out;
  out.value_ = mpq_class(-std::get<mpq_class>(value_));
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{inverse_mod(r->value, r->prime), r->prime});
  }
  Scalar out;
  out.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->prime);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s =
        std::uint64_t{r->value} + r->prime - std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->prime);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s = std::uint64_t{r->value} * std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->prime);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (sign() < 0) return "-" + std::to_string(r->prime - r->value);
    return std::to_string(r->value);
  }
  return std::get<mpq_class>(value_).get_str();
}

std::string Scalar::magnitude_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return std::to_string(sign() < 0 ? r->prime - r->value : r->value);
  }
  return mpq_class(abs(std::get<mpq_class>(value_))).get_str();
}

}  // namespace cubiclab
