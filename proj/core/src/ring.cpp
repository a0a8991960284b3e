#include "cubiclab/ring.hpp"

#include <algorithm>

#include "cubiclab/error.hpp"

namespace cubiclab {

namespace {

void check_exponent(long e) {
  if (e < 0 || e > kMaxExponent) {
    throw PreconditionError("exponent " + std::to_string(e) + " outside [0, 2^15)");
  }
}

int weighted_degree_range(const Monomial& m, std::size_t lo, std::size_t hi,
                          std::span<const int> weights) {
  int d = 0;
  if (weights.empty()) {
    for (std::size_t i = lo; i < hi; ++i) d += m[i];
  } else {
    for (std::size_t i = lo; i < hi; ++i) d += weights[i] * m[i];
  }
  return d;
}

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                  std::span<const int> weights) {
  const int da = weighted_degree_range(a, lo, hi, weights);
  const int db = weighted_degree_range(b, lo, hi, weights);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::size_t arity) {
  if (arity > kMaxVariables) {
    throw PreconditionError("rings are limited to " + std::to_string(kMaxVariables) +
                            " variables");
  }
  arity_ = static_cast<std::uint8_t>(arity);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (int e : exponents) {
    check_exponent(e);
    exps_[i++] = static_cast<std::uint16_t>(e);
    degree_ += static_cast<std::uint32_t>(e);
  }
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    check_exponent(exponents[i]);
    m.exps_[i] = static_cast<std::uint16_t>(exponents[i]);
    m.degree_ += static_cast<std::uint32_t>(exponents[i]);
  }
  return m;
}

Monomial Monomial::with_exponent(std::size_t i, int e) const {
  check_exponent(e);
  Monomial m = *this;
  m.degree_ = m.degree_ - m.exps_[i] + static_cast<std::uint32_t>(e);
  m.exps_[i] = static_cast<std::uint16_t>(e);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.arity_ != b.arity_) throw RingMismatch("monomial arity mismatch");
  Monomial m = a;
  for (std::size_t i = 0; i < a.arity_; ++i) {
    const int e = a.exps_[i] + b.exps_[i];
    if (e > kMaxExponent) check_exponent(e);
    m.exps_[i] = static_cast<std::uint16_t>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw PreconditionError("monomial division is not exact");
  Monomial m = a;
  for (std::size_t i = 0; i < a.arity_; ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.degree_ = 0;
  for (std::size_t i = 0; i < a.arity_; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.degree_ = 0;
  for (std::size_t i = 0; i < a.arity_; ++i) {
    m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < arity_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::elimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

int compare_monomials(const Monomial& a, const Monomial& b, const TermOrder& order,
                      std::span<const int> weights) {
  if (a.arity() != b.arity()) throw RingMismatch("monomial arity mismatch");
  const std::size_t n = a.arity();
  switch (order.kind()) {
    case TermOrder::Kind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case TermOrder::Kind::grevlex:
      return grevlex_range(a, b, 0, n, weights);
    case TermOrder::Kind::elimination: {
      const std::size_t k = std::min(order.block(), n);
      if (const int c = grevlex_range(a, b, 0, k, weights); c != 0) return c;
      return grevlex_range(a, b, k, n, weights);
    }
  }
  return 0;
}

RingPtr Ring::make(Field field, std::vector<std::string> names, TermOrder order,
                   std::vector<int> weights) {
  if (names.empty() || names.size() > kMaxVariables) {
    throw PreconditionError("ring arity must be in [1, " + std::to_string(kMaxVariables) + "]");
  }
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw PreconditionError("one weight per variable");
  if (std::any_of(weights.begin(), weights.end(), [](int w) { return w < 1; })) {
    throw PreconditionError("variable weights must be positive");
  }
  if (order.kind() == TermOrder::Kind::elimination && order.block() >= names.size()) {
    throw PreconditionError("elimination block must leave at least one variable");
  }
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->field_ = field;
  ring->names_ = std::move(names);
  ring->weights_ = std::move(weights);
  ring->order_ = order;
  ring->standard_graded_ =
      std::all_of(ring->weights_.begin(), ring->weights_.end(), [](int w) { return w == 1; });
  return ring;
}

RingPtr Ring::projective(std::size_t n, Field field, const std::string& family) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back(family + "_" + std::to_string(i));
  return make(field, std::move(names));
}

int Ring::weighted_degree(const Monomial& m) const noexcept {
  if (standard_graded_) return m.degree();
  return weighted_degree_range(m, 0, m.arity(), weights_);
}

std::optional<std::size_t> Ring::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr Ring::with_order(TermOrder order) const {
  return make(field_, names_, order, weights_);
}

RingPtr Ring::with_field(Field field) const {
  return make(field, names_, order_, weights_);
}

bool operator==(const Ring& a, const Ring& b) {
  return a.field_ == b.field_ && a.names_ == b.names_ && a.weights_ == b.weights_ &&
         a.order_ == b.order_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* context) {
  if (!same_ring(a, b)) throw RingMismatch(std::string(context) + ": ring mismatch");
}

}  // namespace cubiclab
