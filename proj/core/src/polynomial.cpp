#include "cubiclab/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "cubiclab/error.hpp"

namespace cubiclab {

namespace {

Scalar convert(const Scalar& c, const Field& field) {
  if (c.field() == field) return c;
  if (!c.field().is_rational()) throw RingMismatch("cannot lift prime-field coefficients");
  return Scalar::fraction(c.rational().get_num(), c.rational().get_den(), field);
}

}  // namespace

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
  return monomial(ring, Monomial(ring->arity()), c);
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->arity()) throw PreconditionError("variable index out of range");
  return monomial(ring, Monomial(ring->arity()).with_exponent(index, 1), Scalar::one(ring->field()));
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) {
    return r.compare(a.monomial, b.monomial) > 0;
  });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->weighted_degree(t.monomial));
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = ring_->weighted_degree(terms_.front().monomial);
  for (const auto& t : terms_) {
    if (ring_->weighted_degree(t.monomial) != d) return std::nullopt;
  }
  return d;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [index](const Term& t) { return t.monomial[index] != 0; });
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coefficient;
  }
  return Scalar::zero(ring_->field());
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient *= c;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
  return p;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int e = t.monomial[index];
    if (e == 0) continue;
    out.push_back({t.monomial.with_exponent(index, e - 1),
                   t.coefficient * Scalar(e, ring_->field())});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->arity()) {
    throw PreconditionError("substitution needs one image per variable");
  }
  const RingPtr& target = images.front().ring();
  for (const auto& img : images) require_same_ring(img.ring(), target, "substitute");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, convert(t.coefficient, target->field()));
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.monomial[i] != 0) prod = prod * power(i, t.monomial[i]);
    }
    for (auto& pt : prod.terms_) acc.push_back(std::move(pt));
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::in_ring(const RingPtr& target, std::span<const int> var_map) const {
  if (var_map.size() != ring_->arity()) throw PreconditionError("variable map has wrong length");
  if (!(target->field() == ring_->field())) throw RingMismatch("in_ring: field mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<int> exps(target->arity(), 0);
  for (const auto& t : terms_) {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (var_map[i] < 0) {
        throw PreconditionError("variable " + ring_->names()[i] + " has no image in target ring");
      }
      exps[static_cast<std::size_t>(var_map[i])] += t.monomial[i];
    }
    out.push_back({Monomial::from_exponents(exps), t.coefficient});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::in_field(const RingPtr& target) const {
  if (target->arity() != ring_->arity()) throw RingMismatch("in_field: arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.push_back({t.monomial, convert(t.coefficient, target->field())});
  }
  return from_terms(target, std::move(out));
}

void Polynomial::sub_mul_assign(const Scalar& c, const Monomial& m, const Polynomial& g) {
  if (c.is_zero() || g.is_zero()) return;
  const Ring& r = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    const Monomial mb = b->monomial * m;
    const int cmp = a == terms_.end() ? -1 : r.compare(a->monomial, mb);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back({mb, -(b->coefficient * c)});
      ++b;
    } else {
      Scalar coeff = std::move(a->coefficient);
      coeff -= b->coefficient * c;
      if (!coeff.is_zero()) out.push_back({mb, std::move(coeff)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_ring(a.ring(), b.ring(), subtract ? "polynomial subtraction" : "polynomial addition");
  Polynomial out = a;
  Scalar sign(subtract ? 1 : -1, a.ring()->field());
  out.sub_mul_assign(sign, Monomial(a.ring()->arity()), b);
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring(), "polynomial multiplication");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  }
  return Polynomial::from_terms(a.ring(), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->names();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& [m, c] = terms_[k];
    const bool negative = c.sign() < 0;
    if (negative) {
      out += '-';
    } else if (k > 0) {
      out += '+';
    }
    const std::string mag = c.magnitude_string();
    std::string mono;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + '*' + mono;
    }
  }
  return out;
}

std::vector<Polynomial> echelon_basis(std::span<const Polynomial> polys) {
  std::vector<Polynomial> pivots;
  if (polys.empty()) return pivots;
  const RingPtr ring = polys.front().ring();
  struct MonoHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
  };
  std::unordered_map<Monomial, std::size_t, MonoHash> pivot_of;

  for (const auto& input : polys) {
    require_same_ring(input.ring(), ring, "echelon_basis");
    Polynomial p = input;
    std::size_t i = 0;
    while (i < p.size()) {
      auto it = pivot_of.find(p.terms()[i].monomial);
      if (it == pivot_of.end()) {
        ++i;
        continue;
      }
      const Scalar c = p.terms()[i].coefficient;
      p.sub_mul_assign(c, Monomial(ring->arity()), pivots[it->second]);
    }
    if (p.is_zero()) continue;
    p = p.monic();
    const Monomial lead = p.leading_monomial();
    for (auto& q : pivots) {
      const Scalar c = q.coefficient(lead);
      if (!c.is_zero()) q.sub_mul_assign(c, Monomial(ring->arity()), p);
    }
    pivot_of.emplace(lead, pivots.size());
    pivots.push_back(std::move(p));
  }
  std::sort(pivots.begin(), pivots.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return pivots;
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const std::size_t n = ring->arity();
  std::vector<int> exps(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      if (left % ring->weight(i) == 0) {
        exps[i] = left / ring->weight(i);
        out.push_back(Monomial::from_exponents(exps));
      }
      return;
    }
    for (int e = left / ring->weight(i); e >= 0; --e) {
      exps[i] = e;
      rec(i + 1, left - e * ring->weight(i));
    }
    exps[i] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) {
    return ring->compare(a, b) > 0;
  });
  return out;
}

}  // namespace cubiclab
