#include "cubiclab/idealops.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "cubiclab/error.hpp"
#include "cubiclab/linalg.hpp"

namespace cubiclab {

struct Ideal::Cache {
  std::once_flag gb_once;
  std::optional<GroebnerBasis> gb;
  std::mutex other_mutex;
  std::map<std::string, std::shared_ptr<const GroebnerBasis>> other;
  std::once_flag sat_once;
  std::shared_ptr<const Ideal> saturated;
};

namespace {

std::vector<int> identity_map(std::size_t n, int offset = 0) {
  std::vector<int> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<int>(i) + offset;
  return map;
}

// f / g, which must be exact.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  std::vector<Term> quotient;
  Polynomial h = f;
  while (!h.is_zero()) {
    if (!g.leading_monomial().divides(h.leading_monomial())) throw Error("inexact polynomial division");
    const Monomial m = h.leading_monomial() / g.leading_monomial();
    const Scalar c = h.leading_coefficient() / g.leading_coefficient();
    quotient.push_back({m, c});
    h.sub_mul_assign(c, m, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

// (I : x_i) or (I : x_i^∞) for a graded ideal: Gröbner basis in grevlex with
// x_i last, then divide each element by the relevant power of x_i.
Ideal quotient_by_variable(const Ideal& I, std::size_t var, bool infinite) {
  const RingPtr& ring = I.ring();
  const std::size_t n = ring->arity();
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<int> forward(n), back(n);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == var) continue;
    names.push_back(ring->names()[i]);
    weights.push_back(ring->weight(i));
    forward[i] = static_cast<int>(pos);
    back[pos++] = static_cast<int>(i);
  }
  names.push_back(ring->names()[var]);
  weights.push_back(ring->weight(var));
  forward[var] = static_cast<int>(n - 1);
  back[n - 1] = static_cast<int>(var);
  const RingPtr permuted = Ring::make(ring->field(), names, TermOrder::grevlex(), weights);

  std::vector<Polynomial> moved;
  for (const auto& g : I.generators()) moved.push_back(g.in_ring(permuted, forward));
  const GroebnerBasis gb = moved.empty() ? GroebnerBasis(permuted) : groebner_basis(moved);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    int power = g.leading_monomial()[n - 1];
    for (const auto& t : g.terms()) power = std::min(power, static_cast<int>(t.monomial[n - 1]));
    if (!infinite) power = std::min(power, 1);
    Polynomial q = g;
    if (power > 0) {
      q = exact_divide(g, Polynomial::monomial(permuted, Monomial(n).with_exponent(n - 1, power),
                                               Scalar::one(ring->field())));
    }
    out.push_back(q.in_ring(ring, back));
  }
  return Ideal(ring, std::move(out));
}

std::vector<Polynomial> nonzero(std::vector<Polynomial> polys) {
  polys.erase(std::remove_if(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_zero(); }),
              polys.end());
  return polys;
}

// Drops ideals equal to an earlier one.
std::vector<Ideal> distinct(std::vector<Ideal> ideals) {
  std::vector<Ideal> out;
  for (auto& I : ideals) {
    if (std::none_of(out.begin(), out.end(), [&I](const Ideal& J) { return J == I; })) out.push_back(std::move(I));
  }
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(nonzero(std::move(generators))), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    require_same_ring(g.ring(), ring_, "Ideal");
    if (!g.is_homogeneous()) graded_ = false;
  }
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::irrelevant(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->arity(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->gb_once, [this] {
    cache_->gb = gens_.empty() ? GroebnerBasis(ring_) : groebner_basis(gens_);
  });
  return *cache_->gb;
}

const GroebnerBasis& Ideal::groebner(const TermOrder& order) const {
  if (order == ring_->order()) return groebner();
  std::lock_guard<std::mutex> lock(cache_->other_mutex);
  auto& slot = cache_->other[order.name()];
  if (!slot) {
    slot = std::make_shared<const GroebnerBasis>(gens_.empty() ? GroebnerBasis(ring_->with_order(order))
                                                               : groebner_basis(gens_, order));
  }
  return *slot;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(f.ring(), ring_, "Ideal::contains");
  return groebner().contains(f);
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(other.ring_, ring_, "Ideal::contains");
  if (is_unit()) return true;
  return std::all_of(other.gens_.begin(), other.gens_.end(), [this](const Polynomial& g) { return contains(g); });
}

bool operator==(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_, b.ring_, "Ideal equality");
  return a.groebner() == b.groebner();
}

const Ideal& Ideal::saturated() const {
  std::call_once(cache_->sat_once, [this] {
    if (!graded_) {
      cache_->saturated = std::make_shared<const Ideal>(saturate(*this, Ideal::irrelevant(ring_)));
      return;
    }
    if (gens_.empty() || is_unit()) {
      cache_->saturated = std::make_shared<const Ideal>(*this);
      return;
    }
    std::vector<Ideal> parts;
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      Ideal part = quotient_by_variable(*this, i, true);
      if (part == *this) {
        cache_->saturated = std::make_shared<const Ideal>(*this);
        return;
      }
      parts.push_back(std::move(part));
    }
    const auto unique = distinct(std::move(parts));
    cache_->saturated = std::make_shared<const Ideal>(intersect(unique));
  });
  return *cache_->saturated;
}

std::string Ideal::to_string() const {
  std::string out = "ideal(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

Ideal combine(const Ideal& I, const Ideal& J, CombineMode mode) {
  switch (mode) {
    case CombineMode::sum:
      return I + J;
    case CombineMode::product:
      return I * J;
    case CombineMode::intersection:
      return intersect(I, J);
  }
  return I;
}

Ideal operator+(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal sum");
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal operator*(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) {
    for (const auto& g : J.generators()) gens.push_back(f * g);
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal intersection");
  if (I.generators().empty() || J.generators().empty()) return Ideal::zero(I.ring());
  if (J.contains(I)) return I;
  if (I.contains(J)) return J;
  const RingPtr& ring = I.ring();
  std::vector<std::string> names = {"_u"};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  std::vector<int> weights = {1};
  weights.insert(weights.end(), ring->weights().begin(), ring->weights().end());
  const RingPtr big = Ring::make(ring->field(), names, TermOrder::elimination(1), weights);
  const auto shift = identity_map(ring->arity(), 1);
  const Polynomial u = Polynomial::variable(big, 0);
  const Polynomial one_minus_u = Polynomial::constant(big, 1) - u;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(u * f.in_ring(big, shift));
  for (const auto& g : J.generators()) gens.push_back(one_minus_u * g.in_ring(big, shift));
  return eliminate(Ideal(big, std::move(gens)), 1, ring);
}

Ideal intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw PreconditionError("intersection of an empty family");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal quotient(const Ideal& I, const Polynomial& g) {
  require_same_ring(I.ring(), g.ring(), "quotient");
  if (g.is_zero()) throw PreconditionError("quotient by the zero ideal");
  if (g.is_constant()) return I;
  if (I.contains(g)) return Ideal::unit(I.ring());
  if (I.is_graded() && g.size() == 1) {
    // Monomial: divide out one variable at a time.
    Ideal acc = I;
    const Monomial& m = g.leading_monomial();
    for (std::size_t i = 0; i < m.arity(); ++i) {
      for (int e = 0; e < m[i]; ++e) acc = quotient_by_variable(acc, i, false);
    }
    return acc;
  }
  const Ideal meet = intersect(I, Ideal(I.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& f : meet.groebner().elements()) gens.push_back(exact_divide(f, g));
  return Ideal(I.ring(), std::move(gens));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "quotient");
  if (J.generators().empty()) throw PreconditionError("quotient by the zero ideal");
  std::vector<Ideal> parts;
  for (const auto& g : J.generators()) parts.push_back(quotient(I, g));
  return intersect(distinct(std::move(parts)));
}

Ideal saturate(const Ideal& I, const Polynomial& g) {
  require_same_ring(I.ring(), g.ring(), "saturate");
  if (g.is_zero()) throw PreconditionError("saturation by the zero ideal");
  if (g.is_constant()) return I;
  if (I.is_graded() && g.size() == 1) {
    Ideal acc = I;
    const Monomial& m = g.leading_monomial();
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] > 0) acc = quotient_by_variable(acc, i, true);
    }
    return acc;
  }
  return saturate_by_quotients(I, Ideal(I.ring(), {g}));
}

Ideal saturate(const Ideal& I) { return I.saturated(); }

Ideal saturate(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "saturate");
  if (J.generators().empty()) throw PreconditionError("saturation by the zero ideal");
  if (J == Ideal::irrelevant(I.ring()) && I.is_graded()) return I.saturated();
  std::vector<Ideal> parts;
  for (const auto& g : J.generators()) {
    Ideal part = saturate(I, g);
    if (part == I) return I;
    parts.push_back(std::move(part));
  }
  return intersect(distinct(std::move(parts)));
}

Ideal saturate_by_quotients(const Ideal& I, const Ideal& J, int max_iterations) {
  Ideal current = I;
  for (int k = 0; k < max_iterations; ++k) {
    Ideal next = quotient(current, J);
    if (next == current) return current;
    current = std::move(next);
  }
  throw BudgetExceeded("saturation did not stabilize after " + std::to_string(max_iterations) + " quotients");
}

Ideal eliminate(const Ideal& I, std::size_t k) {
  const RingPtr& ring = I.ring();
  if (k >= ring->arity()) throw PreconditionError("cannot eliminate every variable");
  std::vector<std::string> names(ring->names().begin() + static_cast<std::ptrdiff_t>(k), ring->names().end());
  std::vector<int> weights(ring->weights().begin() + static_cast<std::ptrdiff_t>(k), ring->weights().end());
  return eliminate(I, k, Ring::make(ring->field(), names, TermOrder::grevlex(), weights));
}

Ideal eliminate(const Ideal& I, std::size_t k, const RingPtr& target) {
  const RingPtr& ring = I.ring();
  if (k >= ring->arity()) throw PreconditionError("cannot eliminate every variable");
  if (target->arity() != ring->arity() - k) throw RingMismatch("eliminate: target ring has wrong arity");
  const GroebnerBasis& gb = I.groebner(TermOrder::elimination(k));
  std::vector<int> map(ring->arity(), -1);
  for (std::size_t i = k; i < ring->arity(); ++i) map[i] = static_cast<int>(i - k);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (std::size_t i = 0; i < k && free; ++i) free = !g.uses_variable(i);
    if (free) out.push_back(g.in_ring(target, map));
  }
  return Ideal(target, std::move(out));
}

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> forms)
    : source_(std::move(source)), target_(std::move(target)), forms_(std::move(forms)), degree_(0) {
  if (forms_.size() != source_->arity()) throw PreconditionError("ring map needs one form per source variable");
  std::optional<int> d;
  for (const auto& f : forms_) {
    require_same_ring(f.ring(), target_, "RingMap");
    if (f.is_zero()) continue;
    const auto fd = f.homogeneous_degree();
    if (!fd) throw PreconditionError("ring map forms must be homogeneous");
    if (d && *d != *fd) throw PreconditionError("ring map forms must share one degree");
    d = fd;
  }
  if (!d) throw PreconditionError("ring map with only zero forms");
  degree_ = *d;
}

Polynomial RingMap::operator()(const Polynomial& f) const {
  require_same_ring(f.ring(), source_, "RingMap application");
  return f.substitute(forms_);
}

namespace {

struct GraphRing {
  RingPtr ring;
  std::vector<int> target_map;
  std::vector<int> source_map;
};

// Target variables first (eliminated), then the source variables with weight
// degree·weight so the graph ideal is homogeneous.
GraphRing graph_ring(const RingMap& h) {
  const RingPtr& s = h.source();
  const RingPtr& t = h.target();
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t j = 0; j < t->arity(); ++j) {
    names.push_back("_" + t->names()[j]);
    weights.push_back(t->weight(j));
  }
  for (std::size_t i = 0; i < s->arity(); ++i) {
    names.push_back(s->names()[i]);
    weights.push_back(h.degree() * s->weight(i));
  }
  GraphRing g;
  g.ring = Ring::make(s->field(), names, TermOrder::elimination(t->arity()), weights);
  g.target_map = identity_map(t->arity());
  g.source_map = identity_map(s->arity(), static_cast<int>(t->arity()));
  return g;
}

std::vector<Polynomial> graph_generators(const RingMap& h, const GraphRing& g) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < h.forms().size(); ++i) {
    gens.push_back(Polynomial::variable(g.ring, static_cast<std::size_t>(g.source_map[i])) -
                   h.forms()[i].in_ring(g.ring, g.target_map));
  }
  return gens;
}

}  // namespace

Ideal kernel(const RingMap& h) {
  const GraphRing g = graph_ring(h);
  return eliminate(Ideal(g.ring, graph_generators(h, g)), h.target()->arity(), h.source());
}

Ideal preimage(const RingMap& h, const Ideal& J) {
  require_same_ring(J.ring(), h.target(), "preimage");
  const GraphRing g = graph_ring(h);
  std::vector<Polynomial> gens = graph_generators(h, g);
  for (const auto& f : J.generators()) gens.push_back(f.in_ring(g.ring, g.target_map));
  return eliminate(Ideal(g.ring, std::move(gens)), h.target()->arity(), h.source());
}

std::vector<Polynomial> graded_basis(const Ideal& I, int d) {
  const RingPtr& ring = I.ring();
  std::vector<Polynomial> multiples;
  const Scalar one = Scalar::one(ring->field());
  for (const auto& g : I.generators()) {
    const auto e = g.homogeneous_degree();
    if (!e) throw PreconditionError("graded_basis needs homogeneous generators");
    if (*e > d) continue;
    for (const auto& m : monomials_of_degree(ring, d - *e)) multiples.push_back(g.mul_term(m, one));
  }
  return echelon_basis(multiples);
}

Ideal trim(const Ideal& I) {
  if (!I.is_graded()) throw PreconditionError("trim needs a graded ideal");
  const RingPtr& ring = I.ring();
  std::vector<Polynomial> gens = I.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  std::vector<Polynomial> kept;
  const Scalar one = Scalar::one(ring->field());
  std::size_t i = 0;
  while (i < gens.size()) {
    const int d = gens[i].degree();
    const MonomialIndex index(monomials_of_degree(ring, d));
    RowSpace space(index.size(), ring->field());
    for (const auto& k : kept) {
      for (const auto& m : monomials_of_degree(ring, d - k.degree())) space.add(index.coefficients(k.mul_term(m, one)));
    }
    for (; i < gens.size() && gens[i].degree() == d; ++i) {
      if (space.add(index.coefficients(gens[i]))) kept.push_back(gens[i]);
    }
  }
  return Ideal(ring, std::move(kept));
}

namespace {

using IntPoly = std::vector<long long>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly poly_sub_shifted(IntPoly a, const IntPoly& b, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + static_cast<std::size_t>(shift)] -= b[j];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    if (std::none_of(out.begin(), out.end(), [&m](const Monomial& k) { return k.divides(m); })) out.push_back(m);
  }
  return out;
}

class NumeratorComputer {
 public:
  IntPoly operator()(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    std::vector<int> key;
    for (const auto& m : gens) {
      for (std::size_t i = 0; i < m.arity(); ++i) key.push_back(m[i]);
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
      for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
    }
    IntPoly result;
    if (coprime) {
      result = {1};
      for (const auto& m : gens) {
        IntPoly factor(static_cast<std::size_t>(m.degree()) + 1, 0);
        factor[0] = 1;
        factor.back() -= 1;
        result = poly_mul(result, factor);
      }
    } else {
      // N(M' + (m)) = N(M') − t^deg(m) · N(M' : m).
      const Monomial m = gens.back();
      gens.pop_back();
      std::vector<Monomial> colon;
      colon.reserve(gens.size());
      for (const auto& g : gens) colon.push_back(g / gcd(g, m));
      result = poly_sub_shifted((*this)(gens), (*this)(std::move(colon)), m.degree());
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<std::vector<int>, IntPoly> memo_;
};

mpz_class binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

std::vector<long long> hilbert_numerator(std::span<const Monomial> generators, std::size_t arity) {
  for (const auto& m : generators) {
    if (m.arity() != arity) throw RingMismatch("hilbert_numerator: arity mismatch");
  }
  NumeratorComputer compute;
  return compute(std::vector<Monomial>(generators.begin(), generators.end()));
}

HilbertData hilbert(const Ideal& I) {
  const RingPtr& ring = I.ring();
  if (!ring->standard_graded()) throw PreconditionError("hilbert needs a standard graded ring");
  if (!I.is_graded()) throw PreconditionError("hilbert needs a graded ideal");
  HilbertData data;
  data.arity = ring->arity();
  if (I.is_unit()) {
    data.numerator = {0};
    data.reduced_numerator = {0};
    data.krull_dimension = 0;
    data.dimension = -1;
    data.degree = 0;
    return data;
  }
  const auto lms = I.groebner().leading_monomials();
  data.numerator = hilbert_numerator(lms, ring->arity());
  IntPoly q = data.numerator;
  int c = 0;
  while (c < static_cast<int>(ring->arity())) {
    long long at_one = 0;
    for (auto v : q) at_one += v;
    if (at_one != 0) break;
    // Divide by (1 − t): q = (1 − t)·r  ⇒  r_k = Σ_{j ≤ k} q_j.
    IntPoly r(q.size() - 1, 0);
    long long acc = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      acc += q[k];
      r[k] = acc;
    }
    q = r.empty() ? IntPoly{0} : r;
    ++c;
  }
  data.reduced_numerator = q;
  const int D = static_cast<int>(ring->arity()) - c;
  data.krull_dimension = D;
  data.dimension = D - 1;
  data.degree = 0;
  for (auto v : q) data.degree += v;
  if (D >= 1) {
    // Σ_i q_i · C(k − i + D − 1, D − 1) as a polynomial in k.
    std::vector<mpq_class> total(static_cast<std::size_t>(D), 0);
    mpz_class fact = 1;
    for (int j = 2; j <= D - 1; ++j) fact *= j;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      std::vector<mpq_class> p = {1};
      for (int j = 1; j <= D - 1; ++j) {
        // multiply by (k + (j − i))
        std::vector<mpq_class> next(p.size() + 1, 0);
        const long long shift = j - static_cast<long long>(i);
        for (std::size_t a = 0; a < p.size(); ++a) {
          next[a] += p[a] * static_cast<long>(shift);
          next[a + 1] += p[a];
        }
        p = std::move(next);
      }
      for (std::size_t a = 0; a < p.size(); ++a) total[a] += p[a] * static_cast<long>(q[i]) / fact;
    }
    for (auto& v : total) v.canonicalize();
    while (!total.empty() && total.back() == 0) total.pop_back();
    data.polynomial = std::move(total);
  }
  return data;
}

long long HilbertData::function(int k) const {
  if (k < 0) return 0;
  mpz_class acc = 0;
  const long long n = static_cast<long long>(arity);
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    if (numerator[j] == 0 || static_cast<long long>(j) > k) continue;
    acc += static_cast<long>(numerator[j]) * binomial(k - static_cast<long long>(j) + n - 1, n - 1);
  }
  return acc.get_si();
}

mpq_class HilbertData::polynomial_at(long long k) const {
  mpq_class acc = 0;
  mpq_class power = 1;
  for (const auto& c : polynomial) {
    acc += c * power;
    power *= static_cast<long>(k);
  }
  return acc;
}

std::string HilbertData::polynomial_string() const {
  if (polynomial.empty()) return "0";
  std::string out;
  for (std::size_t i = polynomial.size(); i-- > 0;) {
    const mpq_class& c = polynomial[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const mpq_class mag = abs(c);
    if (i == 0 || mag != 1) {
      out += mag.get_str();
      if (i > 0) out += '*';
    }
    if (i >= 1) out += 't';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

int codim(const Ideal& I) { return static_cast<int>(I.ring()->arity()) - hilbert(I).krull_dimension; }
int dim(const Ideal& I) { return hilbert(I).dimension; }
long long degree(const Ideal& I) { return hilbert(I).degree; }

}  // namespace cubiclab
