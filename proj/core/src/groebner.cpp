#include "cubiclab/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "cubiclab/error.hpp"
#include "cubiclab/linalg.hpp"

namespace cubiclab {

struct GroebnerAccess {
  static GroebnerBasis make(RingPtr ring, std::vector<Polynomial> elements) {
    GroebnerBasis gb(std::move(ring));
    gb.elements_ = std::move(elements);
    return gb;
  }
};

namespace {

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] != 0) mask |= 1u << i;
  }
  return mask;
}

struct Element {
  Polynomial poly;
  Monomial lead;
  std::uint32_t mask;
  int sugar;
  bool active = true;
  std::vector<Polynomial> cofactors;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, std::size_t tracked) : ring_(std::move(ring)), tracked_(tracked) {}

  void add_input(const Polynomial& f, std::size_t index) {
    std::vector<Polynomial> cof;
    if (tracked_ > 0) {
      cof.assign(tracked_, Polynomial(ring_));
      cof[index] = Polynomial::constant(ring_, 1);
    }
    insert(f, std::move(cof), f.degree());
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      const std::size_t k = select();
      const Pair p = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      const Element& a = elems_[p.i];
      const Element& b = elems_[p.j];
      const Monomial ma = p.lcm / a.lead;
      const Monomial mb = p.lcm / b.lead;
      Polynomial s = a.poly.mul_term(ma, Scalar::one(ring_->field()));
      s.sub_mul_assign(Scalar::one(ring_->field()), mb, b.poly);
      std::vector<Polynomial> cof;
      if (tracked_ > 0) {
        cof.reserve(tracked_);
        for (std::size_t l = 0; l < tracked_; ++l) {
          Polynomial c = a.cofactors[l].mul_term(ma, Scalar::one(ring_->field()));
          c.sub_mul_assign(Scalar::one(ring_->field()), mb, b.cofactors[l]);
          cof.push_back(std::move(c));
        }
      }
      insert(s, std::move(cof), p.sugar);
    }
  }

  std::vector<Element*> final_basis() {
    std::vector<Element*> basis;
    for (auto& e : elems_) {
      if (e.active) basis.push_back(&e);
    }
    if (unit_) {
      basis.assign(1, &elems_[*unit_]);
      return basis;
    }
    // Tail-reduce each element by the others; leading monomials are minimal.
    for (Element* e : basis) {
      e->active = false;
      reduce(e->poly, e->cofactors, e->sugar, true, 1);
      e->active = true;
      normalize(*e);
    }
    const Ring& r = *ring_;
    std::sort(basis.begin(), basis.end(), [&r](const Element* x, const Element* y) {
      return r.compare(x->lead, y->lead) < 0;
    });
    return basis;
  }

 private:
  const Element* find_divisor(const Monomial& m) const {
    const std::uint32_t mask = support_mask(m);
    const Element* best = nullptr;
    for (const auto& e : elems_) {
      if (!e.active || (e.mask & ~mask) != 0 || !e.lead.divides(m)) continue;
      if (best == nullptr || e.poly.size() < best->poly.size()) best = &e;
    }
    return best;
  }

  // Reduces h (and its cofactors) by the active elements, starting at term
  // `from` (0 = full reduction, 1 = tail only).
  void reduce(Polynomial& h, std::vector<Polynomial>& cof, int& sugar, bool tail, std::size_t from = 0) {
    std::size_t i = from;
    while (i < h.size()) {
      const Term& t = h.terms()[i];
      const Element* g = find_divisor(t.monomial);
      if (g == nullptr) {
        if (!tail) return;
        ++i;
        continue;
      }
      const Monomial m = t.monomial / g->lead;
      const Scalar c = t.coefficient / g->poly.leading_coefficient();
      sugar = std::max(sugar, g->sugar + ring_->weighted_degree(m));
      for (std::size_t l = 0; l < cof.size(); ++l) cof[l].sub_mul_assign(c, m, g->cofactors[l]);
      h.sub_mul_assign(c, m, g->poly);
    }
  }

  void normalize(Element& e) {
    if (e.poly.leading_coefficient().is_one()) return;
    const Scalar inv = e.poly.leading_coefficient().inverse();
    e.poly = e.poly.scaled(inv);
    for (auto& c : e.cofactors) c = c.scaled(inv);
  }

  void insert(Polynomial h, std::vector<Polynomial> cof, int sugar) {
    reduce(h, cof, sugar, false);
    if (h.is_zero()) return;
    reduce(h, cof, sugar, true, 1);
    Element e{std::move(h), Monomial(), 0, sugar, true, std::move(cof)};
    e.lead = e.poly.leading_monomial();
    e.mask = support_mask(e.lead);
    normalize(e);
    const std::size_t index = elems_.size();
    elems_.push_back(std::move(e));
    if (elems_.back().lead.is_one()) {
      unit_ = index;
      return;
    }
    update(index);
  }

  // Gebauer–Möller update for the new element `h`.
  void update(std::size_t h) {
    const Monomial lh = elems_[h].lead;
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (!elems_[g].active) continue;
      candidates.push_back(make_pair(g, h));
    }
    // Chain criterion among the new pairs.
    std::vector<bool> keep(candidates.size(), true);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const bool coprime = elems_[candidates[a].i].lead.coprime(lh);
      if (coprime) continue;
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (!candidates[b].lcm.divides(candidates[a].lcm)) continue;
        if (candidates[b].lcm == candidates[a].lcm && b > a) continue;
        keep[a] = false;
        break;
      }
    }
    // Coprime criterion (applied after the chain step, as in Gebauer–Möller).
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a]) continue;
      if (elems_[candidates[a].i].lead.coprime(lh)) continue;
      fresh.push_back(candidates[a]);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + fresh.size());
    for (const auto& p : pairs_) {
      if (lh.divides(p.lcm) && !(lcm(elems_[p.i].lead, lh) == p.lcm) &&
          !(lcm(elems_[p.j].lead, lh) == p.lcm)) {
        continue;
      }
      kept.push_back(p);
    }
    for (auto& p : fresh) kept.push_back(std::move(p));
    pairs_ = std::move(kept);
    for (std::size_t g = 0; g < h; ++g) {
      if (elems_[g].active && lh.divides(elems_[g].lead)) elems_[g].active = false;
    }
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const Monomial l = lcm(elems_[i].lead, elems_[j].lead);
    const int si = elems_[i].sugar + ring_->weighted_degree(l / elems_[i].lead);
    const int sj = elems_[j].sugar + ring_->weighted_degree(l / elems_[j].lead);
    return Pair{i, j, l, std::max(si, sj)};
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const int c = ring_->compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && (a.j < b.j || (a.j == b.j && a.i < b.i)))) best = k;
    }
    return best;
  }

  RingPtr ring_;
  std::size_t tracked_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  std::optional<std::size_t> unit_;
};

RingPtr common_ring(std::span<const Polynomial> gens) {
  if (gens.empty()) throw PreconditionError("groebner_basis needs at least one generator");
  const RingPtr& ring = gens.front().ring();
  for (const auto& g : gens) require_same_ring(g.ring(), ring, "groebner_basis");
  return ring;
}

std::vector<std::size_t> insertion_order(std::span<const Polynomial> gens) {
  std::vector<std::size_t> order(gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const RingPtr& ring = gens.front().ring();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int da = gens[a].degree();
    const int db = gens[b].degree();
    if (da != db) return da < db;
    if (gens[a].is_zero() || gens[b].is_zero()) return false;
    return ring->compare(gens[a].leading_monomial(), gens[b].leading_monomial()) < 0;
  });
  return order;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.leading_monomial());
  return out;
}

bool GroebnerBasis::contains(const Polynomial& f) const {
  return normal_form(f, *this).is_zero();
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& d : divisors) require_same_ring(d.ring(), f.ring(), "normal_form");
  Polynomial h = f;
  std::size_t i = 0;
  while (i < h.size()) {
    const Term& t = h.terms()[i];
    const Polynomial* g = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && d.leading_monomial().divides(t.monomial)) {
        g = &d;
        break;
      }
    }
    if (g == nullptr) {
      ++i;
      continue;
    }
    const Scalar c = t.coefficient / g->leading_coefficient();
    const Monomial m = t.monomial / g->leading_monomial();
    h.sub_mul_assign(c, m, *g);
  }
  return h;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  require_same_ring(f.ring(), gb.ring(), "normal_form");
  return normal_form(f, std::span<const Polynomial>(gb.elements()));
}

GroebnerBasis groebner_basis(std::span<const Polynomial> gens) {
  const RingPtr ring = common_ring(gens);
  Buchberger engine(ring, 0);
  for (std::size_t idx : insertion_order(gens)) {
    if (!gens[idx].is_zero()) engine.add_input(gens[idx], idx);
  }
  engine.run();
  std::vector<Polynomial> out;
  for (Element* e : engine.final_basis()) out.push_back(std::move(e->poly));
  return GroebnerAccess::make(ring, std::move(out));
}

GroebnerBasis groebner_basis(std::span<const Polynomial> gens, const TermOrder& order) {
  const RingPtr ring = common_ring(gens);
  if (ring->order() == order) return groebner_basis(gens);
  const RingPtr target = ring->with_order(order);
  std::vector<int> identity(ring->arity());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(g.in_ring(target, identity));
  return groebner_basis(moved);
}

TrackedBasis tracked_groebner_basis(std::span<const Polynomial> gens) {
  const RingPtr ring = common_ring(gens);
  Buchberger engine(ring, gens.size());
  for (std::size_t idx : insertion_order(gens)) {
    if (!gens[idx].is_zero()) engine.add_input(gens[idx], idx);
  }
  engine.run();
  std::vector<Polynomial> out;
  std::vector<std::vector<Polynomial>> cof;
  for (Element* e : engine.final_basis()) {
    out.push_back(std::move(e->poly));
    cof.push_back(std::move(e->cofactors));
  }
  return TrackedBasis{GroebnerAccess::make(ring, std::move(out)), std::move(cof)};
}

bool verify_groebner_basis(const GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (!el[i].leading_coefficient().is_one()) return false;
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : el[j].terms()) {
        if (el[i].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  const Scalar one = Scalar::one(gb.ring()->field());
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      const Monomial l = lcm(el[i].leading_monomial(), el[j].leading_monomial());
      Polynomial s = el[i].mul_term(l / el[i].leading_monomial(), one);
      s.sub_mul_assign(one, l / el[j].leading_monomial(), el[j]);
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Division of f by the basis recording quotients: f = Σ q_k g_k + remainder.
Polynomial divide(const Polynomial& f, const std::vector<Polynomial>& basis, std::vector<Polynomial>& quotients) {
  quotients.assign(basis.size(), Polynomial(f.ring()));
  Polynomial h = f;
  std::size_t i = 0;
  while (i < h.size()) {
    const Term& t = h.terms()[i];
    std::size_t k = 0;
    while (k < basis.size() && !basis[k].leading_monomial().divides(t.monomial)) ++k;
    if (k == basis.size()) {
      ++i;
      continue;
    }
    const Scalar c = t.coefficient / basis[k].leading_coefficient();
    const Monomial m = t.monomial / basis[k].leading_monomial();
    quotients[k] = quotients[k] + Polynomial::monomial(f.ring(), m, c);
    h.sub_mul_assign(c, m, basis[k]);
  }
  return h;
}

int check_equal_degree(std::span<const Polynomial> gens) {
  std::optional<int> degree;
  for (const auto& g : gens) {
    const auto d = g.homogeneous_degree();
    if (!d) throw PreconditionError("syzygies need homogeneous nonzero generators");
    if (degree && *degree != *d) throw PreconditionError("syzygies need generators of one degree");
    degree = d;
  }
  if (!degree) throw PreconditionError("syzygies need at least one generator");
  return *degree;
}

std::optional<int> vector_degree(const std::vector<Polynomial>& v) {
  for (const auto& e : v) {
    if (!e.is_zero()) return e.degree();
  }
  return std::nullopt;
}

}  // namespace

std::vector<SyzygyVector> first_syzygies(std::span<const Polynomial> gens) {
  check_equal_degree(gens);
  const RingPtr ring = gens.front().ring();
  const std::size_t m = gens.size();
  const TrackedBasis tracked = tracked_groebner_basis(gens);
  const auto& g = tracked.basis.elements();
  const auto& cof = tracked.cofactors;
  const Scalar one = Scalar::one(ring->field());

  std::vector<SyzygyVector> out;
  auto emit = [&](std::vector<Polynomial> v) {
    if (auto d = vector_degree(v)) out.push_back(SyzygyVector{std::move(v), *d});
  };
  // G-coordinates to F-coordinates through the cofactor matrix.
  auto to_generators = [&](const std::vector<Polynomial>& s) {
    std::vector<Polynomial> v(m, Polynomial(ring));
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k].is_zero()) continue;
      for (std::size_t l = 0; l < m; ++l) {
        if (!cof[k][l].is_zero()) v[l] = v[l] + s[k] * cof[k][l];
      }
    }
    return v;
  };

  std::vector<Polynomial> q;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Monomial l = lcm(g[i].leading_monomial(), g[j].leading_monomial());
      const Monomial mi = l / g[i].leading_monomial();
      const Monomial mj = l / g[j].leading_monomial();
      Polynomial s = g[i].mul_term(mi, one);
      s.sub_mul_assign(one, mj, g[j]);
      divide(s, g, q);
      for (auto& e : q) e = -e;
      q[i] = q[i] + Polynomial::monomial(ring, mi, one);
      q[j] = q[j] - Polynomial::monomial(ring, mj, one);
      emit(to_generators(q));
    }
  }
  // e_i − (representation of f_i through the basis).
  for (std::size_t i = 0; i < m; ++i) {
    divide(gens[i], g, q);
    std::vector<Polynomial> v = to_generators(q);
    for (auto& e : v) e = -e;
    v[i] = v[i] + Polynomial::constant(ring, 1);
    emit(std::move(v));
  }
  return out;
}

bool is_syzygy(const SyzygyVector& s, std::span<const Polynomial> gens) {
  if (s.entries.size() != gens.size()) return false;
  Polynomial sum(gens.front().ring());
  for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + s.entries[i] * gens[i];
  return sum.is_zero();
}

LinearSyzygyReport linear_syzygy_test(std::span<const Polynomial> gens) {
  const int d = check_equal_degree(gens);
  const RingPtr ring = gens.front().ring();
  const Field& field = ring->field();
  const std::size_t m = gens.size();
  LinearSyzygyReport report;
  report.generators = m;

  // Linear syzygies: Σ a_i f_i = 0 with a_i linear forms.
  const auto linear = monomials_of_degree(ring, 1);
  const MonomialIndex target(monomials_of_degree(ring, d + 1));
  DenseMatrix system(target.size(), m * linear.size(), field);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t v = 0; v < linear.size(); ++v) {
      const std::size_t col = i * linear.size() + v;
      for (const auto& t : gens[i].terms()) system.at(target(t.monomial * linear[v]), col) = t.coefficient;
    }
  }
  std::vector<std::vector<Polynomial>> syz;
  for (const auto& null : system.nullspace()) {
    std::vector<Polynomial> vec(m, Polynomial(ring));
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Term> terms;
      for (std::size_t v = 0; v < linear.size(); ++v) {
        const Scalar& c = null[i * linear.size() + v];
        if (!c.is_zero()) terms.push_back({linear[v], c});
      }
      vec[i] = Polynomial::from_terms(ring, std::move(terms));
    }
    syz.push_back(std::move(vec));
  }
  report.linear_syzygies = syz.size();

  // Span of (monomials of degree e−1) · (linear syzygies) inside degree-e vectors.
  auto span_in_degree = [&](int e) {
    auto index = std::make_shared<MonomialIndex>(monomials_of_degree(ring, e));
    RowSpace space(m * index->size(), field);
    for (const auto& mono : monomials_of_degree(ring, e - 1)) {
      for (const auto& s : syz) {
        std::vector<Scalar> row(m * index->size(), Scalar::zero(field));
        for (std::size_t i = 0; i < m; ++i) {
          for (const auto& t : s[i].terms()) row[i * index->size() + (*index)(t.monomial * mono)] = t.coefficient;
        }
        space.add(std::move(row));
      }
    }
    return std::make_pair(index, std::move(space));
  };
  auto flatten = [&](const std::vector<Polynomial>& v, const MonomialIndex& index) {
    std::vector<Scalar> row(m * index.size(), Scalar::zero(field));
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& t : v[i].terms()) row[i * index.size() + index(t.monomial)] = t.coefficient;
    }
    return row;
  };

  {
    auto [index, space] = span_in_degree(d);
    report.koszul_in_linear = true;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        std::vector<Polynomial> k(m, Polynomial(ring));
        k[i] = gens[j];
        k[j] = -gens[i];
        ++report.koszul_checked;
        if (!space.contains(flatten(k, *index))) report.koszul_in_linear = false;
      }
    }
  }

  report.syzygies_generated_by_linear = true;
  std::vector<SyzygyVector> all = first_syzygies(gens);
  std::sort(all.begin(), all.end(), [](const SyzygyVector& a, const SyzygyVector& b) { return a.degree < b.degree; });
  std::optional<int> current;
  std::shared_ptr<MonomialIndex> index;
  std::optional<RowSpace> space;
  for (const auto& s : all) {
    if (s.degree < 1) {
      report.syzygies_generated_by_linear = false;
      break;
    }
    if (current != s.degree) {
      auto built = span_in_degree(s.degree);
      index = built.first;
      space.emplace(std::move(built.second));
      current = s.degree;
    }
    if (!space->contains(flatten(s.entries, *index))) {
      report.syzygies_generated_by_linear = false;
      break;
    }
  }
  return report;
}

}  // namespace cubiclab
