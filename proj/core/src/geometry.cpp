#include "cubiclab/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cubiclab/error.hpp"
#include "cubiclab/linalg.hpp"

namespace cubiclab {

namespace {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return;
  while (true) {
    visit(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Determinant of the square submatrix rows × cols by Laplace expansion along
// rows, memoized on the set of remaining columns.
Polynomial minor(const std::vector<std::vector<Polynomial>>& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols, const RingPtr& ring) {
  std::map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::size_t, std::uint32_t)> det = [&](std::size_t depth, std::uint32_t mask) {
    if (depth == rows.size()) return Polynomial::constant(ring, 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial acc(ring);
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (mask & (1u << k)) continue;
      const Polynomial& entry = m[rows[depth]][cols[k]];
      if (!entry.is_zero()) {
        const Polynomial sub = det(depth + 1, mask | (1u << k));
        if (!sub.is_zero()) acc = sign > 0 ? acc + entry * sub : acc - entry * sub;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return det(0, 0);
}

}  // namespace

Ideal reduce_mod(const Ideal& I, std::uint32_t p) {
  const RingPtr target = I.ring()->with_field(Field::prime(p));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.in_field(target));
  return Ideal(target, std::move(gens));
}

SmoothnessResult check_smoothness(const Ideal& input, const SmoothnessOptions& options) {
  SmoothnessResult result;
  result.certified = !options.prime.has_value() || !input.ring()->field().is_rational() ||
                     input.ring()->field().characteristic() == *options.prime;
  const Ideal I = options.prime && input.ring()->field().characteristic() != *options.prime
                      ? reduce_mod(input, *options.prime)
                      : input;
  const RingPtr& ring = I.ring();
  const std::size_t n = ring->arity();
  result.codim = codim(I);
  if (I.is_unit() || result.codim == 0) {
    // Empty scheme, or the whole space.
    result.smooth = true;
    result.singular_codim = static_cast<int>(n);
    return result;
  }
  const Ideal trimmed = trim(I);
  const auto& gens = trimmed.generators();
  const std::size_t c = static_cast<std::size_t>(result.codim);
  const double count = binomial(gens.size(), c) * binomial(n, c);
  if (count > options.minor_cap) {
    throw BudgetExceeded("Jacobian has " + std::to_string(static_cast<long long>(count)) +
                         " minors of size " + std::to_string(c) + ", above the cap");
  }
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(g.derivative(j));
    jac.push_back(std::move(row));
  }
  std::vector<Polynomial> sing = gens;
  subsets(gens.size(), c, [&](const std::vector<std::size_t>& rows) {
    subsets(n, c, [&](const std::vector<std::size_t>& cols) {
      ++result.minors;
      Polynomial d = minor(jac, rows, cols, ring);
      if (!d.is_zero()) sing.push_back(std::move(d));
    });
  });
  result.singular_codim = codim(Ideal(ring, std::move(sing)));
  result.smooth = result.singular_codim >= static_cast<int>(n);
  return result;
}

bool is_smooth(const Ideal& I, const SmoothnessOptions& options) { return check_smoothness(I, options).smooth; }

bool is_smooth_hypersurface(const Polynomial& f) {
  const RingPtr& ring = f.ring();
  std::vector<Polynomial> gens = {f};
  for (std::size_t j = 0; j < ring->arity(); ++j) gens.push_back(f.derivative(j));
  return saturate(Ideal(ring, std::move(gens))).is_unit();
}

bool scheme_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "scheme_equal");
  return saturate(I) == saturate(J);
}

int linear_span_codim(const Ideal& I) { return static_cast<int>(graded_basis(saturate(I), 1).size()); }

DenseMatrix quadratic_form_matrix(const Polynomial& q) {
  if (q.homogeneous_degree() != 2 || !q.ring()->standard_graded()) {
    throw PreconditionError("expected a quadratic form");
  }
  const RingPtr& ring = q.ring();
  const Field& field = ring->field();
  if (field.characteristic() == 2) throw PreconditionError("quadratic forms need characteristic other than 2");
  const std::size_t n = ring->arity();
  DenseMatrix m(n, n, field);
  const Scalar half = Scalar(2, field).inverse();
  for (const auto& t : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (int e = 0; e < t.monomial[i]; ++e) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      m.at(idx[0], idx[0]) = t.coefficient;
    } else {
      m.at(idx[0], idx[1]) = t.coefficient * half;
      m.at(idx[1], idx[0]) = t.coefficient * half;
    }
  }
  return m;
}

std::size_t quadratic_rank(const Polynomial& q) { return quadratic_form_matrix(q).rank(); }

Ideal linear_subspace_ideal(const RingPtr& ring, const std::vector<std::vector<Scalar>>& points) {
  const std::size_t n = ring->arity();
  DenseMatrix m(points.size(), n, ring->field());
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (points[r].size() != n) throw PreconditionError("point has the wrong number of coordinates");
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = points[r][c];
  }
  std::vector<Polynomial> forms;
  for (const auto& v : m.nullspace()) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < n; ++c) {
      if (!v[c].is_zero()) terms.push_back({Monomial(n).with_exponent(c, 1), v[c]});
    }
    forms.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(forms));
}

std::string PlaneSectionClass::label() const {
  switch (kind) {
    case Kind::empty:
      return "empty";
    case Kind::points:
      return "points(" + std::to_string(degree) + (reduced ? ", reduced)" : ", nonreduced)");
    case Kind::line:
      return "line";
    case Kind::irreducible_conic:
      return "irreducible-conic";
    case Kind::reducible_conic:
      return "reducible-conic";
    case Kind::other:
      return "other(" + std::to_string(dimension) + ", " + std::to_string(degree) + ")";
  }
  return "?";
}

PlaneSectionClass classify_plane_section(const Ideal& surface, const Ideal& plane) {
  require_same_ring(surface.ring(), plane.ring(), "classify_plane_section");
  const RingPtr& ring = surface.ring();
  const std::size_t n = ring->arity();
  const auto linear = graded_basis(plane, 1);
  if (linear.size() != n - 3 || !(Ideal(ring, linear) == plane)) {
    throw PreconditionError("plane ideal must be generated by " + std::to_string(n - 3) + " independent linear forms");
  }
  const Ideal section = saturate(surface + plane);
  PlaneSectionClass cls;
  if (section.is_unit()) return cls;
  const HilbertData h = hilbert(section);
  cls.dimension = h.dimension;
  cls.degree = h.degree;
  if (h.dimension == 0) {
    cls.kind = PlaneSectionClass::Kind::points;
    cls.reduced = is_smooth(section);
    return cls;
  }
  if (h.dimension == 1 && h.degree == 1) {
    cls.kind = PlaneSectionClass::Kind::line;
    return cls;
  }
  if (h.dimension == 1 && h.degree == 2) {
    // Parametrize the plane by the kernel of its linear forms and restrict
    // the conic's quadric to it.
    DenseMatrix a(linear.size(), n, ring->field());
    for (std::size_t r = 0; r < linear.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) a.at(r, c) = linear[r].coefficient(Monomial(n).with_exponent(c, 1));
    }
    const auto basis = a.nullspace();
    const RingPtr coords = Ring::projective(2, ring->field(), "s");
    std::vector<Polynomial> images(n, Polynomial(coords));
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < 3; ++k) {
        if (!basis[k][c].is_zero()) terms.push_back({Monomial(3).with_exponent(k, 1), basis[k][c]});
      }
      images[c] = Polynomial::from_terms(coords, std::move(terms));
    }
    for (const auto& q : graded_basis(section, 2)) {
      const Polynomial restricted = q.substitute(images);
      if (restricted.is_zero()) continue;
      cls.kind = quadratic_rank(restricted) == 3 ? PlaneSectionClass::Kind::irreducible_conic
                                                 : PlaneSectionClass::Kind::reducible_conic;
      return cls;
    }
  }
  cls.kind = PlaneSectionClass::Kind::other;
  return cls;
}

SchemeSummary summarize(const Ideal& I, const SmoothnessOptions& options) {
  const Ideal& sat = saturate(I);
  const HilbertData h = hilbert(sat);
  SchemeSummary s;
  s.dimension = h.dimension;
  s.degree = h.degree;
  s.codim = static_cast<int>(I.ring()->arity()) - h.krull_dimension;
  s.smooth = is_smooth(sat, options);
  s.span_codim = static_cast<int>(graded_basis(sat, 1).size());
  return s;
}

}  // namespace cubiclab
