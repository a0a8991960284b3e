#include "cubiclab/catalog.hpp"

#include <algorithm>
#include <array>

#include "cubiclab/error.hpp"
#include "cubiclab/geometry.hpp"
#include "cubiclab/groebner.hpp"
#include "cubiclab/linalg.hpp"
#include "cubiclab/parse.hpp"
#include "cubiclab/resources.hpp"

namespace cubiclab {

namespace {

Polynomial var(const RingPtr& r, std::size_t i) { return Polynomial::variable(r, i); }

std::vector<Polynomial> minors_2x2(const RingPtr& r, const std::array<std::array<int, 4>, 2>& m) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      out.push_back(var(r, m[0][i]) * var(r, m[1][j]) - var(r, m[0][j]) * var(r, m[1][i]));
    }
  }
  return out;
}

std::array<std::array<int, 4>, 2> scroll_matrix(ScrollKind kind) {
  if (kind == ScrollKind::s22) return {{{0, 1, 3, 4}, {1, 2, 4, 5}}};
  return {{{0, 2, 3, 4}, {1, 3, 4, 5}}};
}

Ideal resource_ideal(const char* name, const RingPtr& ring) {
  return Ideal(ring, parse_polynomial_list(std::string(fixture_file(name)), ring));
}

// The part of K of bidegree (k, 1) in (l, x), where the first `params`
// variables are l and the rest are x: the kernel of the normal form map on
// l^k·x monomials.
std::vector<Polynomial> x_linear_part(const Ideal& K, std::size_t params, int k) {
  const RingPtr& ring = K.ring();
  const GroebnerBasis& gb = K.groebner();
  const Scalar one = Scalar::one(ring->field());
  std::vector<Monomial> monos;
  // l-monomials of degree k times each x variable.
  std::vector<std::vector<int>> lexps;
  std::vector<int> e(params, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == params) {
      e[i] = left;
      lexps.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, k);
  for (const auto& le : lexps) {
    for (std::size_t x = params; x < ring->arity(); ++x) {
      std::vector<int> full(ring->arity(), 0);
      for (std::size_t i = 0; i < params; ++i) full[i] = le[i];
      full[x] = 1;
      monos.push_back(Monomial::from_exponents(full));
    }
  }
  std::vector<Polynomial> forms;
  for (const auto& m : monos) forms.push_back(normal_form(Polynomial::monomial(ring, m, one), gb));
  std::vector<Monomial> support;
  for (const auto& f : forms) {
    for (const auto& t : f.terms()) support.push_back(t.monomial);
  }
  std::sort(support.begin(), support.end(), [](const Monomial& a, const Monomial& b) {
    return compare_monomials(a, b, TermOrder::lex()) > 0;
  });
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const MonomialIndex index(support);
  DenseMatrix m(support.size(), monos.size(), ring->field());
  for (std::size_t c = 0; c < forms.size(); ++c) {
    for (const auto& t : forms[c].terms()) m.at(index(t.monomial), c) = t.coefficient;
  }
  std::vector<Polynomial> out;
  for (const auto& v : m.nullspace()) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (!v[c].is_zero()) terms.push_back({monos[c], v[c]});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace

RingPtr p5_ring(const Field& field) { return Ring::projective(5, field, "x"); }
RingPtr p2_ring(const Field& field) { return Ring::projective(2, field, "t"); }

Ideal quartic_scroll(ScrollKind kind, const RingPtr& ring) {
  if (ring->arity() != 6) throw PreconditionError("quartic scrolls live in P^5");
  return Ideal(ring, minors_2x2(ring, scroll_matrix(kind)));
}

RingMap scroll_quadric_map(ScrollKind kind, const RingPtr& ring) {
  return RingMap(Ring::projective(5, ring->field(), "y"), ring, quartic_scroll(kind, ring).generators());
}

ParamSurface del_pezzo_quintic(const Field& field) {
  const RingPtr x = p5_ring(field);
  const RingPtr t = p2_ring(field);
  const Polynomial a = var(t, 0) * var(t, 1) - var(t, 1) * var(t, 2);
  const Polynomial b = var(t, 0) * var(t, 2) - var(t, 1) * var(t, 2);
  std::vector<Polynomial> forms;
  for (const auto& q : {b, a}) {
    for (std::size_t i = 0; i < 3; ++i) forms.push_back(var(t, i) * q);
  }
  return ParamSurface{"delpezzo", resource_ideal("del-pezzo.quadrics", x), RingMap(x, t, std::move(forms))};
}

Polynomial ConicPencil::member(long l0, long l1) const {
  const Field& f = first.ring()->field();
  return first.scaled(Scalar(l0, f)) + second.scaled(Scalar(l1, f));
}

Ideal ConicPencil::conic(long l0, long l1) const {
  const RingPtr& t = surface.parametrization.target();
  return saturate(preimage(surface.parametrization, Ideal(t, {member(l0, l1)})));
}

std::vector<ConicPencil> conic_pencils(const ParamSurface& S) {
  if (S.label != "delpezzo") throw PreconditionError("conic pencils are defined for the del Pezzo quintic");
  const RingPtr& t = S.parametrization.target();
  const Polynomial t0 = var(t, 0), t1 = var(t, 1), t2 = var(t, 2);
  std::vector<ConicPencil> out;
  out.push_back({"lines-p1", S, t1, t2, 1});
  out.push_back({"lines-p2", S, t0, t2, 2});
  out.push_back({"lines-p3", S, t0, t1, 3});
  out.push_back({"lines-p4", S, t0 - t1, t1 - t2, 4});
  out.push_back({"conics", S, t0 * t1 - t1 * t2, t0 * t2 - t1 * t2, std::nullopt});
  return out;
}

Ideal segre_threefold(const ConicPencil& pencil) {
  const RingMap& h = pencil.surface.parametrization;
  const RingPtr& t = h.target();
  const RingPtr& x = h.source();
  const Field& field = x->field();
  const int d = h.degree();

  // Graph of the parametrization over the pencil: k[t, l, x] with the
  // incidence l0*first + l1*second = 0, weights t:1, l:1, x:d.
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 0; i < t->arity(); ++i) {
    names.push_back("_" + t->names()[i]);
    weights.push_back(1);
  }
  for (const char* l : {"l_0", "l_1"}) {
    names.emplace_back(l);
    weights.push_back(1);
  }
  for (std::size_t i = 0; i < x->arity(); ++i) {
    names.push_back(x->names()[i]);
    weights.push_back(d);
  }
  // l carries weight 1 but each incidence term has l-degree 1 and t-degree e,
  // so the incidence is homogeneous of weight e + 1.
  const std::size_t nt = t->arity();
  const RingPtr graph = Ring::make(field, names, TermOrder::elimination(nt), weights);
  std::vector<int> tmap(nt), xmap(x->arity());
  for (std::size_t i = 0; i < nt; ++i) tmap[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < x->arity(); ++i) xmap[i] = static_cast<int>(nt + 2 + i);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < x->arity(); ++i) {
    gens.push_back(var(graph, nt + 2 + i) - h.forms()[i].in_ring(graph, tmap));
  }
  gens.push_back(var(graph, nt) * pencil.first.in_ring(graph, tmap) +
                 var(graph, nt + 1) * pencil.second.in_ring(graph, tmap));

  std::vector<std::string> lx_names(names.begin() + static_cast<long>(nt), names.end());
  std::vector<int> lx_weights(weights.begin() + static_cast<long>(nt), weights.end());
  const RingPtr lx = Ring::make(field, lx_names, TermOrder::grevlex(), lx_weights);
  const Ideal K = eliminate(Ideal(graph, gens), nt, lx);

  // Linear forms in x with coefficients in l vanishing on the conic of
  // parameter l, in a standard graded copy of k[l, x].
  const RingPtr flat = Ring::make(field, lx_names, TermOrder::elimination(2));
  std::vector<int> identity(lx_names.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  std::vector<Polynomial> planes;
  for (int k = 0; k <= 2; ++k) {
    for (const auto& f : x_linear_part(K, 2, k)) planes.push_back(f.in_ring(flat, identity));
  }
  if (planes.empty()) throw PreconditionError("degenerate pencil: no linear forms through its conics");
  const Ideal l_irrelevant(flat, {var(flat, 0), var(flat, 1)});
  const Ideal incidence = saturate(Ideal(flat, planes), l_irrelevant);
  const Ideal sigma = saturate(eliminate(incidence, 2, x));
  const HilbertData hd = hilbert(sigma);
  if (hd.dimension != 3 || hd.degree != 3) {
    throw PreconditionError("degenerate pencil '" + pencil.label + "': swept variety has dimension " +
                            std::to_string(hd.dimension) + " and degree " + std::to_string(hd.degree));
  }
  return sigma;
}

std::vector<NamedIdeal> standard_planes(const Field& field) {
  const RingPtr x = p5_ring(field);
  std::vector<NamedIdeal> out;
  for (const char* n : {"a", "b", "c", "d", "e"}) {
    out.push_back({n, resource_ideal(("dp-" + std::string(n) + ".plane").c_str(), x)});
  }
  out.push_back({"p1", resource_ideal("skew-planes.p1", x)});
  out.push_back({"p2", resource_ideal("skew-planes.p2", x)});
  out.push_back({"x012", Ideal(x, {var(x, 3), var(x, 4), var(x, 5)})});
  out.push_back({"x345", Ideal(x, {var(x, 0), var(x, 1), var(x, 2)})});
  return out;
}

Ideal standard_plane(std::string_view name, const Field& field) {
  for (auto& p : standard_planes(field)) {
    if (p.name == name) return p.ideal;
  }
  throw PreconditionError("unknown plane '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out = {"scroll:s22", "scroll:s13", "delpezzo", "skew-planes"};
  for (const auto& p : standard_planes()) out.push_back("plane:" + p.name);
  for (const char* p : {"lines-p1", "lines-p2", "lines-p3", "lines-p4", "conics"}) {
    out.push_back(std::string("conic:") + p);
    out.push_back(std::string("segre:") + p);
  }
  return out;
}

Ideal catalog_entry(std::string_view name, const Field& field) {
  if (name == "scroll:s22") return quartic_scroll(ScrollKind::s22, p5_ring(field));
  if (name == "scroll:s13") return quartic_scroll(ScrollKind::s13, p5_ring(field));
  if (name == "delpezzo") return del_pezzo_quintic(field).ideal;
  if (name == "skew-planes") return intersect(standard_plane("p1", field), standard_plane("p2", field));
  if (name.starts_with("plane:")) return standard_plane(name.substr(6), field);
  const auto colon = name.find(':');
  const std::string kind(name.substr(0, colon));
  if (colon != std::string_view::npos && (kind == "conic" || kind == "segre")) {
    const std::string label(name.substr(colon + 1));
    for (const auto& p : conic_pencils(del_pezzo_quintic(field))) {
      if (p.label == label) return kind == "conic" ? p.conic(1, 2) : segre_threefold(p);
    }
  }
  throw PreconditionError("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace cubiclab
