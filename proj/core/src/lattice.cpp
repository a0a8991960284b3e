#include "cubiclab/lattice.hpp"

#include <gmpxx.h>

#include "cubiclab/error.hpp"

namespace cubiclab {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace

void IntersectionLattice::validate() const {
  const std::size_t n = labels.size();
  if (gram.size() != n) throw PreconditionError("Gram matrix size does not match the basis");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw PreconditionError("Gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) throw PreconditionError("Gram matrix is not symmetric");
    }
  }
}

long long IntersectionLattice::pairing(const std::vector<long long>& a, const std::vector<long long>& b) const {
  if (a.size() != rank() || b.size() != rank()) throw PreconditionError("class has the wrong rank");
  long long s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) s += a[i] * gram[i][j] * b[j];
  }
  return s;
}

IntersectionLattice skew_planes_lattice() {
  return {{"h^2", "P1", "P2"}, {{3, 1, 1}, {1, 3, 0}, {1, 0, 3}}};
}

IntersectionLattice surface_plane_lattice(long long beta) {
  return {{"h^2", "S", "P"}, {{3, 5, 1}, {5, 13, beta}, {1, beta, 3}}};
}

long long gram_discriminant(const IntersectionLattice& L) {
  L.validate();
  const std::size_t n = L.rank();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(L.gram[i][j]);
  }
  // Bareiss elimination: every division is exact.
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  const mpz_class det = sign * m[n - 1][n - 1];
  if (!det.fits_slong_p()) throw PreconditionError("discriminant does not fit in 64 bits");
  return det.get_si();
}

long long surface_plane_discriminant_closed_form(long long beta) { return 29 + 10 * beta - 3 * beta * beta; }

ExcessMultiplicity excess_multiplicity(long long d, long long g, long long K1C, long long K2C) {
  return {3 * d + K1C + K2C + 2 - 2 * g, d <= 0};
}

SurfaceNumerics quartic_scroll_numerics() { return {4, -6, 8, 4, 1}; }
SurfaceNumerics del_pezzo_quintic_numerics() { return {5, -5, 5, 7, 1}; }
SurfaceNumerics plane_numerics() { return {1, -3, 9, 3, 1}; }

long long self_int_cubic_fourfold(const SurfaceNumerics& n) { return 6 * n.h2 + 3 * n.hK + n.K2 - n.chi_top; }

long long self_int_quadric_fourfold(const SurfaceNumerics& n) {
  return 7 * n.h2 + 4 * n.hK + 2 * n.K2 - 12 * n.chi_O;
}

SurfaceClass make_class(const IntersectionLattice& L, std::vector<long long> coordinates) {
  L.validate();
  std::vector<long long> h2(L.rank(), 0);
  h2[0] = 1;
  SurfaceClass c;
  c.degree = L.pairing(coordinates, h2);
  c.self_intersection = L.pairing(coordinates, coordinates);
  c.coordinates = std::move(coordinates);
  return c;
}

SurfaceClass residual_of(const IntersectionLattice& L, const SurfaceClass& c) {
  std::vector<long long> t(c.coordinates.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = -c.coordinates[i];
  t[0] += 3;
  return make_class(L, std::move(t));
}

ResidualClass residual_class(long long beta) {
  const IntersectionLattice L = surface_plane_lattice(beta);
  const SurfaceClass S = make_class(L, {0, 1, 0});
  ResidualClass r;
  r.T = residual_of(L, S);
  r.dot_plane = L.pairing(r.T.coordinates, {0, 0, 1});
  return r;
}

std::string SearchBox::to_string() const {
  auto range = [](long long lo, long long hi) { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; };
  return "a in " + range(a_lo, a_hi) + ", b in " + range(b_lo, b_hi) + ", c in " + range(c_lo, c_hi);
}

SearchBox derived_search_box(long long degree, long long lo, long long hi) {
  if (lo > hi) throw PreconditionError("empty plane-intersection bounds");
  // Adding the two interval constraints and substituting b + c = degree − 3a
  // gives 2lo ≤ 3·degree − 7a ≤ 2hi.
  SearchBox box;
  box.a_lo = ceil_div(3 * degree - 2 * hi, 7);
  box.a_hi = floor_div(3 * degree - 2 * lo, 7);
  box.b_lo = box.c_lo = ceil_div(lo - box.a_hi, 3);
  box.b_hi = box.c_hi = floor_div(hi - box.a_lo, 3);
  return box;
}

ObstructionSearch obstruction_search(long long degree, long long self_int, long long lo, long long hi) {
  return obstruction_search(degree, self_int, lo, hi, derived_search_box(degree, lo, hi));
}

ObstructionSearch obstruction_search(long long degree, long long self_int, long long lo, long long hi,
                                     const SearchBox& box) {
  ObstructionSearch out;
  out.box = box;
  for (long long a = box.a_lo; a <= box.a_hi; ++a) {
    for (long long b = box.b_lo; b <= box.b_hi; ++b) {
      for (long long c = box.c_lo; c <= box.c_hi; ++c) {
        ++out.visited;
        if (3 * a + b + c != degree) continue;
        if (a + 3 * b < lo || a + 3 * b > hi || a + 3 * c < lo || a + 3 * c > hi) continue;
        out.linear_solutions.push_back({a, b, c});
        if (3 * a * a + 3 * b * b + 3 * c * c + 2 * a * b + 2 * a * c == self_int) out.solutions.push_back({a, b, c});
      }
    }
  }
  return out;
}

}  // namespace cubiclab
