#include <gtest/gtest.h>

#include <random>

#include "cubiclab/catalog.hpp"
#include "cubiclab/error.hpp"
#include "cubiclab/geometry.hpp"
#include "cubiclab/groebner.hpp"
#include "cubiclab/linalg.hpp"
#include "test_util.hpp"

using namespace cubiclab;
using cubiclab::testing::P;
using cubiclab::testing::Ps;

namespace {

// Degree-k part of ker(h) by linear algebra: nullity of the substitution map
// from source forms of degree k to target forms of degree k·deg(h).
std::size_t kernel_dimension_oracle(const RingMap& h, int k) {
  const auto src = monomials_of_degree(h.source(), k);
  const MonomialIndex dst(monomials_of_degree(h.target(), k * h.degree()));
  DenseMatrix m(dst.size(), src.size(), h.target()->field());
  const Scalar one = Scalar::one(h.source()->field());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Polynomial image = h(Polynomial::monomial(h.source(), src[c], one));
    for (const auto& t : image.terms()) m.at(dst(t.monomial), c) = t.coefficient;
  }
  return src.size() - m.rank();
}

bool contained(const Ideal& small, const Ideal& big) { return big.contains(small); }

}  // namespace

TEST(Catalog, ScrollInvariants) {
  for (auto kind : {ScrollKind::s22, ScrollKind::s13}) {
    const Ideal S = quartic_scroll(kind);
    EXPECT_EQ(S.generators().size(), 6u);
    const HilbertData h = hilbert(S);
    EXPECT_EQ(h.dimension, 2);
    EXPECT_EQ(h.degree, 4);
    EXPECT_EQ(h.polynomial_string(), "2*t^2+3*t+1");
    EXPECT_TRUE(is_smooth(S));
    EXPECT_EQ(linear_span_codim(S), 0);
    EXPECT_TRUE(linear_syzygy_test(S.generators()).passed());
    EXPECT_TRUE(S == saturate(S));
  }
  EXPECT_FALSE(quartic_scroll(ScrollKind::s22) == quartic_scroll(ScrollKind::s13));
}

TEST(Catalog, QuadricSystemOfS22) {
  const RingMap psi = scroll_quadric_map(ScrollKind::s22);
  const Ideal K = kernel(psi);
  ASSERT_EQ(K.generators().size(), 1u);
  const Polynomial& q = K.generators()[0];
  EXPECT_EQ(q.degree(), 2);
  EXPECT_EQ(quadratic_rank(q), 6u);
  EXPECT_TRUE(psi(q).is_zero());
  EXPECT_EQ(kernel_dimension_oracle(psi, 1), 0u);
  EXPECT_EQ(kernel_dimension_oracle(psi, 2), 1u);
  EXPECT_EQ(kernel_dimension_oracle(psi, 3), 6u);
}

TEST(Catalog, DelPezzoParametrization) {
  const ParamSurface dp = del_pezzo_quintic();
  EXPECT_EQ(dp.ideal.generators().size(), 5u);
  EXPECT_TRUE(saturate(kernel(dp.parametrization)) == saturate(dp.ideal));
  for (const auto& g : dp.ideal.generators()) EXPECT_TRUE(dp.parametrization(g).is_zero());
  const HilbertData h = hilbert(dp.ideal);
  EXPECT_EQ(h.dimension, 2);
  EXPECT_EQ(h.degree, 5);
  EXPECT_TRUE(is_smooth(dp.ideal));
  EXPECT_EQ(graded_basis(dp.ideal, 1).size(), 0u);
  EXPECT_EQ(graded_basis(dp.ideal, 2).size(), 5u);
  EXPECT_EQ(kernel_dimension_oracle(dp.parametrization, 2), 5u);
  EXPECT_TRUE(linear_syzygy_test(dp.ideal.generators()).passed());
}

TEST(Catalog, FiveConicPencils) {
  const auto pencils = conic_pencils(del_pezzo_quintic());
  ASSERT_EQ(pencils.size(), 5u);
  const Ideal& Z = pencils[0].surface.ideal;
  for (const auto& p : pencils) {
    for (auto [l0, l1] : {std::pair{1L, 2L}, std::pair{2L, 5L}, std::pair{-3L, 1L}}) {
      const Ideal C = p.conic(l0, l1);
      const HilbertData h = hilbert(C);
      EXPECT_EQ(h.dimension, 1) << p.label;
      EXPECT_EQ(h.degree, 2) << p.label;
      EXPECT_EQ(linear_span_codim(C), 3) << p.label;
      EXPECT_TRUE(contained(Z, C)) << p.label;
    }
    // Base points are blown up, so distinct members are disjoint.
    EXPECT_TRUE(saturate(p.conic(1, 2) + p.conic(2, 5)).is_unit()) << p.label;
  }
  EXPECT_THROW(conic_pencils(ParamSurface{"other", Z, pencils[0].surface.parametrization}), PreconditionError);
}

TEST(Catalog, SegreThreefolds) {
  const auto pencils = conic_pencils(del_pezzo_quintic());
  const Ideal& Z = pencils[0].surface.ideal;
  for (const auto& p : pencils) {
    const Ideal sigma = segre_threefold(p);
    const HilbertData h = hilbert(sigma);
    EXPECT_EQ(h.dimension, 3) << p.label;
    EXPECT_EQ(h.degree, 3) << p.label;
    EXPECT_TRUE(contained(sigma, Z)) << p.label;
    EXPECT_TRUE(contained(sigma, p.conic(1, 2))) << p.label;
    EXPECT_TRUE(contained(sigma, saturate(p.conic(7, -3) + Ideal(Z.ring(), graded_basis(p.conic(7, -3), 1)))))
        << p.label;
    EXPECT_EQ(sigma.generators().size(), 3u) << p.label;
  }
}

TEST(Catalog, SkewPlanes) {
  const Ideal p1 = standard_plane("p1");
  const Ideal p2 = standard_plane("p2");
  const RingPtr r = p5_ring();
  EXPECT_TRUE(p1 == Ideal(r, Ps(r, {"x_2+x_5", "x_1+x_4", "x_0+x_3"})));
  EXPECT_TRUE(p2 == Ideal(r, Ps(r, {"2*x_2-x_5", "2*x_1-x_4", "2*x_0-x_3"})));
  EXPECT_EQ(codim(p1 + p2), 6);
  const Ideal both = catalog_entry("skew-planes");
  EXPECT_EQ(hilbert(both).degree, 2);
  EXPECT_TRUE(linear_syzygy_test(trim(both).generators()).passed());
  EXPECT_EQ(standard_planes().size(), 9u);
  for (const auto& p : standard_planes()) EXPECT_EQ(linear_span_codim(p.ideal), 3) << p.name;
}

TEST(Catalog, NamesResolve) {
  for (const auto& name : catalog_names()) {
    if (name.starts_with("segre:") || name.starts_with("conic:")) continue;
    EXPECT_NO_THROW(catalog_entry(name)) << name;
  }
  EXPECT_TRUE(catalog_entry("delpezzo") == del_pezzo_quintic().ideal);
  EXPECT_EQ(hilbert(catalog_entry("conic:conics")).degree, 2);
  EXPECT_THROW(catalog_entry("scroll:s44"), PreconditionError);
  EXPECT_THROW(standard_plane("z"), PreconditionError);
  const Ideal modp = catalog_entry("scroll:s13", Field::prime(101));
  EXPECT_EQ(modp.ring()->field(), Field::prime(101));
}
