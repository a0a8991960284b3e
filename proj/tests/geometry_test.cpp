#include <gtest/gtest.h>

#include <random>

#include "cubiclab/error.hpp"
#include "cubiclab/geometry.hpp"
#include "cubiclab/linalg.hpp"
#include "cubiclab/parse.hpp"
#include "cubiclab/resources.hpp"
#include "test_util.hpp"

using namespace cubiclab;
using cubiclab::testing::P;
using cubiclab::testing::Ps;

namespace {

RingPtr p5() { return Ring::projective(5); }

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) { return Ideal(r, Ps(r, gens)); }

Ideal from_fixture(const RingPtr& r, const char* name) {
  return Ideal(r, parse_polynomial_list(std::string(fixture_file(name)), r));
}

// Value of p at an integer point.
Scalar evaluate(const Polynomial& p, const std::vector<long>& point) {
  std::vector<Polynomial> images;
  for (long v : point) images.push_back(Polynomial::constant(p.ring(), v));
  const Polynomial c = p.substitute(images);
  return c.is_zero() ? Scalar::zero(p.ring()->field()) : c.leading_coefficient();
}

// Rank of the Jacobian of the generators at a point.
std::size_t jacobian_rank_at(const Ideal& I, const std::vector<long>& point) {
  const auto& gens = I.generators();
  const std::size_t n = I.ring()->arity();
  DenseMatrix m(gens.size(), n, I.ring()->field());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = evaluate(gens[r].derivative(c), point);
  }
  return m.rank();
}

}  // namespace

TEST(Resources, ManifestDigestsMatch) {
  const auto files = fixture_files();
  EXPECT_EQ(files.size(), 14u);
  for (const auto& f : files) {
    EXPECT_EQ(sha256_hex(fixture_file(f)), fixture_digest(f)) << f;
  }
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_THROW(fixture_file("missing"), PreconditionError);
}

TEST(Smoothness, QuadricsByRank) {
  const auto r = p5();
  EXPECT_TRUE(is_smooth(ideal(r, {"x_0*x_1+x_2*x_3+x_4*x_5"})));
  EXPECT_FALSE(is_smooth(ideal(r, {"x_0*x_1-x_2*x_3"})));
  EXPECT_TRUE(is_smooth_hypersurface(P(r, "x_0*x_1+x_2*x_3+x_4*x_5")));
  EXPECT_FALSE(is_smooth_hypersurface(P(r, "x_0*x_1-x_2*x_3")));
}

TEST(Smoothness, ConeOverQuarticCurveIsSingular) {
  const auto r = p5();
  const Ideal cone = ideal(r, {"x_0*x_2-x_1^2", "x_0*x_3-x_1*x_2", "x_0*x_4-x_1*x_3", "x_1*x_3-x_2^2",
                               "x_1*x_4-x_2*x_3", "x_2*x_4-x_3^2"});
  EXPECT_EQ(dim(cone), 2);
  // The Jacobian vanishes at the vertex, so the rank there is below the codimension 3.
  EXPECT_EQ(jacobian_rank_at(cone, {0, 0, 0, 0, 0, 1}), 0u);
  EXPECT_EQ(jacobian_rank_at(cone, {1, 1, 1, 1, 1, 0}), 3u);
  const auto result = check_smoothness(cone);
  EXPECT_FALSE(result.smooth);
  EXPECT_TRUE(result.certified);
  EXPECT_EQ(result.codim, 3);
}

TEST(Smoothness, DelPezzoAndScrollsAreSmooth) {
  const auto r = p5();
  const Ideal dp = from_fixture(r, "del-pezzo.quadrics");
  const auto result = check_smoothness(dp);
  EXPECT_TRUE(result.smooth);
  EXPECT_EQ(result.codim, 3);
  EXPECT_TRUE(is_smooth(ideal(r, {"x_0*x_2-x_1^2", "x_0*x_4-x_1*x_3", "x_0*x_5-x_1*x_4", "x_1*x_4-x_2*x_3",
                                  "x_1*x_5-x_2*x_4", "x_3*x_5-x_4^2"})));
}

TEST(Smoothness, MinorBudget) {
  const auto r = p5();
  const Ideal dp = from_fixture(r, "del-pezzo.quadrics");
  SmoothnessOptions tight;
  tight.minor_cap = 10;
  EXPECT_THROW(check_smoothness(dp, tight), BudgetExceeded);
}

TEST(Smoothness, FixtureCubicsModularFilter) {
  const auto r = p5();
  SmoothnessOptions mod;
  mod.prime = 10007;
  for (const char* name : {"dp-a.cubic", "dp-e.cubic", "skew-planes.cubic"}) {
    const Ideal cubic = from_fixture(r, name);
    const auto result = check_smoothness(cubic, mod);
    EXPECT_TRUE(result.smooth) << name;
    EXPECT_FALSE(result.certified) << name;
  }
}

TEST(Smoothness, JacobianAndHypersurfaceRoutesAgree) {
  const auto r = Ring::projective(3, Field::prime(32003));
  std::mt19937_64 gen(11);
  for (int k = 0; k < 10; ++k) {
    Polynomial f = cubiclab::testing::random_form(r, gen, 3, 3);
    if (k % 3 == 0) {
      // Force a singular point at [1:0:0:0]: no x_0^3, x_0^2*x_i terms.
      std::vector<Term> kept;
      for (const auto& t : f.terms()) {
        if (t.monomial[0] < 2) kept.push_back(t);
      }
      f = Polynomial::from_terms(r, kept);
    }
    const Ideal I(r, {f});
    EXPECT_EQ(is_smooth(I), is_smooth_hypersurface(f)) << f.to_string();
    if (k % 3 == 0) EXPECT_FALSE(is_smooth(I));
  }
}

TEST(Geometry, QuadraticRank) {
  const auto r = p5();
  EXPECT_EQ(quadratic_rank(P(r, "x_0^2")), 1u);
  EXPECT_EQ(quadratic_rank(P(r, "x_0*x_1")), 2u);
  EXPECT_EQ(quadratic_rank(P(r, "x_0*x_1-x_2*x_3")), 4u);
  EXPECT_EQ(quadratic_rank(P(r, "x_0*x_1+x_2*x_3+x_4*x_5")), 6u);
  EXPECT_EQ(quadratic_rank(P(r, "x_0^2+2*x_0*x_1+2*x_0*x_2+x_1^2+2*x_1*x_2+x_2^2")), 1u);
  EXPECT_THROW(quadratic_rank(P(r, "x_0^3")), PreconditionError);
  EXPECT_THROW(quadratic_rank(P(r, "x_0^2+x_1")), PreconditionError);
}

TEST(Geometry, QuadraticRankInvariantUnderLinearChange) {
  const auto r = p5();
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<long> coeff(-3, 3);
  const Polynomial q = P(r, "x_0*x_1-x_2*x_3+x_4^2");
  for (int k = 0; k < 5; ++k) {
    std::vector<Polynomial> images;
    DenseMatrix m(6, 6, r->field());
    do {
      images.clear();
      for (std::size_t i = 0; i < 6; ++i) {
        Polynomial l(r);
        for (std::size_t j = 0; j < 6; ++j) {
          m.at(i, j) = Scalar(coeff(gen), r->field());
          l = l + Polynomial::variable(r, j).scaled(m.at(i, j));
        }
        images.push_back(l);
      }
    } while (m.rank() < 6);
    EXPECT_EQ(quadratic_rank(q.substitute(images)), 5u);
  }
}

TEST(Geometry, SchemeEqualityAndSpan) {
  const auto p1 = Ring::projective(1);
  EXPECT_TRUE(scheme_equal(ideal(p1, {"x_0^2", "x_0*x_1"}), ideal(p1, {"x_0"})));
  EXPECT_FALSE(scheme_equal(ideal(p1, {"x_0^2"}), ideal(p1, {"x_0"})));
  const auto r = p5();
  EXPECT_EQ(linear_span_codim(ideal(r, {"x_0", "x_1+x_2", "x_3*x_4"})), 2);
  EXPECT_EQ(linear_span_codim(from_fixture(r, "del-pezzo.quadrics")), 0);
  EXPECT_EQ(linear_span_codim(from_fixture(r, "dp-a.plane")), 3);
}

TEST(PlaneSections, DelPezzoFixtures) {
  const auto r = p5();
  const Ideal dp = from_fixture(r, "del-pezzo.quadrics");
  EXPECT_EQ(classify_plane_section(dp, from_fixture(r, "dp-a.plane")).label(), "irreducible-conic");
  EXPECT_EQ(classify_plane_section(dp, from_fixture(r, "dp-b.plane")).label(), "empty");
  EXPECT_EQ(classify_plane_section(dp, from_fixture(r, "dp-c.plane")).label(), "points(1, reduced)");
  EXPECT_EQ(classify_plane_section(dp, from_fixture(r, "dp-d.plane")).label(), "points(2, reduced)");
  EXPECT_EQ(classify_plane_section(dp, from_fixture(r, "dp-e.plane")).label(), "points(3, reduced)");
}

TEST(PlaneSections, LinesAndDegenerateConics) {
  const auto r = p5();
  const Ideal plane = ideal(r, {"x_3", "x_4", "x_5"});
  EXPECT_EQ(classify_plane_section(ideal(r, {"x_0"}), plane).label(), "line");
  EXPECT_EQ(classify_plane_section(ideal(r, {"x_0*x_1"}), plane).label(), "reducible-conic");
  EXPECT_EQ(classify_plane_section(ideal(r, {"x_0^2"}), plane).label(), "reducible-conic");
  EXPECT_EQ(classify_plane_section(ideal(r, {"x_0*x_1-x_2^2"}), plane).label(), "irreducible-conic");
  EXPECT_EQ(classify_plane_section(ideal(r, {"x_0^2", "x_1"}), plane).label(), "points(2, nonreduced)");
  EXPECT_EQ(classify_plane_section(ideal(r, {"x_0^3+x_1^3+x_2^3"}), plane).label(), "other(1, 3)");
  EXPECT_EQ(classify_plane_section(ideal(r, {"x_3*x_0-x_4*x_1"}), plane).label(), "other(2, 1)");
  EXPECT_THROW(classify_plane_section(ideal(r, {"x_0"}), ideal(r, {"x_3", "x_4", "x_3+x_4"})),
               PreconditionError);
  EXPECT_THROW(classify_plane_section(ideal(r, {"x_0"}), ideal(r, {"x_3", "x_4", "x_5^2"})),
               PreconditionError);
}

TEST(Geometry, Summary) {
  const auto r = p5();
  const auto s = summarize(from_fixture(r, "del-pezzo.quadrics"));
  EXPECT_EQ(s.dimension, 2);
  EXPECT_EQ(s.degree, 5);
  EXPECT_EQ(s.codim, 3);
  EXPECT_TRUE(s.smooth);
  EXPECT_EQ(s.span_codim, 0);
}
