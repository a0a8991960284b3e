#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cubiclab/error.hpp"
#include "cubiclab/groebner.hpp"
#include "cubiclab/linalg.hpp"
#include "test_util.hpp"

using namespace cubiclab;
using cubiclab::testing::P;
using cubiclab::testing::Ps;

namespace {

// f ∈ (gens) for homogeneous data, decided in the single degree of f by
// spanning all monomial multiples of the generators.
bool membership_oracle(const Polynomial& f, const std::vector<Polynomial>& gens) {
  const RingPtr ring = f.ring();
  const int d = f.degree();
  if (f.is_zero()) return true;
  const MonomialIndex index(monomials_of_degree(ring, d));
  RowSpace space(index.size(), ring->field());
  for (const auto& g : gens) {
    const int e = d - g.degree();
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(ring, e)) {
      space.add(index.coefficients(g.mul_term(m, Scalar::one(ring->field()))));
    }
  }
  return space.contains(index.coefficients(f));
}

std::vector<Polynomial> scroll_s22(const RingPtr& r) {
  return Ps(r, {"x_0*x_2-x_1^2", "x_0*x_4-x_1*x_3", "x_0*x_5-x_1*x_4", "x_1*x_4-x_2*x_3", "x_1*x_5-x_2*x_4",
                "x_3*x_5-x_4^2"});
}

}  // namespace

TEST(NormalForm, Basics) {
  auto ring = Ring::projective(2);
  const auto gb = groebner_basis(Ps(ring, {"x_0"}));
  EXPECT_TRUE(normal_form(P(ring, "x_0^2"), gb).is_zero());
  EXPECT_EQ(normal_form(P(ring, "x_1"), gb), P(ring, "x_1"));
  EXPECT_THROW(normal_form(P(Ring::projective(3), "x_1"), gb), RingMismatch);
}

TEST(GroebnerBasis, PrincipalIsMonic) {
  auto ring = Ring::projective(3);
  const auto gb = groebner_basis(Ps(ring, {"3*x_0*x_1-6*x_2^2"}));
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb.elements()[0], P(ring, "x_0*x_1-2*x_2^2"));
}

TEST(GroebnerBasis, UnitIdeal) {
  auto ring = Ring::projective(2);
  const auto gb = groebner_basis(Ps(ring, {"x_0-1", "x_0"}));
  EXPECT_TRUE(gb.is_unit());
}

TEST(GroebnerBasis, DeterminantalIdealFixpoint) {
  auto ring = Ring::projective(3);
  const auto gens = Ps(ring, {"x_0*x_2-x_1^2", "x_0*x_3-x_1*x_2", "x_1*x_3-x_2^2"});
  const auto gb = groebner_basis(gens);
  EXPECT_TRUE(verify_groebner_basis(gb));
  for (const auto& g : gens) EXPECT_TRUE(gb.contains(g));
  for (const auto& g : gb.elements()) EXPECT_TRUE(membership_oracle(g, gens));
  std::vector<Polynomial> reversed(gens.rbegin(), gens.rend());
  EXPECT_EQ(groebner_basis(reversed), gb);
}

TEST(GroebnerBasis, ScrollAndLexOrders) {
  auto ring = Ring::projective(5);
  const auto gens = scroll_s22(ring);
  for (const auto& order : {TermOrder::grevlex(), TermOrder::lex(), TermOrder::elimination(2)}) {
    const auto gb = groebner_basis(gens, order);
    EXPECT_TRUE(verify_groebner_basis(gb)) << order.name();
    EXPECT_EQ(gb.ring()->order(), order);
  }
}

TEST(GroebnerBasis, ParametrizationByLex) {
  auto ring = Ring::make(Field::rationals(), {"t", "x", "y"}, TermOrder::lex());
  const auto gb = groebner_basis(Ps(ring, {"x-t^2", "y-t^3"}));
  EXPECT_TRUE(verify_groebner_basis(gb));
  EXPECT_TRUE(gb.contains(P(ring, "x^3-y^2")));
  EXPECT_EQ(gb.elements().front(), P(ring, "x^3-y^2"));
}

TEST(GroebnerBasis, MembershipAgreesWithLinearAlgebra) {
  std::mt19937_64 gen(42);
  auto ring = Ring::projective(2);
  int members = 0;
  for (int k = 0; k < 50; ++k) {
    std::vector<Polynomial> gens;
    const int count = 2 + k % 2;
    for (int i = 0; i < count; ++i) gens.push_back(cubiclab::testing::random_form(ring, gen, 1 + (k + i) % 3, 3));
    const auto gb = groebner_basis(gens);
    const int d = 4;
    Polynomial f(ring);
    if (k % 2 == 0) {
      for (const auto& g : gens) {
        if (g.degree() <= d) f = f + cubiclab::testing::random_form(ring, gen, d - g.degree(), 3) * g;
      }
    } else {
      f = cubiclab::testing::random_form(ring, gen, d, 3);
    }
    if (f.is_zero()) continue;
    const bool expected = membership_oracle(f, gens);
    members += expected;
    ASSERT_EQ(gb.contains(f), expected) << "case " << k;
    ASSERT_TRUE(verify_groebner_basis(gb));
  }
  EXPECT_GT(members, 20);
}

TEST(GroebnerBasis, EqualityMatchesTwoWayMembership) {
  std::mt19937_64 gen(9);
  auto ring = Ring::projective(3);
  int equal_pairs = 0;
  for (int k = 0; k < 30; ++k) {
    std::vector<Polynomial> a;
    for (int i = 0; i < 2; ++i) a.push_back(cubiclab::testing::random_form(ring, gen, 2, 2));
    std::vector<Polynomial> b;
    if (k % 2 == 0) {
      // Same ideal, different generators.
      b = {a[0] + a[1], a[0] - a[1].scaled(Scalar(2, ring->field()))};
    } else {
      b = {a[0], cubiclab::testing::random_form(ring, gen, 2, 2)};
    }
    const auto ga = groebner_basis(a);
    const auto gb = groebner_basis(b);
    bool two_way = true;
    for (const auto& f : a) two_way = two_way && gb.contains(f);
    for (const auto& f : b) two_way = two_way && ga.contains(f);
    ASSERT_EQ(ga == gb, two_way);
    equal_pairs += two_way;
  }
  EXPECT_GE(equal_pairs, 15);
}

TEST(GroebnerBasis, PrimeFieldMatchesRationalsOnDeterminantal) {
  auto q = Ring::projective(5);
  auto fp = q->with_field(Field::prime(10007));
  const auto gens = scroll_s22(q);
  std::vector<Polynomial> reduced;
  for (const auto& g : gens) reduced.push_back(g.in_field(fp));
  const auto gq = groebner_basis(gens);
  const auto gp = groebner_basis(reduced);
  ASSERT_EQ(gq.size(), gp.size());
  for (std::size_t i = 0; i < gq.size(); ++i) EXPECT_EQ(gq.elements()[i].in_field(fp), gp.elements()[i]);
}

TEST(Syzygies, RegularSequenceOfVariables) {
  auto ring = Ring::projective(2);
  const auto gens = Ps(ring, {"x_0", "x_1"});
  const auto syz = first_syzygies(gens);
  ASSERT_FALSE(syz.empty());
  bool found_koszul = false;
  for (const auto& s : syz) {
    EXPECT_TRUE(is_syzygy(s, gens));
    if (s.degree == 1) {
      const Scalar c = s.entries[0].leading_coefficient();
      found_koszul |= s.entries[0] == P(ring, "x_1").scaled(c) && s.entries[1] == P(ring, "-x_0").scaled(c);
    }
  }
  EXPECT_TRUE(found_koszul);
}

TEST(Syzygies, RegularSequenceIsKoszulOnly) {
  std::mt19937_64 gen(17);
  auto ring = Ring::projective(3);
  for (int k = 0; k < 5; ++k) {
    const std::vector<Polynomial> gens = {cubiclab::testing::random_form(ring, gen, 2),
                                          cubiclab::testing::random_form(ring, gen, 2)};
    const auto syz = first_syzygies(gens);
    ASSERT_FALSE(syz.empty());
    const auto principal = groebner_basis(std::vector<Polynomial>{gens[1]});
    for (const auto& s : syz) {
      ASSERT_TRUE(is_syzygy(s, gens));
      // s = h·(f_1, −f_0): the first entry is a multiple of f_1.
      EXPECT_TRUE(principal.contains(s.entries[0]));
      EXPECT_GE(s.degree, 2);
    }
    const auto report = linear_syzygy_test(gens);
    EXPECT_EQ(report.linear_syzygies, 0u);
    EXPECT_FALSE(report.koszul_in_linear);
  }
}

TEST(Syzygies, RejectsMixedDegrees) {
  auto ring = Ring::projective(2);
  EXPECT_THROW(first_syzygies(Ps(ring, {"x_0", "x_1^2"})), PreconditionError);
  EXPECT_THROW(first_syzygies(Ps(ring, {"x_0+1"})), PreconditionError);
}

TEST(Syzygies, ScrollIsLinearlyPresented) {
  auto ring = Ring::projective(5);
  const auto gens = scroll_s22(ring);
  for (const auto& s : first_syzygies(gens)) ASSERT_TRUE(is_syzygy(s, gens));
  const auto report = linear_syzygy_test(gens);
  EXPECT_EQ(report.linear_syzygies, 8u);
  EXPECT_EQ(report.koszul_checked, 15u);
  EXPECT_TRUE(report.koszul_in_linear);
  EXPECT_TRUE(report.syzygies_generated_by_linear);
  EXPECT_TRUE(report.passed());
}

TEST(Syzygies, CompleteIntersectionOfQuadricsFails) {
  std::mt19937_64 gen(23);
  auto ring = Ring::projective(5);
  const std::vector<Polynomial> gens = {cubiclab::testing::random_form(ring, gen, 2),
                                        cubiclab::testing::random_form(ring, gen, 2)};
  const auto report = linear_syzygy_test(gens);
  EXPECT_EQ(report.linear_syzygies, 0u);
  EXPECT_FALSE(report.passed());
}
