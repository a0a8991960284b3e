#include <gtest/gtest.h>

#include <random>

#include "cubiclab/error.hpp"
#include "cubiclab/parse.hpp"
#include "test_util.hpp"

using namespace cubiclab;
using cubiclab::testing::P;

namespace {

RingPtr p5() { return Ring::projective(5); }

// Brute-force matrix order: compare weight rows lexicographically.
int matrix_compare(const Monomial& a, const Monomial& b, const std::vector<std::vector<int>>& rows) {
  for (const auto& row : rows) {
    long va = 0, vb = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      va += static_cast<long>(row[i]) * a[i];
      vb += static_cast<long>(row[i]) * b[i];
    }
    if (va != vb) return va > vb ? 1 : -1;
  }
  return 0;
}

std::vector<Monomial> all_monomials(std::size_t n, int max_degree) {
  auto ring = Ring::make(Field::rationals(), {"a", "b", "c", "d"});
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    for (auto& m : monomials_of_degree(ring, d)) out.push_back(m);
  }
  (void)n;
  return out;
}

}  // namespace

TEST(Scalar, RationalsStayReduced) {
  const Field q = Field::rationals();
  Scalar a = Scalar::fraction(6, 4, q);
  EXPECT_EQ(a.to_string(), "3/2");
  Scalar b = Scalar::fraction(-2, -6, q);
  EXPECT_EQ(b.to_string(), "1/3");
  EXPECT_EQ((a + b).to_string(), "11/6");
  Scalar z = a - a;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.rational().get_den(), 1);
  EXPECT_THROW(Scalar::fraction(1, 0, q), PreconditionError);
}

TEST(Scalar, ResiduesNormalized) {
  const Field f = Field::prime(101);
  Scalar a(-1, f);
  EXPECT_EQ(a.residue(), 100u);
  EXPECT_EQ(a.to_string(), "-1");
  EXPECT_TRUE((a * a).is_one());
  EXPECT_TRUE((Scalar(7, f) * Scalar(7, f).inverse()).is_one());
  EXPECT_THROW(Field::prime(100), PreconditionError);
  EXPECT_THROW(Scalar(1, f) + Scalar(1, Field::rationals()), RingMismatch);
}

TEST(Scalar, FieldAxiomsOnRandomElements) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (const Field field : {Field::rationals(), Field::prime(101), Field::prime(2147483647)}) {
    for (int k = 0; k < 200; ++k) {
      long d1 = dist(gen), d2 = dist(gen), d3 = dist(gen);
      if (d1 == 0) d1 = 1;
      if (field.characteristic() == 101 && d1 % 101 == 0) d1 = 1;
      const Scalar a = Scalar::fraction(dist(gen), d1, field);
      const Scalar b(d2, field);
      const Scalar c(d3, field);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      if (field.is_rational()) {
        const mpq_class q = (a * b + c).rational();
        EXPECT_EQ(gcd(q.get_num(), q.get_den()), 1);
        EXPECT_GT(q.get_den(), 0);
      } else {
        EXPECT_LT((a * b + c).residue(), field.characteristic());
      }
    }
  }
}

TEST(Monomial, Basics) {
  Monomial a{2, 1, 0};
  Monomial b{0, 1, 3};
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ((a * b).degree(), 7);
  EXPECT_EQ(lcm(a, b), (Monomial{2, 1, 3}));
  EXPECT_EQ(gcd(a, b), (Monomial{0, 1, 0}));
  EXPECT_TRUE((Monomial{1, 1, 0}).divides(a));
  EXPECT_FALSE(a.coprime(b));
}

TEST(TermOrder, GrevlexAndLexFacts) {
  const Monomial x0sq{2, 0, 0};
  const Monomial x0x1{1, 1, 0};
  EXPECT_EQ(compare_monomials(x0sq, x0x1, TermOrder::grevlex()), 1);
  const Monomial x0{1, 0};
  const Monomial x1_100{0, 100};
  EXPECT_EQ(compare_monomials(x0, x1_100, TermOrder::lex()), 1);
  EXPECT_EQ(compare_monomials(x0, x1_100, TermOrder::grevlex()), -1);
  EXPECT_THROW(compare_monomials(Monomial{1, 0}, Monomial{1, 0, 0}, TermOrder::lex()), RingMismatch);
}

TEST(TermOrder, AgreesWithMatrixOrders) {
  const auto monos = all_monomials(4, 4);
  const std::vector<std::vector<int>> lex = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const std::vector<std::vector<int>> grevlex = {{1, 1, 1, 1}, {0, 0, 0, -1}, {0, 0, -1, 0}, {0, -1, 0, 0}};
  const std::vector<std::vector<int>> elim2 = {{1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, -1}};
  for (const auto& a : monos) {
    for (const auto& b : monos) {
      ASSERT_EQ(compare_monomials(a, b, TermOrder::lex()), matrix_compare(a, b, lex));
      ASSERT_EQ(compare_monomials(a, b, TermOrder::grevlex()), matrix_compare(a, b, grevlex));
      ASSERT_EQ(compare_monomials(a, b, TermOrder::elimination(2)), matrix_compare(a, b, elim2));
    }
  }
}

TEST(TermOrder, MultiplicativeAndOneMinimal) {
  const auto monos = all_monomials(4, 3);
  const Monomial one(4);
  for (const auto& order : {TermOrder::lex(), TermOrder::grevlex(), TermOrder::elimination(1),
                            TermOrder::elimination(3)}) {
    for (const auto& a : monos) {
      if (!a.is_one()) ASSERT_EQ(compare_monomials(a, one, order), 1);
      for (const auto& b : monos) {
        const int ab = compare_monomials(a, b, order);
        for (const auto& c : monos) {
          ASSERT_EQ(compare_monomials(a * c, b * c, order), ab);
        }
      }
    }
  }
}

TEST(TermOrder, WeightedGrevlex) {
  auto ring = Ring::make(Field::rationals(), {"t", "x"}, TermOrder::grevlex(), {1, 3});
  // x has weight 3, so x > t^2.
  EXPECT_EQ(ring->compare(Monomial{0, 1}, Monomial{2, 0}), 1);
  EXPECT_EQ(monomials_of_degree(ring, 6).size(), 3u);  // t^6, t^3 x, x^2
  EXPECT_EQ(P(ring, "x-t^3").homogeneous_degree(), 3);
}

TEST(Parse, ZeroAndDelPezzoQuadric) {
  auto ring = p5();
  EXPECT_TRUE(P(ring, "0").is_zero());
  const Polynomial q = P(ring, "x_2*x_4-x_1*x_5");
  EXPECT_EQ(q.size(), 2u);
  EXPECT_EQ(q.homogeneous_degree(), 2);
  EXPECT_EQ(q.leading_monomial(), (Monomial{0, 0, 1, 0, 1, 0}));
  EXPECT_EQ(q.to_string(), "x_2*x_4-x_1*x_5");
}

TEST(Parse, CoefficientsAndPowers) {
  auto ring = p5();
  const Polynomial f = P(ring, " -3/6 * x_0^2 + x_1*2*x_1 + 4 ");
  EXPECT_EQ(f.to_string(), "-1/2*x_0^2+2*x_1^2+4");
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_EQ(P(ring, "x_0*x_0").to_string(), "x_0^2");
  EXPECT_TRUE(P(ring, "x_0 - x_0").is_zero());
}

TEST(Parse, Errors) {
  auto ring = p5();
  try {
    parse_polynomial("x_0 + * x_1", ring);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  try {
    parse_polynomial("x_0 + y_1", ring);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_polynomial("x_9", ring), ParseError);
  EXPECT_THROW(parse_polynomial("1/0*x_0", ring), ParseError);
  EXPECT_THROW(parse_polynomial("", ring), ParseError);
  EXPECT_THROW(parse_polynomial("x_0 x_1", ring), ParseError);
  EXPECT_THROW(parse_polynomial("1/7*x_0", Ring::projective(2, Field::prime(7))), PreconditionError);
}

TEST(Parse, ListWithComments) {
  auto ring = p5();
  const auto polys = parse_polynomial_list("# planes\nx_0+x_3, x_1+x_4  # trailing\n\nx_2+x_5\n", ring);
  ASSERT_EQ(polys.size(), 3u);
  EXPECT_EQ(polys[2].to_string(), "x_2+x_5");
  try {
    parse_polynomial_list("x_0\nx_1 + z", ring);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
}

TEST(Parse, RoundTripRandom) {
  std::mt19937_64 gen(11);
  for (const Field field : {Field::rationals(), Field::prime(101)}) {
    auto ring = Ring::projective(5, field);
    for (int k = 0; k < 500; ++k) {
      Polynomial f = cubiclab::testing::random_polynomial(ring, gen, 1 + k % 9, 5, 50);
      if (field.is_rational() && !f.is_zero()) f = f.scaled(Scalar::fraction(1, 1 + k % 7, field));
      const std::string text = f.to_string();
      const Polynomial g = parse_polynomial(text, ring);
      ASSERT_EQ(f, g) << text;
      ASSERT_EQ(g.to_string(), text);
    }
  }
}

TEST(Arithmetic, SmallIdentities) {
  auto ring = p5();
  const Polynomial f = P(ring, "x_0+x_1");
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ(f * P(ring, "x_0-x_1"), P(ring, "x_0^2-x_1^2"));
  EXPECT_EQ(f.scaled(Scalar(3, ring->field())), P(ring, "3*x_0+3*x_1"));
  EXPECT_THROW(f + P(Ring::projective(4), "x_0"), RingMismatch);
}

TEST(Arithmetic, DistributivityRandom) {
  std::mt19937_64 gen(3);
  for (const Field field : {Field::rationals(), Field::prime(101)}) {
    auto ring = Ring::projective(3, field);
    for (int k = 0; k < 100; ++k) {
      const Polynomial f = cubiclab::testing::random_polynomial(ring, gen, 5, 3);
      const Polynomial g = cubiclab::testing::random_polynomial(ring, gen, 5, 3);
      const Polynomial h = cubiclab::testing::random_polynomial(ring, gen, 5, 3);
      ASSERT_EQ(f * (g + h), f * g + f * h);
      ASSERT_EQ((f - g) + g, f);
      ASSERT_EQ(f * g, g * f);
    }
  }
}

TEST(Arithmetic, TermsSortedAndReduced) {
  std::mt19937_64 gen(5);
  auto ring = p5();
  for (int k = 0; k < 50; ++k) {
    const Polynomial f = cubiclab::testing::random_polynomial(ring, gen, 6, 4);
    const Polynomial g = cubiclab::testing::random_polynomial(ring, gen, 6, 4).scaled(Scalar::fraction(2, 3, ring->field()));
    const Polynomial h = f * g - g;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      ASSERT_EQ(ring->compare(h.terms()[i].monomial, h.terms()[i + 1].monomial), 1);
    }
    for (const auto& t : h.terms()) {
      ASSERT_FALSE(t.coefficient.is_zero());
      ASSERT_EQ(gcd(t.coefficient.rational().get_num(), t.coefficient.rational().get_den()), 1);
    }
  }
}

TEST(Polynomial, SubstituteDeriveAndMove) {
  auto p2 = Ring::projective(2, Field::rationals(), "t");
  auto p1 = Ring::projective(1, Field::rationals(), "s");
  const Polynomial f = P(p2, "t_0^2-t_1*t_2");
  const std::vector<Polynomial> images = {P(p1, "s_0"), P(p1, "s_0+s_1"), P(p1, "s_0-s_1")};
  EXPECT_EQ(f.substitute(images), P(p1, "s_1^2"));
  EXPECT_EQ(f.derivative(0), P(p2, "2*t_0"));
  auto big = Ring::make(Field::rationals(), {"u", "t_0", "t_1", "t_2"});
  const std::vector<int> map = {1, 2, 3};
  EXPECT_EQ(f.in_ring(big, map).to_string(), "t_0^2-t_1*t_2");
  auto fp = p2->with_field(Field::prime(7));
  EXPECT_EQ(P(p2, "8*t_0-1/2*t_1").in_field(fp), P(fp, "t_0+3*t_1"));
}

TEST(Polynomial, EchelonBasis) {
  auto ring = p5();
  const auto polys = cubiclab::testing::Ps(ring, {"x_0+x_1", "x_1+x_2", "x_0-x_2", "2*x_0"});
  const auto basis = echelon_basis(polys);
  ASSERT_EQ(basis.size(), 3u);
  EXPECT_EQ(basis[0].to_string(), "x_0");
  EXPECT_EQ(basis[1].to_string(), "x_1");
  EXPECT_EQ(basis[2].to_string(), "x_2");
}
