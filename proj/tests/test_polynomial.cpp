#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "socle/error.hpp"
#include "socle/groebner.hpp"

using namespace socle;
using testing_helpers::poly;
using testing_helpers::ring;

TEST(Polynomial, AdditiveInverse) {
  auto r = ring("Q[x,y]");
  EXPECT_TRUE((poly(r, "x") + poly(r, "-x")).is_zero());
}

TEST(Polynomial, DifferenceOfSquares) {
  auto r = ring("Q[x,y]");
  EXPECT_EQ(poly(r, "x+y") * poly(r, "x-y"), poly(r, "x^2 - y^2"));
}

TEST(Polynomial, RebuildsQuadraticRelationTermForTerm) {
  auto r = ring("F101[x1,x2,x3,v,a1,a2]");
  Polynomial v = poly(r, "v");
  Polynomial rel = v * v;
  for (int i = 1; i <= 2; ++i) {
    rel = rel - poly(r, "a" + std::to_string(i)) * poly(r, "x" + std::to_string(i));
  }
  EXPECT_EQ(rel, poly(r, "v^2 - a1*x1 - a2*x2"));
  EXPECT_EQ(rel.size(), 3u);
}

TEST(Polynomial, LeadingTermsUnderEachOrder) {
  auto drl = ring("Q[x,y] degrevlex");
  auto lex = ring("Q[x,y] lex");
  EXPECT_EQ(poly(drl, "x^2 + x*y").leading_monomial(), poly(drl, "x^2").leading_monomial());
  EXPECT_EQ(poly(lex, "x + y^3").leading_monomial(), poly(lex, "x").leading_monomial());
  EXPECT_EQ(poly(drl, "x + y^3").leading_monomial(), poly(drl, "y^3").leading_monomial());
}

TEST(Polynomial, EliminationOrderPutsBlockFirst) {
  auto r = ring("Q[t,x,y] elim(1)");
  EXPECT_EQ(poly(r, "t + x^5*y^5").leading_monomial(), poly(r, "t").leading_monomial());
  EXPECT_EQ(poly(r, "x*y + y^3").leading_monomial(), poly(r, "y^3").leading_monomial());
}

TEST(Polynomial, ZeroHasNoLeadingTerm) {
  auto r = ring("Q[x]");
  EXPECT_THROW(Polynomial(r->ambient()).leading_term(), PreconditionError);
}

TEST(Polynomial, FormatsCoefficientsAndPowers) {
  auto r = ring("Q[x,y]");
  EXPECT_EQ(poly(r, "x^2*y - 3/2*x").to_string(), "x^2*y - 3/2*x");
  EXPECT_EQ(poly(r, "-1 + y").to_string(), "y - 1");
  EXPECT_EQ(Polynomial(r->ambient()).to_string(), "0");
  auto f = ring("F7[x]");
  EXPECT_EQ(poly(f, "6*x + 4").to_string(), "-x - 3");
}

TEST(Polynomial, PowersExactQuotientsAndHomogeneity) {
  auto r = ring("Q[x,y]");
  Polynomial f = poly(r, "x + y");
  EXPECT_EQ(f.pow(3), poly(r, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  EXPECT_EQ(*f.pow(3).exact_quotient(f), f.pow(2));
  EXPECT_FALSE(poly(r, "x^2 + 1").exact_quotient(f).has_value());
  EXPECT_TRUE(f.pow(3).is_homogeneous());
  EXPECT_FALSE(poly(r, "x^2 + y").is_homogeneous());
  EXPECT_EQ(poly(r, "2*x + 4").monic(), poly(r, "x + 2"));
}

TEST(Polynomial, MixingRingsIsRejected) {
  auto a = ring("Q[x,y]");
  auto b = ring("Q[x,z]");
  EXPECT_THROW(poly(a, "x") + poly(b, "x"), RingMismatchError);
  auto c = ring("F101[x,y]");
  EXPECT_THROW(poly(a, "x") * poly(c, "x"), RingMismatchError);
}

TEST(Polynomial, MapToRenamesVariables) {
  auto a = ring("Q[x,y]");
  auto b = ring("Q[u,v,w]");
  std::vector<std::size_t> map{2, 0};
  EXPECT_EQ(poly(a, "x^2*y + 3").map_to(b->ambient(), map), poly(b, "w^2*u + 3"));
}

TEST(Division, KillsMultiplesOfDivisor) {
  auto r = ring("Q[x,y]");
  EXPECT_EQ(normal_form(poly(r, "x^2 + y"), std::vector<Polynomial>{poly(r, "x")}), poly(r, "y"));
  Polynomial f = poly(r, "x^3 - 2*y");
  EXPECT_EQ(normal_form(f, std::vector<Polynomial>{}), f);
}

TEST(Division, QuadraticRelationReducesToProduct) {
  auto r = ring("F101[x1,x2,v,a1]");
  std::vector<Polynomial> a{poly(r, "x1^2"), poly(r, "x2^2"), poly(r, "x1*v"), poly(r, "x2*v"),
                            poly(r, "v^2 - a1*x1")};
  GroebnerBasis gb = buchberger(a, r->ambient());
  EXPECT_EQ(gb.reduce(poly(r, "v^2")), poly(r, "a1*x1"));
}

TEST(Division, IdentityAndIrreducibleRemainder) {
  auto r = ring("F101[x,y,z]");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5), ex(0, 3);
  auto random_poly = [&](int terms) {
    Polynomial p(r->ambient());
    for (int t = 0; t < terms; ++t) {
      std::vector<int> e{ex(rng), ex(rng), ex(rng)};
      p = p + Polynomial::term(r->ambient(), Monomial(e), r->field().from_int(coef(rng)));
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial f = random_poly(6);
    std::vector<Polynomial> divs;
    for (int i = 0; i < 3; ++i) {
      Polynomial g = random_poly(3);
      if (!g.is_zero()) divs.push_back(g);
    }
    DivisionResult res = divide(f, divs);
    Polynomial rebuilt = res.remainder;
    for (std::size_t i = 0; i < divs.size(); ++i) rebuilt = rebuilt + res.quotients[i] * divs[i];
    EXPECT_EQ(rebuilt, f);
    for (const auto& t : res.remainder.terms()) {
      for (const auto& g : divs) EXPECT_FALSE(g.leading_monomial().divides(t.monomial));
    }
  }
}

TEST(MonomialOrder, AxiomsOnRandomMonomials) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> ex(0, 4);
  for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::elimination(2)}) {
    std::vector<Monomial> ms;
    for (int i = 0; i < 40; ++i) {
      std::vector<int> e{ex(rng), ex(rng), ex(rng), ex(rng)};
      ms.emplace_back(e);
    }
    Monomial one(4);
    for (const auto& a : ms) {
      EXPECT_GE(order.compare(a, one), 0) << order.name();
      for (const auto& b : ms) {
        const int ab = order.compare(a, b);
        EXPECT_EQ(ab, -order.compare(b, a));
        EXPECT_EQ(ab == 0, a == b);
        for (const auto& c : ms) {
          if (ab < 0) EXPECT_LT(order.compare(a * c, b * c), 0) << order.name();
          if (ab < 0 && order.compare(b, c) < 0) EXPECT_LT(order.compare(a, c), 0);
        }
      }
    }
  }
}

TEST(MonomialOrder, Names) {
  EXPECT_EQ(MonomialOrder::degrevlex().name(), "degrevlex");
  EXPECT_EQ(MonomialOrder::lex().name(), "lex");
  EXPECT_EQ(MonomialOrder::elimination(3).name(), "elim(3)");
}
