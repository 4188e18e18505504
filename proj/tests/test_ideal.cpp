#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles/macaulay.hpp"
#include "socle/error.hpp"
#include "socle/families.hpp"

using namespace socle;
using testing_helpers::ideal;
using testing_helpers::poly;
using testing_helpers::ring;

namespace {

// Q, J = Q : m and the ring of the smallest section-4 instance.
struct SmallCounterexample {
  FamilyInstance inst = noncm_ring(2, 1, Field::prime(101));
  IdealHandle q = inst.ideal("Q");
  IdealHandle m = inst.ideal("m");
  IdealHandle j = colon(q, m);
};

}  // namespace

TEST(Ideal, Membership) {
  auto r = ring("Q[x,y]");
  EXPECT_TRUE(is_member(poly(r, "x^2"), ideal(r, "(x)")));
  EXPECT_FALSE(is_member(poly(r, "y"), ideal(r, "(x)")));
  SmallCounterexample s;
  IdealHandle qj = product(s.q, s.j);
  EXPECT_FALSE(qj.contains(s.inst.ring->parse("v^2")));
  EXPECT_TRUE(product(s.q, power(s.j, 2)).contains(s.inst.ring->parse("v^3")));
}

TEST(Ideal, EqualityIgnoresGeneratingSets) {
  auto r = ring("Q[x,y]");
  EXPECT_TRUE(ideal_equal(ideal(r, "(x, y)"), ideal(r, "(x + y, y)")));
  SmallCounterexample s;
  EXPECT_FALSE(ideal_equal(power(s.j, 2), product(s.q, s.j)));
  EXPECT_TRUE(ideal_equal(power(s.j, 3), product(s.q, power(s.j, 2))));
}

TEST(Ideal, SumProductPower) {
  auto r = ring("Q[x,y]");
  EXPECT_TRUE(ideal_equal(sum(ideal(r, "(x)"), ideal(r, "(y)")), ideal(r, "(x, y)")));
  EXPECT_TRUE(ideal_equal(product(ideal(r, "(x, y)"), ideal(r, "(x, y)")), ideal(r, "(x^2, x*y, y^2)")));
  EXPECT_TRUE(ideal_equal(power(ideal(r, "(x, y)"), 3), ideal(r, "(x^3, x^2*y, x*y^2, y^3)")));
  EXPECT_THROW(power(ideal(r, "(x)"), 0), PreconditionError);
  SmallCounterexample s;
  IdealHandle rhs = sum(product(s.q, s.j), IdealHandle(s.inst.ring, {s.inst.ring->parse("v^2")}));
  EXPECT_TRUE(ideal_equal(power(s.j, 2), rhs));
  IdealHandle other = ideal(s.inst.ring, "(a1)");
  EXPECT_TRUE(ideal_equal(combine(CombineOp::Sum, s.q, &other), sum(s.q, other)));
  EXPECT_TRUE(ideal_equal(combine(CombineOp::Power, s.j, nullptr, 2), power(s.j, 2)));
}

TEST(Ideal, PowersDropProductsThatVanish) {
  auto r = ring("F101[x,y]/(x*y)");
  IdealHandle m2 = power(IdealHandle::maximal(r), 2);
  EXPECT_EQ(m2.gens().size(), 2u);
}

TEST(Ideal, Intersections) {
  auto r = ring("Q[x,y]");
  EXPECT_TRUE(ideal_equal(intersect(ideal(r, "(x)"), ideal(r, "(y)")), ideal(r, "(x*y)")));
  EXPECT_TRUE(ideal_equal(intersect(ideal(r, "(x^2, y)"), ideal(r, "(x)")), ideal(r, "(x^2, x*y)")));
  auto fiber = fiber_product_ring(2, Field::prime(101));
  EXPECT_TRUE(intersect(fiber.ideal("p1"), fiber.ideal("p2")).is_zero());
}

TEST(Ideal, IntersectionAgreesWithDegreeBoundedMembership) {
  auto r = ring("F101[x,y]");
  IdealHandle meet = intersect(ideal(r, "(x^2, y)"), ideal(r, "(x)"));
  std::vector<Polynomial> a{poly(r, "x^2"), poly(r, "y")}, b{poly(r, "x")};
  for (const auto& m : oracle::monomials_up_to(2, 3)) {
    Polynomial f = Polynomial::term(r->ambient(), m, r->field().one());
    bool in_both = oracle::member_up_to_degree(f, a, 3) && oracle::member_up_to_degree(f, b, 3);
    EXPECT_EQ(meet.contains(f), in_both) << f.to_string();
  }
}

TEST(Ideal, Colons) {
  auto r = ring("Q[x,y]");
  EXPECT_TRUE(ideal_equal(colon(ideal(r, "(x^2)"), ideal(r, "(x)")), ideal(r, "(x)")));
  auto node = ring("F101[x,y]/(x*y)");
  IdealHandle link = colon(ideal(node, "(x + y)"), IdealHandle::maximal(node));
  EXPECT_TRUE(ideal_equal(link, ideal(node, "(x, y)")));
  SmallCounterexample s;
  EXPECT_TRUE(ideal_equal(s.j, ideal(s.inst.ring, "(a1, x1*x2, v)")));
  EXPECT_THROW(colon(ideal(r, "(x)"), IdealHandle::zero(r)), PreconditionError);
  EXPECT_TRUE(colon_element(ideal(r, "(x)"), poly(r, "x^2")).is_unit());
}

TEST(Ideal, Elimination) {
  auto r = ring("Q[t,x]");
  EXPECT_TRUE(eliminate(ideal(r, "(t*x - 1)"), {"t"}).is_zero());
  auto s = ring("Q[t,x,y]");
  IdealHandle e = eliminate(ideal(s, "(t*x, (1 - t)*y)"), {"t"});
  EXPECT_TRUE(ideal_equal(e, ideal(e.ring(), "(x*y)")));
  auto cusp = ring("Q[t,P,R]");
  IdealHandle c = eliminate(ideal(cusp, "(P - t^2, R - t^3)"), {"t"});
  EXPECT_TRUE(ideal_equal(c, ideal(c.ring(), "(P^3 - R^2)")));
  EXPECT_THROW(eliminate(ideal(r, "(x)"), {"w"}), PreconditionError);
}

TEST(Ideal, KrullDimension) {
  EXPECT_EQ(krull_dimension(IdealHandle::zero(ring("Q[x,y]"))), 2);
  EXPECT_EQ(ring_dimension(noncm_ring(2, 1, Field::prime(101)).ring), 1);
  EXPECT_EQ(ring_dimension(fiber_product_ring(2, Field::prime(101)).ring), 2);
  auto r = ring("Q[x,y]");
  EXPECT_THROW(krull_dimension(ideal(r, "(1)")), PreconditionError);
}

TEST(Ideal, PrimaryToTheOrigin) {
  auto r = ring("Q[x,y]");
  EXPECT_TRUE(is_origin_primary(ideal(r, "(x^2, y^3)")));
  EXPECT_FALSE(is_origin_primary(ideal(r, "(x)")));
  EXPECT_TRUE(is_origin_primary(ideal(r, "(x*y, x + y)")));
  EXPECT_FALSE(is_origin_primary(ideal(r, "(x^2 - 1, y)")));
  auto why = origin_primary_failure(ideal(r, "(x)"));
  ASSERT_TRUE(why.has_value());
  EXPECT_NE(why->find("y"), std::string::npos);
}

TEST(Ideal, SubalgebraPresentations) {
  auto line = ring("Q[x]");
  IdealHandle k0 = subalgebra_presentation(line, {poly(line, "x")}, {"P"});
  EXPECT_TRUE(k0.is_zero());
  auto t = ring("Q[t]");
  IdealHandle k1 = subalgebra_presentation(t, {poly(t, "t^2"), poly(t, "t^3")}, {"P", "R"});
  EXPECT_TRUE(ideal_equal(k1, ideal(k1.ring(), "(P^3 - R^2)")));
  auto ext = ring("Q[u,X1,X2]/(u^2 + 1)");
  IdealHandle k2 = subalgebra_presentation(
      ext, {poly(ext, "X1"), poly(ext, "X2"), poly(ext, "u*X1"), poly(ext, "u*X2")}, {"Y1", "Y2", "Z1", "Z2"});
  for (const char* rel : {"Y1^2 + Z1^2", "Y1*Z2 - Y2*Z1", "Y1*Y2 + Z1*Z2", "Y2^2 + Z2^2"}) {
    EXPECT_TRUE(k2.contains(k2.ring()->parse(rel))) << rel;
  }
  EXPECT_FALSE(k2.contains(k2.ring()->parse("Y1*Y2")));
  EXPECT_THROW(subalgebra_presentation(t, {poly(t, "t")}, {"P", "R"}), PreconditionError);
}

TEST(Ideal, RingMismatch) {
  auto a = ring("Q[x,y]");
  auto b = ring("F101[x,y]");
  EXPECT_THROW(sum(ideal(a, "(x)"), ideal(b, "(x)")), RingMismatchError);
  EXPECT_THROW(ideal_equal(ideal(a, "(x)"), ideal(b, "(x)")), RingMismatchError);
}

TEST(Ideal, ZeroAndUnit) {
  auto r = ring("F101[x,y]/(x*y)");
  EXPECT_TRUE(ideal(r, "(x*y)").is_zero());
  EXPECT_FALSE(ideal(r, "(x)").is_zero());
  EXPECT_TRUE(ideal(r, "(x + 1, y - 1)").is_unit());
}
