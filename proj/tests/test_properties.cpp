#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles/socle_la.hpp"
#include "property_suites.hpp"

using namespace socle;

namespace {

void expect_suite(const props::SuiteResult& r, int min_cases) {
  EXPECT_GE(r.cases, min_cases) << r.name;
  EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(Properties, GroebnerCanonicity) { expect_suite(props::groebner_shuffles(11), 80); }

TEST(Properties, NormalFormIdempotence) { expect_suite(props::normal_form_idempotence(12), 100); }

TEST(Properties, ColonContainment) { expect_suite(props::colon_containment(13), 40); }

TEST(Properties, StaircaseLengths) { expect_suite(props::staircase_lengths(14), 50); }

TEST(Properties, CompleteIntersectionMultiplicity) { expect_suite(props::complete_intersection_multiplicity(15), 20); }

TEST(Properties, MacaulayMembership) { expect_suite(props::macaulay_membership(16), 60); }

TEST(Properties, SocleAgreesWithLinearAlgebra) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> power(1, 4), extra(0, 2);
  for (int c = 0; c < 20; ++c) {
    auto r = props::poly_ring(2 + c % 2);
    std::vector<Polynomial> gens;
    for (std::size_t v = 0; v < r->nvars(); ++v) {
      std::vector<int> e(r->nvars(), 0);
      e[v] = power(rng);
      gens.push_back(props::monomial_poly(r, e));
    }
    for (int k = extra(rng); k > 0; --k) gens.push_back(props::random_poly(r, 3, 2, rng));
    IdealHandle j(r, gens);
    EXPECT_EQ(socle::socle(j).length, oracle::socle_dimension(j)) << j.to_string();
  }
}

TEST(Properties, IntersectionIsSymmetricAndContained) {
  std::mt19937 rng(18);
  for (int c = 0; c < 15; ++c) {
    auto r = props::poly_ring(2);
    IdealHandle a(r, {props::random_poly(r, 2, 2, rng), props::random_poly(r, 3, 2, rng)});
    IdealHandle b(r, {props::random_poly(r, 2, 2, rng)});
    IdealHandle ab = intersect(a, b), ba = intersect(b, a);
    EXPECT_TRUE(ideal_equal(ab, ba));
    EXPECT_TRUE(a.contains(ab));
    EXPECT_TRUE(b.contains(ab));
    EXPECT_TRUE(ab.contains(product(a, b)));
  }
}

TEST(Properties, SuitesAreSeedDeterministic) {
  auto a = props::staircase_lengths(3, 10), b = props::staircase_lengths(3, 10);
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.failures, b.failures);
}
