#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles/macaulay.hpp"
#include "oracles/socle_la.hpp"
#include "socle/error.hpp"
#include "socle/families.hpp"
#include "socle/invariants.hpp"

using namespace socle;
using testing_helpers::ideal;
using testing_helpers::poly;
using testing_helpers::ring;

namespace {

FamilyInstance small_noncm() { return noncm_ring(2, 1, Field::prime(101)); }

}  // namespace

TEST(Length, Examples) {
  EXPECT_EQ(length(ideal(ring("Q[x]"), "(x^3)")), 3);
  EXPECT_EQ(length(ideal(ring("F101[x,y]"), "(x^2, x*y + y^2)")), 4);
  EXPECT_EQ(length(small_noncm().ideal("Q")), 5);
  EXPECT_EQ(length(ideal(ring("Q[x,y]"), "(1)")), 0);
}

TEST(Length, AgreesWithMacaulayRankCount) {
  // Homogeneous ideal: count the quotient dimension degree by degree.
  auto r = ring("F101[x,y]");
  std::vector<Polynomial> gens{poly(r, "x^2"), poly(r, "x*y + y^2")};
  long dim = 0;
  for (unsigned d = 0; d <= 4; ++d) {
    std::vector<std::vector<std::uint64_t>> rows;
    auto monos = oracle::monomials_up_to(2, d);
    std::vector<Monomial> top;
    for (const auto& m : monos) {
      if (m.degree() == d) top.push_back(m);
    }
    for (const auto& g : gens) {
      for (const auto& m : monos) {
        if (m.degree() + g.total_degree() != d) continue;
        Polynomial h = g.mul_term(m, r->field().one());
        std::vector<std::uint64_t> row(top.size(), 0);
        for (const auto& t : h.terms()) {
          for (std::size_t k = 0; k < top.size(); ++k) {
            if (top[k] == t.monomial) row[k] = t.coeff.residue();
          }
        }
        rows.push_back(row);
      }
    }
    dim += static_cast<long>(top.size() - oracle::rank_mod_p(rows, 101));
  }
  EXPECT_EQ(dim, 4);
  EXPECT_EQ(length(ideal(r, "(x^2, x*y + y^2)")), dim);
}

TEST(Length, RejectsInfiniteQuotientsNamingTheVariable) {
  auto r = ring("Q[x,y]");
  try {
    length(ideal(r, "(x^2)"));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("y"), std::string::npos) << e.what();
  }
  EXPECT_THROW(length(ideal(r, "(x^2 - 1, y)")), PreconditionError);
}

TEST(Length, ResourceCapIsReported) {
  auto r = ring("F101[x,y,z]");
  IdealHandle big = ideal(r, "(x^30, y^30, z^30)");
  EXPECT_THROW(ArtinianQuotient(big, 1000), ResourceLimitError);
}

TEST(RelativeLength, Examples) {
  auto r = ring("Q[x]");
  EXPECT_EQ(relative_length(ideal(r, "(x^2)"), ideal(r, "(x)")), 1);
  auto s = small_noncm();
  IdealHandle j = colon(s.ideal("Q"), s.ideal("m"));
  EXPECT_EQ(relative_length(s.ideal("Q"), j), 2);
  auto node = fiber_product_ring(1, Field::prime(101));
  EXPECT_EQ(relative_length(node.ideal("Q"), node.ideal("m")), 1);
  EXPECT_THROW(relative_length(ideal(r, "(x)"), ideal(r, "(x^2)")), PreconditionError);
}

TEST(Socle, Examples) {
  auto r = ring("F101[x,y]");
  SocleResult s = socle::socle(ideal(r, "(x^2, y^2)"));
  EXPECT_EQ(s.length, 1);
  EXPECT_TRUE(ideal_equal(s.socle_ideal, ideal(r, "(x^2, y^2, x*y)")));
  IdealHandle m = IdealHandle::maximal(r);
  EXPECT_EQ(socle::socle(product(ideal(r, "(x, y^3)"), m)).length, 2);
  EXPECT_EQ(socle::socle(product(ideal(r, "(x^2, y^2)"), m)).length, 3);
}

TEST(Socle, AgreesWithMultiplicationKernel) {
  auto r = ring("F101[x,y,z]");
  for (const char* gens : {"(x^2, y^2, z^2)", "(x^3, y^2, z^2, x*y*z)", "(x^2 - y*z, y^2 - x*z, z^3)",
                           "(x^2, x*y, y^3, z^2 + x*y)"}) {
    IdealHandle j = ideal(r, gens);
    EXPECT_EQ(socle::socle(j).length, oracle::socle_dimension(j)) << gens;
  }
}

TEST(MinGenerators, Examples) {
  auto r = ring("Q[x,y]");
  EXPECT_EQ(min_generators(ideal(r, "(x, y)")), 2);
  EXPECT_EQ(min_generators(ideal(r, "(x, y, x + y, x^2)")), 2);
  auto node = fiber_product_ring(1, Field::prime(101));
  EXPECT_EQ(min_generators(node.ideal("m")), 2);
  auto s = small_noncm();
  EXPECT_EQ(min_generators(colon(s.ideal("Q"), s.ideal("m"))), 3);
}

TEST(HilbertSamuel, Sequences) {
  auto line = ring("Q[x]");
  EXPECT_EQ(hilbert_samuel(ideal(line, "(x)"), 4).lengths, (std::vector<long>{1, 2, 3, 4}));
  auto plane = ring("F101[x,y]");
  auto seq = hilbert_samuel(ideal(plane, "(x^2, y^3)"), 4).lengths;
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(seq[n - 1], 3L * n * (n + 1)) << n;
  EXPECT_EQ(seq[0], 6);  // standard monomials x^a y^b, a < 2, b < 3
  auto s = small_noncm();
  EXPECT_EQ(hilbert_samuel(s.ideal("Q"), 4).lengths, (std::vector<long>{5, 9, 13, 17}));
}

TEST(HilbertSamuel, TruncatesAtTheResourceCap) {
  auto r = ring("F101[x,y]");
  HilbertSamuelOptions o;
  o.max_standard_monomials = 30;
  auto seq = hilbert_samuel(ideal(r, "(x, y)"), 10, o);
  EXPECT_TRUE(seq.truncated);
  EXPECT_LT(seq.lengths.size(), 10u);
  EXPECT_FALSE(seq.truncation_reason.empty());
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(ideal(ring("Q[x]"), "(x)")), 1);
  EXPECT_EQ(multiplicity(ideal(ring("Q[x,y]"), "(x^2, y^3)")), 6);
  EXPECT_EQ(multiplicity(small_noncm().ideal("Q")), 4);
  auto details = multiplicity_details(small_noncm().ideal("Q"));
  EXPECT_EQ(details.dimension, 1);
  EXPECT_GE(details.sequence.size(), 3u);
}

TEST(Multiplicity, RejectsTooFewTerms) {
  MultiplicityOptions o;
  o.nmax = 2;
  EXPECT_THROW(multiplicity(ideal(ring("Q[x,y]"), "(x, y)"), o), PreconditionError);
}

TEST(Defect, Examples) {
  EXPECT_EQ(buchsbaum_defect(ideal(ring("Q[x,y]"), "(x, y)")), 0);
  auto s = small_noncm();
  EXPECT_EQ(buchsbaum_defect(s.ideal("Q_squares")), 1);
  auto fiber = fiber_product_ring(2, Field::prime(101));
  EXPECT_EQ(length(fiber.ideal("Q")), 3);
  EXPECT_EQ(multiplicity(fiber.ideal("Q")), 2);
  EXPECT_EQ(buchsbaum_defect(fiber.ideal("Q")), 1);
}

TEST(CmType, Examples) {
  EXPECT_EQ(cm_type(ideal(ring("Q[x,y]"), "(x, y)")), 1);
  auto node = fiber_product_ring(1, Field::prime(101));
  EXPECT_EQ(cm_type(node.ideal("Q")), 1);
  auto curve = semigroup_curve(Field::prime(101));
  EXPECT_EQ(cm_type(curve.ideal("Q")), 2);
  EXPECT_THROW(cm_type(small_noncm().ideal("Q")), PreconditionError);
}

TEST(Stability, Examples) {
  auto node = fiber_product_ring(1, Field::prime(101));
  IdealHandle q = node.ideal("Q");
  EXPECT_EQ(stability_index(colon(q, node.ideal("m")), q, 4), 1);
  auto s = small_noncm();
  IdealHandle sq = s.ideal("Q");
  StabilityTrace trace = stability_trace(colon(sq, s.ideal("m")), sq, 4);
  EXPECT_EQ(trace.equal, (std::vector<bool>{false, true}));
  EXPECT_EQ(trace.index, 2);
  auto line = ring("Q[x]");
  for (int kmax : {1, 3, 6}) {
    EXPECT_FALSE(stability_index(ideal(line, "(x)"), ideal(line, "(x^2)"), kmax).has_value());
  }
  EXPECT_THROW(stability_index(ideal(line, "(x^2)"), ideal(line, "(x)"), 2), PreconditionError);
}

TEST(Sampling, SameSeedSameIdeal) {
  auto fiber = fiber_product_ring(2, Field::prime(101));
  auto a = sample_stream(7, 3), b = sample_stream(7, 3), c = sample_stream(7, 4);
  IdealHandle qa = sample_parameter_ideal(fiber.ring, a);
  IdealHandle qb = sample_parameter_ideal(fiber.ring, b);
  IdealHandle qc = sample_parameter_ideal(fiber.ring, c);
  EXPECT_EQ(qa.to_string(), qb.to_string());
  EXPECT_NE(qa.to_string(), qc.to_string());
  EXPECT_EQ(qa.gens().size(), 2u);
  EXPECT_TRUE(is_origin_primary(qa));
}

TEST(Sampling, RationalCoefficientsAreSmallIntegers) {
  auto r = ring("Q[x,y]");
  auto rng = sample_stream(1, 0);
  for (int i = 0; i < 100; ++i) {
    Scalar c = random_coefficient(r->field(), rng);
    EXPECT_LE(abs(c.rational()), 9);
    EXPECT_EQ(c.rational().get_den(), 1);
  }
}

TEST(Sampling, InhomogeneousFormsStillParameterIdeals) {
  auto fiber = fiber_product_ring(1, Field::prime(101));
  auto rng = sample_stream(9, 0);
  SamplerOptions o;
  o.inhomogeneous = true;
  IdealHandle q = sample_parameter_ideal(fiber.ring, rng, o);
  EXPECT_TRUE(is_origin_primary(q));
}

TEST(Sampling, GivesUpOnCurvesWithoutLinearParameters) {
  auto curve = semigroup_curve(Field::prime(101));
  auto rng = sample_stream(7, 0);
  EXPECT_THROW(sample_parameter_ideal(curve.ring, rng), ComputationError);
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth_probe(ring("F101[x,y]"), 4, 7).depth, 2);
  auto s32 = noncm_ring(3, 2, Field::prime(101));
  const IdealHandle& q = s32.ideal("Q");
  DepthProbe p = depth_probe(s32.ring, 4, 7, &q);
  EXPECT_EQ(p.lower_bound, 1);
  ASSERT_TRUE(p.defect.has_value());
  EXPECT_GT(*p.defect, 0);
  EXPECT_EQ(p.depth, 1);
  auto fiber = fiber_product_ring(2, Field::prime(101));
  DepthProbe f = depth_probe(fiber.ring, 4, 7);
  EXPECT_EQ(f.lower_bound, 1);
  // x1 + y1 is regular; x2 + y2 is then a zerodivisor.
  IdealHandle first(fiber.ring, {fiber.ring->parse("x1 + y1")});
  EXPECT_TRUE(ideal_equal(colon_element(IdealHandle::zero(fiber.ring), fiber.ring->parse("x1 + y1")),
                          IdealHandle::zero(fiber.ring)));
  EXPECT_FALSE(ideal_equal(colon_element(first, fiber.ring->parse("x2 + y2")), first));
}
