#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// binary. Each suite returns how many cases ran and the first failure seen.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "oracles/macaulay.hpp"
#include "oracles/staircase.hpp"
#include "socle/groebner.hpp"
#include "socle/ideal.hpp"
#include "socle/invariants.hpp"

namespace props {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline socle::RingPtr poly_ring(std::size_t nvars, std::uint32_t p = 101) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::vector<std::string> vars(names, names + nvars);
  return socle::RingPresentation::make(socle::Field::prime(p), vars);
}

inline socle::Polynomial random_homogeneous(const socle::RingPtr& r, unsigned degree, int terms, std::mt19937& rng) {
  std::vector<socle::Monomial> pool;
  for (const auto& m : oracle::monomials_up_to(r->nvars(), degree)) {
    if (m.degree() == degree) pool.push_back(m);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<long long> coeff(1, 100);
  std::vector<socle::Term> out;
  for (int i = 0; i < terms; ++i) out.push_back({pool[pick(rng)], r->field().from_int(coeff(rng))});
  return socle::Polynomial::from_terms(r->ambient(), out);
}

inline socle::Polynomial random_poly(const socle::RingPtr& r, unsigned max_degree, int terms, std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  socle::Polynomial f(r->ambient());
  for (int i = 0; i < terms; ++i) f = f + random_homogeneous(r, deg(rng), 1, rng);
  return f;
}

inline socle::Polynomial monomial_poly(const socle::RingPtr& r, const std::vector<int>& exps) {
  return socle::Polynomial::term(r->ambient(), socle::Monomial(exps), r->field().one());
}

inline SuiteResult groebner_shuffles(unsigned seed, int shuffles = 20) {
  SuiteResult res{"groebner canonicity under generator shuffles"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> scale(1, 100);
  for (int ideal_no = 0; ideal_no < 4; ++ideal_no) {
    auto r = poly_ring(2 + ideal_no % 2);
    std::vector<socle::Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, 3, 3, rng));
    const socle::GroebnerBasis reference = socle::buchberger(gens, r->ambient());
    for (int s = 0; s < shuffles; ++s) {
      std::vector<socle::Polynomial> perm = gens;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (auto& g : perm) g = g.scale(r->field().from_int(scale(rng)));
      if (s % 2) perm.push_back(perm[0] + perm[1]);
      ++res.cases;
      if (!(socle::buchberger(perm, r->ambient()) == reference)) {
        res.fail("ideal " + std::to_string(ideal_no) + " shuffle " + std::to_string(s));
      }
    }
  }
  return res;
}

inline SuiteResult normal_form_idempotence(unsigned seed, int inputs = 100) {
  SuiteResult res{"normal form idempotence"};
  std::mt19937 rng(seed);
  auto r = poly_ring(3);
  std::vector<socle::Polynomial> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, 2, 3, rng));
  const socle::GroebnerBasis g = socle::buchberger(gens, r->ambient());
  const auto lms = g.leading_monomials();
  for (int i = 0; i < inputs; ++i) {
    socle::Polynomial f = random_poly(r, 4, 5, rng);
    socle::Polynomial nf = g.reduce(f);
    ++res.cases;
    bool ok = g.reduce(nf) == nf && g.contains(f - nf);
    for (const auto& t : nf.terms()) {
      for (const auto& lm : lms) ok = ok && !lm.divides(t.monomial);
    }
    if (!ok) res.fail("input " + f.to_string());
  }
  return res;
}

inline SuiteResult colon_containment(unsigned seed, int cases = 50) {
  SuiteResult res{"colon containment"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> count(1, 3);
  for (int c = 0; c < cases; ++c) {
    auto r = poly_ring(2 + c % 2);
    auto small_ideal = [&] {
      std::vector<socle::Polynomial> gens;
      for (int i = count(rng); i > 0; --i) gens.push_back(random_poly(r, 3, 2, rng));
      return socle::IdealHandle(r, gens);
    };
    socle::IdealHandle i = small_ideal(), j = small_ideal();
    if (j.is_zero()) continue;
    socle::IdealHandle q = socle::colon(i, j);
    ++res.cases;
    if (!i.contains(socle::product(q, j)) || !q.contains(i)) res.fail("I = " + i.to_string() + ", J = " + j.to_string());
  }
  return res;
}

inline SuiteResult staircase_lengths(unsigned seed, int cases = 50) {
  SuiteResult res{"monomial lengths vs lattice count"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> power(1, 6), extra(0, 3);
  for (int c = 0; c < cases; ++c) {
    const std::size_t n = 1 + c % 3;
    auto r = poly_ring(n);
    std::vector<std::vector<int>> exps;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> e(n, 0);
      e[v] = power(rng);
      exps.push_back(e);
    }
    for (int k = extra(rng); k > 0; --k) {
      std::vector<int> e(n);
      for (auto& x : e) x = power(rng) - 1;
      exps.push_back(e);
    }
    std::vector<socle::Polynomial> gens;
    for (const auto& e : exps) gens.push_back(monomial_poly(r, e));
    const long expected = oracle::staircase_count(exps, n);
    ++res.cases;
    long got = -1;
    try {
      got = socle::length(socle::IdealHandle(r, gens));
    } catch (const std::exception& e) {
      res.fail(std::string("threw: ") + e.what());
      continue;
    }
    if (got != expected) {
      res.fail("length " + std::to_string(got) + " vs lattice count " + std::to_string(expected));
    }
  }
  return res;
}

inline SuiteResult complete_intersection_multiplicity(unsigned seed, int cases = 20) {
  SuiteResult res{"complete-intersection multiplicity equals colength"};
  std::mt19937 rng(seed);
  for (int c = 0; c < cases; ++c) {
    const std::size_t n = 1 + c % 3;
    std::uniform_int_distribution<int> power(1, n == 3 ? 2 : 4);
    auto r = poly_ring(n);
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<socle::Polynomial> gens;
    long product = 1;
    for (std::size_t v : order) {
      std::vector<int> e(n, 0);
      e[v] = power(rng);
      product *= e[v];
      gens.push_back(monomial_poly(r, e));
    }
    socle::IdealHandle q(r, gens);
    ++res.cases;
    socle::MultiplicityOptions o;
    o.nmax = static_cast<unsigned>(n) + 3;
    const long e = socle::multiplicity(q, o);
    const long len = socle::length(q);
    if (e != len || len != product) {
      res.fail(q.to_string() + ": e = " + std::to_string(e) + ", length = " + std::to_string(len));
    }
  }
  return res;
}

inline SuiteResult macaulay_membership(unsigned seed, int cases = 60) {
  SuiteResult res{"membership agrees with the Macaulay-rank oracle"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<unsigned> deg(1, 3);
  std::uniform_int_distribution<int> count(1, 3), coin(0, 1);
  int members = 0, others = 0;
  for (int c = 0; c < cases; ++c) {
    auto r = poly_ring(1 + c % 3);
    std::vector<socle::Polynomial> gens;
    for (int i = count(rng); i > 0; --i) gens.push_back(random_homogeneous(r, deg(rng), 2, rng));
    socle::IdealHandle ideal(r, gens);
    const unsigned d = deg(rng);
    // Half the probes are built as combinations of the generators.
    socle::Polynomial f(r->ambient());
    if (coin(rng)) {
      for (const auto& g : gens) {
        if (g.total_degree() <= d) f = f + g * random_homogeneous(r, d - g.total_degree(), 2, rng);
      }
    } else {
      f = random_homogeneous(r, d, 3, rng);
    }
    ++res.cases;
    const bool member = socle::is_member(f, ideal);
    (member ? members : others)++;
    if (member != oracle::member_up_to_degree(f, gens, d)) res.fail(f.to_string() + " in " + ideal.to_string());
  }
  if (members == 0 || others == 0) res.fail("probes were all on one side");
  return res;
}

inline std::vector<SuiteResult> all_suites(unsigned seed) {
  return {groebner_shuffles(seed),          normal_form_idempotence(seed),
          colon_containment(seed),          staircase_lengths(seed),
          complete_intersection_multiplicity(seed), macaulay_membership(seed)};
}

}  // namespace props
