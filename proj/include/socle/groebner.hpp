#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "socle/polynomial.hpp"

namespace socle {

/// Reduced Gröbner basis: monic, mutually irreducible elements sorted by
/// ascending leading monomial. Two ideals are equal iff their bases compare
/// equal, so this doubles as the canonical form of an ideal.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  /// `elements` must already form a reduced basis; they are only sorted.
  GroebnerBasis(PolyRingPtr ring, std::vector<Polynomial> elements);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const { return elements_.size() == 1 && elements_[0].is_constant(); }

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  std::vector<Monomial> leading_monomials() const;

  /// One polynomial per line, in basis order.
  std::string serialize() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> elements_;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
};

/// Buchberger's algorithm with the Gebauer-Möller pair update (coprime and
/// chain criteria) and the normal selection strategy: smallest lcm degree
/// first, ties broken by the monomial order on the lcm. Zero generators are
/// ignored; an empty input gives the zero ideal.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const PolyRingPtr& ring,
                         BuchbergerStats* stats = nullptr);

/// basis.elements()[i] == sum_j cofactors[i][j] * gens[j].
struct TracedBasis {
  GroebnerBasis basis;
  std::vector<std::vector<Polynomial>> cofactors;
};

TracedBasis buchberger_traced(std::span<const Polynomial> gens, const PolyRingPtr& ring);

/// Every S-polynomial of the list reduces to zero against it.
bool is_groebner_basis(std::span<const Polynomial> basis);

/// Memoized reduced basis, keyed by the canonical problem text (see GbCache).
std::shared_ptr<const GroebnerBasis> groebner_basis(std::span<const Polynomial> gens, const PolyRingPtr& ring);

}  // namespace socle
