#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "socle/field.hpp"
#include "socle/monomial.hpp"

namespace socle {

/// The ambient polynomial ring k[x_1..x_n] with a fixed monomial order.
/// Two PolyRing objects with the same id are interchangeable.
class PolyRing {
 public:
  static std::shared_ptr<const PolyRing> make(Field field, std::vector<std::string> names, MonomialOrder order);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const MonomialOrder& order() const { return order_; }

  /// Canonical descriptor, e.g. "F101[x,y]:degrevlex".
  const std::string& id() const { return id_; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  /// Same field, variables and order.
  bool same_as(const PolyRing& other) const { return this == &other || id_ == other.id_; }

 private:
  PolyRing(Field field, std::vector<std::string> names, MonomialOrder order);

  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::string id_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial monomial;
  Scalar coeff;

  friend bool operator==(const Term& a, const Term& b) = default;
};

/// Sparse polynomial: nonzero terms in strictly descending monomial order.
/// The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(PolyRingPtr ring, const Scalar& c);
  static Polynomial from_int(PolyRingPtr ring, long long c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial term(PolyRingPtr ring, Monomial m, const Scalar& c);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  /// Order-maximal term. Throws PreconditionError on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }

  std::uint32_t total_degree() const;
  bool is_homogeneous() const;
  /// True iff no term involves a variable with index >= first and < last.
  bool free_of(std::size_t first, std::size_t last) const;

  Polynomial monic() const;
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned n) const;

  /// Quotient f/g when g divides f exactly in the polynomial ring.
  std::optional<Polynomial> exact_quotient(const Polynomial& divisor) const;

  /// Re-homes the polynomial in `target`, sending variable i to target
  /// variable var_map[i].
  Polynomial map_to(const PolyRingPtr& target, std::span<const std::size_t> var_map) const;

  std::string to_string() const;
  std::size_t hash() const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f);

  /// Same ring and identical term lists.
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws RingMismatchError naming both ring ids unless f and g share a ring.
void require_same_ring(const Polynomial& f, const Polynomial& g);
void require_same_ring(const PolyRing& a, const PolyRing& b);

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per divisor, in divisor order
  Polynomial remainder;
};

/// Multivariate division. The highest reducible monomial is always reduced by
/// the first divisor (in the given order) whose leading monomial divides it,
/// so f = sum(quotients[i] * divisors[i]) + remainder and no monomial of the
/// remainder is divisible by a divisor's leading monomial.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// Remainder of `divide` without building quotients.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

}  // namespace socle
