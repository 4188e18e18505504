#pragma once

#include <memory>
#include <string>
#include <vector>

#include "socle/groebner.hpp"
#include "socle/polynomial.hpp"

namespace socle {

/// A = S / a, where S is a polynomial ring and a the defining ideal (possibly
/// zero). Ring elements are represented by polynomials of S; every ideal of A
/// is handled through its preimage in S.
class RingPresentation {
 public:
  static std::shared_ptr<const RingPresentation> make(Field field, std::vector<std::string> names,
                                                      MonomialOrder order = MonomialOrder::degrevlex(),
                                                      std::vector<Polynomial> defining = {});
  /// Quotient of an existing polynomial ring by `defining` (polynomials of that ring).
  static std::shared_ptr<const RingPresentation> quotient(PolyRingPtr ambient, std::vector<Polynomial> defining);

  const PolyRingPtr& ambient() const { return ambient_; }
  const Field& field() const { return ambient_->field(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  const std::vector<std::string>& names() const { return ambient_->names(); }
  const std::vector<Polynomial>& defining() const { return defining_; }

  /// True iff every defining generator is homogeneous. Derived, never supplied.
  bool graded() const { return graded_; }

  /// Ambient id plus the defining generators, e.g. "F101[x,y]:degrevlex/(x*y)".
  const std::string& id() const { return id_; }

  Polynomial variable(std::size_t i) const { return Polynomial::variable(ambient_, i); }
  Polynomial variable(const std::string& name) const;
  Polynomial constant(long long c) const { return Polynomial::from_int(ambient_, c); }
  Polynomial parse(const std::string& text) const;

  /// Reduced Gröbner basis of the defining ideal (memoized).
  std::shared_ptr<const GroebnerBasis> defining_basis() const;

  bool same_as(const RingPresentation& other) const { return this == &other || id_ == other.id_; }

 private:
  RingPresentation(PolyRingPtr ambient, std::vector<Polynomial> defining);

  PolyRingPtr ambient_;
  std::vector<Polynomial> defining_;
  bool graded_ = true;
  std::string id_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

void require_same_ring(const RingPresentation& a, const RingPresentation& b);

}  // namespace socle
