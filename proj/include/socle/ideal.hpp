#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "socle/groebner.hpp"
#include "socle/ring.hpp"

namespace socle {

/// An ideal of A = S/a given by generators (polynomials of S). Its reduced
/// Gröbner basis, of the generators together with a, is computed on first
/// use and shared between copies.
class IdealHandle {
 public:
  IdealHandle() = default;
  /// Drops zero generators and exact duplicates.
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

  static IdealHandle zero(RingPtr ring) { return IdealHandle(std::move(ring), {}); }
  static IdealHandle unit(RingPtr ring);
  /// The ideal generated by all variables.
  static IdealHandle maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  const GroebnerBasis& basis() const;
  std::shared_ptr<const GroebnerBasis> basis_ptr() const;

  bool contains(const Polynomial& f) const { return basis().contains(f); }
  bool contains(const IdealHandle& other) const;
  bool is_zero() const;
  bool is_unit() const { return basis().is_unit_ideal(); }

  std::string to_string() const;

 private:
  struct Lazy {
    std::once_flag once;
    std::shared_ptr<const GroebnerBasis> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Lazy> lazy_;
};

bool is_member(const Polynomial& f, const IdealHandle& ideal);
/// Reduced bases coincide element for element.
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

IdealHandle sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle product(const IdealHandle& a, const IdealHandle& b);
/// n-fold product; n = 0 is rejected. Duplicate products and products that
/// vanish modulo the defining ideal are pruned.
IdealHandle power(const IdealHandle& a, unsigned n);

enum class CombineOp { Sum, Product, Power };
/// Generic form of sum/product/power: `other` is used for Sum and Product,
/// `exponent` for Power.
IdealHandle combine(CombineOp op, const IdealHandle& a, const IdealHandle* other, unsigned exponent = 0);

/// Eliminates a tag variable t from t*I + (1-t)*J.
IdealHandle intersect(const IdealHandle& a, const IdealHandle& b);

/// I : (f), computed as (I ∩ (f)) / f with exact division.
IdealHandle colon_element(const IdealHandle& ideal, const Polynomial& f);
/// I : J as the intersection of I : f over the generators f of J.
IdealHandle colon(const IdealHandle& ideal, const IdealHandle& by);

/// I ∩ k[remaining variables], read off an elimination-order basis. The
/// result lives in a fresh polynomial ring on the remaining variables.
IdealHandle eliminate(const IdealHandle& ideal, const std::vector<std::string>& block);

/// Dimension of A/I from the leading-monomial ideal. Rejects the unit ideal.
int krull_dimension(const IdealHandle& ideal);
int ring_dimension(const RingPtr& ring);

/// Why `ideal` fails to be primary to the origin, or nullopt when it is.
std::optional<std::string> origin_primary_failure(const IdealHandle& ideal);
/// Finite colength and every variable in the radical (checked with the
/// Rabinowitsch trick 1 ∈ J + (t*x - 1)).
bool is_origin_primary(const IdealHandle& ideal);

/// Kernel of k[pres_vars] -> target, pres_vars[i] |-> images[i].
IdealHandle subalgebra_presentation(const RingPtr& target, const std::vector<Polynomial>& images,
                                    const std::vector<std::string>& pres_vars);

}  // namespace socle
