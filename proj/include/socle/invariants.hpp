#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "socle/ideal.hpp"
#include "socle/parallel.hpp"

namespace socle {

inline constexpr std::size_t kDefaultMaxStandardMonomials = 2'000'000;

/// A/J for an ideal J of finite colength, with the standard monomials of
/// its reduced basis as k-basis (ascending in the monomial order).
class ArtinianQuotient {
 public:
  explicit ArtinianQuotient(IdealHandle ideal, std::size_t max_monomials = kDefaultMaxStandardMonomials);

  const IdealHandle& ideal() const { return ideal_; }
  const std::vector<Monomial>& standard_monomials() const { return basis_; }
  std::size_t length() const { return basis_.size(); }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Coordinates of the normal form of f in the standard-monomial basis.
  std::vector<Scalar> coordinates(const Polynomial& f) const;

 private:
  IdealHandle ideal_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// ℓ(A/J). Rejects J unless A/J is finite-dimensional and every variable is
/// nilpotent modulo J; the message names the failing variable.
long length(const IdealHandle& ideal, std::size_t max_monomials = kDefaultMaxStandardMonomials);

/// ℓ(outer/inner) = ℓ(A/inner) - ℓ(A/outer); requires inner ⊆ outer.
long relative_length(const IdealHandle& inner, const IdealHandle& outer);

struct SocleResult {
  IdealHandle socle_ideal;  // J : m
  long length;              // ℓ((J : m)/J)
};

SocleResult socle(const IdealHandle& ideal);

/// μ(I) = ℓ(I/mI).
long min_generators(const IdealHandle& ideal);

struct HilbertSamuelOptions {
  std::size_t max_standard_monomials = kDefaultMaxStandardMonomials;
  exec::Policy policy = exec::default_policy();
};

struct HilbertSamuelSequence {
  std::vector<long> lengths;  // lengths[n-1] = ℓ(A/q^n)
  bool truncated = false;
  std::string truncation_reason;
};

/// ℓ(A/q^n) for n = 1..nmax; terms are independent and computed under the
/// given execution policy. A resource cap yields a truncated prefix.
HilbertSamuelSequence hilbert_samuel(const IdealHandle& q, unsigned nmax, const HilbertSamuelOptions& options = {});

struct MultiplicityOptions {
  unsigned nmax = 0;  // 0 means dim + 6
  std::size_t max_standard_monomials = kDefaultMaxStandardMonomials;
  exec::Policy policy = exec::default_policy();
};

struct MultiplicityResult {
  long value = 0;
  int dimension = 0;
  std::vector<long> sequence;
  unsigned stabilized_at = 0;  // n at which the first of the two agreeing differences starts
};

/// e_q(A): the d-th finite difference of n -> ℓ(A/q^n), taken at the first n
/// where two consecutive d-th differences agree. Throws ComputationError
/// ("postulation not reached") when that does not happen by nmax.
MultiplicityResult multiplicity_details(const IdealHandle& q, const MultiplicityOptions& options = {});
long multiplicity(const IdealHandle& q, const MultiplicityOptions& options = {});

/// ℓ(A/q) - e_q(A).
long buchsbaum_defect(const IdealHandle& q, const MultiplicityOptions& options = {});

/// Cohen-Macaulay type ℓ((Q : m)/Q); rejects Q with nonzero defect.
long cm_type(const IdealHandle& q, const MultiplicityOptions& options = {});

struct StabilityTrace {
  std::vector<bool> equal;  // equal[n-1]: I^{n+1} == Q I^n
  std::optional<int> index;
};

/// Checks I^{n+1} = Q I^n for n = 1..kmax, stopping at the first equality.
StabilityTrace stability_trace(const IdealHandle& ideal, const IdealHandle& q, int kmax);
std::optional<int> stability_index(const IdealHandle& ideal, const IdealHandle& q, int kmax);

// --- seeded sampling ---------------------------------------------------------

/// Independent stream for sample `index` under `seed`.
std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index);

/// Coefficient uniform in F_p, or uniform in [-9, 9] over Q.
Scalar random_coefficient(const Field& field, std::mt19937_64& rng);
Polynomial random_linear_form(const RingPtr& ring, std::mt19937_64& rng);

struct SamplerOptions {
  int max_rejections = 50;
  bool inhomogeneous = false;  // add random degree-2 terms to each form
};

/// dim A random linear forms, accepted only if they generate an ideal primary
/// to the origin.
IdealHandle sample_parameter_ideal(const RingPtr& ring, std::mt19937_64& rng, const SamplerOptions& options = {});

// --- depth -------------------------------------------------------------------

struct DepthProbe {
  int dimension = 0;
  int lower_bound = 0;                // longest certified regular sequence
  std::vector<Polynomial> witness;    // that sequence
  std::optional<long> defect;         // of the parameter ideal used for classification
  std::optional<int> depth;           // set when the bound and the defect pin it down
};

/// Greedy search for regular sequences of random linear forms; f is accepted
/// when (prev) : f = (prev). When the bound falls short of the dimension by
/// one and `parameter_ideal` (or a sampled one) has positive defect, the
/// depth is reported as dim - 1.
DepthProbe depth_probe(const RingPtr& ring, int trials, std::uint64_t seed,
                       const IdealHandle* parameter_ideal = nullptr);

}  // namespace socle
