#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace socle {

/// An element of the coefficient field: a residue in [0, p) or a rational
/// in lowest terms. Which alternative is active is fixed by the owning Field.
class Scalar {
 public:
  Scalar() : value_(std::uint32_t{0}) {}
  explicit Scalar(std::uint32_t residue) : value_(residue) {}
  explicit Scalar(mpq_class rational) : value_(std::move(rational)) {
    std::get<mpq_class>(value_).canonicalize();
  }

  bool is_residue() const { return std::holds_alternative<std::uint32_t>(value_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  std::variant<std::uint32_t, mpq_class> value_;
};

/// Coefficient field: the rationals (characteristic 0) or F_p for a word-sized
/// prime p. All arithmetic on Scalars goes through the field so that values
/// never mix characteristics.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  /// "Q" or "F<p>", the spelling used by the ring grammar.
  std::string descriptor() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_integer(const mpz_class& v) const;
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Residues print in the symmetric range (-p/2, p/2]; rationals as n or n/d.
  std::string to_string(const Scalar& a) const;

  /// True when the printed form starts with '-'.
  bool is_negative(const Scalar& a) const;

  /// Image of a rational under the reduction map to this prime field.
  /// Throws if the denominator vanishes mod p.
  Scalar reduce_rational(const mpq_class& q) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace socle
