#include "socle/field.hpp"

#include "socle/error.hpp"

namespace socle {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::descriptor() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Scalar Field::zero() const { return is_rational() ? Scalar(mpq_class(0)) : Scalar(std::uint32_t{0}); }

Scalar Field::one() const { return is_rational() ? Scalar(mpq_class(1)) : Scalar(std::uint32_t{1}); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(std::to_string(v))));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r));
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (is_rational()) return Scalar(mpq_class(v));
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r.get_ui()));
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw PreconditionError("zero denominator");
  if (is_rational()) return Scalar(mpq_class(num, den));
  return div(from_integer(num), from_integer(den));
}

bool Field::is_zero(const Scalar& a) const {
  return is_rational() ? a.rational() == 0 : a.residue() == 0;
}

bool Field::is_one(const Scalar& a) const {
  return is_rational() ? a.rational() == 1 : a.residue() == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(mpq_class(a.rational() + b.rational()));
  std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
  return Scalar(static_cast<std::uint32_t>(s >= p_ ? s - p_ : s));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(mpq_class(a.rational() - b.rational()));
  std::uint64_t s = std::uint64_t{a.residue()} + p_ - b.residue();
  return Scalar(static_cast<std::uint32_t>(s >= p_ ? s - p_ : s));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(mpq_class(a.rational() * b.rational()));
  return Scalar(static_cast<std::uint32_t>(std::uint64_t{a.residue()} * b.residue() % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rational()) return Scalar(mpq_class(-a.rational()));
  return Scalar(a.residue() == 0 ? 0u : p_ - a.residue());
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw ComputationError("division by zero in " + descriptor());
  if (is_rational()) return Scalar(mpq_class(1 / a.rational()));
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.residue();
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return Scalar(static_cast<std::uint32_t>(t));
}

std::string Field::to_string(const Scalar& a) const {
  if (is_rational()) return a.rational().get_str();
  std::uint32_t r = a.residue();
  if (r > p_ / 2) return "-" + std::to_string(p_ - r);
  return std::to_string(r);
}

bool Field::is_negative(const Scalar& a) const {
  if (is_rational()) return a.rational() < 0;
  return a.residue() > p_ / 2;
}

Scalar Field::reduce_rational(const mpq_class& q) const {
  if (is_rational()) return Scalar(q);
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw ComputationError("denominator vanishes modulo " + std::to_string(p_));
  return from_fraction(q.get_num(), q.get_den());
}

}  // namespace socle
