#include "socle/monomial.hpp"

#include <limits>

#include "socle/error.hpp"

namespace socle {

namespace {

Monomial::Exponent checked_exponent(long e) {
  if (e < 0 || e > std::numeric_limits<Monomial::Exponent>::max()) {
    throw ComputationError("monomial exponent out of range: " + std::to_string(e));
  }
  return static_cast<Monomial::Exponent>(e);
}

// degrevlex restricted to variables [lo, hi).
int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::span<const int> exps) : exps_(exps.size(), 0) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  degree_ -= exps_[i];
  exps_[i] = checked_exponent(e);
  degree_ += exps_[i];
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = checked_exponent(long{a.exps_[i]} + b.exps_[i]);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = checked_exponent(long{a.exps_[i]} - b.exps_[i]);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = deg;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::Elimination: {
      int c = degrevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return degrevlex_range(a, b, block_, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace socle
