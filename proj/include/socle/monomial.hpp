#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

namespace socle {

/// Exponent vector with a cached total degree. The length always equals the
/// variable count of the ring the monomial belongs to.
class Monomial {
 public:
  using Exponent = std::uint16_t;
  using Storage = boost::container::small_vector<Exponent, 12>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::span<const int> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const Storage& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, int e);

  /// Bit i set iff variable i (mod 64) occurs; a cheap divisibility prefilter.
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  Storage exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// degrevlex, lex, or a two-block elimination order in which any monomial
/// involving one of the first `block_size` variables exceeds every monomial
/// free of them. Within each block the order is degrevlex.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder elimination(std::size_t block_size) { return MonomialOrder(Kind::Elimination, block_size); }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  /// Negative, zero, positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  /// "degrevlex", "lex", "elim(k)".
  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

}  // namespace socle
