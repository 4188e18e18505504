#include "socle/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "socle/error.hpp"

namespace socle {

PolyRing::PolyRing(Field field, std::vector<std::string> names, MonomialOrder order)
    : field_(field), names_(std::move(names)), order_(order) {
  std::ostringstream os;
  os << field_.descriptor() << "[";
  for (std::size_t i = 0; i < names_.size(); ++i) os << (i ? "," : "") << names_[i];
  os << "]:" << order_.name();
  id_ = os.str();
}

std::shared_ptr<const PolyRing> PolyRing::make(Field field, std::vector<std::string> names, MonomialOrder order) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw PreconditionError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw PreconditionError("duplicate variable name '" + names[i] + "'");
    }
  }
  if (order.kind() == MonomialOrder::Kind::Elimination && order.block_size() > names.size()) {
    throw PreconditionError("elimination block larger than the variable count");
  }
  return std::shared_ptr<const PolyRing>(new PolyRing(field, std::move(names), order));
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!a.same_as(b)) throw RingMismatchError(a.id(), b.id());
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!f.ring() || !g.ring()) throw PreconditionError("polynomial without a ring");
  require_same_ring(*f.ring(), *g.ring());
}

namespace {

struct Descending {
  const PolyRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return ring->compare(a, b) > 0; }
};

using TermMap = std::map<Monomial, Scalar, Descending>;

void accumulate(TermMap& acc, const Field& k, Monomial m, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second = k.add(it->second, c);
    if (k.is_zero(it->second)) acc.erase(it);
  }
}

std::uint64_t mask_of(const Monomial& m) { return m.support_mask(); }

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors, std::vector<std::vector<Term>>* quotients) {
  const PolyRingPtr& ring = f.ring();
  const Field& k = ring->field();
  std::vector<std::uint64_t> masks;
  masks.reserve(divisors.size());
  for (const auto& g : divisors) {
    require_same_ring(f, g);
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    masks.push_back(mask_of(g.leading_monomial()));
  }
  std::vector<Scalar> inv_lc;
  inv_lc.reserve(divisors.size());
  for (const auto& g : divisors) inv_lc.push_back(k.inv(g.leading_coeff()));

  TermMap acc(Descending{ring.get()});
  for (const auto& t : f.terms()) acc.emplace(t.monomial, t.coeff);

  std::vector<Term> rem;
  while (!acc.empty()) {
    auto it = acc.begin();
    const Monomial& m = it->first;
    std::uint64_t mm = mask_of(m);
    std::size_t j = 0;
    for (; j < divisors.size(); ++j) {
      if ((masks[j] & ~mm) == 0 && divisors[j].leading_monomial().divides(m)) break;
    }
    if (j == divisors.size()) {
      rem.push_back(Term{it->first, it->second});
      acc.erase(it);
      continue;
    }
    const Polynomial& g = divisors[j];
    Scalar factor = k.mul(it->second, inv_lc[j]);
    Monomial shift = m / g.leading_monomial();
    acc.erase(it);
    Scalar neg = k.neg(factor);
    for (std::size_t t = 1; t < g.terms().size(); ++t) {
      accumulate(acc, k, shift * g.terms()[t].monomial, k.mul(neg, g.terms()[t].coeff));
    }
    if (quotients) (*quotients)[j].push_back(Term{std::move(shift), std::move(factor)});
  }
  return Polynomial::from_terms(ring, std::move(rem));
}

}  // namespace

Polynomial Polynomial::constant(PolyRingPtr ring, const Scalar& c) {
  Monomial one(ring->nvars());
  return term(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::from_int(PolyRingPtr ring, long long c) {
  Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw PreconditionError("variable index out of range");
  Monomial m = Monomial::variable(ring->nvars(), index);
  Scalar one = ring->field().one();
  return term(std::move(ring), std::move(m), one);
}

Polynomial Polynomial::term(PolyRingPtr ring, Monomial m, const Scalar& c) {
  if (m.size() != ring->nvars()) throw PreconditionError("monomial length does not match ring " + ring->id());
  Polynomial p(std::move(ring));
  if (!p.ring_->field().is_zero(c)) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  const PolyRing& r = *ring;
  const Field& k = r.field();
  for (const auto& t : terms) {
    if (t.monomial.size() != r.nvars()) throw PreconditionError("monomial length does not match ring " + r.id());
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
      if (k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!k.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

bool Polynomial::free_of(std::size_t first, std::size_t last) const {
  for (const auto& t : terms_) {
    for (std::size_t i = first; i < last; ++i) {
      if (t.monomial[i] != 0) return false;
    }
  }
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::scale(const Scalar& c) const {
  const Field& k = ring_->field();
  Polynomial p(ring_);
  if (k.is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.monomial, k.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  const Field& k = ring_->field();
  Polynomial p(ring_);
  if (k.is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : terms_) p.terms_.push_back(Term{t.monomial * m, k.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::exact_quotient(const Polynomial& divisor) const {
  std::vector<std::vector<Term>> q(1);
  Polynomial r = reduce(*this, std::span<const Polynomial>(&divisor, 1), &q);
  if (!r.is_zero()) return std::nullopt;
  return from_terms(ring_, std::move(q[0]));
}

Polynomial Polynomial::map_to(const PolyRingPtr& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->nvars()) throw PreconditionError("variable map has the wrong length");
  if (!(target->field() == ring_->field())) throw RingMismatchError(ring_->id(), target->id());
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.monomial[i] != 0) m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
    }
    out.push_back(Term{std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = k.is_negative(t.coeff);
    Scalar magnitude = negative ? k.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = k.is_one(magnitude);
    bool wrote = false;
    if (!unit || t.monomial.is_one()) {
      os << k.to_string(magnitude);
      wrote = true;
    }
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (wrote) os << "*";
      os << ring_->name(i);
      if (t.monomial[i] > 1) os << "^" << t.monomial[i];
      wrote = true;
    }
  }
  return os.str();
}

std::size_t Polynomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  const Field& k = ring_->field();
  for (const auto& t : terms_) {
    h ^= t.monomial.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    std::size_t c = k.is_rational() ? std::hash<std::string>{}(t.coeff.rational().get_str()) : t.coeff.residue();
    h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

Polynomial merge(const Polynomial& f, const Polynomial& g, bool subtract) {
  require_same_ring(f, g);
  const PolyRing& r = *f.ring();
  const Field& k = r.field();
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  auto a = f.terms().begin(), ae = f.terms().end();
  auto b = g.terms().begin(), be = g.terms().end();
  auto take_b = [&](const Term& t) { out.push_back(Term{t.monomial, subtract ? k.neg(t.coeff) : t.coeff}); };
  while (a != ae && b != be) {
    int c = r.compare(a->monomial, b->monomial);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      take_b(*b++);
    } else {
      Scalar s = subtract ? k.sub(a->coeff, b->coeff) : k.add(a->coeff, b->coeff);
      if (!k.is_zero(s)) out.push_back(Term{a->monomial, std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) out.push_back(*a);
  for (; b != be; ++b) take_b(*b);
  return Polynomial::from_terms(f.ring(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) { return merge(f, g, false); }

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return merge(f, g, true); }

Polynomial operator-(const Polynomial& f) { return f.scale(f.ring()->field().neg(f.ring()->field().one())); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  const Field& k = f.ring()->field();
  std::vector<Term> out;
  out.reserve(f.size() * g.size());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) out.push_back(Term{a.monomial * b.monomial, k.mul(a.coeff, b.coeff)});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!f.ring() || !g.ring()) return f.ring() == g.ring() && f.terms() == g.terms();
  return f.ring()->same_as(*g.ring()) && f.terms() == g.terms();
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  std::vector<std::vector<Term>> q(divisors.size());
  DivisionResult result;
  result.remainder = reduce(f, divisors, &q);
  result.quotients.reserve(divisors.size());
  for (auto& terms : q) result.quotients.push_back(Polynomial::from_terms(f.ring(), std::move(terms)));
  return result;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  return reduce(f, divisors, nullptr);
}

}  // namespace socle
