#include "socle/ideal.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "socle/error.hpp"
#include "socle/parallel.hpp"
#include "socle/text.hpp"

namespace socle {

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), lazy_(std::make_shared<Lazy>()) {
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  for (auto& g : gens) {
    require_same_ring(*ring_->ambient(), *g.ring());
    if (g.is_zero()) continue;
    auto& bucket = seen[g.hash()];
    bool dup = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) { return gens_[i] == g; });
    if (dup) continue;
    bucket.push_back(gens_.size());
    gens_.push_back(std::move(g));
  }
}

IdealHandle IdealHandle::unit(RingPtr ring) {
  Polynomial one = ring->constant(1);
  return IdealHandle(std::move(ring), {one});
}

IdealHandle IdealHandle::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  return IdealHandle(std::move(ring), std::move(vars));
}

std::shared_ptr<const GroebnerBasis> IdealHandle::basis_ptr() const {
  if (!lazy_) throw PreconditionError("empty ideal handle");
  std::call_once(lazy_->once, [&] {
    std::vector<Polynomial> all = gens_;
    all.insert(all.end(), ring_->defining().begin(), ring_->defining().end());
    lazy_->basis = groebner_basis(all, ring_->ambient());
  });
  return lazy_->basis;
}

const GroebnerBasis& IdealHandle::basis() const { return *basis_ptr(); }

bool IdealHandle::contains(const IdealHandle& other) const {
  require_same_ring(*ring_, *other.ring_);
  const GroebnerBasis& b = basis();
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return b.contains(g); });
}

bool IdealHandle::is_zero() const {
  const GroebnerBasis& a = *ring_->defining_basis();
  return std::all_of(gens_.begin(), gens_.end(), [&](const Polynomial& g) { return a.contains(g); });
}

std::string IdealHandle::to_string() const { return format_polynomial_list(gens_); }

bool is_member(const Polynomial& f, const IdealHandle& ideal) {
  require_same_ring(*ideal.ring()->ambient(), *f.ring());
  return ideal.contains(f);
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(*a.ring(), *b.ring());
  return a.basis() == b.basis();
}

namespace {

// Normal form modulo the defining ideal; the class in A is unchanged.
std::vector<Polynomial> reduce_modulo_defining(const RingPtr& ring, const std::vector<Polynomial>& polys) {
  const GroebnerBasis& a = *ring->defining_basis();
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    Polynomial r = a.is_zero_ideal() ? p : a.reduce(p);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

std::string fresh_name(const PolyRing& ring, std::string base) {
  while (ring.index_of(base)) base = "_" + base;
  return base;
}

// ring with `fresh` new variables placed first under an elimination order on them.
struct Extension {
  PolyRingPtr ring;
  std::vector<std::size_t> embed;  // old index -> new index
  std::vector<std::size_t> back;   // new index -> old index (fresh variables map to 0)
};

Extension extend(const PolyRing& base, const std::vector<std::string>& fresh, MonomialOrder order) {
  std::vector<std::string> names = fresh;
  names.insert(names.end(), base.names().begin(), base.names().end());
  Extension ext;
  ext.ring = PolyRing::make(base.field(), std::move(names), order);
  for (std::size_t i = 0; i < base.nvars(); ++i) ext.embed.push_back(i + fresh.size());
  ext.back.assign(fresh.size(), 0);
  for (std::size_t i = 0; i < base.nvars(); ++i) ext.back.push_back(i);
  return ext;
}

std::vector<Polynomial> with_defining(const IdealHandle& ideal) {
  std::vector<Polynomial> all = ideal.gens();
  const auto& def = ideal.ring()->defining();
  all.insert(all.end(), def.begin(), def.end());
  return all;
}

// Generators of (first ∩ second) in the ambient ring, both given as generator lists.
std::vector<Polynomial> intersect_lists(const PolyRingPtr& base, const std::vector<Polynomial>& first,
                                        const std::vector<Polynomial>& second) {
  Extension ext = extend(*base, {fresh_name(*base, "t")}, MonomialOrder::elimination(1));
  Polynomial t = Polynomial::variable(ext.ring, 0);
  Polynomial one_minus_t = Polynomial::from_int(ext.ring, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : first) gens.push_back(t * f.map_to(ext.ring, ext.embed));
  for (const auto& g : second) gens.push_back(one_minus_t * g.map_to(ext.ring, ext.embed));
  auto gb = groebner_basis(gens, ext.ring);
  std::vector<Polynomial> out;
  for (const auto& e : gb->elements()) {
    if (e.free_of(0, 1)) out.push_back(e.map_to(base, ext.back));
  }
  return out;
}

}  // namespace

IdealHandle sum(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle product(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) gens.push_back(f * g);
  }
  return IdealHandle(a.ring(), reduce_modulo_defining(a.ring(), gens));
}

IdealHandle power(const IdealHandle& a, unsigned n) {
  if (n == 0) throw PreconditionError("ideal power with exponent 0 (the unit ideal) is not supported");
  const auto& g = a.gens();
  // Products over nondecreasing index sequences, i.e. multisets of generators.
  struct Partial {
    std::size_t last;
    Polynomial value;
  };
  std::vector<Partial> level;
  for (std::size_t i = 0; i < g.size(); ++i) level.push_back(Partial{i, g[i]});
  const GroebnerBasis& def = *a.ring()->defining_basis();
  for (unsigned k = 1; k < n; ++k) {
    std::vector<Partial> next;
    for (const auto& p : level) {
      for (std::size_t j = p.last; j < g.size(); ++j) {
        Polynomial v = p.value * g[j];
        if (!def.is_zero_ideal()) v = def.reduce(v);
        if (!v.is_zero()) next.push_back(Partial{j, std::move(v)});
      }
    }
    level = std::move(next);
  }
  std::vector<Polynomial> gens;
  gens.reserve(level.size());
  for (auto& p : level) gens.push_back(std::move(p.value));
  return IdealHandle(a.ring(), reduce_modulo_defining(a.ring(), gens));
}

IdealHandle combine(CombineOp op, const IdealHandle& a, const IdealHandle* other, unsigned exponent) {
  switch (op) {
    case CombineOp::Sum:
      if (!other) throw PreconditionError("sum needs a second ideal");
      return sum(a, *other);
    case CombineOp::Product:
      if (!other) throw PreconditionError("product needs a second ideal");
      return product(a, *other);
    case CombineOp::Power:
      return power(a, exponent);
  }
  throw PreconditionError("unknown combine operation");
}

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(*a.ring(), *b.ring());
  auto gens = intersect_lists(a.ring()->ambient(), with_defining(a), with_defining(b));
  return IdealHandle(a.ring(), reduce_modulo_defining(a.ring(), gens));
}

IdealHandle colon_element(const IdealHandle& ideal, const Polynomial& f) {
  const RingPtr& ring = ideal.ring();
  require_same_ring(*ring->ambient(), *f.ring());
  if (ideal.contains(f)) return IdealHandle::unit(ring);
  std::vector<Polynomial> quotients;
  for (const auto& g : intersect_lists(ring->ambient(), with_defining(ideal), {f})) {
    auto q = g.exact_quotient(f);
    if (!q) {
      throw ComputationError("colon: generator " + g.to_string() + " of I ∩ (f) is not divisible by " + f.to_string());
    }
    quotients.push_back(std::move(*q));
  }
  return IdealHandle(ring, reduce_modulo_defining(ring, quotients));
}

IdealHandle colon(const IdealHandle& ideal, const IdealHandle& by) {
  require_same_ring(*ideal.ring(), *by.ring());
  if (by.is_zero()) throw PreconditionError("colon by zero ideal");
  const GroebnerBasis& def = *ideal.ring()->defining_basis();
  std::vector<Polynomial> divisors;
  for (const auto& f : by.gens()) {
    if (!def.contains(f)) divisors.push_back(f);
  }
  auto parts = exec::map_indices<IdealHandle>(divisors.size(),
                                              [&](std::size_t i) { return colon_element(ideal, divisors[i]); });
  std::optional<IdealHandle> acc;
  for (auto& p : parts) {
    if (p.is_unit()) continue;
    acc = acc ? intersect(*acc, p) : p;
  }
  return acc ? *acc : IdealHandle::unit(ideal.ring());
}

IdealHandle eliminate(const IdealHandle& ideal, const std::vector<std::string>& block) {
  const PolyRing& base = *ideal.ring()->ambient();
  std::vector<bool> in_block(base.nvars(), false);
  for (const auto& name : block) {
    auto idx = base.index_of(name);
    if (!idx) throw PreconditionError("cannot eliminate unknown variable '" + name + "'");
    in_block[*idx] = true;
  }
  std::vector<std::string> names;
  std::vector<std::string> remaining;
  for (std::size_t i = 0; i < base.nvars(); ++i) {
    if (in_block[i]) names.push_back(base.name(i));
  }
  const std::size_t k = names.size();
  for (std::size_t i = 0; i < base.nvars(); ++i) {
    if (!in_block[i]) {
      names.push_back(base.name(i));
      remaining.push_back(base.name(i));
    }
  }
  PolyRingPtr elim_ring = PolyRing::make(base.field(), names, MonomialOrder::elimination(k));
  std::vector<std::size_t> embed(base.nvars());
  for (std::size_t i = 0; i < base.nvars(); ++i) embed[i] = *elim_ring->index_of(base.name(i));

  std::vector<Polynomial> gens;
  for (const auto& g : with_defining(ideal)) gens.push_back(g.map_to(elim_ring, embed));
  auto gb = groebner_basis(gens, elim_ring);

  RingPtr result_ring = RingPresentation::make(base.field(), remaining, MonomialOrder::degrevlex());
  std::vector<std::size_t> back(elim_ring->nvars(), 0);
  for (std::size_t i = k; i < elim_ring->nvars(); ++i) back[i] = i - k;
  std::vector<Polynomial> out;
  for (const auto& e : gb->elements()) {
    if (e.free_of(0, k)) out.push_back(e.map_to(result_ring->ambient(), back));
  }
  return IdealHandle(result_ring, std::move(out));
}

int krull_dimension(const IdealHandle& ideal) {
  const GroebnerBasis& gb = ideal.basis();
  if (gb.is_unit_ideal()) throw PreconditionError("the unit ideal has no dimension");
  const std::size_t n = ideal.ring()->nvars();
  if (n > 24) throw ResourceLimitError("dimension search supports at most 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) s |= 1u << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  for (std::uint32_t u = 0; u < limit; ++u) {
    int size = std::popcount(u);
    if (size <= best) continue;
    // u is independent iff no leading monomial is supported inside u.
    bool independent = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~u) == 0; });
    if (independent) best = size;
  }
  return best;
}

int ring_dimension(const RingPtr& ring) { return krull_dimension(IdealHandle::zero(ring)); }

std::optional<std::string> origin_primary_failure(const IdealHandle& ideal) {
  const GroebnerBasis& gb = ideal.basis();
  if (gb.is_unit_ideal()) return "the unit ideal is not proper";
  const RingPtr& ring = ideal.ring();
  const PolyRing& base = *ring->ambient();
  auto lms = gb.leading_monomials();
  for (std::size_t i = 0; i < base.nvars(); ++i) {
    bool pure = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m[i] == m.degree(); });
    if (!pure) return "quotient is not finite-dimensional: no power of " + base.name(i) + " is a leading monomial";
  }
  for (std::size_t i = 0; i < base.nvars(); ++i) {
    Extension ext = extend(base, {fresh_name(base, "t")}, MonomialOrder::degrevlex());
    std::vector<Polynomial> gens;
    for (const auto& g : with_defining(ideal)) gens.push_back(g.map_to(ext.ring, ext.embed));
    gens.push_back(Polynomial::variable(ext.ring, 0) * Polynomial::variable(ext.ring, ext.embed[i]) -
                   Polynomial::from_int(ext.ring, 1));
    if (!groebner_basis(gens, ext.ring)->is_unit_ideal()) {
      return "variable " + base.name(i) + " is not in the radical (the quotient has support away from the origin)";
    }
  }
  return std::nullopt;
}

bool is_origin_primary(const IdealHandle& ideal) { return !origin_primary_failure(ideal).has_value(); }

IdealHandle subalgebra_presentation(const RingPtr& target, const std::vector<Polynomial>& images,
                                    const std::vector<std::string>& pres_vars) {
  if (images.size() != pres_vars.size()) {
    throw PreconditionError("subalgebra presentation needs one variable per image");
  }
  const PolyRing& base = *target->ambient();
  for (const auto& name : pres_vars) {
    if (base.index_of(name)) throw PreconditionError("presentation variable '" + name + "' clashes with the target ring");
  }
  for (const auto& img : images) require_same_ring(base, *img.ring());

  std::vector<std::string> names = base.names();
  names.insert(names.end(), pres_vars.begin(), pres_vars.end());
  const std::size_t k = base.nvars();
  PolyRingPtr graph_ring = PolyRing::make(base.field(), names, MonomialOrder::elimination(k));
  std::vector<std::size_t> embed(k);
  for (std::size_t i = 0; i < k; ++i) embed[i] = i;

  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < images.size(); ++j) {
    gens.push_back(Polynomial::variable(graph_ring, k + j) - images[j].map_to(graph_ring, embed));
  }
  for (const auto& g : target->defining()) gens.push_back(g.map_to(graph_ring, embed));
  auto gb = groebner_basis(gens, graph_ring);

  RingPtr pres_ring = RingPresentation::make(base.field(), pres_vars, MonomialOrder::degrevlex());
  std::vector<std::size_t> back(graph_ring->nvars(), 0);
  for (std::size_t j = 0; j < pres_vars.size(); ++j) back[k + j] = j;
  std::vector<Polynomial> kernel;
  for (const auto& e : gb->elements()) {
    if (e.free_of(0, k)) kernel.push_back(e.map_to(pres_ring->ambient(), back));
  }
  return IdealHandle(pres_ring, std::move(kernel));
}

}  // namespace socle
