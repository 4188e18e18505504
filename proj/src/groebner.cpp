#include "socle/groebner.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "socle/error.hpp"
#include "socle/gb_cache.hpp"

namespace socle {

GroebnerBasis::GroebnerBasis(PolyRingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
  for (const auto& e : elements_) require_same_ring(*ring_, *e.ring());
  const PolyRing& r = *ring_;
  std::sort(elements_.begin(), elements_.end(), [&](const Polynomial& a, const Polynomial& b) {
    return r.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  require_same_ring(*ring_, *f.ring());
  return normal_form(f, elements_);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.leading_monomial());
  return out;
}

std::string GroebnerBasis::serialize() const {
  std::ostringstream os;
  for (const auto& e : elements_) os << e.to_string() << "\n";
  return os.str();
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!a.ring_ || !b.ring_) return a.ring_ == b.ring_;
  return a.ring_->same_as(*b.ring_) && a.elements_ == b.elements_;
}

namespace {

struct Element {
  Polynomial poly;
  std::vector<Polynomial> cofactors;  // empty unless tracing
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(const PolyRingPtr& ring, std::size_t ngens, bool trace, BuchbergerStats* stats)
      : ring_(ring), ngens_(ngens), trace_(trace), stats_(stats ? stats : &local_stats_) {}

  void add_input(const Polynomial& g, std::size_t index) {
    if (g.is_zero()) return;
    Element e{g, {}};
    if (trace_) {
      e.cofactors.assign(ngens_, Polynomial(ring_));
      e.cofactors[index] = Polynomial::from_int(ring_, 1);
    }
    e = reduce_against_active(std::move(e));
    if (!e.poly.is_zero()) insert(make_monic(std::move(e)));
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (selects_before(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      ++stats_->pairs_reduced;
      Element s = spoly(p);
      Element r = reduce_against_active(std::move(s));
      if (r.poly.is_zero()) {
        ++stats_->zero_reductions;
        continue;
      }
      insert(make_monic(std::move(r)));
    }
  }

  // Interreduces the minimal basis and returns it sorted.
  std::vector<Element> finish() {
    std::vector<Polynomial> polys = active_polys();
    std::vector<Element> out;
    out.reserve(active_.size());
    for (std::size_t a = 0; a < active_.size(); ++a) {
      const Element& e = elems_[active_[a]];
      const Term& lt = e.poly.leading_term();
      Polynomial tail = e.poly - Polynomial::term(ring_, lt.monomial, lt.coeff);
      Element reduced{Polynomial::term(ring_, lt.monomial, lt.coeff), e.cofactors};
      if (trace_) {
        DivisionResult d = divide(tail, polys);
        reduced.poly = reduced.poly + d.remainder;
        for (std::size_t b = 0; b < polys.size(); ++b) {
          if (d.quotients[b].is_zero()) continue;
          for (std::size_t g = 0; g < ngens_; ++g) {
            reduced.cofactors[g] = reduced.cofactors[g] - d.quotients[b] * elems_[active_[b]].cofactors[g];
          }
        }
        // e.cofactors describe e.poly = lt + tail; subtracting sum q_b * b leaves lt + remainder.
      } else {
        reduced.poly = reduced.poly + normal_form(tail, polys);
      }
      out.push_back(std::move(reduced));
    }
    const PolyRing& r = *ring_;
    std::sort(out.begin(), out.end(), [&](const Element& a, const Element& b) {
      return r.compare(a.poly.leading_monomial(), b.poly.leading_monomial()) < 0;
    });
    return out;
  }

 private:
  bool selects_before(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = ring_->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }

  std::vector<Polynomial> active_polys() const {
    std::vector<Polynomial> out;
    out.reserve(active_.size());
    for (std::size_t idx : active_) out.push_back(elems_[idx].poly);
    return out;
  }

  Element make_monic(Element e) const {
    const Field& k = ring_->field();
    if (k.is_one(e.poly.leading_coeff())) return e;
    Scalar inv = k.inv(e.poly.leading_coeff());
    e.poly = e.poly.scale(inv);
    for (auto& c : e.cofactors) c = c.scale(inv);
    return e;
  }

  Element reduce_against_active(Element e) const {
    if (active_.empty()) return e;
    std::vector<Polynomial> polys = active_polys();
    if (!trace_) {
      e.poly = normal_form(e.poly, polys);
      return e;
    }
    DivisionResult d = divide(e.poly, polys);
    e.poly = std::move(d.remainder);
    for (std::size_t b = 0; b < polys.size(); ++b) {
      if (d.quotients[b].is_zero()) continue;
      for (std::size_t g = 0; g < ngens_; ++g) {
        e.cofactors[g] = e.cofactors[g] - d.quotients[b] * elems_[active_[b]].cofactors[g];
      }
    }
    return e;
  }

  Element spoly(const Pair& p) const {
    const Element& f = elems_[p.i];
    const Element& g = elems_[p.j];
    const Scalar one = ring_->field().one();
    Monomial mf = p.lcm / f.poly.leading_monomial();
    Monomial mg = p.lcm / g.poly.leading_monomial();
    Element s{f.poly.mul_term(mf, one) - g.poly.mul_term(mg, one), {}};
    if (trace_) {
      s.cofactors.reserve(ngens_);
      for (std::size_t k = 0; k < ngens_; ++k) {
        s.cofactors.push_back(f.cofactors[k].mul_term(mf, one) - g.cofactors[k].mul_term(mg, one));
      }
    }
    return s;
  }

  // Gebauer-Möller update for a new element h.
  void insert(Element e) {
    std::size_t h = elems_.size();
    elems_.push_back(std::move(e));
    const Monomial& lh = elems_[h].poly.leading_monomial();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    c.reserve(active_.size());
    for (std::size_t g : active_) {
      const Monomial& lg = elems_[g].poly.leading_monomial();
      c.push_back(Candidate{g, lcm(lh, lg), lh.coprime(lg)});
    }
    stats_->pairs_created += c.size();

    std::vector<Candidate> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) {
          if (c[l].lcm.divides(c[k].lcm)) keep = false;
        }
        for (std::size_t l = 0; l < d.size() && keep; ++l) {
          if (d[l].lcm.divides(c[k].lcm)) keep = false;
        }
      }
      if (keep) {
        d.push_back(c[k]);
      } else {
        ++stats_->chain_skipped;
      }
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (auto& p : pairs_) {
      const Monomial& li = elems_[p.i].poly.leading_monomial();
      const Monomial& lj = elems_[p.j].poly.leading_monomial();
      bool drop = lh.divides(p.lcm) && !(lcm(li, lh) == p.lcm) && !(lcm(lh, lj) == p.lcm);
      if (drop) {
        ++stats_->chain_skipped;
      } else {
        kept.push_back(std::move(p));
      }
    }
    for (auto& cand : d) {
      if (cand.coprime) {
        ++stats_->coprime_skipped;
        continue;
      }
      kept.push_back(Pair{std::min(cand.g, h), std::max(cand.g, h), std::move(cand.lcm)});
    }
    pairs_ = std::move(kept);

    std::vector<std::size_t> next;
    next.reserve(active_.size() + 1);
    for (std::size_t g : active_) {
      if (!lh.divides(elems_[g].poly.leading_monomial())) next.push_back(g);
    }
    next.push_back(h);
    active_ = std::move(next);
  }

  PolyRingPtr ring_;
  std::size_t ngens_;
  bool trace_;
  BuchbergerStats local_stats_;
  BuchbergerStats* stats_;
  std::vector<Element> elems_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

std::vector<std::size_t> input_order(std::span<const Polynomial> gens, const PolyRing& ring) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_same_ring(ring, *gens[i].ring());
    if (!gens[i].is_zero()) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ring.compare(gens[a].leading_monomial(), gens[b].leading_monomial()) < 0;
  });
  return idx;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const PolyRingPtr& ring, BuchbergerStats* stats) {
  Engine engine(ring, gens.size(), false, stats);
  for (std::size_t i : input_order(gens, *ring)) engine.add_input(gens[i], i);
  engine.run();
  std::vector<Polynomial> out;
  for (auto& e : engine.finish()) out.push_back(std::move(e.poly));
  return GroebnerBasis(ring, std::move(out));
}

TracedBasis buchberger_traced(std::span<const Polynomial> gens, const PolyRingPtr& ring) {
  Engine engine(ring, gens.size(), true, nullptr);
  for (std::size_t i : input_order(gens, *ring)) engine.add_input(gens[i], i);
  engine.run();
  TracedBasis result;
  std::vector<Polynomial> out;
  for (auto& e : engine.finish()) {
    out.push_back(std::move(e.poly));
    result.cofactors.push_back(std::move(e.cofactors));
  }
  result.basis = GroebnerBasis(ring, std::move(out));
  return result;
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  if (basis.empty()) return true;
  const PolyRingPtr& ring = basis[0].ring();
  const Field& k = ring->field();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Polynomial& f = basis[i];
      const Polynomial& g = basis[j];
      Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
      Polynomial s = f.mul_term(l / f.leading_monomial(), k.inv(f.leading_coeff())) -
                     g.mul_term(l / g.leading_monomial(), k.inv(g.leading_coeff()));
      if (!normal_form(s, basis).is_zero()) return false;
    }
  }
  return true;
}

std::shared_ptr<const GroebnerBasis> groebner_basis(std::span<const Polynomial> gens, const PolyRingPtr& ring) {
  return GbCache::global().get_or_compute(gens, ring, [&] { return buchberger(gens, ring); });
}

}  // namespace socle
